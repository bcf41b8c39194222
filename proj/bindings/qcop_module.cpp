// Copyright 2026 The qcop authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcop/channel_io.hpp"
#include "qcop/cop_analysis.hpp"
#include "qcop/discord.hpp"
#include "qcop/hermitian_basis.hpp"
#include "qcop/mixture_spectrum.hpp"

namespace py = pybind11;
using namespace qcop;

namespace {

py::dict report_to_dict(const CopReport& r) {
  py::dict d;
  d["d"] = r.d;
  d["delta"] = r.delta;
  d["w"] = r.w;
  d["z"] = r.z;
  d["eq6_residual"] = r.closure_residual;
  d["verdict"] = r.cop ? "cop" : "non-cop";
  d["probe_max"] = r.probe_max;
  d["tolerance"] = r.tolerance;
  d["tp"] = r.trace_preserving;
  d["cp"] = r.completely_positive;
  d["min_choi_eigenvalue"] = r.min_choi_eigenvalue;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "commutativity-preservation analysis for finite-dimensional quantum channels";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<CapError>(m, "CapError", PyExc_RuntimeError);

  py::class_<QuantumChannel>(m, "Channel")
      .def_static("from_kraus", [](const std::vector<Matrix>& ks) { return QuantumChannel::from_kraus(ks); },
                  py::arg("kraus"))
      .def_static("from_choi", &QuantumChannel::from_choi, py::arg("choi"), py::arg("name") = "choi")
      .def_static("from_json", [](const std::string& text) { return io::parse_channel(text); }, py::arg("text"))
      .def_static("identity", &QuantumChannel::identity, py::arg("d"))
      .def_static("unitary", &QuantumChannel::unitary, py::arg("u"))
      .def_static("cloning", &QuantumChannel::cloning, py::arg("d"), py::arg("c"))
      .def_static("transpose_cloning", &QuantumChannel::transpose_cloning, py::arg("d"), py::arg("c"))
      .def_static("semi_classical", &QuantumChannel::semi_classical, py::arg("povm"), py::arg("basis"))
      .def_static("hamiltonian", &QuantumChannel::hamiltonian, py::arg("h"))
      .def_static("mixture", &QuantumChannel::mixture, py::arg("p"), py::arg("first"), py::arg("second"))
      .def_property_readonly("d", &QuantumChannel::dim)
      .def_property_readonly("name", &QuantumChannel::name)
      .def("apply", &QuantumChannel::apply, py::arg("rho"))
      .def("choi", &QuantumChannel::choi, py::return_value_policy::copy)
      .def("kraus", &QuantumChannel::kraus_from_choi)
      .def("is_trace_preserving", &QuantumChannel::is_trace_preserving, py::arg("tolerance") = tol::kSpectral)
      .def("is_completely_positive", &QuantumChannel::is_completely_positive, py::arg("tolerance") = tol::kSpectral)
      .def("min_choi_eigenvalue", &QuantumChannel::min_choi_eigenvalue)
      .def("to_json", &io::channel_to_json)
      .def("__repr__", [](const QuantumChannel& ch) {
        return "<qcop.Channel " + ch.name() + " d=" + std::to_string(ch.dim()) + ">";
      });

  m.def("basis", [](int d) { return basis_for(d).lambdas(); }, py::arg("d"),
        "Orthonormal Hermitian basis {lambda_0..lambda_D} with Tr(l_mu l_nu) = d delta");
  m.def("structure_constant", [](int d, int mu, int nu, int tau) { return basis_for(d).f(mu, nu, tau); },
        py::arg("d"), py::arg("mu"), py::arg("nu"), py::arg("tau"));

  m.def("cop_degree", &cop_degree, py::arg("channel"));
  m.def("witness_expectations", [](const QuantumChannel& ch) {
    const WitnessExpectations we = witness_expectations(ch);
    return py::make_tuple(we.w, we.z);
  }, py::arg("channel"));
  m.def("witness_expectations_oracle", [](const QuantumChannel& ch) {
    const OracleExpectations oracle = witness_expectations_oracle(ch);
    return py::make_tuple(oracle.w, oracle.z, oracle.l);
  }, py::arg("channel"), "Brute-force (w, z, l) from materialized 4-copy operators; d = 2 only");
  m.def("analyze", [](const QuantumChannel& ch, int samples, std::uint64_t seed) {
    return report_to_dict(analyze_channel(ch, samples, seed));
  }, py::arg("channel"), py::arg("samples") = 200, py::arg("seed") = 0);
  m.def("verify_haar_average", &verify_haar_average, py::arg("d"), py::arg("cap_d") = kDefaultCapD);
  m.def("commuting_pair_probe", [](const QuantumChannel& ch, int samples, std::uint64_t seed) {
    const ProbeResult probe = commuting_pair_probe(ch, samples, seed);
    py::dict d;
    d["max_residual"] = probe.max_residual;
    d["worst_rho"] = probe.worst_rho;
    d["worst_sigma"] = probe.worst_sigma;
    return d;
  }, py::arg("channel"), py::arg("samples") = 200, py::arg("seed") = 0);
  m.def("qubit_cop_criterion", [](const QuantumChannel& ch) {
    const QubitCopCheck check = qubit_cop_criterion(ch);
    return py::make_tuple(check.cop, check.residual);
  }, py::arg("channel"));
  m.def("discord_creation_check", [](const QuantumChannel& ch, const Matrix& rho, const Matrix& sigma) {
    const DiscordCreationCheck check = discord_creation_check(ch, rho, sigma);
    py::dict d;
    d["input_discord_zero"] = check.input_discord_zero;
    d["input_residual"] = check.input_residual;
    d["output_discord_zero"] = check.output_discord_zero;
    d["output_residual"] = check.output_residual;
    return d;
  }, py::arg("channel"), py::arg("rho"), py::arg("sigma"));

  m.def("k_matrix", [](int d, int cap_d) { return build_k(d, cap_d).matrix(); },
        py::arg("d"), py::arg("cap_d") = kDefaultKCapD);
  m.def("k_spectrum", [](int d, int cap_d) { return build_k(d, cap_d).eigenvalues(); },
        py::arg("d"), py::arg("cap_d") = kDefaultKCapD);
  m.def("mixture_cop_degree", &mixture_cop_degree, py::arg("channel"), py::arg("p"));
  m.def("cloning_mixture_check", [](const QuantumChannel& ch, double p) {
    const CloningMixtureReport report = cloning_mixture_check(ch, p);
    py::dict d;
    d["is_cloning"] = report.is_cloning;
    d["mixture_delta"] = report.mixture_delta;
    d["a"] = report.identity_weight;
    d["h"] = report.hamiltonian_coefficients;
    d["residual"] = report.span_residual;
    d["hamiltonian"] = report.extracted_hamiltonian;
    return d;
  }, py::arg("channel"), py::arg("p"));

  m.def("zero_a_discord", [](const Matrix& rho, int d_a, int d_b) {
    const ZeroDiscordCheck check = zero_a_discord(BipartiteState::from_density(d_a, d_b, rho));
    return py::make_tuple(check.zero, check.residual);
  }, py::arg("rho"), py::arg("dA"), py::arg("dB"));
  m.def("a_discord_projective", [](const Matrix& rho, int d_a, int d_b) {
    const ProjectiveDiscord discord = a_discord_projective(BipartiteState::from_density(d_a, d_b, rho));
    py::dict d;
    d["value"] = discord.value;
    d["grid_minimum"] = discord.grid_minimum;
    d["refined_minimum"] = discord.refined_minimum;
    d["theta"] = discord.theta;
    d["phi"] = discord.phi;
    d["gradient_norm"] = discord.gradient_norm;
    return d;
  }, py::arg("rho"), py::arg("dA"), py::arg("dB"));
  m.def("geometric_a_discord", [](const Matrix& rho, int d_a, int d_b) {
    return geometric_a_discord(BipartiteState::from_density(d_a, d_b, rho));
  }, py::arg("rho"), py::arg("dA"), py::arg("dB"));
  m.def("discord_demo_r_matrix", &discord_demo_r_matrix);
  m.def("discord_demo_unitary", &discord_demo_unitary);
  m.def("discord_increase_demo", [] {
    const DiscordIncreaseDemo demo = discord_increase_demo();
    py::dict d;
    d["before"] = demo.discord_before;
    d["after"] = demo.discord_after;
    d["increased"] = demo.increased;
    return d;
  });
}
