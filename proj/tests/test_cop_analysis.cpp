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

#include <doctest.h>

#include <cmath>

#include "qcop/cop_analysis.hpp"
#include "qcop/discord.hpp"
#include "qcop/hermitian_basis.hpp"
#include "qcop/matrix_ops.hpp"
#include "qcop/random.hpp"

using namespace qcop;

namespace {

Matrix scaled_traceless(int d, Rng& rng, double trace_h2) {
  Matrix h = random_traceless_hermitian(d, rng);
  return h * std::sqrt(trace_h2 / trace_product(h, h).real());
}

double hamiltonian_closed_form(const Matrix& h) {
  const int d = static_cast<int>(h.rows());
  const double t2 = trace_product(h, h).real();
  const Matrix h2 = h * h;
  const double t4 = trace_product(h2, h2).real();
  return ((d * d - 6.0) * t2 * t2 + d * (d * d - 2.0) * t4) / std::pow(static_cast<double>(d), 4);
}

}  // namespace

TEST_SUITE("cop_analysis") {

TEST_CASE("identity channel has zero degree at every tested dimension") {
  for (int d : {2, 3, 4}) {
    CHECK(cop_degree(QuantumChannel::identity(d)) <= 1e-12);
  }
}

TEST_CASE("identity channel witness expectations at d=2 are (6, 12)") {
  // From the Pauli algebra: sum_{i<j} ||[s_i,s_j]||^2 / d^2 = 24/4 and
  // sum_t ||4 i s_t||^2 / (4d) = 96/8; confirmed by the materialized oracle.
  const QuantumChannel id = QuantumChannel::identity(2);
  const WitnessExpectations coeff = witness_expectations(id);
  CHECK(coeff.w == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(coeff.z == doctest::Approx(12.0).epsilon(1e-12));
  const OracleExpectations oracle = witness_expectations_oracle(id);
  CHECK(oracle.w == doctest::Approx(6.0).epsilon(1e-10));
  CHECK(oracle.z == doctest::Approx(12.0).epsilon(1e-10));
}

TEST_CASE("delta equals d w - z across channel families") {
  Rng rng(50);
  for (int d : {2, 3, 4}) {
    std::vector<QuantumChannel> channels;
    channels.push_back(QuantumChannel::identity(d));
    channels.push_back(QuantumChannel::cloning(d, 0.7));
    channels.push_back(random_channel(d, rng));
    channels.push_back(QuantumChannel::hamiltonian(scaled_traceless(d, rng, 0.4 / d)));
    for (const QuantumChannel& ch : channels) {
      const CopCore core = cop_core(ch);
      CHECK(std::abs(core.delta - (d * core.w - core.z)) <= 1e-10);
    }
  }
}

TEST_CASE("cloning(3, 0.7) preserves commutativity through the full pipeline") {
  const CopCore core = cop_core(QuantumChannel::cloning(3, 0.7));
  CHECK(std::abs(3.0 * core.w - core.z) <= 1e-10);
  CHECK(core.delta <= 1e-10);
  CHECK(core.closure_residual <= 1e-10);
}

TEST_CASE("hamiltonian degree matches the closed form") {
  Rng rng(51);
  for (int d : {2, 3, 4, 5}) {
    for (int trial = 0; trial < 5; ++trial) {
      const Matrix h = scaled_traceless(d, rng, (trial + 1) * 0.3 / d);
      const double delta = cop_degree(QuantumChannel::hamiltonian(h));
      CHECK(std::abs(delta - hamiltonian_closed_form(h)) <= 1e-10);
      if (d == 2) CHECK(delta <= 1e-10);
      if (d >= 3) CHECK(delta > 1e-10);
    }
  }
}

TEST_CASE("hamiltonian at d=3 with Tr H^2 = 1/3: both witness routes agree with the formula") {
  Rng rng(52);
  const Matrix h = scaled_traceless(3, rng, 1.0 / 3.0);
  const CopCore core = cop_core(QuantumChannel::hamiltonian(h));
  const double value = 3.0 * core.w - core.z;
  CHECK(std::abs(value - hamiltonian_closed_form(h)) <= 1e-10);
  CHECK(value > 0.0);
}

TEST_CASE("oracle: fully depolarizing qubit channel has w = z = 0") {
  const OracleExpectations oracle = witness_expectations_oracle(QuantumChannel::cloning(2, 0.0));
  CHECK(std::abs(oracle.w) <= 1e-12);
  CHECK(std::abs(oracle.z) <= 1e-12);
  const WitnessExpectations coeff = witness_expectations(QuantumChannel::cloning(2, 0.0));
  CHECK(std::abs(coeff.w) <= 1e-12);
  CHECK(std::abs(coeff.z) <= 1e-12);
}

TEST_CASE("oracle agrees with the coefficient path on random qubit channels") {
  Rng rng(53);
  for (int trial = 0; trial < 8; ++trial) {
    const QuantumChannel ch = trial % 2 == 0 ? random_channel(2, rng) : random_unital_qubit_channel(rng);
    const CopCore core = cop_core(ch);
    const OracleExpectations oracle = witness_expectations_oracle(ch);
    CHECK(std::abs(core.w - oracle.w) <= 1e-10);
    CHECK(std::abs(core.z - oracle.z) <= 1e-10);
    CHECK(std::abs(core.lower_bound - oracle.l) <= 1e-10);
    CHECK(core.delta >= core.lower_bound - 1e-10);
  }
}

TEST_CASE("oracle is capped at d=2") {
  CHECK_THROWS_AS(witness_expectations_oracle(QuantumChannel::identity(3)), CapError);
}

TEST_CASE("w vanishes exactly when the Choi state has zero A-discord") {
  Rng rng(64);
  for (int d : {2, 3}) {
    std::vector<QuantumChannel> channels;
    channels.push_back(QuantumChannel::identity(d));        // entangled Choi state
    channels.push_back(QuantumChannel::cloning(d, 0.5));    // discordant Choi state
    channels.push_back(random_semi_classical_channel(d, rng));  // classical-quantum Choi state
    channels.push_back(random_channel(d, rng));
    for (const QuantumChannel& ch : channels) {
      const double w = witness_expectations(ch).w;
      const bool choi_zero_discord =
          zero_a_discord(BipartiteState::from_density(d, d, ch.choi() / d)).zero;
      CHECK((w <= 1e-10) == choi_zero_discord);
    }
  }
}

TEST_CASE("pair moment operator trace table") {
  const Matrix o2 = pair_moment_operator(2);
  CHECK(trace_product(o2, permutation_matrix(2, Perm4::transposition(0, 1))).real() == doctest::Approx(2.0));
  CHECK(trace_product(o2, permutation_matrix(2, Perm4())).real() == doctest::Approx(0.0));
  const Matrix o3 = pair_moment_operator(3);
  CHECK(trace_product(o3, permutation_matrix(3, Perm4::transposition(0, 2))).real() == doctest::Approx(-6.0));
  CHECK(max_abs(o3 - o3.transpose()) == 0.0);  // diagonal, so the transpose convention is moot
  CHECK_THROWS_AS(pair_moment_operator(4), CapError);
}

TEST_CASE("Haar twirl of the pair moment operator matches its permutation-basis form") {
  CHECK(verify_haar_average(2) <= 1e-9);
  CHECK(verify_haar_average(3) <= 1e-9);
  CHECK_THROWS_AS(verify_haar_average(3, 2), CapError);
}

TEST_CASE("commuting-pair probe is flat on CoP channels and deterministic") {
  const ProbeResult identity_probe = commuting_pair_probe(QuantumChannel::identity(3), 50, 1);
  CHECK(identity_probe.max_residual <= 1e-12);

  const ProbeResult cloning_probe = commuting_pair_probe(QuantumChannel::cloning(4, 0.3), 200, 1);
  CHECK(cloning_probe.max_residual <= 1e-9);

  const ProbeResult again = commuting_pair_probe(QuantumChannel::cloning(4, 0.3), 200, 1);
  CHECK(cloning_probe.max_residual == again.max_residual);

  CHECK_THROWS_AS(commuting_pair_probe(QuantumChannel::identity(2), 0, 1), std::invalid_argument);
}

TEST_CASE("probe exposes the identity/unitary mixture at d=3") {
  Rng rng(54);
  const QuantumChannel mix =
      QuantumChannel::mixture(0.5, QuantumChannel::identity(3), QuantumChannel::unitary(haar_unitary(3, rng)));
  const ProbeResult probe = commuting_pair_probe(mix, 200, 7);
  CHECK(probe.max_residual > 1e-6);
  // The worst pair really does commute on input.
  CHECK(commutator(probe.worst_rho, probe.worst_sigma).norm() <= 1e-12);
}

TEST_CASE("qubit criterion classifies unital and semi-classical channels as CoP") {
  Rng rng(55);
  for (int trial = 0; trial < 5; ++trial) {
    CHECK(qubit_cop_criterion(random_unital_qubit_channel(rng)).cop);
    CHECK(qubit_cop_criterion(random_semi_classical_channel(2, rng)).cop);
  }
  CHECK_THROWS_AS(qubit_cop_criterion(QuantumChannel::identity(3)), std::invalid_argument);
}

TEST_CASE("qubit criterion rejects amplitude damping and agrees with the degree") {
  Matrix k0 = Matrix::Zero(2, 2), k1 = Matrix::Zero(2, 2);
  const double gamma = 0.5;
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - gamma);
  k1(0, 1) = std::sqrt(gamma);
  const QuantumChannel damping = QuantumChannel::from_kraus({k0, k1}, "amplitude_damping");
  REQUIRE(damping.is_trace_preserving());

  const QubitCopCheck check = qubit_cop_criterion(damping);
  CHECK_FALSE(check.cop);
  CHECK(cop_degree(damping) > 1e-10);
}

TEST_CASE("qubit criterion verdict equals the degree verdict on random channels") {
  Rng rng(56);
  for (int trial = 0; trial < 12; ++trial) {
    const QuantumChannel ch = trial % 3 == 0 ? random_unital_qubit_channel(rng) : random_channel(2, rng);
    CHECK(qubit_cop_criterion(ch).cop == (cop_degree(ch) <= 1e-10));
  }
}

TEST_CASE("closure residual vanishes iff the degree vanishes") {
  Rng rng(57);
  for (int d : {2, 3}) {
    std::vector<QuantumChannel> channels;
    channels.push_back(QuantumChannel::identity(d));
    channels.push_back(QuantumChannel::transpose_cloning(d, 0.8));
    channels.push_back(random_semi_classical_channel(d, rng));
    channels.push_back(random_channel(d, rng));
    channels.push_back(QuantumChannel::mixture(0.4, QuantumChannel::identity(d),
                                               QuantumChannel::unitary(haar_unitary(d, rng))));
    for (const QuantumChannel& ch : channels) {
      const CopCore core = cop_core(ch);
      CHECK((core.delta <= 1e-10) == (core.closure_residual <= 1e-10));
    }
  }
}

TEST_CASE("mixing the identity into a hamiltonian channel scales the degree by (1-p)^4") {
  Rng rng(58);
  const Matrix h = scaled_traceless(3, rng, 1.0 / 3.0);
  const QuantumChannel ham = QuantumChannel::hamiltonian(h);
  const double base = cop_degree(ham);
  for (double p : {0.2, 0.35, 0.8}) {
    const double mixed = cop_degree(QuantumChannel::mixture(p, QuantumChannel::identity(3), ham));
    CHECK(std::abs(mixed - std::pow(1.0 - p, 4) * base) <= 1e-10);
  }
}

TEST_CASE("discord creation check: identity never creates discord") {
  Rng rng(59);
  const Matrix u = haar_unitary(3, rng);
  const RealVector p1 = random_simplex_point(3, rng);
  const RealVector p2 = random_simplex_point(3, rng);
  const Matrix rho = u * p1.cast<Complex>().asDiagonal() * u.adjoint();
  const Matrix sigma = u * p2.cast<Complex>().asDiagonal() * u.adjoint();

  const DiscordCreationCheck check = discord_creation_check(QuantumChannel::identity(3), rho, sigma);
  CHECK(check.input_discord_zero);
  CHECK(check.output_discord_zero);
}

TEST_CASE("discord creation check: non-CoP mixture creates discord on the probe's worst pair") {
  Rng rng(60);
  const QuantumChannel mix =
      QuantumChannel::mixture(0.5, QuantumChannel::identity(3), QuantumChannel::unitary(haar_unitary(3, rng)));
  const ProbeResult probe = commuting_pair_probe(mix, 200, 3);
  const DiscordCreationCheck check = discord_creation_check(mix, probe.worst_rho, probe.worst_sigma);
  CHECK(check.input_discord_zero);
  CHECK_FALSE(check.output_discord_zero);
  CHECK(check.output_residual > 1e-6);
}

TEST_CASE("discord creation check: semi-classical channels keep discord at zero") {
  Rng rng(61);
  const QuantumChannel semi = random_semi_classical_channel(3, rng);
  const Matrix u = haar_unitary(3, rng);
  const RealVector p1 = random_simplex_point(3, rng);
  const RealVector p2 = random_simplex_point(3, rng);
  const Matrix rho = u * p1.cast<Complex>().asDiagonal() * u.adjoint();
  const Matrix sigma = u * p2.cast<Complex>().asDiagonal() * u.adjoint();
  const DiscordCreationCheck check = discord_creation_check(semi, rho, sigma);
  CHECK(check.input_discord_zero);
  CHECK(check.output_discord_zero);
}

TEST_CASE("discord creation check rejects bad inputs") {
  Rng rng(62);
  const QuantumChannel id = QuantumChannel::identity(2);
  const Matrix rho = random_density_matrix(2, rng);
  Matrix sigma = random_density_matrix(2, rng);
  while (commutator(rho, sigma).norm() <= 1e-6) sigma = random_density_matrix(2, rng);
  CHECK_THROWS_AS(discord_creation_check(id, rho, sigma), std::invalid_argument);
  CHECK_THROWS_AS(discord_creation_check(id, Matrix::Identity(2, 2), Matrix::Identity(2, 2)), ValidationError);
}

TEST_CASE("analyze_channel assembles a consistent report") {
  const CopReport report = analyze_channel(QuantumChannel::cloning(3, 0.7), 50, 0);
  CHECK(report.cop);
  CHECK(report.delta <= 1e-10);
  CHECK(report.trace_preserving);
  CHECK(report.completely_positive);
  CHECK(report.probe_max <= 1e-9);
  CHECK(report.tolerance == kCopVerdictTol);

  // CoP verdict implies small closure residual and flat probe.
  CHECK(report.closure_residual <= report.tolerance);
  CHECK(report.probe_max <= report.tolerance);
}

TEST_CASE("analyze_channel refuses non trace-preserving input") {
  // A PSD Choi matrix whose partial trace over the output is not identity.
  Matrix bad = Matrix::Identity(4, 4);
  bad(0, 0) = 2.0;
  CHECK_THROWS_AS(analyze_channel(QuantumChannel::from_choi(bad)), ValidationError);
}

TEST_CASE("CP is reported but not required") {
  Rng rng(63);
  const Matrix h = scaled_traceless(3, rng, 2.0);  // far beyond the CP region
  const CopReport report = analyze_channel(QuantumChannel::hamiltonian(h), 10, 0);
  CHECK_FALSE(report.completely_positive);
  CHECK(report.min_choi_eigenvalue < 0.0);
  CHECK(std::abs(report.delta - hamiltonian_closed_form(h)) <= 1e-9);
}

}  // TEST_SUITE
