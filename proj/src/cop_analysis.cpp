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

#include "qcop/cop_analysis.hpp"

#include <algorithm>
#include <cmath>

#include "qcop/discord.hpp"
#include "qcop/hermitian_basis.hpp"
#include "qcop/matrix_ops.hpp"

namespace qcop {

namespace {

// 8-slot observables for the d = 2 brute-force oracle; slots alternate
// system/reference: A_i at 2i, B_i at 2i+1.
struct OracleObservables {
  Matrix w, z, l;
};

Matrix interleaved_swap(int d, int i, int j, bool reference_side) {
  std::vector<int> perm(8);
  for (int k = 0; k < 8; ++k) perm[static_cast<size_t>(k)] = k;
  const int off = reference_side ? 1 : 0;
  std::swap(perm[static_cast<size_t>(2 * i + off)], perm[static_cast<size_t>(2 * j + off)]);
  return slot_permutation_matrix(d, perm);
}

const OracleObservables& oracle_observables_d2() {
  static const OracleObservables ops = [] {
    const int d = 2;
    auto va = [&](int i, int j) { return interleaved_swap(d, i, j, false); };
    auto vb = [&](int i, int j) { return interleaved_swap(d, i, j, true); };
    const Matrix x = va(0, 1) * va(1, 2) * va(2, 3);
    const Matrix x_herm = (x + x.adjoint()) / 2.0;
    OracleObservables ops;
    ops.w = x_herm * (vb(0, 1) * vb(2, 3) - vb(0, 2) * vb(1, 3));
    ops.z = x_herm * vb(0, 3) * vb(1, 2) * (vb(0, 2) + vb(1, 3) - vb(0, 1) - vb(2, 3));
    ops.l = -vb(0, 3) * vb(1, 2) * ops.z;
    return ops;
  }();
  return ops;
}

double expected_moment_trace(int d, const Perm4& sigma) {
  const Perm4 v01 = Perm4::transposition(0, 1);
  const Perm4 v23 = Perm4::transposition(2, 3);
  const Perm4 v02 = Perm4::transposition(0, 2);
  const Perm4 v13 = Perm4::transposition(1, 3);
  const double dd = static_cast<double>(d) * (d - 1);
  if (sigma == v01 || sigma == v23 || sigma == v01 * v23) return dd;
  if (sigma == v02 || sigma == v13 || sigma == v02 * v13) return -dd;
  return 0.0;
}

}  // namespace

CopCore cop_core(const QuantumChannel& ch) {
  const int d = ch.dim();
  const HermitianBasis& basis = basis_for(d);
  const int n = basis.count();

  std::vector<Matrix> images(static_cast<size_t>(n));
  for (int mu = 0; mu < n; ++mu) images[static_cast<size_t>(mu)] = ch.apply(basis.lambda(mu));

  std::vector<Matrix> comms(static_cast<size_t>(n) * n);
  for (int mu = 0; mu < n; ++mu) {
    for (int nu = mu + 1; nu < n; ++nu) {
      comms[static_cast<size_t>(mu) * n + nu] =
          commutator(images[static_cast<size_t>(mu)], images[static_cast<size_t>(nu)]);
    }
  }

  // G_tau = sum_{al,be} f_{al,be,tau} Lambda_{al,be} over ordered pairs.
  std::vector<Matrix> g(static_cast<size_t>(n), Matrix::Zero(d, d));
  for (const HermitianBasis::FEntry& e : basis.f_nonzeros()) {
    if (e.mu < e.nu) {
      g[static_cast<size_t>(e.tau)] += 2.0 * e.value * comms[static_cast<size_t>(e.mu) * n + e.nu];
    }
  }

  CopCore core;
  double w_sum = 0.0;
  for (int mu = 0; mu < n; ++mu) {
    for (int nu = mu + 1; nu < n; ++nu) {
      const Matrix& c = comms[static_cast<size_t>(mu) * n + nu];
      w_sum += c.squaredNorm();
      if (mu == 0) core.lower_bound += c.squaredNorm() / d;
      Matrix m = c;
      for (int tau = 0; tau < n; ++tau) {
        const double fv = basis.f(mu, nu, tau);
        if (fv != 0.0) m -= 0.5 * fv * g[static_cast<size_t>(tau)];
      }
      core.delta += m.squaredNorm() / d;
      core.closure_residual = std::max(core.closure_residual, m.norm());
    }
  }
  core.w = w_sum / (static_cast<double>(d) * d);
  for (int tau = 0; tau < n; ++tau) {
    core.z += g[static_cast<size_t>(tau)].squaredNorm() / (4.0 * d);
  }
  return core;
}

double cop_degree(const QuantumChannel& ch) {
  return cop_core(ch).delta;
}

WitnessExpectations witness_expectations(const QuantumChannel& ch) {
  const CopCore core = cop_core(ch);
  return {core.w, core.z};
}

OracleExpectations witness_expectations_oracle(const QuantumChannel& ch) {
  if (ch.dim() != 2) {
    throw CapError("witness_expectations_oracle: materialized R^(x)4 traces are capped at d = 2, got d = " +
                   std::to_string(ch.dim()));
  }
  const Matrix& r = ch.choi();
  const Matrix r2 = kron(r, r);
  const Matrix r4 = kron(r2, r2);
  const OracleObservables& ops = oracle_observables_d2();
  OracleExpectations out;
  out.w = trace_product(r4, ops.w).real();
  out.z = trace_product(r4, ops.z).real();
  out.l = trace_product(r4, ops.l).real();
  return out;
}

Matrix pair_moment_operator(int d, int cap_d) {
  if (d < 2) throw std::invalid_argument("pair_moment_operator: d must be >= 2");
  if (d > cap_d || d > kDefaultCapD) {
    throw CapError("pair_moment_operator: d = " + std::to_string(d) + " exceeds materialization cap " +
                   std::to_string(std::min(cap_d, kDefaultCapD)));
  }
  const long dim = static_cast<long>(d) * d * d * d;
  Matrix o = Matrix::Zero(dim, dim);
  for (long idx = 0; idx < dim; ++idx) {
    long rest = idx;
    int digit[4];
    for (int k = 3; k >= 0; --k) {
      digit[k] = static_cast<int>(rest % d);
      rest /= d;
    }
    double value = 0.0;
    if (digit[0] == digit[1] && digit[2] == digit[3]) value += 1.0;
    if (digit[0] == digit[2] && digit[1] == digit[3]) value -= 1.0;
    o(idx, idx) = value;
  }
  return o;
}

double verify_haar_average(int d, int cap_d) {
  const Matrix o = pair_moment_operator(d, cap_d);

  for (const Perm4& sigma : all_s4()) {
    const Matrix v = permutation_matrix(d, sigma, d);
    const double observed = trace_product(o, v).real();
    if (std::abs(observed - expected_moment_trace(d, sigma)) > 1e-9) {
      throw std::logic_error("verify_haar_average: moment trace table violated at d = " + std::to_string(d));
    }
  }

  auto v = [&](const Perm4& p) { return permutation_matrix(d, p, d); };
  const Perm4 t01 = Perm4::transposition(0, 1);
  const Perm4 t23 = Perm4::transposition(2, 3);
  const Perm4 t02 = Perm4::transposition(0, 2);
  const Perm4 t13 = Perm4::transposition(1, 3);
  const Perm4 t03 = Perm4::transposition(0, 3);
  const Perm4 t12 = Perm4::transposition(1, 2);

  const Matrix l_tilde = v(t01) + v(t23) - v(t02) - v(t13);
  const Matrix twirled = ((d + 1.0) * l_tilde + d * (v(t01 * t23) - v(t02 * t13)) + v(t03 * t12) * l_tilde) /
                         (static_cast<double>(d) * (d + 1) * (d + 2));

  double residual = 0.0;
  for (const Perm4& sigma : all_s4()) {
    const Matrix vs = permutation_matrix(d, sigma, d);
    const double lhs = trace_product(twirled, vs).real();
    const double rhs = trace_product(o, vs).real();
    residual = std::max(residual, std::abs(lhs - rhs));
  }
  return residual;
}

ProbeResult commuting_pair_probe(const QuantumChannel& ch, int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("commuting_pair_probe: samples must be >= 1");
  const int d = ch.dim();
  ProbeResult result;
  for (int i = 0; i < samples; ++i) {
    Rng rng = Rng::for_sample(seed, static_cast<std::uint64_t>(i));
    const Matrix u = haar_unitary(d, rng);
    const RealVector spec1 = random_simplex_point(d, rng);
    const RealVector spec2 = random_simplex_point(d, rng);
    const Matrix rho = u * spec1.cast<Complex>().asDiagonal() * u.adjoint();
    const Matrix sigma = u * spec2.cast<Complex>().asDiagonal() * u.adjoint();
    const double residual = commutator(ch.apply(rho), ch.apply(sigma)).norm();
    if (residual > result.max_residual || i == 0) {
      result.max_residual = residual;
      result.worst_rho = rho;
      result.worst_sigma = sigma;
    }
  }
  return result;
}

QubitCopCheck qubit_cop_criterion(const QuantumChannel& ch) {
  if (ch.dim() != 2) {
    throw std::invalid_argument("qubit_cop_criterion: requires d = 2, got d = " + std::to_string(ch.dim()));
  }
  const HermitianBasis& basis = basis_for(2);
  const Matrix image_identity = ch.apply(basis.lambda(0));
  QubitCopCheck check;
  for (int nu = 1; nu < basis.count(); ++nu) {
    check.residual = std::max(check.residual, commutator(image_identity, ch.apply(basis.lambda(nu))).norm());
  }
  check.cop = check.residual <= kCopVerdictTol;
  return check;
}

DiscordCreationCheck discord_creation_check(const QuantumChannel& ch, const Matrix& rho, const Matrix& sigma) {
  const int d = ch.dim();
  if (rho.rows() != d || rho.cols() != d || sigma.rows() != d || sigma.cols() != d) {
    throw std::invalid_argument("discord_creation_check: state dimension mismatch");
  }
  if (!is_density_matrix(rho) || !is_density_matrix(sigma)) {
    throw ValidationError("discord_creation_check: inputs must be density matrices");
  }
  if (commutator(rho, sigma).norm() > tol::kSpectral) {
    throw std::invalid_argument("discord_creation_check: inputs do not commute");
  }

  Matrix flag0 = Matrix::Zero(2, 2);
  flag0(0, 0) = 1.0;
  Matrix flag1 = Matrix::Zero(2, 2);
  flag1(1, 1) = 1.0;
  const Matrix joint = (kron(rho, flag0) + kron(sigma, flag1)) / 2.0;

  const BipartiteState input = BipartiteState::from_density(d, 2, joint);
  const ZeroDiscordCheck in_check = zero_a_discord(input);

  // The image of a non-CP channel need not be positive; the commutator
  // criterion is evaluated on the raw matrix.
  BipartiteState output;
  output.d_a = d;
  output.d_b = 2;
  output.rho = apply_to_first(ch, joint, 2);
  const ZeroDiscordCheck out_check = zero_a_discord(output);

  DiscordCreationCheck check;
  check.input_discord_zero = in_check.zero;
  check.input_residual = in_check.residual;
  check.output_discord_zero = out_check.zero;
  check.output_residual = out_check.residual;
  return check;
}

CopReport analyze_channel(const QuantumChannel& ch, int probe_samples, std::uint64_t seed, double tolerance) {
  if (!ch.is_trace_preserving()) {
    throw ValidationError("analyze_channel: channel is not trace preserving");
  }
  if (tolerance <= 0.0) {
    throw std::invalid_argument("analyze_channel: tolerance must be positive");
  }
  const CopCore core = cop_core(ch);
  CopReport report;
  report.d = ch.dim();
  report.delta = core.delta;
  report.w = core.w;
  report.z = core.z;
  report.closure_residual = core.closure_residual;
  report.tolerance = tolerance;
  report.cop = core.delta <= tolerance && core.closure_residual <= tolerance;
  report.trace_preserving = true;
  report.completely_positive = ch.is_completely_positive();
  report.min_choi_eigenvalue = ch.min_choi_eigenvalue();
  if (probe_samples > 0) {
    report.probe_max = commuting_pair_probe(ch, probe_samples, seed).max_residual;
  }
  return report;
}

}  // namespace qcop
