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

#pragma once

#include <cstdint>

#include "qcop/channel.hpp"
#include "qcop/permutation.hpp"
#include "qcop/types.hpp"

namespace qcop {

// A channel counts as commutativity preserving when its degree is this small.
inline constexpr double kCopVerdictTol = 1e-10;

// Everything derivable from the image commutators
// Lambda_{mu,nu} = [Lambda(lambda_mu), Lambda(lambda_nu)] in one pass.
// Cost O(D^2 d^3) plus the structure-constant contraction; no 4-copy
// operator is ever materialized.
struct CopCore {
  // Degree of commutativity preservation, summed term by term; >= 0 and
  // zero exactly for CoP channels.
  double delta = 0.0;
  // Four-copy witness expectations Tr(R^(x)4 W) and Tr(R^(x)4 Z) through
  // their commutator coefficient formulas; delta == d*w - z.
  double w = 0.0;
  double z = 0.0;
  // Largest Frobenius deviation from the commutator-closure condition
  // Lambda_{mu,nu} = (1/2) f_{mu,nu,tau} f_{al,be,tau} Lambda_{al,be}.
  double closure_residual = 0.0;
  // Tr(R^(x)4 L) = sum_mu ||Lambda_{mu,0}||^2 / d; a lower bound on delta.
  double lower_bound = 0.0;
};
CopCore cop_core(const QuantumChannel& ch);

double cop_degree(const QuantumChannel& ch);

struct WitnessExpectations {
  double w = 0.0;
  double z = 0.0;
};
WitnessExpectations witness_expectations(const QuantumChannel& ch);

// Brute-force cross-check at d = 2: materializes R^(x)4 (256 x 256) and the
// collective observables W, Z, and L as explicit 8-slot operators. Throws
// CapError for d > 2.
struct OracleExpectations {
  double w = 0.0;
  double z = 0.0;
  double l = 0.0;
};
OracleExpectations witness_expectations_oracle(const QuantumChannel& ch);

// The diagonal 4-copy operator sum_{k,l} khat (x) (khat (x) lhat -
// lhat (x) khat) (x) lhat whose twirl decides commutativity preservation.
Matrix pair_moment_operator(int d, int cap_d = kDefaultCapD);

// Checks the closed permutation-basis form of the Haar average of the pair
// moment operator against the materialized operator: returns
// max_sigma |Tr(Obar V_sigma) - Tr(O V_sigma)| over all 24 permutations and
// asserts the +-d(d-1) / 0 coefficient table en route.
double verify_haar_average(int d, int cap_d = kDefaultCapD);

// Monte-Carlo search for commuting input pairs with non-commuting images:
// rho = U D1 U^dagger, sigma = U D2 U^dagger with Haar U and simplex
// spectra; deterministic given (seed); per-sample streams derive from
// (seed, index).
struct ProbeResult {
  double max_residual = 0.0;
  Matrix worst_rho;
  Matrix worst_sigma;
};
ProbeResult commuting_pair_probe(const QuantumChannel& ch, int samples, std::uint64_t seed);

// Qubit shortcut: CoP iff [Lambda(I), Lambda(lambda_nu)] all vanish.
struct QubitCopCheck {
  bool cop = false;
  double residual = 0.0;
};
QubitCopCheck qubit_cop_criterion(const QuantumChannel& ch);

// Embeds a commuting pair as the zero-discord state
// (rho (x) |0><0| + sigma (x) |1><1|) / 2, applies the channel to the first
// subsystem, and evaluates the operational zero-discord criterion on input
// and output.
struct DiscordCreationCheck {
  bool input_discord_zero = false;
  double input_residual = 0.0;
  bool output_discord_zero = false;
  double output_residual = 0.0;
};
DiscordCreationCheck discord_creation_check(const QuantumChannel& ch, const Matrix& rho, const Matrix& sigma);

struct CopReport {
  int d = 0;
  double delta = 0.0;
  double w = 0.0;
  double z = 0.0;
  double closure_residual = 0.0;
  bool cop = false;
  double probe_max = 0.0;
  double tolerance = kCopVerdictTol;
  bool trace_preserving = false;
  bool completely_positive = false;
  double min_choi_eigenvalue = 0.0;
};

// Full report for a TP channel; throws ValidationError when the channel is
// not trace preserving. CP is reported, not required.
CopReport analyze_channel(const QuantumChannel& ch, int probe_samples = 200, std::uint64_t seed = 0,
                          double tolerance = kCopVerdictTol);

}  // namespace qcop
