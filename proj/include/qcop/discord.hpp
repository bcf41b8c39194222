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

#include <optional>

#include "qcop/channel.hpp"
#include "qcop/types.hpp"

namespace qcop {

// Bipartite state with a designated subsystem A (first tensor factor). For
// two qubits it may carry the real coefficient matrix R with
// rho = sum_{a,b} R_ab sigma_a (x) sigma_b, which then must reconstruct rho
// exactly and have R_00 = 1/4.
struct BipartiteState {
  int d_a = 0;
  int d_b = 0;
  Matrix rho;
  std::optional<Eigen::Matrix4d> pauli_r;

  static BipartiteState from_density(int d_a, int d_b, Matrix rho);
  static BipartiteState from_pauli_r(const Eigen::Matrix4d& r);
};

// Operational zero-A-discord criterion: the operators Tr_B(rho (I (x)
// lambda_mu^B)) must be mutually commuting. `residual` is the largest
// commutator Frobenius norm over basis pairs.
struct ZeroDiscordCheck {
  bool zero = false;
  double residual = 0.0;
};
ZeroDiscordCheck zero_a_discord(const BipartiteState& st);

// A-discord over rank-1 orthogonal projective measurements on a qubit A:
// S(rho_A) - S(rho_AB) + min_{theta,phi} sum_k p_k S(rho_{B|k}), entropies
// base 2. Coarse (theta, phi) grid followed by Nelder-Mead refinement until
// the finite-difference gradient norm drops below 1e-8.
struct ProjectiveDiscord {
  double value = 0.0;
  double grid_minimum = 0.0;     // full discord value at the best grid point
  double refined_minimum = 0.0;  // after local refinement
  double theta = 0.0;
  double phi = 0.0;
  double gradient_norm = 0.0;
};
ProjectiveDiscord a_discord_projective(const BipartiteState& st);

// Geometric A-discord: minimum squared Hilbert-Schmidt distance from rho to
// its dephasing under a projective measurement on A, same optimizer.
double geometric_a_discord(const BipartiteState& st);

// Built-in demonstration that the projective A-discord can increase under a
// commutativity-preserving (unital) local channel: a fixed 2-qubit state and
// the one-qubit twirl rho -> (rho + u rho u^dagger)/2.
Eigen::Matrix4d discord_demo_r_matrix();
Matrix discord_demo_unitary();

struct DiscordIncreaseDemo {
  double discord_before = 0.0;
  double discord_after = 0.0;
  bool increased = false;
};
DiscordIncreaseDemo discord_increase_demo();

}  // namespace qcop
