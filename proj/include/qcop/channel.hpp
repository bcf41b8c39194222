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
#include <string>
#include <vector>

#include "qcop/random.hpp"
#include "qcop/types.hpp"

namespace qcop {

// A qudit channel held in Kraus and/or Choi form. The Choi state follows the
// unnormalized convention R = (Lambda (x) I)(Phi), Phi = |Phi><Phi| with
// |Phi> = sum_n |nn>, so Tr R = d and trace preservation reads
// Tr_A(R) = I_B. Channels are immutable after construction.
//
// Construction does not require complete positivity: Hamiltonian channels
// past the CP boundary are representable and simply report cp() == false.
class QuantumChannel {
 public:
  static QuantumChannel from_kraus(std::vector<Matrix> kraus, std::string name = "kraus");
  static QuantumChannel from_choi(Matrix choi, std::string name = "choi");

  // The zoo. All are exactly trace preserving by construction.
  static QuantumChannel identity(int d);
  static QuantumChannel unitary(Matrix u);
  // C(rho) = (I Tr rho + c rho) / (d + c), 0 <= c <= 1.
  static QuantumChannel cloning(int d, double c);
  // Lambda(rho) = (I Tr rho + c rho^T) / (d + c), |c| <= 1; CP is checked
  // numerically, never assumed.
  static QuantumChannel transpose_cloning(int d, double c);
  // B(rho) = sum_k Tr(M_k rho) |phi_k><phi_k|; POVM must be complete and the
  // distinct |phi_k> must form an orthonormal set.
  static QuantumChannel semi_classical(std::vector<Matrix> povm, std::vector<Vector> basis);
  // H(rho) = (I Tr rho - i[H, rho]) / d, H Hermitian and traceless.
  // Completely positive iff Tr H^2 <= 1/d; constructible either way.
  static QuantumChannel hamiltonian(Matrix h);
  // p Lambda_1 + (1 - p) Lambda_2.
  static QuantumChannel mixture(double p, const QuantumChannel& first, const QuantumChannel& second);

  int dim() const { return d_; }
  const std::string& name() const { return name_; }

  Matrix apply(const Matrix& rho) const;

  const Matrix& choi() const { return choi_; }
  bool has_kraus() const { return !kraus_.empty(); }
  const std::vector<Matrix>& kraus() const;
  // Canonical Kraus set from the Choi eigendecomposition; eigenvalues below
  // 1e-12 are dropped. Throws ValidationError when the channel is not CP.
  std::vector<Matrix> kraus_from_choi() const;

  bool is_trace_preserving(double tolerance = tol::kSpectral) const;
  bool is_completely_positive(double tolerance = tol::kSpectral) const;
  double min_choi_eigenvalue() const;

 private:
  QuantumChannel(int d, std::string name, std::vector<Matrix> kraus, Matrix choi)
      : d_(d), name_(std::move(name)), kraus_(std::move(kraus)), choi_(std::move(choi)) {}

  int d_;
  std::string name_;
  std::vector<Matrix> kraus_;  // empty for Choi-only channels
  Matrix choi_;
};

// (Lambda (x) I)(rho_ab) on C^{dA} (x) C^{dB} with dA = ch.dim(), first
// factor major.
Matrix apply_to_first(const QuantumChannel& ch, const Matrix& rho_ab, int d_second);

// Samplers for property suites: Kraus sets from Haar-random isometries with
// environment dimension d^2, unital qubit channels as random mixtures of
// Haar unitaries, semi-classical channels from random POVMs.
QuantumChannel random_channel(int d, Rng& rng);
QuantumChannel random_unital_qubit_channel(Rng& rng);
QuantumChannel random_semi_classical_channel(int d, Rng& rng);

}  // namespace qcop
