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

#include "qcop/channel.hpp"
#include "qcop/types.hpp"

namespace qcop {

// The two-quDit observable K, D = d^2 - 1, with matrix elements
// <mu,al| K |be,nu> = sum_tau f_{mu,nu,tau} f_{al,be,tau} over indices
// 1..D. Row index flattening is (mu,al) -> (mu-1)*D + (al-1) and column
// (be,nu) -> (be-1)*D + (nu-1).
//
// K is real symmetric with spectrum inside {2, +-1, 0, +-2/d}; eigenvalue 2
// is simple with eigenvector |Psi> = sum_mu |mu,mu>, the |f_tau> are
// eigenvectors at -1 and the |e_tau> at +1. These facts are verified
// numerically at construction.
class KOperator {
 public:
  int dim() const { return d_; }
  int levels() const { return big_d_; }
  const RealMatrix& matrix() const { return k_; }
  // Ascending, from a self-adjoint eigensolve cached at construction.
  const RealVector& eigenvalues() const { return eigenvalues_; }

  // Unnormalized distinguished vectors (components over the 1..D block).
  RealVector psi_vector() const;
  RealVector f_vector(int tau) const;  // sum_{mu,nu} f_{mu,nu,tau} |mu,nu>
  RealVector e_vector(int tau) const;  // sum Tr({l_mu,l_nu} l_tau)/d^2 |mu,nu>

  friend KOperator build_k(int d, int cap_d);

 private:
  KOperator() = default;
  int d_ = 0;
  int big_d_ = 0;
  RealMatrix k_;
  RealVector eigenvalues_;
};

KOperator build_k(int d, int cap_d = kDefaultKCapD);

// ||K^2 - (4 Psi + E + F + 4P/d^2)||_F for the mutually orthogonal
// projections Psi, E, F, P; asserts orthogonality and idempotence en route.
// Unsupported at d = 2, where E's normalization degenerates.
double verify_k_squared_decomposition(const KOperator& k);

// Real coefficients Lambda_mu^al = Tr(Lambda(lambda_mu) lambda_al). The
// 1..D block enters the mixture quadratic form; the mu = 0 / al = 0 rows
// are kept separately as trace-preservation and unitality diagnostics.
struct ChannelVector {
  int d = 0;
  RealVector v;            // D^2 entries, (mu,al) flattened as in KOperator
  RealVector trace_row;    // Lambda_mu^0 = Tr(Lambda(lambda_mu)), mu = 0..D
  RealVector unital_row;   // Lambda_0^al, al = 0..D
};
ChannelVector channel_vector(const QuantumChannel& ch);

// CoP degree of p I + (1-p) ch through the quadratic form
// p^2 (1-p)^2 <Lambda| (2 - K)(1 + K) |Lambda>. Requires ch itself CoP
// (hypothesis of the closed form) and 0 < p < 1.
double mixture_cop_degree(const QuantumChannel& ch, double p);

// Decides whether mixing a CoP channel with the identity stays CoP, which
// singles out cloning channels for d >= 3. Also reports the decomposition
// |Lambda> = a |Psi> + sum_tau h_tau |f_tau> + remainder and the extracted
// Hamiltonian sum_tau h_tau lambda_tau / d.
struct CloningMixtureReport {
  bool is_cloning = false;
  double mixture_delta = 0.0;
  double identity_weight = 0.0;        // a
  RealVector hamiltonian_coefficients; // h_tau, tau = 1..D
  double span_residual = 0.0;
  Matrix extracted_hamiltonian;
};
CloningMixtureReport cloning_mixture_check(const QuantumChannel& ch, double p);

}  // namespace qcop
