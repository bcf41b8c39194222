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

#include <vector>

#include "qcop/types.hpp"

namespace qcop {

// Orthonormal Hermitian operator basis {lambda_0 .. lambda_D}, D = d^2 - 1,
// with lambda_0 = I and Tr(lambda_mu lambda_nu) = d delta_{mu,nu}.
//
// Concretely: generalized Gell-Mann matrices (symmetric, antisymmetric,
// diagonal families, in that order) rescaled by sqrt(d/2) for mu >= 1. At
// d = 2 this is exactly {I, sigma_x, sigma_y, sigma_z}.
//
// Also carries the totally antisymmetric structure constants
// f_{mu,nu,tau} = -i Tr([lambda_mu, lambda_nu] lambda_tau) / d^2, which
// vanish whenever any index is 0 and contract as
// sum_{mu,nu} f_{mu,nu,tau} f_{mu,nu,tau'} = 2 delta_{tau,tau'}.
class HermitianBasis {
 public:
  struct FEntry {
    int mu, nu, tau;
    double value;
  };

  explicit HermitianBasis(int d);

  int dim() const { return d_; }
  // Number of basis elements, D + 1 = d^2.
  int count() const { return n_; }

  const Matrix& lambda(int mu) const { return lambdas_[static_cast<size_t>(mu)]; }
  const std::vector<Matrix>& lambdas() const { return lambdas_; }

  double f(int mu, int nu, int tau) const {
    return f_[(static_cast<size_t>(mu) * n_ + nu) * n_ + tau];
  }
  // Every entry with |f| above the zero cutoff, all index orders included.
  const std::vector<FEntry>& f_nonzeros() const { return f_nonzeros_; }

  // c_mu = Re Tr(m lambda_mu); exact expansion coefficients for Hermitian m.
  RealVector coefficients(const Matrix& m) const;
  // sum_mu c_mu lambda_mu / d; inverse of coefficients().
  Matrix reconstruct(const RealVector& coefficients) const;

 private:
  int d_;
  int n_;
  std::vector<Matrix> lambdas_;
  std::vector<double> f_;
  std::vector<FEntry> f_nonzeros_;
};

// Process-wide cache of bases; thread-safe, keyed by dimension.
const HermitianBasis& basis_for(int d);

}  // namespace qcop
