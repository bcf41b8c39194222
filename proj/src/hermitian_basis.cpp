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

#include "qcop/hermitian_basis.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "qcop/matrix_ops.hpp"

namespace qcop {

namespace {
// Entries of f are O(1) or exactly zero; trace arithmetic noise sits at ~1e-16.
constexpr double kFZeroCutoff = 1e-12;
}  // namespace

HermitianBasis::HermitianBasis(int d) : d_(d), n_(d * d) {
  if (d < 2) {
    throw std::invalid_argument("HermitianBasis: dimension must be >= 2, got " + std::to_string(d));
  }

  lambdas_.reserve(static_cast<size_t>(n_));
  lambdas_.push_back(Matrix::Identity(d, d));

  const double scale = std::sqrt(d / 2.0);
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      Matrix sym = Matrix::Zero(d, d);
      sym(j, k) = 1.0;
      sym(k, j) = 1.0;
      lambdas_.push_back(scale * sym);
    }
  }
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      Matrix anti = Matrix::Zero(d, d);
      anti(j, k) = Complex(0.0, -1.0);
      anti(k, j) = Complex(0.0, 1.0);
      lambdas_.push_back(scale * anti);
    }
  }
  for (int l = 1; l < d; ++l) {
    Matrix diag = Matrix::Zero(d, d);
    for (int j = 0; j < l; ++j) diag(j, j) = 1.0;
    diag(l, l) = -static_cast<double>(l);
    lambdas_.push_back(scale * std::sqrt(2.0 / (l * (l + 1.0))) * diag);
  }

  // f_{mu,nu,tau} = -i Tr([lambda_mu, lambda_nu] lambda_tau) / d^2.
  std::vector<Matrix> comms(static_cast<size_t>(n_) * n_);
  for (int mu = 0; mu < n_; ++mu) {
    for (int nu = mu + 1; nu < n_; ++nu) {
      comms[static_cast<size_t>(mu) * n_ + nu] = commutator(lambdas_[mu], lambdas_[nu]);
    }
  }
  f_.assign(static_cast<size_t>(n_) * n_ * n_, 0.0);
  const double inv_d2 = 1.0 / (static_cast<double>(d) * d);
  for (int mu = 0; mu < n_; ++mu) {
    for (int nu = mu + 1; nu < n_; ++nu) {
      const Matrix& c = comms[static_cast<size_t>(mu) * n_ + nu];
      for (int tau = 0; tau < n_; ++tau) {
        const double value = (Complex(0.0, -1.0) * trace_product(c, lambdas_[tau])).real() * inv_d2;
        f_[(static_cast<size_t>(mu) * n_ + nu) * n_ + tau] = value;
        f_[(static_cast<size_t>(nu) * n_ + mu) * n_ + tau] = -value;
      }
    }
  }
  for (int mu = 0; mu < n_; ++mu) {
    for (int nu = 0; nu < n_; ++nu) {
      for (int tau = 0; tau < n_; ++tau) {
        const double value = f_[(static_cast<size_t>(mu) * n_ + nu) * n_ + tau];
        if (std::abs(value) > kFZeroCutoff) {
          f_nonzeros_.push_back({mu, nu, tau, value});
        }
      }
    }
  }
}

RealVector HermitianBasis::coefficients(const Matrix& m) const {
  if (m.rows() != d_ || m.cols() != d_) {
    throw std::invalid_argument("HermitianBasis::coefficients: matrix dimension mismatch");
  }
  RealVector c(n_);
  for (int mu = 0; mu < n_; ++mu) {
    c(mu) = trace_product(m, lambdas_[mu]).real();
  }
  return c;
}

Matrix HermitianBasis::reconstruct(const RealVector& coefficients) const {
  if (coefficients.size() != n_) {
    throw std::invalid_argument("HermitianBasis::reconstruct: coefficient count mismatch");
  }
  Matrix m = Matrix::Zero(d_, d_);
  for (int mu = 0; mu < n_; ++mu) {
    m += coefficients(mu) * lambdas_[mu];
  }
  return m / static_cast<double>(d_);
}

const HermitianBasis& basis_for(int d) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<HermitianBasis>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(d);
  if (it == cache.end()) {
    it = cache.emplace(d, std::make_unique<HermitianBasis>(d)).first;
  }
  return *it->second;
}

}  // namespace qcop
