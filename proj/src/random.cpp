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

#include "qcop/random.hpp"

#include <cmath>
#include <numbers>

namespace qcop {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng Rng::for_sample(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(seed ^ splitmix64(index + 1)));
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(angle);
  have_spare_ = true;
  return r * std::cos(angle);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) / std::sqrt(2.0);
}

Matrix haar_unitary(int d, Rng& rng) {
  Matrix g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) g(i, j) = rng.complex_normal();
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(d, d);
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase gauge so the distribution is exactly Haar.
  for (int j = 0; j < d; ++j) {
    const Complex diag = r(j, j);
    q.col(j) *= diag / std::abs(diag);
  }
  return q;
}

Matrix random_hermitian(int d, Rng& rng) {
  Matrix g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) g(i, j) = rng.complex_normal();
  }
  return (g + g.adjoint()) / 2.0;
}

Matrix random_traceless_hermitian(int d, Rng& rng) {
  Matrix h = random_hermitian(d, rng);
  h -= (h.trace() / static_cast<double>(d)) * Matrix::Identity(d, d);
  return h;
}

Matrix random_density_matrix(int d, Rng& rng) {
  Matrix g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) g(i, j) = rng.complex_normal();
  }
  Matrix rho = g * g.adjoint();
  return rho / rho.trace();
}

RealVector random_simplex_point(int n, Rng& rng) {
  RealVector p(n);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    p(i) = -std::log(1.0 - rng.uniform());
    total += p(i);
  }
  return p / total;
}

}  // namespace qcop
