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

#include "qcop/mixture_spectrum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "qcop/cop_analysis.hpp"
#include "qcop/hermitian_basis.hpp"
#include "qcop/matrix_ops.hpp"

namespace qcop {

namespace {

constexpr double kSpectrumTol = 1e-9;

void verify_k_invariants(const KOperator& k) {
  const int d = k.dim();
  const int big_d = k.levels();
  const RealMatrix& m = k.matrix();

  if ((m - m.transpose()).cwiseAbs().maxCoeff() > tol::kAlgebra) {
    throw std::logic_error("KOperator: matrix is not symmetric");
  }

  const std::array<double, 6> allowed = {2.0, -1.0, 1.0, 0.0, 2.0 / d, -2.0 / d};
  int multiplicity_two = 0;
  int multiplicity_minus_one = 0;
  for (int i = 0; i < k.eigenvalues().size(); ++i) {
    const double ev = k.eigenvalues()(i);
    double dist = std::numeric_limits<double>::infinity();
    for (double a : allowed) dist = std::min(dist, std::abs(ev - a));
    if (dist > kSpectrumTol) {
      throw std::logic_error("KOperator: eigenvalue " + scalar_text(ev) + " outside {2, +-1, 0, +-2/d}");
    }
    if (std::abs(ev - 2.0) <= kSpectrumTol) ++multiplicity_two;
    if (std::abs(ev + 1.0) <= kSpectrumTol) ++multiplicity_minus_one;
  }
  if (multiplicity_two != 1) {
    throw std::logic_error("KOperator: eigenvalue 2 must be simple, multiplicity " +
                           std::to_string(multiplicity_two));
  }
  if (d >= 3 && multiplicity_minus_one < big_d) {
    throw std::logic_error("KOperator: eigenvalue -1 multiplicity below D");
  }

  const RealVector psi = k.psi_vector();
  if ((m * psi - 2.0 * psi).cwiseAbs().maxCoeff() > kSpectrumTol) {
    throw std::logic_error("KOperator: K|Psi> != 2|Psi>");
  }
  for (int tau = 1; tau <= big_d; ++tau) {
    const RealVector f = k.f_vector(tau);
    if ((m * f + f).cwiseAbs().maxCoeff() > kSpectrumTol) {
      throw std::logic_error("KOperator: K|f_tau> != -|f_tau>");
    }
    if (d >= 3) {
      const RealVector e = k.e_vector(tau);
      if ((m * e - e).cwiseAbs().maxCoeff() > kSpectrumTol) {
        throw std::logic_error("KOperator: K|e_tau> != |e_tau>");
      }
    }
  }
}

}  // namespace

RealVector KOperator::psi_vector() const {
  RealVector psi = RealVector::Zero(big_d_ * big_d_);
  for (int mu = 0; mu < big_d_; ++mu) psi(mu * big_d_ + mu) = 1.0;
  return psi;
}

RealVector KOperator::f_vector(int tau) const {
  const HermitianBasis& basis = basis_for(d_);
  RealVector f = RealVector::Zero(big_d_ * big_d_);
  for (int mu = 1; mu <= big_d_; ++mu) {
    for (int nu = 1; nu <= big_d_; ++nu) {
      f((mu - 1) * big_d_ + (nu - 1)) = basis.f(mu, nu, tau);
    }
  }
  return f;
}

RealVector KOperator::e_vector(int tau) const {
  const HermitianBasis& basis = basis_for(d_);
  RealVector e = RealVector::Zero(big_d_ * big_d_);
  const double inv_d2 = 1.0 / (static_cast<double>(d_) * d_);
  for (int mu = 1; mu <= big_d_; ++mu) {
    for (int nu = mu; nu <= big_d_; ++nu) {
      const double value =
          trace_product(anticommutator(basis.lambda(mu), basis.lambda(nu)), basis.lambda(tau)).real() * inv_d2;
      e((mu - 1) * big_d_ + (nu - 1)) = value;
      e((nu - 1) * big_d_ + (mu - 1)) = value;
    }
  }
  return e;
}

KOperator build_k(int d, int cap_d) {
  if (d < 2) throw std::invalid_argument("build_k: d must be >= 2");
  if (d > cap_d) {
    throw CapError("build_k: d = " + std::to_string(d) + " exceeds the K-operator cap " + std::to_string(cap_d));
  }
  const HermitianBasis& basis = basis_for(d);
  const int big_d = d * d - 1;
  const int n = d * d;

  KOperator k;
  k.d_ = d;
  k.big_d_ = big_d;
  k.k_ = RealMatrix::Zero(big_d * big_d, big_d * big_d);
  for (int mu = 1; mu <= big_d; ++mu) {
    for (int nu = 1; nu <= big_d; ++nu) {
      for (int al = 1; al <= big_d; ++al) {
        for (int be = 1; be <= big_d; ++be) {
          double value = 0.0;
          for (int tau = 1; tau < n; ++tau) value += basis.f(mu, nu, tau) * basis.f(al, be, tau);
          k.k_((mu - 1) * big_d + (al - 1), (be - 1) * big_d + (nu - 1)) = value;
        }
      }
    }
  }

  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(k.k_, Eigen::EigenvaluesOnly);
  k.eigenvalues_ = solver.eigenvalues();
  verify_k_invariants(k);
  return k;
}

double verify_k_squared_decomposition(const KOperator& k) {
  const int d = k.dim();
  if (d < 3) {
    throw std::invalid_argument("verify_k_squared_decomposition: unsupported at d = 2 (E normalization degenerates)");
  }
  const int big_d = k.levels();
  const int dim = big_d * big_d;

  const RealVector psi = k.psi_vector();
  const RealMatrix psi_proj = psi * psi.transpose() / big_d;

  RealMatrix f_proj = RealMatrix::Zero(dim, dim);
  RealMatrix e_proj = RealMatrix::Zero(dim, dim);
  for (int tau = 1; tau <= big_d; ++tau) {
    const RealVector f = k.f_vector(tau);
    f_proj += f * f.transpose() / 2.0;
    const RealVector e = k.e_vector(tau);
    e_proj += (static_cast<double>(d) * d / (2.0 * (d * d - 4.0))) * e * e.transpose();
  }

  RealMatrix swap = RealMatrix::Zero(dim, dim);
  for (int x = 0; x < big_d; ++x) {
    for (int y = 0; y < big_d; ++y) swap(x * big_d + y, y * big_d + x) = 1.0;
  }
  const RealMatrix p_proj = (RealMatrix::Identity(dim, dim) + swap) / 2.0 - psi_proj - e_proj;

  const std::array<const RealMatrix*, 4> projections = {&psi_proj, &e_proj, &f_proj, &p_proj};
  for (size_t i = 0; i < projections.size(); ++i) {
    if ((*projections[i] * *projections[i] - *projections[i]).cwiseAbs().maxCoeff() > tol::kSpectral) {
      throw std::logic_error("verify_k_squared_decomposition: projection is not idempotent");
    }
    for (size_t j = i + 1; j < projections.size(); ++j) {
      if ((*projections[i] * *projections[j]).cwiseAbs().maxCoeff() > tol::kSpectral) {
        throw std::logic_error("verify_k_squared_decomposition: projections are not orthogonal");
      }
    }
  }

  const RealMatrix reconstructed =
      4.0 * psi_proj + e_proj + f_proj + (4.0 / (static_cast<double>(d) * d)) * p_proj;
  return (k.matrix() * k.matrix() - reconstructed).norm();
}

ChannelVector channel_vector(const QuantumChannel& ch) {
  const int d = ch.dim();
  const HermitianBasis& basis = basis_for(d);
  const int n = basis.count();
  const int big_d = n - 1;

  std::vector<Matrix> images(static_cast<size_t>(n));
  for (int mu = 0; mu < n; ++mu) images[static_cast<size_t>(mu)] = ch.apply(basis.lambda(mu));

  ChannelVector out;
  out.d = d;
  out.v = RealVector::Zero(big_d * big_d);
  out.trace_row = RealVector::Zero(n);
  out.unital_row = RealVector::Zero(n);
  for (int mu = 0; mu < n; ++mu) {
    out.trace_row(mu) = trace_product(images[static_cast<size_t>(mu)], basis.lambda(0)).real();
    out.unital_row(mu) = trace_product(images[0], basis.lambda(mu)).real();
  }
  for (int mu = 1; mu <= big_d; ++mu) {
    for (int al = 1; al <= big_d; ++al) {
      out.v((mu - 1) * big_d + (al - 1)) = trace_product(images[static_cast<size_t>(mu)], basis.lambda(al)).real();
    }
  }
  return out;
}

namespace {

double quadratic_form(const KOperator& k, const ChannelVector& cv, double p) {
  // <v| (2 - K)(1 + K) |v> = 2|v|^2 + <v|K v> - |K v|^2 on the 1..D block.
  const RealVector& v = cv.v;
  const RealVector kv = k.matrix() * v;
  double form = 2.0 * v.squaredNorm() + v.dot(kv) - kv.squaredNorm();
  // The mu = 0 and al = 0 coefficient rows extend |Lambda> into the full
  // summation range; K vanishes there, so (2 - K)(1 + K) acts as 2. The
  // Lambda_0^al row is the unitality defect and contributes for non-unital
  // CoP channels (semi-classical ones); the Lambda_mu^0 row vanishes for
  // every trace-preserving channel.
  for (int i = 1; i < cv.unital_row.size(); ++i) form += 2.0 * cv.unital_row(i) * cv.unital_row(i);
  for (int i = 1; i < cv.trace_row.size(); ++i) form += 2.0 * cv.trace_row(i) * cv.trace_row(i);
  return p * p * (1.0 - p) * (1.0 - p) * form;
}

void require_cop_hypothesis(const QuantumChannel& ch, const char* who) {
  const double delta = cop_degree(ch);
  if (delta > kCopVerdictTol) {
    throw ValidationError(std::string(who) + ": channel is not CoP (degree " + scalar_text(delta) +
                          "); the mixture quadratic form assumes a CoP component");
  }
}

}  // namespace

double mixture_cop_degree(const QuantumChannel& ch, double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("mixture_cop_degree: p must lie in (0, 1)");
  }
  require_cop_hypothesis(ch, "mixture_cop_degree");
  const KOperator k = build_k(ch.dim());
  return quadratic_form(k, channel_vector(ch), p);
}

CloningMixtureReport cloning_mixture_check(const QuantumChannel& ch, double p) {
  const int d = ch.dim();
  if (d < 3) {
    throw std::invalid_argument("cloning_mixture_check: only meaningful for d >= 3");
  }
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("cloning_mixture_check: p must lie in (0, 1)");
  }
  require_cop_hypothesis(ch, "cloning_mixture_check");

  const KOperator k = build_k(d);
  const ChannelVector cv = channel_vector(ch);
  const int big_d = k.levels();

  CloningMixtureReport report;
  report.mixture_delta = quadratic_form(k, cv, p);
  report.is_cloning = report.mixture_delta <= kCopVerdictTol;

  const RealVector psi = k.psi_vector();
  report.identity_weight = psi.dot(cv.v) / big_d;
  RealVector remainder = cv.v - report.identity_weight * psi;
  report.hamiltonian_coefficients = RealVector::Zero(big_d);
  const HermitianBasis& basis = basis_for(d);
  Matrix h = Matrix::Zero(d, d);
  for (int tau = 1; tau <= big_d; ++tau) {
    const RealVector f = k.f_vector(tau);
    const double coeff = f.dot(cv.v) / 2.0;
    report.hamiltonian_coefficients(tau - 1) = coeff;
    remainder -= coeff * f;
    h += coeff * basis.lambda(tau);
  }
  report.span_residual = remainder.norm();
  report.extracted_hamiltonian = h / d;
  return report;
}

}  // namespace qcop
