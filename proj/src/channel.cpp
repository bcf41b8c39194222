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

#include "qcop/channel.hpp"

#include <cmath>

#include "qcop/matrix_ops.hpp"

namespace qcop {

namespace {

// Eigenvalues of the Choi matrix below this are treated as numerically zero
// when extracting a canonical Kraus set.
constexpr double kKrausEigenvalueFloor = 1e-12;

Vector vec_row_major(const Matrix& k) {
  const int d = static_cast<int>(k.rows());
  Vector v(d * d);
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) v(m * d + n) = k(m, n);
  }
  return v;
}

Matrix unvec_row_major(const Vector& v, int d) {
  Matrix k(d, d);
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) k(m, n) = v(m * d + n);
  }
  return k;
}

Matrix choi_from_kraus(const std::vector<Matrix>& kraus, int d) {
  Matrix choi = Matrix::Zero(d * d, d * d);
  for (const Matrix& k : kraus) {
    const Vector v = vec_row_major(k);
    choi += v * v.adjoint();
  }
  return choi;
}

// |Phi><Phi| with |Phi> = sum_n |nn>, unnormalized (trace d).
Matrix max_entangled_projector(int d) {
  Matrix phi = Matrix::Zero(d * d, d * d);
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) phi(m * d + m, n * d + n) = 1.0;
  }
  return phi;
}

}  // namespace

QuantumChannel QuantumChannel::from_kraus(std::vector<Matrix> kraus, std::string name) {
  if (kraus.empty()) throw std::invalid_argument("QuantumChannel: empty Kraus set");
  const int d = static_cast<int>(kraus[0].rows());
  if (d < 1) throw std::invalid_argument("QuantumChannel: Kraus operators must be nonempty");
  for (const Matrix& k : kraus) {
    if (k.rows() != d || k.cols() != d) {
      throw std::invalid_argument("QuantumChannel: Kraus operators must all be d x d");
    }
  }
  Matrix choi = choi_from_kraus(kraus, d);
  return QuantumChannel(d, std::move(name), std::move(kraus), std::move(choi));
}

QuantumChannel QuantumChannel::from_choi(Matrix choi, std::string name) {
  const int dim2 = static_cast<int>(choi.rows());
  if (choi.cols() != dim2) throw std::invalid_argument("QuantumChannel: Choi matrix must be square");
  const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(dim2))));
  if (d < 2 || d * d != dim2) {
    throw std::invalid_argument("QuantumChannel: Choi matrix dimension must be d^2 with d >= 2");
  }
  if (!is_hermitian(choi, tol::kSpectral)) {
    throw ValidationError("QuantumChannel: Choi matrix is not Hermitian");
  }
  return QuantumChannel(d, std::move(name), {}, std::move(choi));
}

QuantumChannel QuantumChannel::identity(int d) {
  if (d < 2) throw std::invalid_argument("identity channel: d must be >= 2");
  return from_kraus({Matrix::Identity(d, d)}, "identity");
}

QuantumChannel QuantumChannel::unitary(Matrix u) {
  const int d = static_cast<int>(u.rows());
  if (d < 2 || u.cols() != d) throw std::invalid_argument("unitary channel: U must be square, d >= 2");
  if (max_abs(u * u.adjoint() - Matrix::Identity(d, d)) > tol::kSpectral) {
    throw ValidationError("unitary channel: U is not unitary");
  }
  return from_kraus({std::move(u)}, "unitary");
}

QuantumChannel QuantumChannel::cloning(int d, double c) {
  if (d < 2) throw std::invalid_argument("cloning channel: d must be >= 2");
  if (!(c >= 0.0 && c <= 1.0)) {
    throw ValidationError("cloning channel: c must lie in [0, 1], got " + scalar_text(c));
  }
  Matrix choi = (Matrix::Identity(d * d, d * d) + c * max_entangled_projector(d)) / (d + c);
  return QuantumChannel(d, "cloning", {}, std::move(choi));
}

QuantumChannel QuantumChannel::transpose_cloning(int d, double c) {
  if (d < 2) throw std::invalid_argument("transpose_cloning channel: d must be >= 2");
  if (!(std::abs(c) <= 1.0)) {
    throw ValidationError("transpose_cloning channel: |c| must be <= 1, got " + scalar_text(c));
  }
  Matrix swap = Matrix::Zero(d * d, d * d);
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) swap(n * d + m, m * d + n) = 1.0;
  }
  Matrix choi = (Matrix::Identity(d * d, d * d) + c * swap) / (d + c);
  return QuantumChannel(d, "transpose_cloning", {}, std::move(choi));
}

QuantumChannel QuantumChannel::semi_classical(std::vector<Matrix> povm, std::vector<Vector> basis) {
  if (povm.empty() || povm.size() != basis.size()) {
    throw ValidationError("semi_classical channel: POVM and basis must be nonempty and of equal length");
  }
  const int d = static_cast<int>(povm[0].rows());
  if (d < 2) throw std::invalid_argument("semi_classical channel: d must be >= 2");

  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& m : povm) {
    if (m.rows() != d || m.cols() != d) {
      throw ValidationError("semi_classical channel: POVM elements must all be d x d");
    }
    if (!is_hermitian(m, tol::kSpectral)) {
      throw ValidationError("semi_classical channel: POVM element is not Hermitian");
    }
    if (hermitian_eigenvalues(m).minCoeff() < -tol::kSpectral) {
      throw ValidationError("semi_classical channel: POVM element is not positive semidefinite");
    }
    sum += m;
  }
  if (max_abs(sum - Matrix::Identity(d, d)) > tol::kSpectral) {
    throw ValidationError("semi_classical channel: POVM is incomplete (sum M_k != I)");
  }
  for (size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].size() != d) throw ValidationError("semi_classical channel: output kets must have dimension d");
    if (std::abs(basis[i].norm() - 1.0) > tol::kSpectral) {
      throw ValidationError("semi_classical channel: output kets must be unit vectors");
    }
    for (size_t j = 0; j < i; ++j) {
      const double overlap = std::abs(basis[i].dot(basis[j]));
      if (overlap > tol::kSpectral && overlap < 1.0 - tol::kSpectral) {
        throw ValidationError("semi_classical channel: distinct output kets must be orthonormal");
      }
    }
  }

  std::vector<Matrix> kraus;
  for (size_t k = 0; k < povm.size(); ++k) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(povm[k]);
    for (int j = 0; j < d; ++j) {
      const double w = solver.eigenvalues()(j);
      if (w > kKrausEigenvalueFloor) {
        kraus.push_back(std::sqrt(w) * basis[k] * solver.eigenvectors().col(j).adjoint());
      }
    }
  }
  return from_kraus(std::move(kraus), "semi_classical");
}

QuantumChannel QuantumChannel::hamiltonian(Matrix h) {
  const int d = static_cast<int>(h.rows());
  if (d < 2 || h.cols() != d) throw std::invalid_argument("hamiltonian channel: H must be square, d >= 2");
  if (!is_hermitian(h, tol::kAlgebra)) {
    throw ValidationError("hamiltonian channel: H is not Hermitian");
  }
  if (std::abs(h.trace()) > tol::kAlgebra) {
    throw ValidationError("hamiltonian channel: H must be traceless, got trace " +
                          scalar_text(std::abs(h.trace())));
  }
  const Matrix phi = max_entangled_projector(d);
  const Matrix h_ext = kron(h, Matrix::Identity(d, d));
  Matrix choi = (Matrix::Identity(d * d, d * d) - Complex(0.0, 1.0) * (h_ext * phi - phi * h_ext)) / d;
  return QuantumChannel(d, "hamiltonian", {}, std::move(choi));
}

QuantumChannel QuantumChannel::mixture(double p, const QuantumChannel& first, const QuantumChannel& second) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError("mixture channel: p must lie in [0, 1], got " + scalar_text(p));
  }
  if (first.dim() != second.dim()) {
    throw std::invalid_argument("mixture channel: component dimensions differ");
  }
  Matrix choi = p * first.choi() + (1.0 - p) * second.choi();
  return QuantumChannel(first.dim(), "mixture", {}, std::move(choi));
}

Matrix QuantumChannel::apply(const Matrix& rho) const {
  if (rho.rows() != d_ || rho.cols() != d_) {
    throw std::invalid_argument("QuantumChannel::apply: state dimension mismatch");
  }
  if (!kraus_.empty()) {
    Matrix out = Matrix::Zero(d_, d_);
    for (const Matrix& k : kraus_) out += k * rho * k.adjoint();
    return out;
  }
  // Lambda(rho) = Tr_B(R (I (x) rho^T)).
  return trace_out_second(choi_ * kron(Matrix::Identity(d_, d_), rho.transpose()), d_, d_);
}

const std::vector<Matrix>& QuantumChannel::kraus() const {
  if (kraus_.empty()) throw std::logic_error("QuantumChannel::kraus: channel holds no Kraus form");
  return kraus_;
}

std::vector<Matrix> QuantumChannel::kraus_from_choi() const {
  Eigen::SelfAdjointEigenSolver<Matrix> solver((choi_ + choi_.adjoint()) / 2.0);
  if (solver.eigenvalues().minCoeff() < -tol::kSpectral) {
    throw ValidationError("QuantumChannel: not completely positive (min Choi eigenvalue " +
                          scalar_text(solver.eigenvalues().minCoeff()) + "); Kraus form undefined");
  }
  std::vector<Matrix> kraus;
  for (int i = 0; i < solver.eigenvalues().size(); ++i) {
    const double w = solver.eigenvalues()(i);
    if (w > kKrausEigenvalueFloor) {
      kraus.push_back(std::sqrt(w) * unvec_row_major(solver.eigenvectors().col(i), d_));
    }
  }
  return kraus;
}

bool QuantumChannel::is_trace_preserving(double tolerance) const {
  if (!kraus_.empty()) {
    Matrix sum = Matrix::Zero(d_, d_);
    for (const Matrix& k : kraus_) sum += k.adjoint() * k;
    return max_abs(sum - Matrix::Identity(d_, d_)) <= tolerance;
  }
  return max_abs(trace_out_first(choi_, d_, d_) - Matrix::Identity(d_, d_)) <= tolerance;
}

bool QuantumChannel::is_completely_positive(double tolerance) const {
  return min_choi_eigenvalue() >= -tolerance;
}

double QuantumChannel::min_choi_eigenvalue() const {
  return hermitian_eigenvalues(choi_).minCoeff();
}

Matrix apply_to_first(const QuantumChannel& ch, const Matrix& rho_ab, int d_second) {
  const int da = ch.dim();
  const int db = d_second;
  if (rho_ab.rows() != da * db || rho_ab.cols() != da * db) {
    throw std::invalid_argument("apply_to_first: bipartite state dimension mismatch");
  }
  // rho = sum_{b1,b2} M_{b1 b2} (x) |b1><b2|; image has blocks Lambda(M).
  Matrix out = Matrix::Zero(da * db, da * db);
  Matrix block(da, da);
  for (int b1 = 0; b1 < db; ++b1) {
    for (int b2 = 0; b2 < db; ++b2) {
      for (int a1 = 0; a1 < da; ++a1) {
        for (int a2 = 0; a2 < da; ++a2) block(a1, a2) = rho_ab(a1 * db + b1, a2 * db + b2);
      }
      const Matrix image = ch.apply(block);
      for (int a1 = 0; a1 < da; ++a1) {
        for (int a2 = 0; a2 < da; ++a2) out(a1 * db + b1, a2 * db + b2) = image(a1, a2);
      }
    }
  }
  return out;
}

QuantumChannel random_channel(int d, Rng& rng) {
  // Haar isometry C^d -> C^d (x) C^{d^2} via QR of a tall Ginibre block.
  const int env = d * d;
  Matrix g(d * env, d);
  for (int i = 0; i < d * env; ++i) {
    for (int j = 0; j < d; ++j) g(i, j) = rng.complex_normal();
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(d * env, d);
  std::vector<Matrix> kraus;
  kraus.reserve(static_cast<size_t>(env));
  for (int e = 0; e < env; ++e) {
    kraus.push_back(q.block(e * d, 0, d, d));
  }
  return QuantumChannel::from_kraus(std::move(kraus), "random");
}

QuantumChannel random_unital_qubit_channel(Rng& rng) {
  const int terms = 4;
  const RealVector weights = random_simplex_point(terms, rng);
  std::vector<Matrix> kraus;
  for (int i = 0; i < terms; ++i) {
    kraus.push_back(std::sqrt(weights(i)) * haar_unitary(2, rng));
  }
  return QuantumChannel::from_kraus(std::move(kraus), "random_unital");
}

QuantumChannel random_semi_classical_channel(int d, Rng& rng) {
  std::vector<Matrix> povm;
  Matrix sum = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    Matrix g(d, d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) g(i, j) = rng.complex_normal();
    }
    povm.push_back(g * g.adjoint());
    sum += povm.back();
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sum);
  const Matrix inv_sqrt = solver.operatorInverseSqrt();
  for (Matrix& m : povm) m = inv_sqrt * m * inv_sqrt;

  const Matrix u = haar_unitary(d, rng);
  std::vector<Vector> basis;
  for (int k = 0; k < d; ++k) basis.push_back(u.col(k));
  return QuantumChannel::semi_classical(std::move(povm), std::move(basis));
}

}  // namespace qcop
