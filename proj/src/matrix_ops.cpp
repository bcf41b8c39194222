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

#include "qcop/matrix_ops.hpp"

#include <cstdio>
#include <cmath>

namespace qcop {

namespace {

void require_same_square(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw std::invalid_argument(std::string(op) + ": operands must be square matrices of equal dimension, got " +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " and " +
                                std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

}  // namespace

Matrix commutator(const Matrix& a, const Matrix& b) {
  require_same_square(a, b, "commutator");
  return a * b - b * a;
}

Matrix anticommutator(const Matrix& a, const Matrix& b) {
  require_same_square(a, b, "anticommutator");
  return a * b + b * a;
}

Complex trace_product(const Matrix& a, const Matrix& b) {
  require_same_square(a, b, "trace_product");
  return a.cwiseProduct(b.transpose()).sum();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

std::string scalar_text(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

bool is_hermitian(const Matrix& m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.adjoint()) <= tolerance;
}

DensityCheck check_density_matrix(const Matrix& m) {
  DensityCheck check;
  check.hermiticity_error = max_abs(m - m.adjoint());
  check.trace_error = std::abs(m.trace() - Complex(1.0, 0.0));
  Eigen::SelfAdjointEigenSolver<Matrix> solver((m + m.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
  check.min_eigenvalue = solver.eigenvalues().minCoeff();
  return check;
}

bool is_density_matrix(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) return false;
  return check_density_matrix(m).ok();
}

Matrix trace_out_first(const Matrix& m, int d1, int d2) {
  if (m.rows() != d1 * d2 || m.cols() != d1 * d2) {
    throw std::invalid_argument("trace_out_first: matrix is not (d1*d2) x (d1*d2)");
  }
  Matrix out = Matrix::Zero(d2, d2);
  for (int a = 0; a < d1; ++a) {
    out += m.block(a * d2, a * d2, d2, d2);
  }
  return out;
}

Matrix trace_out_second(const Matrix& m, int d1, int d2) {
  if (m.rows() != d1 * d2 || m.cols() != d1 * d2) {
    throw std::invalid_argument("trace_out_second: matrix is not (d1*d2) x (d1*d2)");
  }
  Matrix out = Matrix::Zero(d1, d1);
  for (int a = 0; a < d1; ++a) {
    for (int b = 0; b < d1; ++b) {
      out(a, b) = m.block(a * d2, b * d2, d2, d2).trace();
    }
  }
  return out;
}

RealVector hermitian_eigenvalues(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver((m + m.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

}  // namespace qcop
