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

#include "qcop/types.hpp"

namespace qcop {

// ab - ba. Anti-Hermitian whenever a and b are Hermitian.
Matrix commutator(const Matrix& a, const Matrix& b);

// ab + ba.
Matrix anticommutator(const Matrix& a, const Matrix& b);

// Tr(a b) without forming the product.
Complex trace_product(const Matrix& a, const Matrix& b);

// Kronecker product, first factor major.
Matrix kron(const Matrix& a, const Matrix& b);

double max_abs(const Matrix& m);

// Short %.6g rendering for diagnostics; to_string would flatten small
// residuals to 0.000000.
std::string scalar_text(double value);

bool is_hermitian(const Matrix& m, double tolerance = tol::kAlgebra);

struct DensityCheck {
  double hermiticity_error = 0.0;
  double trace_error = 0.0;
  double min_eigenvalue = 0.0;

  bool ok() const {
    return hermiticity_error <= tol::kAlgebra && trace_error <= tol::kSpectral &&
           min_eigenvalue >= -tol::kSpectral;
  }
};

DensityCheck check_density_matrix(const Matrix& m);
bool is_density_matrix(const Matrix& m);

// Partial traces of an operator on C^{d1} (x) C^{d2}, first factor major.
Matrix trace_out_first(const Matrix& m, int d1, int d2);   // d2 x d2 result
Matrix trace_out_second(const Matrix& m, int d1, int d2);  // d1 x d1 result

// Eigenvalues of a Hermitian matrix, ascending.
RealVector hermitian_eigenvalues(const Matrix& m);

}  // namespace qcop
