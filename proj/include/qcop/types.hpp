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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qcop {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Tolerance hierarchy: exact algebraic identities fail only on coding bugs,
// eigenvalue and positivity checks carry spectral-solver slack, anything
// behind the measurement optimizer is accurate to optimizer slack only.
namespace tol {
inline constexpr double kAlgebra = 1e-12;
inline constexpr double kSpectral = 1e-10;
inline constexpr double kOptimizer = 1e-4;
}  // namespace tol

// Largest local dimension for which 4-copy operators may be materialized.
inline constexpr int kDefaultCapD = 3;
// Largest dimension for which the D^2 x D^2 two-quDit operator K is built.
inline constexpr int kDefaultKCapD = 4;

// Input text could not be turned into an object: bad syntax, non-finite
// numbers, or shape-inconsistent payloads.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A well-formed object failed a physical validity requirement.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A materialization request exceeded the configured memory cap.
class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qcop
