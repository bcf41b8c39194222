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

#include "qcop/discord.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "qcop/hermitian_basis.hpp"
#include "qcop/matrix_ops.hpp"

namespace qcop {

namespace {

constexpr int kGridTheta = 65;   // inclusive of both poles
constexpr int kGridPhi = 128;
constexpr double kGradientTol = 1e-8;
constexpr double kProbabilityFloor = 1e-14;

double entropy_bits(const Matrix& rho) {
  const RealVector eigs = hermitian_eigenvalues(rho);
  double s = 0.0;
  for (int i = 0; i < eigs.size(); ++i) {
    const double p = eigs(i);
    if (p > 1e-15) s -= p * std::log2(p);
  }
  return s;
}

Matrix qubit_projector(double theta, double phi) {
  const double nx = std::sin(theta) * std::cos(phi);
  const double ny = std::sin(theta) * std::sin(phi);
  const double nz = std::cos(theta);
  Matrix p(2, 2);
  p(0, 0) = (1.0 + nz) / 2.0;
  p(1, 1) = (1.0 - nz) / 2.0;
  p(0, 1) = Complex(nx, -ny) / 2.0;
  p(1, 0) = Complex(nx, ny) / 2.0;
  return p;
}

// Minimize a smooth periodic objective over (theta, phi): full coarse grid,
// then Nelder-Mead restarts until the finite-difference gradient is flat.
struct AngleMinimum {
  double grid_value = 0.0;
  double refined_value = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  double gradient_norm = 0.0;
};

double nelder_mead_2d(const std::function<double(double, double)>& f, double& x, double& y, double step) {
  struct Point {
    double x, y, value;
  };
  std::array<Point, 3> simplex = {Point{x, y, f(x, y)},
                                  Point{x + step, y, f(x + step, y)},
                                  Point{x, y + step, f(x, y + step)}};
  for (int iter = 0; iter < 400; ++iter) {
    std::sort(simplex.begin(), simplex.end(), [](const Point& a, const Point& b) {
      if (a.value != b.value) return a.value < b.value;
      if (a.x != b.x) return a.x < b.x;
      return a.y < b.y;
    });
    if (std::abs(simplex[2].value - simplex[0].value) < 1e-15 &&
        std::hypot(simplex[2].x - simplex[0].x, simplex[2].y - simplex[0].y) < 1e-12) {
      break;
    }
    const double cx = (simplex[0].x + simplex[1].x) / 2.0;
    const double cy = (simplex[0].y + simplex[1].y) / 2.0;
    const Point& worst = simplex[2];
    Point reflected{cx + (cx - worst.x), cy + (cy - worst.y), 0.0};
    reflected.value = f(reflected.x, reflected.y);
    if (reflected.value < simplex[0].value) {
      Point expanded{cx + 2.0 * (cx - worst.x), cy + 2.0 * (cy - worst.y), 0.0};
      expanded.value = f(expanded.x, expanded.y);
      simplex[2] = expanded.value < reflected.value ? expanded : reflected;
    } else if (reflected.value < simplex[1].value) {
      simplex[2] = reflected;
    } else {
      Point contracted{cx + 0.5 * (worst.x - cx), cy + 0.5 * (worst.y - cy), 0.0};
      contracted.value = f(contracted.x, contracted.y);
      if (contracted.value < worst.value) {
        simplex[2] = contracted;
      } else {
        for (int i = 1; i < 3; ++i) {
          simplex[i].x = simplex[0].x + 0.5 * (simplex[i].x - simplex[0].x);
          simplex[i].y = simplex[0].y + 0.5 * (simplex[i].y - simplex[0].y);
          simplex[i].value = f(simplex[i].x, simplex[i].y);
        }
      }
    }
  }
  std::sort(simplex.begin(), simplex.end(),
            [](const Point& a, const Point& b) { return a.value < b.value; });
  x = simplex[0].x;
  y = simplex[0].y;
  return simplex[0].value;
}

AngleMinimum minimize_over_angles(const std::function<double(double, double)>& f) {
  AngleMinimum best;
  best.grid_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kGridTheta; ++i) {
    const double theta = std::numbers::pi * i / (kGridTheta - 1);
    for (int j = 0; j < kGridPhi; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / kGridPhi;
      const double value = f(theta, phi);
      if (value < best.grid_value) {
        best.grid_value = value;
        best.theta = theta;
        best.phi = phi;
      }
    }
  }

  double x = best.theta, y = best.phi;
  double value = best.grid_value;
  double step = 0.5 * std::numbers::pi / (kGridTheta - 1);
  for (int round = 0; round < 25; ++round) {
    value = nelder_mead_2d(f, x, y, step);
    const double h = 1e-6;
    const double gx = (f(x + h, y) - f(x - h, y)) / (2.0 * h);
    const double gy = (f(x, y + h) - f(x, y - h)) / (2.0 * h);
    best.gradient_norm = std::hypot(gx, gy);
    if (best.gradient_norm <= kGradientTol) break;
    step *= 0.3;
  }
  best.refined_value = std::min(value, best.grid_value);
  if (value <= best.grid_value) {
    best.theta = x;
    best.phi = y;
  }
  return best;
}

}  // namespace

BipartiteState BipartiteState::from_density(int d_a, int d_b, Matrix rho) {
  if (d_a < 2 || d_b < 2) throw std::invalid_argument("BipartiteState: dimensions must be >= 2");
  if (rho.rows() != d_a * d_b || rho.cols() != d_a * d_b) {
    throw std::invalid_argument("BipartiteState: rho must be (dA*dB) x (dA*dB)");
  }
  const DensityCheck check = check_density_matrix(rho);
  if (!check.ok()) {
    throw ValidationError("BipartiteState: not a density matrix (hermiticity error " +
                          scalar_text(check.hermiticity_error) + ", trace error " +
                          scalar_text(check.trace_error) + ", min eigenvalue " +
                          scalar_text(check.min_eigenvalue) + ")");
  }
  BipartiteState st;
  st.d_a = d_a;
  st.d_b = d_b;
  st.rho = std::move(rho);
  return st;
}

BipartiteState BipartiteState::from_pauli_r(const Eigen::Matrix4d& r) {
  if (std::abs(r(0, 0) - 0.25) > tol::kAlgebra) {
    throw ValidationError("BipartiteState: R[0][0] must be 1/4 (unit trace), got " + scalar_text(r(0, 0)));
  }
  const auto& paulis = basis_for(2).lambdas();
  Matrix rho = Matrix::Zero(4, 4);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      if (r(a, b) != 0.0) rho += r(a, b) * kron(paulis[a], paulis[b]);
    }
  }
  BipartiteState st = from_density(2, 2, std::move(rho));
  st.pauli_r = r;
  return st;
}

ZeroDiscordCheck zero_a_discord(const BipartiteState& st) {
  const HermitianBasis& basis = basis_for(st.d_b);
  std::vector<Matrix> locals;
  locals.reserve(static_cast<size_t>(basis.count()));
  const Matrix eye_a = Matrix::Identity(st.d_a, st.d_a);
  for (int mu = 0; mu < basis.count(); ++mu) {
    locals.push_back(trace_out_second(st.rho * kron(eye_a, basis.lambda(mu)), st.d_a, st.d_b));
  }
  ZeroDiscordCheck check;
  for (size_t i = 0; i < locals.size(); ++i) {
    for (size_t j = i + 1; j < locals.size(); ++j) {
      check.residual = std::max(check.residual, commutator(locals[i], locals[j]).norm());
    }
  }
  check.zero = check.residual <= tol::kSpectral;
  return check;
}

ProjectiveDiscord a_discord_projective(const BipartiteState& st) {
  if (st.d_a != 2) {
    throw std::invalid_argument("a_discord_projective: measurement optimization is implemented for d_A = 2 only");
  }
  const int db = st.d_b;
  const Matrix rho_a = trace_out_second(st.rho, 2, db);
  const double base = entropy_bits(rho_a) - entropy_bits(st.rho);

  const Matrix eye_b = Matrix::Identity(db, db);
  auto conditional_entropy = [&](double theta, double phi) {
    const Matrix p0 = qubit_projector(theta, phi);
    double value = 0.0;
    for (int k = 0; k < 2; ++k) {
      const Matrix proj = kron(k == 0 ? p0 : Matrix(Matrix::Identity(2, 2) - p0), eye_b);
      const Matrix selected = proj * st.rho * proj;
      const double prob = selected.trace().real();
      if (prob > kProbabilityFloor) {
        value += prob * entropy_bits(trace_out_first(selected, 2, db) / prob);
      }
    }
    return value;
  };

  const AngleMinimum minimum = minimize_over_angles(conditional_entropy);
  ProjectiveDiscord result;
  result.value = base + minimum.refined_value;
  result.grid_minimum = base + minimum.grid_value;
  result.refined_minimum = base + minimum.refined_value;
  result.theta = minimum.theta;
  result.phi = minimum.phi;
  result.gradient_norm = minimum.gradient_norm;
  return result;
}

double geometric_a_discord(const BipartiteState& st) {
  if (st.d_a != 2) {
    throw std::invalid_argument("geometric_a_discord: measurement optimization is implemented for d_A = 2 only");
  }
  const int db = st.d_b;
  const Matrix eye_b = Matrix::Identity(db, db);
  auto distance_sq = [&](double theta, double phi) {
    const Matrix p0 = kron(qubit_projector(theta, phi), eye_b);
    const Matrix p1 = Matrix::Identity(2 * db, 2 * db) - p0;
    const Matrix dephased = p0 * st.rho * p0 + p1 * st.rho * p1;
    return (st.rho - dephased).squaredNorm();
  };
  return minimize_over_angles(distance_sq).refined_value;
}

Eigen::Matrix4d discord_demo_r_matrix() {
  Eigen::Matrix4d r;
  r << 1.0, 1.0 / 4.0, -1.0 / 2.0, 1.0 / 4.0,
      1.0 / 4.0, 2.0 / 5.0, 0.0, 0.0,
      -1.0 / 6.0, 0.0, 1.0 / 5.0, 0.0,
      -1.0 / 20.0, 0.0, 0.0, -1.0 / 5.0;
  return r / 4.0;
}

Matrix discord_demo_unitary() {
  const auto& paulis = basis_for(2).lambdas();
  const double s = std::sin(2.0 * std::numbers::pi / 5.0);
  const double c = std::cos(2.0 * std::numbers::pi / 5.0);
  const Matrix u = (s / std::sqrt(2.0)) * paulis[0] + Complex(0.0, 1.0) * (s / std::sqrt(2.0)) * paulis[3] -
                   Complex(0.0, 1.0) * c * paulis[2];
  if (max_abs(u * u.adjoint() - Matrix::Identity(2, 2)) > tol::kSpectral) {
    throw std::logic_error("discord_demo_unitary: constructed matrix failed the unitarity check");
  }
  return u;
}

DiscordIncreaseDemo discord_increase_demo() {
  const BipartiteState before = BipartiteState::from_pauli_r(discord_demo_r_matrix());
  const Matrix u = discord_demo_unitary();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const QuantumChannel twirl = QuantumChannel::from_kraus(
      {inv_sqrt2 * Matrix::Identity(2, 2), inv_sqrt2 * u}, "twirl");
  const BipartiteState after = BipartiteState::from_density(2, 2, apply_to_first(twirl, before.rho, 2));

  DiscordIncreaseDemo demo;
  demo.discord_before = a_discord_projective(before).value;
  demo.discord_after = a_discord_projective(after).value;
  demo.increased = demo.discord_after > demo.discord_before;
  return demo;
}

}  // namespace qcop
