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

#include "qcop/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace qcop {

namespace {
// Largest operator slot_permutation_matrix will build (dimension per side):
// covers the 4-slot operators up to d = 4 and the 8-slot oracle at d = 2.
constexpr long kMaxSlotDim = 4096;
}  // namespace

Perm4::Perm4(const std::array<int, 4>& map) : map_(map) {
  std::array<bool, 4> seen{};
  for (int v : map_) {
    if (v < 0 || v > 3 || seen[static_cast<size_t>(v)]) {
      throw std::invalid_argument("Perm4: map is not a permutation of {0,1,2,3}");
    }
    seen[static_cast<size_t>(v)] = true;
  }
}

Perm4 Perm4::transposition(int i, int j) {
  std::array<int, 4> m{0, 1, 2, 3};
  std::swap(m.at(static_cast<size_t>(i)), m.at(static_cast<size_t>(j)));
  return Perm4(m);
}

Perm4 Perm4::operator*(const Perm4& rhs) const {
  std::array<int, 4> m{};
  for (int i = 0; i < 4; ++i) m[static_cast<size_t>(i)] = map_[static_cast<size_t>(rhs(i))];
  return Perm4(m);
}

Perm4 Perm4::inverse() const {
  std::array<int, 4> m{};
  for (int i = 0; i < 4; ++i) m[static_cast<size_t>(map_[static_cast<size_t>(i)])] = i;
  return Perm4(m);
}

std::vector<std::vector<int>> Perm4::cycles() const {
  std::vector<std::vector<int>> out;
  std::array<bool, 4> seen{};
  for (int start = 0; start < 4; ++start) {
    if (seen[static_cast<size_t>(start)]) continue;
    std::vector<int> cycle;
    int cur = start;
    while (!seen[static_cast<size_t>(cur)]) {
      seen[static_cast<size_t>(cur)] = true;
      cycle.push_back(cur);
      cur = map_[static_cast<size_t>(cur)];
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

int Perm4::cycle_count() const {
  return static_cast<int>(cycles().size());
}

const std::vector<Perm4>& all_s4() {
  static const std::vector<Perm4> perms = [] {
    std::vector<Perm4> out;
    std::array<int, 4> m{0, 1, 2, 3};
    do {
      out.emplace_back(m);
    } while (std::next_permutation(m.begin(), m.end()));
    return out;
  }();
  return perms;
}

Matrix permutation_matrix(int d, const Perm4& p, int cap_d) {
  if (d < 2) throw std::invalid_argument("permutation_matrix: d must be >= 2");
  if (d > cap_d) {
    throw CapError("permutation_matrix: d = " + std::to_string(d) + " exceeds materialization cap " +
                   std::to_string(cap_d) + "; use trace_product_permuted for contraction-based traces");
  }
  std::array<int, 4> perm{};
  for (int i = 0; i < 4; ++i) perm[static_cast<size_t>(i)] = p(i);
  return slot_permutation_matrix(d, perm);
}

Matrix slot_permutation_matrix(int d, std::span<const int> perm) {
  const int n = static_cast<int>(perm.size());
  long dim = 1;
  for (int k = 0; k < n; ++k) {
    dim *= d;
    if (dim > kMaxSlotDim) {
      throw CapError("slot_permutation_matrix: d^" + std::to_string(n) + " exceeds the materialization cap");
    }
  }
  std::vector<int> inv(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) inv[static_cast<size_t>(perm[static_cast<size_t>(k)])] = k;

  Matrix out = Matrix::Zero(dim, dim);
  std::vector<int> digits(static_cast<size_t>(n));
  for (long idx = 0; idx < dim; ++idx) {
    long rest = idx;
    for (int k = n - 1; k >= 0; --k) {
      digits[static_cast<size_t>(k)] = static_cast<int>(rest % d);
      rest /= d;
    }
    long target = 0;
    for (int k = 0; k < n; ++k) {
      target = target * d + digits[static_cast<size_t>(inv[static_cast<size_t>(k)])];
    }
    out(target, idx) = 1.0;
  }
  return out;
}

Complex trace_product_permuted(std::span<const Matrix> mats, const Perm4& p) {
  if (mats.size() != 4) {
    throw std::invalid_argument("trace_product_permuted: exactly 4 matrices required");
  }
  const Eigen::Index d = mats[0].rows();
  for (const Matrix& m : mats) {
    if (m.rows() != d || m.cols() != d) {
      throw std::invalid_argument("trace_product_permuted: all matrices must be d x d");
    }
  }
  Complex result(1.0, 0.0);
  for (const std::vector<int>& cycle : p.cycles()) {
    Matrix prod = mats[static_cast<size_t>(cycle[0])];
    for (size_t k = 1; k < cycle.size(); ++k) {
      prod = mats[static_cast<size_t>(cycle[k])] * prod;
    }
    result *= prod.trace();
  }
  return result;
}

}  // namespace qcop
