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

#include <array>
#include <span>
#include <vector>

#include "qcop/types.hpp"

namespace qcop {

// Permutation of the four tensor slots {0,1,2,3}; map()[i] is the image of
// slot i. Composition (a * b) applies b first, so the represented operators
// satisfy V_{a*b} = V_a V_b, V_{p^-1} = V_p^dagger, Tr V_p = d^{#cycles(p)}.
class Perm4 {
 public:
  Perm4() : map_{0, 1, 2, 3} {}
  explicit Perm4(const std::array<int, 4>& map);

  static Perm4 transposition(int i, int j);

  int operator()(int slot) const { return map_[static_cast<size_t>(slot)]; }
  const std::array<int, 4>& map() const { return map_; }

  Perm4 operator*(const Perm4& rhs) const;
  Perm4 inverse() const;
  bool operator==(const Perm4&) const = default;

  std::vector<std::vector<int>> cycles() const;
  int cycle_count() const;
  bool is_identity() const { return map_ == std::array<int, 4>{0, 1, 2, 3}; }

 private:
  std::array<int, 4> map_;
};

// All 24 elements of S4, lexicographic by map.
const std::vector<Perm4>& all_s4();

// The d^4 x d^4 unitary V_p |i_0 i_1 i_2 i_3> = |i_{p^-1(0)} ... i_{p^-1(3)}>.
// Throws CapError when d exceeds the materialization cap; production-path
// traces go through trace_product_permuted instead.
Matrix permutation_matrix(int d, const Perm4& p, int cap_d = kDefaultCapD);

// Permutation operator on an arbitrary number of d-level slots; used to
// assemble collective observables on small systems.
Matrix slot_permutation_matrix(int d, std::span<const int> perm);

// Tr(V_p (m0 (x) m1 (x) m2 (x) m3)) by multiplying the factors along each
// cycle of p and multiplying the cycle traces; no d^4 operator is formed.
Complex trace_product_permuted(std::span<const Matrix> mats, const Perm4& p);

}  // namespace qcop
