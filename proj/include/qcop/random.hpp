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

#include <cstdint>
#include <random>

#include "qcop/types.hpp"

namespace qcop {

// mt19937_64 with hand-rolled uniform/normal draws, so identical seeds give
// identical streams on every platform (std:: distributions do not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent stream for sample `index`; (seed, index) -> stream is stable
  // regardless of evaluation order.
  static Rng for_sample(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64() { return engine_(); }
  double uniform();         // [0, 1)
  double normal();          // standard normal, Box-Muller
  Complex complex_normal(); // (N + iN) / sqrt(2)

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

Matrix haar_unitary(int d, Rng& rng);
Matrix random_hermitian(int d, Rng& rng);
Matrix random_traceless_hermitian(int d, Rng& rng);
// Hilbert-Schmidt random density matrix, G G^dagger / Tr.
Matrix random_density_matrix(int d, Rng& rng);
// Uniform point on the probability simplex.
RealVector random_simplex_point(int n, Rng& rng);

}  // namespace qcop
