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

#include <doctest.h>

#include <cmath>

#include "qcop/channel.hpp"
#include "qcop/discord.hpp"
#include "qcop/hermitian_basis.hpp"
#include "qcop/matrix_ops.hpp"
#include "qcop/random.hpp"

using namespace qcop;

namespace {

Matrix scaled_traceless(int d, Rng& rng, double trace_h2) {
  Matrix h = random_traceless_hermitian(d, rng);
  return h * std::sqrt(trace_h2 / trace_product(h, h).real());
}

}  // namespace

TEST_SUITE("channel") {

TEST_CASE("identity channel acts trivially") {
  Rng rng(10);
  const QuantumChannel id = QuantumChannel::identity(3);
  const Matrix rho = random_density_matrix(3, rng);
  CHECK(max_abs(id.apply(rho) - rho) <= tol::kAlgebra);
  CHECK(id.is_trace_preserving());
  CHECK(id.is_completely_positive());
}

TEST_CASE("identity Choi state is the unnormalized maximally entangled projector") {
  const QuantumChannel id = QuantumChannel::identity(2);
  const Matrix& r = id.choi();
  CHECK(r.trace().real() == doctest::Approx(2.0).epsilon(1e-12));
  const RealVector eigs = hermitian_eigenvalues(r);
  CHECK(eigs(eigs.size() - 1) == doctest::Approx(2.0).epsilon(1e-12));  // rank 1
  for (int i = 0; i < eigs.size() - 1; ++i) CHECK(std::abs(eigs(i)) <= tol::kSpectral);
}

TEST_CASE("cloning with c=0 fully depolarizes") {
  Rng rng(11);
  const QuantumChannel ch = QuantumChannel::cloning(3, 0.0);
  const Matrix rho = random_density_matrix(3, rng);
  CHECK(max_abs(ch.apply(rho) - Matrix::Identity(3, 3) / 3.0) <= tol::kAlgebra);
}

TEST_CASE("cloning with d=3, c=1 maps rho to (I + rho)/4") {
  Rng rng(12);
  const QuantumChannel ch = QuantumChannel::cloning(3, 1.0);
  const Matrix rho = random_density_matrix(3, rng);
  CHECK(max_abs(ch.apply(rho) - (Matrix::Identity(3, 3) + rho) / 4.0) <= tol::kAlgebra);
}

TEST_CASE("transpose cloning applies the transpose branch") {
  Rng rng(13);
  const double c = -0.6;
  const QuantumChannel ch = QuantumChannel::transpose_cloning(3, c);
  const Matrix rho = random_density_matrix(3, rng);
  const Matrix expected = (Matrix::Identity(3, 3) + c * rho.transpose()) / (3.0 + c);
  CHECK(max_abs(ch.apply(rho) - expected) <= tol::kAlgebra);
  CHECK(ch.is_trace_preserving());
}

TEST_CASE("transpose cloning is CP across |c| <= 1 and reports the Choi floor") {
  for (double c : {-1.0, -0.5, 0.5, 1.0}) {
    const QuantumChannel ch = QuantumChannel::transpose_cloning(2, c);
    CHECK(ch.is_completely_positive());
    // Choi eigenvalues are (1 +- c)/(d + c).
    CHECK(ch.min_choi_eigenvalue() == doctest::Approx((1.0 - std::abs(c)) / (2.0 + c)).epsilon(1e-10));
  }
}

TEST_CASE("hamiltonian channel: qubit fixture against the defining formula and the Kraus route") {
  const HermitianBasis& basis = basis_for(2);
  const Matrix h = basis.lambda(3) / 2.0;  // sz / 2, Tr H^2 = 1/2 = 1/d
  const QuantumChannel ch = QuantumChannel::hamiltonian(h);

  Matrix plus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  const Matrix expected = (Matrix::Identity(2, 2) - Complex(0, 1) * commutator(h, plus)) / 2.0;
  CHECK(max_abs(ch.apply(plus) - expected) <= tol::kAlgebra);

  // Same action through the canonical Kraus set of the Choi eigendecomposition.
  const QuantumChannel via_kraus = QuantumChannel::from_kraus(ch.kraus_from_choi());
  CHECK(max_abs(via_kraus.apply(plus) - expected) <= 1e-11);
}

TEST_CASE("hamiltonian Choi spectrum is {1, 1 +- sqrt(d Tr H^2)}/d") {
  Rng rng(14);
  for (int d : {2, 3, 4}) {
    const double t2 = 0.7 / d;
    const Matrix h = scaled_traceless(d, rng, t2);
    const QuantumChannel ch = QuantumChannel::hamiltonian(h);
    const RealVector eigs = hermitian_eigenvalues(Matrix(static_cast<double>(d) * ch.choi()));
    const double split = std::sqrt(d * t2);
    for (int i = 0; i < eigs.size(); ++i) {
      const double dist = std::min({std::abs(eigs(i) - 1.0), std::abs(eigs(i) - (1.0 + split)),
                                    std::abs(eigs(i) - (1.0 - split))});
      CHECK(dist <= 1e-9);
    }
    CHECK(eigs.minCoeff() == doctest::Approx(1.0 - split).epsilon(1e-9));
    CHECK(eigs.maxCoeff() == doctest::Approx(1.0 + split).epsilon(1e-9));
  }
}

TEST_CASE("hamiltonian CP boundary at Tr H^2 = 1/d") {
  Rng rng(15);
  for (int d : {2, 3}) {
    const Matrix h = scaled_traceless(d, rng, 1.0 / d);
    const QuantumChannel ch = QuantumChannel::hamiltonian(h);
    CHECK(std::abs(ch.min_choi_eigenvalue()) <= 1e-9);
    CHECK(ch.is_trace_preserving());

    const Matrix beyond = scaled_traceless(d, rng, 2.0 / d);
    const QuantumChannel bad = QuantumChannel::hamiltonian(beyond);
    CHECK(bad.is_trace_preserving());
    CHECK_FALSE(bad.is_completely_positive());
    CHECK_THROWS_AS(bad.kraus_from_choi(), ValidationError);
  }
}

TEST_CASE("choi expansion identity d R = sum_mu Lambda(l_mu) (x) l_mu^T") {
  Rng rng(16);
  for (int d : {2, 3}) {
    const HermitianBasis& basis = basis_for(d);
    std::vector<QuantumChannel> channels;
    channels.push_back(QuantumChannel::cloning(d, 0.4));
    channels.push_back(random_channel(d, rng));
    channels.push_back(QuantumChannel::hamiltonian(scaled_traceless(d, rng, 0.5 / d)));
    for (const QuantumChannel& ch : channels) {
      Matrix expansion = Matrix::Zero(d * d, d * d);
      for (int mu = 0; mu < basis.count(); ++mu) {
        expansion += kron(ch.apply(basis.lambda(mu)), basis.lambda(mu).transpose());
      }
      CHECK(max_abs(static_cast<double>(d) * ch.choi() - expansion) <= 1e-11);
    }
  }
}

TEST_CASE("apply agrees between Kraus and Choi forms") {
  Rng rng(17);
  for (int d : {2, 3}) {
    const QuantumChannel kraus_form = random_channel(d, rng);
    const QuantumChannel choi_form = QuantumChannel::from_choi(kraus_form.choi());
    for (int trial = 0; trial < 5; ++trial) {
      const Matrix rho = random_density_matrix(d, rng);
      CHECK(max_abs(kraus_form.apply(rho) - choi_form.apply(rho)) <= 1e-11);
      CHECK(std::abs(kraus_form.apply(rho).trace() - rho.trace()) <= tol::kSpectral);
    }
  }
}

TEST_CASE("Kraus <-> Choi round trip preserves the action on 20 random states") {
  Rng rng(18);
  const QuantumChannel original = random_channel(3, rng);
  const QuantumChannel recovered = QuantumChannel::from_kraus(QuantumChannel::from_choi(original.choi()).kraus_from_choi());
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix rho = random_density_matrix(3, rng);
    CHECK(max_abs(original.apply(rho) - recovered.apply(rho)) <= 1e-10);
  }
}

TEST_CASE("mixture with p=1 reproduces the first channel exactly") {
  Rng rng(19);
  const QuantumChannel a = random_channel(2, rng);
  const QuantumChannel b = random_channel(2, rng);
  CHECK(max_abs(QuantumChannel::mixture(1.0, a, b).choi() - a.choi()) == 0.0);
}

TEST_CASE("mixing a channel with itself changes nothing") {
  Rng rng(20);
  const QuantumChannel a = random_channel(3, rng);
  const QuantumChannel mixed = QuantumChannel::mixture(0.37, a, a);
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix rho = random_density_matrix(3, rng);
    CHECK(max_abs(mixed.apply(rho) - a.apply(rho)) <= 1e-11);
  }
}

TEST_CASE("semi-classical channel matches its defining sum") {
  Rng rng(21);
  const int d = 3;
  const QuantumChannel ch = random_semi_classical_channel(d, rng);
  CHECK(ch.is_trace_preserving());
  CHECK(ch.is_completely_positive());
}

TEST_CASE("semi-classical Choi state has zero A-discord") {
  Rng rng(22);
  for (int d : {2, 3}) {
    const QuantumChannel ch = random_semi_classical_channel(d, rng);
    const BipartiteState st = BipartiteState::from_density(d, d, ch.choi() / d);
    CHECK(zero_a_discord(st).zero);
  }
}

TEST_CASE("random samplers produce valid channels") {
  Rng rng(23);
  for (int d : {2, 3, 4}) {
    const QuantumChannel ch = random_channel(d, rng);
    CHECK(ch.is_trace_preserving());
    CHECK(ch.is_completely_positive());
  }
  const QuantumChannel unital = random_unital_qubit_channel(rng);
  CHECK(unital.is_trace_preserving());
  CHECK(max_abs(unital.apply(Matrix::Identity(2, 2)) - Matrix::Identity(2, 2)) <= tol::kSpectral);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(QuantumChannel::cloning(2, 1.5), ValidationError);
  CHECK_THROWS_AS(QuantumChannel::cloning(2, -0.1), ValidationError);
  CHECK_THROWS_AS(QuantumChannel::transpose_cloning(2, 1.2), ValidationError);
  CHECK_THROWS_AS(QuantumChannel::hamiltonian(Matrix::Identity(2, 2)), ValidationError);  // not traceless
  Matrix not_hermitian = Matrix::Zero(2, 2);
  not_hermitian(0, 1) = 1.0;
  CHECK_THROWS_AS(QuantumChannel::hamiltonian(not_hermitian), ValidationError);
  Rng rng(24);
  const QuantumChannel a = QuantumChannel::identity(2);
  CHECK_THROWS_AS(QuantumChannel::mixture(1.5, a, a), ValidationError);
  CHECK_THROWS_AS(QuantumChannel::mixture(0.5, a, QuantumChannel::identity(3)), std::invalid_argument);
  CHECK_THROWS_AS(QuantumChannel::unitary(random_hermitian(2, rng) * 2.0), ValidationError);

  // Incomplete POVM.
  std::vector<Matrix> povm = {Matrix::Identity(2, 2) * 0.5};
  std::vector<Vector> kets = {Vector::Unit(2, 0)};
  CHECK_THROWS_AS(QuantumChannel::semi_classical(povm, kets), ValidationError);
}

TEST_CASE("apply_to_first acts only on the first subsystem") {
  Rng rng(25);
  const Matrix u = haar_unitary(2, rng);
  const QuantumChannel ch = QuantumChannel::unitary(u);
  const Matrix a = random_density_matrix(2, rng);
  const Matrix b = random_density_matrix(3, rng);
  const Matrix expected = kron(u * a * u.adjoint(), b);
  CHECK(max_abs(apply_to_first(ch, kron(a, b), 3) - expected) <= 1e-11);
}

}  // TEST_SUITE
