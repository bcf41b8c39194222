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

#include "qcop/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "qcop/channel.hpp"
#include "qcop/cop_analysis.hpp"
#include "qcop/discord.hpp"
#include "qcop/hermitian_basis.hpp"
#include "qcop/matrix_ops.hpp"
#include "qcop/mixture_spectrum.hpp"
#include "qcop/random.hpp"

namespace qcop::acceptance {

namespace {

enum class Mode { kEquals, kAtMost, kAtLeast };

class Suite {
 public:
  explicit Suite(const Options& options) : options_(options) {}

  void check(int criterion, std::string name, Mode mode, double observed, double target, double tolerance,
             std::string note = "") {
    const double tol = options_.tolerance_override > 0.0 ? options_.tolerance_override : tolerance;
    bool pass = false;
    switch (mode) {
      case Mode::kEquals: pass = std::abs(observed - target) <= tol; break;
      case Mode::kAtMost: pass = observed <= target + tol; break;
      case Mode::kAtLeast: pass = observed >= target - tol; break;
    }
    results_.push_back({criterion, std::move(name), pass ? Status::kPass : Status::kFail, observed, target, tol,
                        std::move(note)});
  }

  void skip(int criterion, std::string name, std::string reason) {
    results_.push_back({criterion, std::move(name), Status::kSkip, 0.0, 0.0, 0.0, std::move(reason)});
  }

  // Runs `body`; a thrown exception becomes a failed check instead of
  // aborting the battery.
  void guarded(int criterion, const std::string& context, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      results_.push_back({criterion, context, Status::kFail, 0.0, 0.0, 0.0, std::string("exception: ") + e.what()});
    }
  }

  Rng rng(std::uint64_t stream) const { return Rng::for_sample(options_.seed, stream); }
  const Options& options() const { return options_; }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  Options options_;
  std::vector<CheckResult> results_;
};

double hamiltonian_degree_closed_form(const Matrix& h) {
  const int d = static_cast<int>(h.rows());
  const double t2 = trace_product(h, h).real();
  const Matrix h2 = h * h;
  const double t4 = trace_product(h2, h2).real();
  return ((d * d - 6.0) * t2 * t2 + d * (d * d - 2.0) * t4) / std::pow(static_cast<double>(d), 4);
}

Matrix scaled_traceless_hermitian(int d, Rng& rng, double trace_h2) {
  Matrix h = random_traceless_hermitian(d, rng);
  return h * std::sqrt(trace_h2 / trace_product(h, h).real());
}

// --- criterion 1: the CoP zoo has vanishing degree ---------------------------

void criterion_1(Suite& suite) {
  for (int d = 2; d <= 4; ++d) {
    suite.guarded(1, "cop degree: identity/unitary d=" + std::to_string(d), [&] {
      Rng rng = suite.rng(100 + static_cast<std::uint64_t>(d));
      suite.check(1, "cop degree vanishes: identity (d=" + std::to_string(d) + ")", Mode::kAtMost,
                  cop_degree(QuantumChannel::identity(d)), 0.0, 1e-10);
      double worst = 0.0;
      for (int i = 0; i < 3; ++i) {
        worst = std::max(worst, cop_degree(QuantumChannel::unitary(haar_unitary(d, rng))));
      }
      suite.check(1, "cop degree vanishes: unitary conjugation (d=" + std::to_string(d) + ")", Mode::kAtMost, worst,
                  0.0, 1e-10);

      worst = 0.0;
      for (double c : {0.0, 0.3, 1.0}) {
        worst = std::max(worst, cop_degree(QuantumChannel::cloning(d, c)));
      }
      suite.check(1, "cop degree vanishes: cloning c in {0,0.3,1} (d=" + std::to_string(d) + ")", Mode::kAtMost,
                  worst, 0.0, 1e-10);

      worst = 0.0;
      for (double c : {-0.5, 0.3, 1.0}) {
        worst = std::max(worst, cop_degree(QuantumChannel::transpose_cloning(d, c)));
      }
      suite.check(1, "cop degree vanishes: transpose cloning (d=" + std::to_string(d) + ")", Mode::kAtMost, worst,
                  0.0, 1e-10);

      worst = 0.0;
      for (int i = 0; i < 3; ++i) {
        worst = std::max(worst, cop_degree(random_semi_classical_channel(d, rng)));
      }
      suite.check(1, "cop degree vanishes: semi-classical random POVMs (d=" + std::to_string(d) + ")", Mode::kAtMost,
                  worst, 0.0, 1e-10);
    });
  }
  suite.guarded(1, "cop degree: unital qubit channels", [&] {
    Rng rng = suite.rng(110);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      worst = std::max(worst, cop_degree(random_unital_qubit_channel(rng)));
    }
    suite.check(1, "cop degree vanishes: 20 random unital qubit channels", Mode::kAtMost, worst, 0.0, 1e-10);
  });
}

// --- criterion 2: Hamiltonian channel closed form ----------------------------

void criterion_2(Suite& suite) {
  for (int d = 2; d <= 5; ++d) {
    suite.guarded(2, "hamiltonian closed form d=" + std::to_string(d), [&] {
      Rng rng = suite.rng(200 + static_cast<std::uint64_t>(d));
      double worst_diff = 0.0;
      double max_delta = 0.0;
      double min_delta = std::numeric_limits<double>::infinity();
      for (int i = 0; i < 20; ++i) {
        // Half the draws sit inside the CP region, half outside.
        const double t2 = (i % 2 == 0) ? 0.5 / d : 2.0 / d;
        const Matrix h = scaled_traceless_hermitian(d, rng, t2);
        const double delta = cop_degree(QuantumChannel::hamiltonian(h));
        worst_diff = std::max(worst_diff, std::abs(delta - hamiltonian_degree_closed_form(h)));
        max_delta = std::max(max_delta, delta);
        min_delta = std::min(min_delta, delta);
      }
      suite.check(2, "hamiltonian degree matches closed form, 20 random H (d=" + std::to_string(d) + ")",
                  Mode::kEquals, worst_diff, 0.0, 1e-10);
      if (d == 2) {
        suite.check(2, "hamiltonian degree vanishes for every qubit H", Mode::kAtMost, max_delta, 0.0, 1e-10);
      } else {
        suite.check(2, "hamiltonian degree strictly positive (d=" + std::to_string(d) + ")", Mode::kAtLeast,
                    min_delta, 1e-12, 0.0);
      }
    });
  }
}

// --- criterion 3: witness identity and closure equivalence -------------------

std::vector<QuantumChannel> zoo_for(int d, Rng& rng) {
  std::vector<QuantumChannel> zoo;
  zoo.push_back(QuantumChannel::identity(d));
  zoo.push_back(QuantumChannel::unitary(haar_unitary(d, rng)));
  zoo.push_back(QuantumChannel::cloning(d, 0.3));
  zoo.push_back(QuantumChannel::transpose_cloning(d, 0.5));
  zoo.push_back(random_semi_classical_channel(d, rng));
  zoo.push_back(QuantumChannel::hamiltonian(scaled_traceless_hermitian(d, rng, 0.5 / d)));
  zoo.push_back(QuantumChannel::mixture(0.5, QuantumChannel::identity(d),
                                        QuantumChannel::unitary(haar_unitary(d, rng))));
  zoo.push_back(QuantumChannel::mixture(0.3, QuantumChannel::identity(d),
                                        QuantumChannel::hamiltonian(scaled_traceless_hermitian(d, rng, 0.5 / d))));
  return zoo;
}

void criterion_3(Suite& suite) {
  for (int d = 2; d <= 4; ++d) {
    suite.guarded(3, "witness consistency d=" + std::to_string(d), [&] {
      Rng rng = suite.rng(300 + static_cast<std::uint64_t>(d));
      std::vector<QuantumChannel> channels = zoo_for(d, rng);
      for (int i = 0; i < 20; ++i) channels.push_back(random_channel(d, rng));

      double worst_identity = 0.0;
      int equivalence_violations = 0;
      for (const QuantumChannel& ch : channels) {
        const CopCore core = cop_core(ch);
        worst_identity = std::max(worst_identity, std::abs(core.delta - (d * core.w - core.z)));
        const bool delta_zero = core.delta <= 1e-10;
        const bool closure_zero = core.closure_residual <= 1e-10;
        if (delta_zero != closure_zero) ++equivalence_violations;
      }
      suite.check(3, "delta equals d<W> - <Z>, zoo + 20 random channels (d=" + std::to_string(d) + ")",
                  Mode::kEquals, worst_identity, 0.0, 1e-10);
      suite.check(3, "closure residual vanishes iff delta vanishes (d=" + std::to_string(d) + ")", Mode::kEquals,
                  static_cast<double>(equivalence_violations), 0.0, 0.0);
    });
  }
}

// --- criterion 4: brute-force oracle and twirl identity ----------------------

void criterion_4(Suite& suite) {
  suite.guarded(4, "d=2 witness oracle", [&] {
    Rng rng = suite.rng(400);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const QuantumChannel ch = random_channel(2, rng);
      const CopCore core = cop_core(ch);
      const OracleExpectations oracle = witness_expectations_oracle(ch);
      worst = std::max({worst, std::abs(core.w - oracle.w), std::abs(core.z - oracle.z)});
    }
    suite.check(4, "coefficient (W,Z) equals materialized traces, 20 random qubit channels", Mode::kEquals, worst,
                0.0, 1e-10);
  });
  for (int d = 2; d <= 3; ++d) {
    if (d > suite.options().cap_d) {
      suite.skip(4, "twirl of pair moment operator matches closed form (d=" + std::to_string(d) + ")",
                 "materialization cap d=" + std::to_string(suite.options().cap_d));
      continue;
    }
    suite.guarded(4, "twirl check d=" + std::to_string(d), [&] {
      suite.check(4, "twirl of pair moment operator matches closed form (d=" + std::to_string(d) + ")",
                  Mode::kAtMost, verify_haar_average(d, suite.options().cap_d), 0.0, 1e-9);
    });
  }
}

// --- criterion 5: K operator spectrum ----------------------------------------

void criterion_5(Suite& suite) {
  for (int d = 2; d <= 4; ++d) {
    suite.guarded(5, "K spectrum d=" + std::to_string(d), [&] {
      const KOperator k = build_k(d);
      const std::array<double, 6> allowed = {2.0, -1.0, 1.0, 0.0, 2.0 / d, -2.0 / d};
      double worst = 0.0;
      int mult_two = 0;
      int mult_minus_one = 0;
      for (int i = 0; i < k.eigenvalues().size(); ++i) {
        const double ev = k.eigenvalues()(i);
        double dist = std::numeric_limits<double>::infinity();
        for (double a : allowed) dist = std::min(dist, std::abs(ev - a));
        worst = std::max(worst, dist);
        if (std::abs(ev - 2.0) <= 1e-9) ++mult_two;
        if (std::abs(ev + 1.0) <= 1e-9) ++mult_minus_one;
      }
      suite.check(5, "K spectrum inside {2,+-1,0,+-2/d} (d=" + std::to_string(d) + ")", Mode::kAtMost, worst, 0.0,
                  1e-9);
      suite.check(5, "K eigenvalue 2 is simple (d=" + std::to_string(d) + ")", Mode::kEquals,
                  static_cast<double>(mult_two), 1.0, 0.0);
      if (d >= 3) {
        suite.check(5, "K eigenvalue -1 multiplicity >= D (d=" + std::to_string(d) + ")", Mode::kAtLeast,
                    static_cast<double>(mult_minus_one), static_cast<double>(k.levels()), 0.0);
        suite.check(5, "K^2 projection decomposition (d=" + std::to_string(d) + ")", Mode::kAtMost,
                    verify_k_squared_decomposition(k), 0.0, 1e-9);
      }
      const RealMatrix product = (2.0 * RealMatrix::Identity(k.matrix().rows(), k.matrix().cols()) - k.matrix()) *
                                 (RealMatrix::Identity(k.matrix().rows(), k.matrix().cols()) + k.matrix());
      const RealMatrix sym = (product + product.transpose()) / 2.0;
      Eigen::SelfAdjointEigenSolver<RealMatrix> solver(sym, Eigen::EigenvaluesOnly);
      suite.check(5, "(2-K)(1+K) positive semidefinite (d=" + std::to_string(d) + ")", Mode::kAtLeast,
                  solver.eigenvalues().minCoeff(), 0.0, 1e-9);
    });
  }
}

// --- criterion 6: mixture quadratic form -------------------------------------

void criterion_6(Suite& suite) {
  const int d = 3;
  suite.guarded(6, "mixture quadratic form d=3", [&] {
    Rng rng = suite.rng(600);
    const QuantumChannel identity = QuantumChannel::identity(d);
    std::vector<QuantumChannel> components;
    components.push_back(QuantumChannel::cloning(d, 0.5));
    components.push_back(QuantumChannel::unitary(haar_unitary(d, rng)));
    components.push_back(random_semi_classical_channel(d, rng));

    double worst = 0.0;
    for (const QuantumChannel& ch : components) {
      for (double p : {0.1, 0.5, 0.9}) {
        const double quad = mixture_cop_degree(ch, p);
        const double direct = cop_degree(QuantumChannel::mixture(p, identity, ch));
        worst = std::max(worst, std::abs(quad - direct));
      }
    }
    suite.check(6, "quadratic-form degree equals direct degree (d=3, p in {0.1,0.5,0.9})", Mode::kEquals, worst,
                0.0, 1e-9);

    int verdict_errors = 0;
    for (double p : {0.1, 0.5, 0.9}) {
      if (!cloning_mixture_check(components[0], p).is_cloning) ++verdict_errors;
      if (cloning_mixture_check(components[1], p).is_cloning) ++verdict_errors;
      if (cloning_mixture_check(components[2], p).is_cloning) ++verdict_errors;
    }
    suite.check(6, "mixing with identity stays CoP exactly for cloning components", Mode::kEquals,
                static_cast<double>(verdict_errors), 0.0, 0.0);

    double worst_scaling = 0.0;
    for (double p : {0.1, 0.5, 0.9}) {
      const QuantumChannel ham = QuantumChannel::hamiltonian(scaled_traceless_hermitian(d, rng, 1.0 / d));
      const double mixed = cop_degree(QuantumChannel::mixture(p, identity, ham));
      const double scaled = std::pow(1.0 - p, 4) * cop_degree(ham);
      worst_scaling = std::max(worst_scaling, std::abs(mixed - scaled));
    }
    suite.check(6, "hamiltonian mixture scales as (1-p)^4", Mode::kEquals, worst_scaling, 0.0, 1e-10);
  });
}

// --- criterion 7: discord reproduction ---------------------------------------

void criterion_7(Suite& suite) {
  try {
    const DiscordIncreaseDemo demo = discord_increase_demo();
    suite.check(7, "demo state A-discord before twirl", Mode::kEquals, demo.discord_before, 0.0314231, 1e-4);
    suite.check(7, "demo state A-discord after twirl", Mode::kEquals, demo.discord_after, 0.0325923, 1e-4);
    suite.check(7, "projective discord increased under the CoP twirl", Mode::kEquals,
                demo.increased ? 1.0 : 0.0, 1.0, 0.0);
  } catch (const ValidationError& e) {
    // Known-issue branch: the coefficient matrix is transcribed verbatim; if
    // it ever fails density validation the discrepancy is reported, never
    // silently patched.
    suite.check(7, "demo state transcription is a valid density matrix", Mode::kEquals, 0.0, 1.0, 0.0,
                std::string("transcription discrepancy: ") + e.what());
  }
}

// --- criterion 8: discord creation end to end --------------------------------

void criterion_8(Suite& suite) {
  suite.guarded(8, "discord creation by a non-CoP mixture", [&] {
    Rng rng = suite.rng(800);
    const int d = 3;
    const QuantumChannel mix =
        QuantumChannel::mixture(0.5, QuantumChannel::identity(d), QuantumChannel::unitary(haar_unitary(d, rng)));
    const ProbeResult probe = commuting_pair_probe(mix, 200, suite.options().seed);
    suite.check(8, "probe finds a violating commuting pair (d=3 identity/unitary mixture)", Mode::kAtLeast,
                probe.max_residual, 1e-6, 0.0);
    const DiscordCreationCheck check = discord_creation_check(mix, probe.worst_rho, probe.worst_sigma);
    suite.check(8, "embedded pair state has zero discord before the channel", Mode::kAtMost, check.input_residual,
                0.0, 1e-10);
    suite.check(8, "channel output violates the zero-discord criterion", Mode::kAtLeast, check.output_residual,
                1e-6, 0.0);
  });

  suite.guarded(8, "probe stays flat on CoP channels", [&] {
    Rng rng = suite.rng(810);
    double worst = 0.0;
    for (int d = 2; d <= 4; ++d) {
      worst = std::max(worst, commuting_pair_probe(QuantumChannel::identity(d), 200, suite.options().seed).max_residual);
      worst = std::max(worst,
                       commuting_pair_probe(QuantumChannel::unitary(haar_unitary(d, rng)), 200, suite.options().seed)
                           .max_residual);
      worst = std::max(worst,
                       commuting_pair_probe(QuantumChannel::cloning(d, 0.3), 200, suite.options().seed).max_residual);
      worst = std::max(
          worst, commuting_pair_probe(QuantumChannel::transpose_cloning(d, 0.7), 200, suite.options().seed).max_residual);
      worst = std::max(
          worst, commuting_pair_probe(random_semi_classical_channel(d, rng), 200, suite.options().seed).max_residual);
    }
    worst = std::max(worst, commuting_pair_probe(random_unital_qubit_channel(rng), 200, suite.options().seed).max_residual);
    suite.check(8, "200-sample probe max <= 1e-9 on every zero-degree zoo channel", Mode::kAtMost, worst, 0.0, 1e-9);
  });
}

// --- criterion 9: criterion/measure agreement --------------------------------

void criterion_9(Suite& suite) {
  suite.guarded(9, "zero-discord criterion vs projective discord", [&] {
    Rng rng = suite.rng(900);
    int disagreements = 0;
    double worst_zero = 0.0;
    double best_nonzero = std::numeric_limits<double>::infinity();

    for (int i = 0; i < 50; ++i) {
      Matrix rho;
      if (i % 2 == 0) {
        // Classical-quantum construction: random basis, weights, B-states.
        const Matrix u = haar_unitary(2, rng);
        const RealVector p = random_simplex_point(2, rng);
        rho = Matrix::Zero(4, 4);
        for (int k = 0; k < 2; ++k) {
          const Matrix proj = u.col(k) * u.col(k).adjoint();
          rho += p(k) * kron(proj, random_density_matrix(2, rng));
        }
      } else {
        rho = random_density_matrix(4, rng);
      }
      const BipartiteState st = BipartiteState::from_density(2, 2, rho);
      const bool criterion_zero = zero_a_discord(st).zero;
      const double discord = a_discord_projective(st).value;
      const bool measure_zero = discord <= 1e-8;
      if (criterion_zero != measure_zero) ++disagreements;
      if (criterion_zero) worst_zero = std::max(worst_zero, discord);
      if (!criterion_zero) best_nonzero = std::min(best_nonzero, discord);
    }
    suite.check(9, "criterion and measure agree on 50 two-qubit states", Mode::kEquals,
                static_cast<double>(disagreements), 0.0, 0.0);
    suite.check(9, "projective discord <= 1e-8 on classical-quantum states", Mode::kAtMost, worst_zero, 0.0, 1e-8);
    suite.check(9, "projective discord > 1e-8 on discordant states", Mode::kAtLeast, best_nonzero, 1e-8, 0.0);
  });
}

}  // namespace

std::vector<CheckResult> run_all(const Options& options) {
  Suite suite(options);
  criterion_1(suite);
  criterion_2(suite);
  criterion_3(suite);
  criterion_4(suite);
  criterion_5(suite);
  criterion_6(suite);
  criterion_7(suite);
  criterion_8(suite);
  criterion_9(suite);
  return suite.take();
}

Summary summarize(const std::vector<CheckResult>& results) {
  Summary summary;
  for (const CheckResult& r : results) {
    switch (r.status) {
      case Status::kPass: ++summary.passed; break;
      case Status::kFail: ++summary.failed; break;
      case Status::kSkip: ++summary.skipped; break;
    }
  }
  return summary;
}

}  // namespace qcop::acceptance
