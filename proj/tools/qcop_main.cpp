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

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qcop/acceptance.hpp"
#include "qcop/channel_io.hpp"
#include "qcop/cop_analysis.hpp"
#include "qcop/discord.hpp"
#include "qcop/json_writer.hpp"
#include "qcop/mixture_spectrum.hpp"

namespace {

using namespace qcop;

// Exit codes: 0 success, 1 parse error, 2 validation or cap error,
// 3 acceptance failure.
constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitValidation = 2;
constexpr int kExitAcceptance = 3;

int env_cap(int fallback) {
  const char* value = std::getenv("QCOP_CAP_D");
  if (value == nullptr || *value == '\0') return fallback;
  try {
    return std::stoi(value);
  } catch (...) {
    return fallback;
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    write_file_atomic(out_path, text + "\n");
  }
}

struct CommonFlags {
  std::uint64_t seed = 0;
  int samples = 200;
  double tolerance = kCopVerdictTol;
  std::string out_path;
};

int cmd_analyze(const std::string& channel_path, const CommonFlags& flags) {
  const QuantumChannel ch = io::load_channel(channel_path);
  const CopReport report = analyze_channel(ch, flags.samples, flags.seed, flags.tolerance);
  JsonWriter w;
  w.begin_object();
  w.key("d").value(report.d);
  w.key("delta").value(report.delta);
  w.key("w").value(report.w);
  w.key("z").value(report.z);
  w.key("eq6_residual").value(report.closure_residual);
  w.key("verdict").value(report.cop ? "cop" : "non-cop");
  w.key("probe_max").value(report.probe_max);
  w.key("tolerance").value(report.tolerance);
  w.key("tp").value(report.trace_preserving);
  w.key("cp").value(report.completely_positive);
  w.key("min_choi_eigenvalue").value(report.min_choi_eigenvalue);
  w.key("samples").value(flags.samples);
  w.key("seed").value(static_cast<long>(flags.seed));
  w.end_object();
  emit(w.str(), flags.out_path);
  return kExitOk;
}

int cmd_probe(const std::string& channel_path, const CommonFlags& flags) {
  const QuantumChannel ch = io::load_channel(channel_path);
  if (!ch.is_trace_preserving()) {
    throw ValidationError("probe: channel is not trace preserving");
  }
  const ProbeResult probe = commuting_pair_probe(ch, flags.samples, flags.seed);
  JsonWriter w;
  w.begin_object();
  w.key("d").value(ch.dim());
  w.key("samples").value(flags.samples);
  w.key("seed").value(static_cast<long>(flags.seed));
  w.key("probe_max").value(probe.max_residual);
  w.end_object();
  emit(w.str(), flags.out_path);
  return kExitOk;
}

int cmd_spectrum(int d, int cap_d, const std::string& channel_path, double p, const std::string& out_path) {
  const KOperator k = build_k(d, cap_d);
  const std::array<double, 6> allowed = {-1.0, -2.0 / d, 0.0, 2.0 / d, 1.0, 2.0};

  JsonWriter w;
  w.begin_object();
  w.key("d").value(d);
  w.key("levels").value(k.levels());
  w.key("allowed").begin_array();
  for (double a : allowed) w.value(a);
  w.end_array();

  double worst = 0.0;
  std::array<int, 6> multiplicity{};
  for (int i = 0; i < k.eigenvalues().size(); ++i) {
    const double ev = k.eigenvalues()(i);
    size_t best = 0;
    for (size_t a = 1; a < allowed.size(); ++a) {
      if (std::abs(ev - allowed[a]) < std::abs(ev - allowed[best])) best = a;
    }
    worst = std::max(worst, std::abs(ev - allowed[best]));
    ++multiplicity[best];
  }
  w.key("clusters").begin_array();
  for (size_t a = 0; a < allowed.size(); ++a) {
    w.begin_object();
    w.key("value").value(allowed[a]);
    w.key("multiplicity").value(multiplicity[a]);
    w.end_object();
  }
  w.end_array();
  w.key("max_distance_to_allowed").value(worst);
  w.key("in_allowed_set").value(worst <= 1e-9);
  w.key("eigenvalues").begin_array();
  for (int i = 0; i < k.eigenvalues().size(); ++i) w.value(k.eigenvalues()(i));
  w.end_array();

  if (!channel_path.empty()) {
    const QuantumChannel ch = io::load_channel(channel_path);
    if (ch.dim() != d) throw ValidationError("spectrum: channel dimension does not match d");
    const CloningMixtureReport report = cloning_mixture_check(ch, p);
    w.key("mixture").begin_object();
    w.key("p").value(p);
    w.key("delta").value(report.mixture_delta);
    w.key("verdict").value(report.is_cloning ? "cloning" : "non-cloning");
    w.key("a").value(report.identity_weight);
    w.key("h").begin_array();
    for (int i = 0; i < report.hamiltonian_coefficients.size(); ++i) {
      w.value(report.hamiltonian_coefficients(i));
    }
    w.end_array();
    w.key("residual").value(report.span_residual);
    w.end_object();
  }
  w.end_object();
  emit(w.str(), out_path);
  return kExitOk;
}

int cmd_discord(const std::string& state_path, const std::string& out_path) {
  const BipartiteState st = io::load_state(state_path);
  const ZeroDiscordCheck criterion = zero_a_discord(st);

  JsonWriter w;
  w.begin_object();
  w.key("dA").value(st.d_a);
  w.key("dB").value(st.d_b);
  w.key("zero_discord").value(criterion.zero);
  w.key("criterion_residual").value(criterion.residual);
  if (st.d_a == 2) {
    const ProjectiveDiscord discord = a_discord_projective(st);
    w.key("discord").value(discord.value);
    w.key("grid_minimum").value(discord.grid_minimum);
    w.key("refined_minimum").value(discord.refined_minimum);
    w.key("theta").value(discord.theta);
    w.key("phi").value(discord.phi);
    w.key("gradient_norm").value(discord.gradient_norm);
  }
  w.end_object();
  emit(w.str(), out_path);
  return kExitOk;
}

const char* status_name(acceptance::Status status) {
  switch (status) {
    case acceptance::Status::kPass: return "pass";
    case acceptance::Status::kFail: return "fail";
    case acceptance::Status::kSkip: return "skip";
  }
  return "unknown";
}

int cmd_reproduce(const acceptance::Options& options, const std::string& out_path) {
  const std::vector<acceptance::CheckResult> results = acceptance::run_all(options);
  const acceptance::Summary summary = acceptance::summarize(results);

  JsonWriter w;
  w.begin_object();
  w.key("seed").value(static_cast<long>(options.seed));
  w.key("cap_d").value(options.cap_d);
  if (options.tolerance_override > 0.0) w.key("tolerance_override").value(options.tolerance_override);
  w.key("checks").begin_array();
  for (const acceptance::CheckResult& r : results) {
    w.begin_object();
    w.key("criterion").value(r.criterion);
    w.key("name").value(r.name);
    w.key("status").value(status_name(r.status));
    w.key("observed").value(r.observed);
    w.key("expected").value(r.expected);
    w.key("tolerance").value(r.tolerance);
    if (!r.note.empty()) w.key("note").value(r.note);
    w.end_object();
  }
  w.end_array();
  w.key("summary").begin_object();
  w.key("passed").value(summary.passed);
  w.key("failed").value(summary.failed);
  w.key("skipped").value(summary.skipped);
  w.end_object();
  w.end_object();
  emit(w.str(), out_path);
  return summary.ok() ? kExitOk : kExitAcceptance;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"commutativity-preservation analysis for finite-dimensional quantum channels"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string channel_path;
  std::string state_path;
  int spectrum_d = 3;
  int cap_d = env_cap(kDefaultCapD);
  int k_cap_d = env_cap(kDefaultKCapD);
  std::string mixture_channel_path;
  double mixture_p = 0.5;
  double tol_override = 0.0;

  CLI::App* analyze = app.add_subcommand("analyze", "CoP report for a channel file");
  analyze->add_option("channel", channel_path, "channel JSON file")->required();
  analyze->add_option("--samples", flags.samples, "commuting-pair probe samples");
  analyze->add_option("--seed", flags.seed, "probe seed");
  analyze->add_option("--tol", flags.tolerance, "CoP verdict tolerance");
  analyze->add_option("--out", flags.out_path, "write the report to this file");

  CLI::App* probe = app.add_subcommand("probe", "commuting-pair probe for a channel file");
  probe->add_option("channel", channel_path, "channel JSON file")->required();
  probe->add_option("--samples", flags.samples, "number of sampled commuting pairs");
  probe->add_option("--seed", flags.seed, "probe seed");
  probe->add_option("--out", flags.out_path, "write the report to this file");

  CLI::App* spectrum = app.add_subcommand("spectrum", "spectrum of the mixing operator K");
  spectrum->add_option("d", spectrum_d, "local dimension")->required();
  spectrum->add_option("--cap-d", k_cap_d, "K-operator dimension cap");
  spectrum->add_option("--channel", mixture_channel_path, "also decompose this CoP channel");
  spectrum->add_option("--p", mixture_p, "identity weight for the mixture decomposition");
  spectrum->add_option("--out", flags.out_path, "write the report to this file");

  CLI::App* discord = app.add_subcommand("discord", "discord report for a bipartite state file");
  discord->add_option("state", state_path, "state JSON file")->required();
  discord->add_option("--out", flags.out_path, "write the report to this file");

  CLI::App* reproduce = app.add_subcommand("reproduce", "run the full verification battery");
  reproduce->add_option("--seed", flags.seed, "seed for randomized checks");
  reproduce->add_option("--cap-d", cap_d, "materialization cap for brute-force checks");
  reproduce->add_option("--tol", tol_override, "override every check tolerance (diagnostic)");
  reproduce->add_option("--out", flags.out_path, "write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(channel_path, flags);
    if (probe->parsed()) return cmd_probe(channel_path, flags);
    if (spectrum->parsed()) {
      return cmd_spectrum(spectrum_d, k_cap_d, mixture_channel_path, mixture_p, flags.out_path);
    }
    if (discord->parsed()) return cmd_discord(state_path, flags.out_path);
    if (reproduce->parsed()) {
      acceptance::Options options;
      options.seed = flags.seed;
      options.cap_d = cap_d;
      options.tolerance_override = tol_override;
      return cmd_reproduce(options, flags.out_path);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const CapError& e) {
    std::cerr << "cap error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
