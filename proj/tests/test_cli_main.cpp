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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

CliResult run_cli(const std::string& args) {
  const std::string command = std::string(QCOP_CLI_PATH) + " " + args + " 2>&1";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  while (size_t n = fread(buffer.data(), 1, buffer.size(), pipe)) {
    result.output.append(buffer.data(), n);
    if (n < buffer.size()) break;
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / ("qcop_cli_test_" + std::to_string(getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

fs::path write_fixture(const std::string& name, const std::string& text) {
  const fs::path path = scratch_dir() / name;
  std::ofstream out(path);
  out << text;
  return path;
}

const std::string kCloning3 = R"({"d": 3, "kind": "cloning", "c": 0.7})";

// diag(a, -a, 0) with a = sqrt(1/6), so Tr H^2 = 1/3 and the closed-form
// degree is ((9-6)(1/3)^2 + 3*7*(1/18)) / 81 = 1.5/81.
const std::string kHamiltonian3 = R"({
  "d": 3, "kind": "hamiltonian",
  "h": [[[0.4082482904638630, 0],[0,0],[0,0]],
        [[0,0],[-0.4082482904638630, 0],[0,0]],
        [[0,0],[0,0],[0,0]]]
})";

const std::string kDemoState = R"({
  "pauli_r": [[0.25, 0.0625, -0.125, 0.0625],
              [0.0625, 0.1, 0, 0],
              [-0.041666666666666667, 0, 0.05, 0],
              [-0.0125, 0, 0, -0.05]]
})";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("analyze reports a CoP verdict for cloning") {
  const fs::path file = write_fixture("cloning3.json", kCloning3);
  const CliResult result = run_cli("analyze " + file.string());
  REQUIRE(result.exit_code == 0);
  const json report = json::parse(result.output);
  CHECK(report.at("verdict") == "cop");
  CHECK(report.at("delta").get<double>() <= 1e-10);
  CHECK(report.at("eq6_residual").get<double>() <= 1e-10);
  CHECK(report.at("probe_max").get<double>() <= 1e-9);
  CHECK(report.at("tp") == true);
  CHECK(report.at("cp") == true);
}

TEST_CASE("analyze reports the closed-form degree for a hamiltonian channel") {
  const fs::path file = write_fixture("ham3.json", kHamiltonian3);
  const CliResult result = run_cli("analyze " + file.string());
  REQUIRE(result.exit_code == 0);
  const json report = json::parse(result.output);
  CHECK(report.at("verdict") == "non-cop");
  CHECK(report.at("delta").get<double>() == doctest::Approx(1.5 / 81.0).epsilon(1e-9));
}

TEST_CASE("analyze output is byte-identical across runs") {
  const fs::path file = write_fixture("cloning3b.json", kCloning3);
  const CliResult first = run_cli("analyze " + file.string() + " --seed 42");
  const CliResult second = run_cli("analyze " + file.string() + " --seed 42");
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
}

TEST_CASE("malformed input exits 1 with a line anchor") {
  const fs::path file = write_fixture("broken.json", "{\"d\": 3,\n  nope\n}");
  const CliResult result = run_cli("analyze " + file.string());
  CHECK(result.exit_code == 1);
  CHECK(result.output.find("parse error") != std::string::npos);
  CHECK(result.output.find(":2") != std::string::npos);
}

TEST_CASE("invalid parameters exit 2") {
  const fs::path file = write_fixture("badc.json", R"({"d": 3, "kind": "cloning", "c": 1.5})");
  const CliResult result = run_cli("analyze " + file.string());
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("validation error") != std::string::npos);
}

TEST_CASE("non trace-preserving channels exit 2") {
  const fs::path file = write_fixture("nontp.json", R"({
    "d": 2, "kind": "kraus",
    "kraus": [[[[0.5,0],[0,0]],[[0,0],[0.5,0]]]]
  })");
  const CliResult result = run_cli("analyze " + file.string());
  CHECK(result.exit_code == 2);
}

TEST_CASE("spectrum reports multiplicities and membership") {
  const CliResult result = run_cli("spectrum 3");
  REQUIRE(result.exit_code == 0);
  const json report = json::parse(result.output);
  CHECK(report.at("in_allowed_set") == true);
  int mult_two = -1, mult_minus_one = -1;
  for (const auto& cluster : report.at("clusters")) {
    if (cluster.at("value").get<double>() == 2.0) mult_two = cluster.at("multiplicity").get<int>();
    if (cluster.at("value").get<double>() == -1.0) mult_minus_one = cluster.at("multiplicity").get<int>();
  }
  CHECK(mult_two == 1);
  CHECK(mult_minus_one >= 8);
}

TEST_CASE("spectrum beyond the cap exits 2") {
  const CliResult result = run_cli("spectrum 5");
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("cap") != std::string::npos);
}

TEST_CASE("spectrum decomposes a CoP channel on request") {
  const fs::path file = write_fixture("cloning3c.json", kCloning3);
  const CliResult result = run_cli("spectrum 3 --channel " + file.string() + " --p 0.3");
  REQUIRE(result.exit_code == 0);
  const json report = json::parse(result.output);
  CHECK(report.at("mixture").at("verdict") == "cloning");
  CHECK(report.at("mixture").at("residual").get<double>() <= 1e-10);
}

TEST_CASE("discord reproduces the reference value on the demo state") {
  const fs::path file = write_fixture("demo_state.json", kDemoState);
  const CliResult result = run_cli("discord " + file.string());
  REQUIRE(result.exit_code == 0);
  const json report = json::parse(result.output);
  CHECK(report.at("discord").get<double>() == doctest::Approx(0.0314231).epsilon(0).scale(1.0).epsilon(1e-3));
  CHECK(std::abs(report.at("discord").get<double>() - 0.0314231) <= 1e-4);
  CHECK(report.at("zero_discord") == false);
}

TEST_CASE("discord of a product state is numerically zero") {
  const fs::path file = write_fixture("product.json", R"({
    "dA": 2, "dB": 2,
    "rho": [[[0.35,0],[0,0],[0,0],[0,0]],
            [[0,0],[0.35,0],[0,0],[0,0]],
            [[0,0],[0,0],[0.15,0],[0,0]],
            [[0,0],[0,0],[0,0],[0.15,0]]]
  })");
  const CliResult result = run_cli("discord " + file.string());
  REQUIRE(result.exit_code == 0);
  const json report = json::parse(result.output);
  CHECK(report.at("discord").get<double>() <= 1e-8);
  CHECK(report.at("zero_discord") == true);
}

TEST_CASE("non positive state file exits 2 with eigenvalue diagnostics") {
  const fs::path file = write_fixture("nonpsd.json", R"({
    "dA": 2, "dB": 2,
    "rho": [[[1.4,0],[0,0],[0,0],[0,0]],
            [[0,0],[-0.4,0],[0,0],[0,0]],
            [[0,0],[0,0],[0,0],[0,0]],
            [[0,0],[0,0],[0,0],[0,0]]]
  })");
  const CliResult result = run_cli("discord " + file.string());
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("eigenvalue") != std::string::npos);
}

TEST_CASE("probe is deterministic for a fixed seed") {
  const fs::path file = write_fixture("cloning3d.json", kCloning3);
  const CliResult first = run_cli("probe " + file.string() + " --samples 64 --seed 9");
  const CliResult second = run_cli("probe " + file.string() + " --samples 64 --seed 9");
  REQUIRE(first.exit_code == 0);
  CHECK(first.output == second.output);
  const json report = json::parse(first.output);
  CHECK(report.at("probe_max").get<double>() <= 1e-9);
  CHECK(report.at("samples") == 64);
}

TEST_CASE("--out writes the report atomically") {
  const fs::path file = write_fixture("cloning3e.json", kCloning3);
  const fs::path out = scratch_dir() / "report.json";
  const CliResult result = run_cli("analyze " + file.string() + " --out " + out.string());
  REQUIRE(result.exit_code == 0);
  CHECK(result.output.empty());
  REQUIRE(fs::exists(out));
  CHECK_FALSE(fs::exists(out.string() + ".tmp"));
  std::ifstream in(out);
  json report;
  in >> report;
  CHECK(report.at("verdict") == "cop");
}

TEST_CASE("reproduce with a constrained cap skips the d=3 twirl check") {
  const CliResult result = run_cli("reproduce --cap-d 2");
  REQUIRE(result.exit_code == 0);
  const json report = json::parse(result.output);
  CHECK(report.at("summary").at("failed") == 0);
  bool found_skip = false;
  for (const auto& check : report.at("checks")) {
    if (check.at("status") == "skip") {
      found_skip = true;
      CHECK(check.at("name").get<std::string>().find("d=3") != std::string::npos);
    }
  }
  CHECK(found_skip);
}

TEST_CASE("reproduce with an absurd tolerance override fails the discord checks") {
  const CliResult result = run_cli("reproduce --tol 1e-15");
  CHECK(result.exit_code == 3);
  const json report = json::parse(result.output);
  int discord_failures = 0;
  for (const auto& check : report.at("checks")) {
    if (check.at("criterion") == 7 && check.at("status") == "fail") ++discord_failures;
  }
  CHECK(discord_failures >= 1);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run_cli("analyze").exit_code == 1);
  CHECK(run_cli("frobnicate x").exit_code == 1);
}

TEST_CASE("QCOP_CAP_D lowers the default caps") {
  const std::string saved = []() -> std::string {
    const char* v = getenv("QCOP_CAP_D");
    return v ? v : "";
  }();
  setenv("QCOP_CAP_D", "2", 1);
  const CliResult result = run_cli("spectrum 3");
  if (saved.empty()) {
    unsetenv("QCOP_CAP_D");
  } else {
    setenv("QCOP_CAP_D", saved.c_str(), 1);
  }
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("cap") != std::string::npos);
}

}  // TEST_SUITE
