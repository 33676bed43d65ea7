// Copyright 2026 The holopath Authors
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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "holo/figure1.hpp"
#include "holopath/commands.hpp"

using namespace holopath;
using nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const holo::ComparisonFunctions& functions = {}) {
  args.insert(args.begin(), "holopath");
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err, functions);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("holopath_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("config text parsing") {
  RunConfig c;
  apply_config_text(c,
                    "# sweep grid\n"
                    "scheme = single-shot\n"
                    "theta-gate=0.25   # quarter of pi\n"
                    "\n"
                    "epsilon=1e-3,-2e-3\n"
                    "axis=0,0,2\n"
                    "phi-b=free\n"
                    "balanced=false\n"
                    "level=fast\n");
  CHECK(c.scheme == Scheme::kSingleShot);
  CHECK(c.theta_gate == 0.25);
  CHECK(c.epsilon == std::vector<double>{1e-3, -2e-3});
  CHECK(c.axis.z == doctest::Approx(1.0));
  CHECK_FALSE(c.phi_b.has_value());
  CHECK_FALSE(c.balanced);
  CHECK(c.level == holo::VerifyLevel::kFast);
}

TEST_CASE("config errors") {
  RunConfig c;
  CHECK_THROWS_AS(apply_config_text(c, "colour=blue\n"), UsageError);
  CHECK_THROWS_AS(apply_config_text(c, "samples\n"), UsageError);
  CHECK_THROWS_AS(apply_config_text(c, "samples=1\n"), UsageError);
  CHECK_THROWS_AS(apply_config_text(c, "theta-gate=0.7\n"), UsageError);
  CHECK_THROWS_AS(apply_config_text(c, "epsilon=0.01,0.5\n"), UsageError);
  CHECK_THROWS_AS(apply_config_text(c, "epsilon=0.01,\n"), UsageError);
  CHECK_THROWS_AS(apply_config_text(c, "axis=1,0\n"), UsageError);
  CHECK_THROWS_AS(apply_config_text(c, "axis=0,0,0\n"), UsageError);
  CHECK_THROWS_AS(apply_config_text(c, "balanced=maybe\n"), UsageError);
  CHECK_THROWS_AS(apply_config_file(c, "/nonexistent/holopath.cfg"), IoError);
}

TEST_CASE("flags override the config file") {
  const auto cfg = temp_file("override.cfg");
  std::ofstream(cfg) << "samples=5\n";
  const Run r = run({"figure1", "--config", cfg.string(), "--samples", "3"});
  CHECK(r.code == kExitOk);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
  const Run only_file = run({"figure1", "--config", cfg.string()});
  CHECK(std::count(only_file.out.begin(), only_file.out.end(), '\n') == 6);
  std::filesystem::remove(cfg);
}

TEST_CASE("figure1 output") {
  RunConfig c;
  c.samples = 2;
  CHECK(cmd_figure1(c) == "theta,f1,f2,f3\n0,0,0,0\n1.5707963267949,0.585786437626905,1,1\n");

  const auto path = temp_file("figure1.csv");
  REQUIRE(run({"figure1", "--samples", "101", "--out", path.string()}).code == kExitOk);
  const std::string first = slurp(path);
  REQUIRE(run({"figure1", "--samples", "101", "--out", path.string()}).code == kExitOk);
  CHECK(slurp(path) == first);
  const auto rows = holo::parse_figure1_csv(first);
  CHECK(rows.size() == 101);
  std::filesystem::remove(path);
}

TEST_CASE("sweep records") {
  const Run r = run({"sweep", "--theta-gate", "0.5", "--epsilon", "0,1e-3", "--kappa", "0,2e-3,-2e-3"});
  REQUIRE(r.code == kExitOk);
  const json doc = json::parse(r.out);
  REQUIRE(doc.size() == 6);
  CHECK(doc[0]["epsilon"] == 0.0);
  CHECK(doc[0]["kappa"] == 0.0);
  CHECK(doc[0]["fidelity_exact"].get<double>() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(doc[1]["kappa"] == 2e-3);
  const json& q = doc[3];
  CHECK(q["epsilon"] == 1e-3);
  CHECK(q["kappa"] == 0.0);
  CHECK(1 - q["fidelity_exact"].get<double>() == doctest::Approx(1.9272e-6).epsilon(1e-4));
  CHECK(q["abs_gap"].get<double>() <= 1e-9);
  CHECK(q["scheme"] == "two-loop");
  CHECK(q["params"]["loop1"]["theta"].get<double>() == doctest::Approx(holo::kPi / 2));
}

TEST_CASE("sweep with raw parameters") {
  const Run r = run({"sweep", "--scheme", "single-shot", "--params", "0.25,0,0.5,0", "--epsilon", "0.01"});
  REQUIRE(r.code == kExitOk);
  const json doc = json::parse(r.out);
  REQUIRE(doc.size() == 1);
  CHECK(doc[0]["params"]["alpha"].get<double>() == doctest::Approx(holo::kPi / 4));
  CHECK(doc[0]["params"]["beta1"].get<double>() == doctest::Approx(holo::kPi / 2));
  CHECK(run({"sweep", "--scheme", "single-shot", "--params", "0.25,0"}).code == kExitUsage);
  CHECK(run({"sweep", "--params", "1.5,0,0,0,0,0"}).code == kExitUsage);
}

TEST_CASE("kappa is two-loop only") {
  const Run r = run({"sweep", "--scheme", "single-loop", "--kappa", "0.01"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("kappa") != std::string::npos);
}

TEST_CASE("optimize output") {
  const Run r = run({"optimize", "--theta-gate", "0.5", "--axis", "0,0,1"});
  REQUIRE(r.code == kExitOk);
  const json doc = json::parse(r.out);
  CHECK(doc["two_loop"]["loop1"]["theta"].get<double>() == doctest::Approx(holo::kPi / 2));
  CHECK(doc["two_loop"]["loop2"]["theta"].get<double>() == doctest::Approx(holo::kPi / 2));
  CHECK(doc["two_loop"]["phi_b"].get<double>() == doctest::Approx(holo::kPi));
  CHECK(std::abs(doc["two_loop"]["cos_theta_sum"].get<double>()) <= 1e-12);
  CHECK(doc["coefficients"]["two_loop"].get<double>() == doctest::Approx(1.9272).epsilon(1e-4));
  CHECK(doc["coefficients"]["single_loop"].get<double>() == doctest::Approx(3.2899).epsilon(1e-4));
  CHECK(doc["coefficients"]["single_shot"].get<double>() == doctest::Approx(3.2899).epsilon(1e-4));
  CHECK_FALSE(doc.contains("note"));
  CHECK(run({"optimize", "--theta-gate", "0.5", "--axis", "0,0,1"}).out == r.out);

  const json identity = json::parse(run({"optimize", "--theta-gate", "0"}).out);
  CHECK(identity.contains("note"));
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"figure1", "--samples", "1"}).code == kExitUsage);
  CHECK(run({"figure1", "--bogus"}).code == kExitUsage);
  CHECK(run({"figure1", "--out", "/nonexistent/dir/f.csv"}).code == kExitIo);
  CHECK(run({"figure1", "--config", "/nonexistent/x.cfg"}).code == kExitIo);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("verify passes at the fast level") {
  const Run r = run({"verify", "--level", "fast"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("all 8 criteria passed") != std::string::npos);
}

TEST_CASE("verify fails on a corrupted error function") {
  holo::ComparisonFunctions broken;
  broken.f1 = [](double t) { return 2 + 2 * std::cos(t / 2); };
  const Run r = run({"verify", "--level", "fast"}, broken);
  CHECK(r.code == kExitVerifyFailed);
  const auto line = r.out.find("[FAIL] 1.");
  REQUIRE(line != std::string::npos);
  CHECK(r.out.find("dominance", line) != std::string::npos);
}
