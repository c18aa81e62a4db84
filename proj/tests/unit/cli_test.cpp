// Copyright 2026 The pspc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pspc/errors.hpp"
#include "pspc_cli/app.hpp"
#include "pspc_cli/config.hpp"

namespace pspc::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("pspc_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

TEST(Config, RoundTrip) {
  ExperimentConfig cfg;
  cfg.cache_dir = "/tmp/x";
  cfg.threads = 3;
  cfg.limit = 12345;
  cfg.band_lo = 4;
  cfg.band_hi = 9;
  cfg.theta = 0.1;
  cfg.c = "21/10";
  cfg.m_list = {4, 8, 16};
  cfg.b_eff = 2.5;
  cfg.n_list = {1000, 2000};
  cfg.profile = "full";
  EXPECT_EQ(parse_config(serialize(cfg)), cfg);
  EXPECT_EQ(parse_config(serialize(ExperimentConfig{})), ExperimentConfig{});
}

TEST(Config, ParsingRules) {
  const auto cfg = parse_config("# comment\n\nm-list = 1,2,3\nk=3\nxi-over-n=1/4\n");
  EXPECT_EQ(cfg.m_list, (std::vector<std::int64_t>{1, 2, 3}));
  EXPECT_EQ(cfg.k, 3);
  EXPECT_EQ(cfg.xi_over_n, "1/4");
  EXPECT_THROW(parse_config("bogus=1\n"), ArgumentError);
  EXPECT_THROW(parse_config("k=abc\n"), ArgumentError);
  EXPECT_THROW(parse_config("no equals sign\n"), ArgumentError);
  EXPECT_THROW(load_config("/nonexistent/pspc.cfg"), ArgumentError);
  EXPECT_EQ(format_int_list(parse_int_list("5,6")), "5,6");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({"sieve", "--bogus"}).code, kExitArgument);
  EXPECT_EQ(call({}).code, kExitArgument);
  EXPECT_EQ(call({"expsum", "--m", "10"}).code, kExitArgument);
  EXPECT_EQ(call({"correlate", "--mode", "sideways"}).code, kExitArgument);
  EXPECT_EQ(call({"dioph", "--m-list", "200", "--k", "2", "--brute"}).code, kExitResource);
  EXPECT_EQ(call({"expsum", "--m", "3000000000", "--theta", "0.1"}).code, kExitArgument);
  EXPECT_EQ(call({"--help"}).code, kExitOk);
}

TEST(Cli, CorrelateIdentity) {
  const auto r = call({"correlate", "--n", "101"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["schema_version"], kSchemaVersion);
  const auto& report = doc["report"];
  const double spectral = report["spectral"].get<double>();
  EXPECT_LE(report["identity_residual"].get<double>(), 1e-9 * (1.0 + std::abs(spectral)));
  EXPECT_EQ(doc["params"]["M"], 6);
}

TEST(Cli, SieveValue) {
  const auto r = call({"sieve", "--limit", "10"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(doc["psi"].get<double>(), 7.8320, 1e-4);
}

TEST(Cli, ConfigFileAndOverride) {
  const auto dir = scratch("config");
  const auto path = (dir / "run.cfg").string();
  std::ofstream(path) << "limit=10\n";
  const auto from_file = call({"sieve", "--config", path});
  ASSERT_EQ(from_file.code, kExitOk) << from_file.err;
  EXPECT_EQ(nlohmann::json::parse(from_file.out)["limit"], 10);
  const auto overridden = call({"sieve", "--config", path, "--limit", "20"});
  EXPECT_EQ(nlohmann::json::parse(overridden.out)["limit"], 20);
  fs::remove_all(dir);
}

TEST(Cli, ByteStableAcrossThreadsAndCache) {
  const auto dir = scratch("stable");
  const std::vector<std::string> base = {"correlate", "--n", "5000", "--cache-dir", dir.string()};
  auto with = [&](std::initializer_list<std::string> extra) {
    auto a = base;
    a.insert(a.end(), extra);
    return call(a);
  };
  const auto cold = with({"--threads", "1"});
  ASSERT_EQ(cold.code, kExitOk) << cold.err;
  const auto warm = with({"--threads", "1"});
  const auto threaded = with({"--threads", "2"});
  EXPECT_EQ(cold.out, warm.out);
  EXPECT_EQ(cold.out, threaded.out);

  // corrupt every cache file; the next run rebuilds and matches
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::ofstream(entry.path(), std::ios::binary | std::ios::trunc) << "garbage";
  }
  const auto rebuilt = with({"--threads", "1"});
  ASSERT_EQ(rebuilt.code, kExitOk) << rebuilt.err;
  EXPECT_EQ(cold.out, rebuilt.out);
  fs::remove_all(dir);
}

TEST(Cli, CsvSweep) {
  const auto r = call({"correlate", "--n-list", "100,200", "--paths", "fast", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  EXPECT_EQ(count, 3);  // header + two rows
  EXPECT_NE(r.out.find("schema_version"), std::string::npos);
}

TEST(Cli, VerifyQuick) {
  const auto r = call({"verify-all", "--profile", "quick"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_NE(r.out.find("10/10 criteria passed"), std::string::npos);
}

}  // namespace
}  // namespace pspc::cli
