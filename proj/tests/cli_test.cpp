// Copyright 2026 The vbsswap Authors
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

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli/commands.hpp"

namespace vbsswap::cli {
namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

nlohmann::json run_json(const std::vector<std::string>& args) {
  const CliRun r = run(args);
  EXPECT_EQ(r.code, kExitOk) << r.err;
  return nlohmann::json::parse(r.out);
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("vbsswap_cli_test_" + name);
}

TEST(CliSwapTest, WorkedInstance) {
  const auto j = run_json({"swap", "--mode", "vbs", "--identical", "2,1", "--bonds", "2"});
  EXPECT_EQ(j["command"], "swap");
  EXPECT_EQ(j["seed"], 42);
  EXPECT_NEAR(j["p_sum"].get<double>(), 2.64, 1e-12);
  EXPECT_NEAR(j["tradeoff_constant"].get<double>(), 8.0 / 33.0, 1e-12);
  EXPECT_LE(j["max_residual"].get<double>(), 1e-10);
  ASSERT_EQ(j["outcomes"].size(), 3u);
  EXPECT_NEAR(j["outcomes"][1]["prob"].get<double>(), 17.0 / 33.0, 1e-12);
  EXPECT_TRUE(j.contains("config_echo"));
}

TEST(CliSwapTest, IdealQutritSwap) {
  const auto j = run_json({"swap", "--mode", "qudit", "--dim", "3", "--identical", "1,1,1", "--bonds", "3"});
  ASSERT_EQ(j["outcomes"].size(), 81u);
  for (const auto& o : j["outcomes"]) {
    EXPECT_NEAR(o["prob"].get<double>(), 1.0 / 81.0, 1e-14);
    EXPECT_NEAR(o["concurrence"].get<double>(), 1.0, 1e-12);
  }
  EXPECT_LE(j["max_residual"].get<double>(), 1e-9);
}

TEST(CliSwapTest, CsvMatchesJson) {
  const std::vector<std::string> base{"swap", "--mode", "vbs", "--filters", "2,1;1,3i;1,1", "--format"};
  auto json_args = base;
  json_args.push_back("json");
  auto csv_args = base;
  csv_args.push_back("csv");
  const auto j = run_json(json_args);
  const CliRun csv = run(csv_args);
  ASSERT_EQ(csv.code, kExitOk);

  std::istringstream lines(csv.out);
  std::string line;
  std::vector<std::string> rows;
  bool header_seen = false;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      EXPECT_EQ(line, "index,weight,prob,concurrence,prob_times_c");
      header_seen = true;
      continue;
    }
    rows.push_back(line);
  }
  ASSERT_EQ(rows.size(), j["outcomes"].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& o = j["outcomes"][i];
    const std::string expected = o["index"].get<std::string>() + "," + o["weight"].dump() + "," +
                                 o["prob"].dump() + "," + o["concurrence"].dump() + "," +
                                 o["prob_times_c"].dump();
    EXPECT_EQ(rows[i], expected);
  }
}

TEST(CliScanTest, MaximalSlopeIsLogThree) {
  const auto j = run_json({"scan", "--mode", "vbs", "--identical", "1,1", "--n-min", "1", "--n-max", "8"});
  EXPECT_NEAR(j["slope"].get<double>(), -std::log(3.0), 1e-12);
  ASSERT_EQ(j["rows"].size(), 8u);
  EXPECT_NEAR(j["rows"][0]["constant"].get<double>(), 1.0 / 3.0, 1e-12);
}

TEST(CliScanTest, LongScanIsFast) {
  const auto start = std::chrono::steady_clock::now();
  const auto j = run_json({"scan", "--mode", "plain", "--identical", "2,1", "--n-min", "1", "--n-max", "10000"});
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_LT(seconds, 1.0);
  EXPECT_NEAR(j["slope"].get<double>(), std::log(0.8) - std::log(4.0), 1e-9);
  EXPECT_LE(j["max_fit_residual"].get<double>(), 1e-6);
}

TEST(CliScanTest, QuditScanUsesCompleteBasis) {
  const auto j = run_json({"scan", "--mode", "qudit", "--dim", "3", "--identical", "1,1,1", "--n-max", "3"});
  EXPECT_NEAR(j["slope"].get<double>(), -std::log(9.0), 1e-12);
}

TEST(CliSampleTest, ByteIdenticalForSameSeed) {
  const std::vector<std::string> args{"sample", "--mode", "vbs", "--identical", "2,1", "--bonds", "3",
                                      "--samples", "20000", "--seed", "7"};
  const CliRun a = run(args);
  const CliRun b = run(args);
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_LE(j["total_variation"].get<double>(), 0.02);
  std::uint64_t total = 0;
  for (const auto& c : j["cells"]) total += c["count"].get<std::uint64_t>();
  EXPECT_EQ(total, 20000u);
}

TEST(CliVerifyTest, DefaultSuitePasses) {
  const auto j = run_json({"verify", "--chains", "5", "--max-nodes", "3"});
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_GE(j["worst_fidelity"].get<double>(), 1.0 - 1e-10);
}

TEST(CliVerifyTest, CorruptedBellOrderFails) {
  const CliRun r = run({"verify", "--chains", "3", "--max-nodes", "3", "--debug-corrupt-bell-order"});
  EXPECT_EQ(r.code, kExitVerificationFailed);
  EXPECT_FALSE(nlohmann::json::parse(r.out)["passed"].get<bool>());
}

TEST(CliErrorTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"swap", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"swap", "--mode", "sideways"}).code, kExitUsage);
  EXPECT_EQ(run({"swap", "--identical", "1,1", "--filters", "1,1;1,1"}).code, kExitUsage);
  EXPECT_EQ(run({"swap", "--mode", "vbs", "--dim", "3", "--identical", "1,1,1"}).code, kExitUsage);
  EXPECT_EQ(run({"swap", "--identical", "0,0"}).code, kExitUsage);
  EXPECT_EQ(run({"scan", "--n-min", "5", "--n-max", "2"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
}

TEST(CliErrorTest, BudgetExitsThree) {
  const CliRun r = run({"swap", "--mode", "vbs", "--identical", "2,1", "--bonds", "18"});
  EXPECT_EQ(r.code, kExitBudget);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
  EXPECT_EQ(run({"scan", "--identical", "2,1", "--n-max", "20000000"}).code, kExitBudget);
}

TEST(CliConfigTest, FileWithFlagOverride) {
  const auto cfg = temp_path("config.json");
  {
    std::ofstream f(cfg);
    f << R"({"mode": "vbs", "identical": [2, 1], "bonds": 3, "seed": 5})";
  }
  const auto from_file = run_json({"swap", "--config", cfg.string()});
  EXPECT_EQ(from_file["seed"], 5);
  EXPECT_EQ(from_file["outcomes"].size(), 9u);
  const auto overridden = run_json({"swap", "--config", cfg.string(), "--bonds", "2", "--seed", "9"});
  EXPECT_EQ(overridden["seed"], 9);
  EXPECT_EQ(overridden["outcomes"].size(), 3u);

  {
    std::ofstream f(cfg);
    f << R"({"mode": "vbs", "unknown_key": 1})";
  }
  EXPECT_EQ(run({"swap", "--config", cfg.string()}).code, kExitUsage);
  std::filesystem::remove(cfg);
}

TEST(CliOutTest, WritesToFile) {
  const auto path = temp_path("out.json");
  const CliRun r = run({"swap", "--identical", "1,1", "--out", path.string()});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  const auto j = nlohmann::json::parse(f);
  EXPECT_EQ(j["command"], "swap");
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace vbsswap::cli
