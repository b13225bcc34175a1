// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The wlsq authors

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "wlsq/cli/commands.hpp"
#include "wlsq/cli/config_file.hpp"
#include "wlsq/cli/csv.hpp"
#include "wlsq/cli/grid.hpp"
#include "wlsq/errors.hpp"
#include "wlsq/weights.hpp"

namespace wlsq::cli {
namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// Minimal CSV field splitter with double-quote support.
std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> parts(1);
  bool quoted = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if (quoted) {
      if (ch == '"' && i + 1 < s.size() && s[i + 1] == '"') {
        parts.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        parts.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      parts.emplace_back();
    } else {
      parts.back() += ch;
    }
  }
  return parts;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') rows.push_back(split_csv(line));
  return rows;
}

// "key: value" line from the human-readable summary.
double field(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (line.rfind(key + ":", 0) == 0) return std::stod(line.substr(key.size() + 1));
  ADD_FAILURE() << "missing field " << key;
  return NAN;
}

std::string read_file(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

fs::path temp_path(const std::string& name) {
  return fs::temp_directory_path() / ("wlsq_test_" + std::to_string(::getpid()) + "_" + name);
}

TEST(Grid, RangeAndList) {
  EXPECT_EQ(parse_grid("8:32:8"), (std::vector<double>{8, 16, 24}));
  EXPECT_EQ(parse_grid("0,0.3, 0.8"), (std::vector<double>{0, 0.3, 0.8}));
  EXPECT_EQ(parse_grid("0:1:0.25").size(), 4u);
  EXPECT_THROW(parse_grid(""), ConfigError);
  EXPECT_THROW(parse_grid("1:0:1"), ConfigError);
  EXPECT_THROW(parse_grid("1:2:0"), ConfigError);
  EXPECT_THROW(parse_grid("a,b"), ConfigError);
}

TEST(ConfigFile, ParsesAndRejects) {
  std::istringstream ok("# template\nn = 32\nalpha=0.5   # trailing\n\n");
  const auto m = parse_config_stream(ok, "t");
  EXPECT_EQ(m.at("n"), "32");
  EXPECT_EQ(m.at("alpha"), "0.5");
  std::istringstream dup("n = 1\nn = 2\n");
  EXPECT_THROW(parse_config_stream(dup, "t"), ConfigError);
  std::istringstream bad("just words\n");
  EXPECT_THROW(parse_config_stream(bad, "t"), ConfigError);
}

TEST(Csv, Formatting) {
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(1234567.0), "1234567");
  EXPECT_EQ(format_optional(std::nullopt), "");
  EXPECT_EQ(csv_escape("a,b"), "\"a,b\"");
  std::ostringstream s;
  write_csv_row(s, {"x", "", "y"});
  EXPECT_EQ(s.str(), "x,,y\n");
}

TEST(Theory, InterpolationThresholdCleanError) {
  const CliResult r = run_cli({"theory", "--n", "64", "--mu", "4", "--p", "64", "--gamma", "0.3", "--beta", "0.3",
                         "--alpha", "0.3", "--sigma", "0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const double want = 2.0 * static_cast<double>(power_sum(64, 256, 0.6L) / power_sum(0, 256, 0.6L));
  EXPECT_NEAR(field(r.out, "e_clean"), want, 1e-12 * want);
  EXPECT_EQ(field(r.out, "e_noise"), 0.0);
  EXPECT_NE(r.out.find("# wlsq "), std::string::npos);
  EXPECT_NE(r.out.find("# config: N=64 P=256 mu=4 p=64"), std::string::npos);
}

TEST(Theory, UnweightedOverparameterizedNoise) {
  const CliResult r = run_cli({"theory", "--n", "64", "--mu", "4", "--p", "128", "--gamma", "0.3", "--beta", "0",
                         "--alpha", "0.3", "--sigma", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NEAR(field(r.out, "e_noise"), 0.5, 1e-14);
  EXPECT_NE(r.out.find("regime:    over"), std::string::npos);
}

TEST(Theory, RegimeViolationNamesConstraint) {
  const CliResult r = run_cli({"theory", "--n", "16", "--mu", "4", "--p", "24"});
  EXPECT_EQ(r.code, kExitConfig);
  EXPECT_NE(r.err.find("multiple of N"), std::string::npos) << r.err;
}

TEST(Theory, WritesCsv) {
  const fs::path p = temp_path("theory.csv");
  const CliResult r = run_cli({"theory", "--n", "8", "--mu", "2", "--p", "6", "--sigma", "0.5", "--out", p.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = csv_rows(read_file(p));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"regime", "e_clean", "e_noise", "var_noise", "e_total"}));
  EXPECT_EQ(rows[1][0], "under");
  fs::remove(p);
}

TEST(Simulate, ExactMatchWhenTheoryIsZero) {
  const CliResult r = run_cli({"simulate", "--n", "16", "--mu", "1", "--p", "16", "--sigma", "0", "--n-theta", "50",
                         "--n-noise", "2", "--assert"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_LE(field(r.out, "mean_error"), 1e-16);
  EXPECT_NE(r.out.find("undefined (theory is 0); exact match"), std::string::npos);
}

TEST(Simulate, DeskConfigPassesZCheck) {
  const CliResult r = run_cli({"simulate", "--n", "16", "--mu", "2", "--p", "32", "--alpha", "0.3", "--beta", "0.3",
                         "--gamma", "0.5", "--sigma", "0.5", "--n-theta", "500", "--n-noise", "10", "--seed",
                         "3", "--assert"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_NE(r.out.find("|z| <= 5 pass"), std::string::npos);
  EXPECT_LE(std::abs(field(r.out, "z_score")), 5.0);
}

TEST(Simulate, SameSeedByteIdenticalCsv) {
  const fs::path a = temp_path("sim_a.csv"), b = temp_path("sim_b.csv");
  const std::vector<std::string> base = {"simulate", "--n", "8", "--mu", "2", "--p", "6", "--sigma", "0.3",
                                         "--gamma", "0.5", "--n-theta", "100", "--n-noise", "4", "--seed", "9"};
  auto args_a = base, args_b = base;
  args_a.insert(args_a.end(), {"--out", a.string()});
  args_b.insert(args_b.end(), {"--out", b.string(), "--workers", "3"});
  ASSERT_EQ(run_cli(args_a).code, kExitOk);
  ASSERT_EQ(run_cli(args_b).code, kExitOk);
  const std::string ta = read_file(a);
  EXPECT_FALSE(ta.empty());
  EXPECT_EQ(ta, read_file(b));
  const auto rows = csv_rows(ta);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0][0], "mean_error");
  fs::remove(a);
  fs::remove(b);
}

TEST(Simulate, AssertFailsWithoutUsableTheory) {
  // p < N/2 with noise has no closed-form noise term, so the check cannot pass.
  const CliResult r = run_cli({"simulate", "--n", "16", "--mu", "2", "--p", "4", "--sigma", "0.5", "--n-theta", "20",
                         "--n-noise", "2", "--assert"});
  EXPECT_EQ(r.code, kExitStatistical);
  EXPECT_NE(r.out.find("unavailable"), std::string::npos);
}

TEST(Sweep, DoubleDescentOverP) {
  const CliResult r = run_cli({"sweep", "--n", "64", "--mu", "4", "--gamma", "0.3", "--beta", "0.3", "--alpha", "0.3",
                         "--sweep", "p", "--grid", "8:256:8"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 32u);
  EXPECT_EQ(rows[0], std::vector<std::string>(std::begin(kSweepHeader), std::end(kSweepHeader)));
  double best = -1;
  std::string best_p;
  std::size_t ok = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    ASSERT_EQ(rows[i].size(), std::size(kSweepHeader));
    EXPECT_EQ(rows[i][6], "");
    EXPECT_EQ(rows[i][7], "");
    EXPECT_EQ(rows[i][8], "");
    if (!rows[i][9].empty()) continue;  // widths that are neither <= N nor multiples of N
    ++ok;
    const double e = std::stod(rows[i][5]);
    if (e > best) {
      best = e;
      best_p = rows[i][0];
    }
  }
  EXPECT_EQ(best_p, "64");
  EXPECT_EQ(ok, 8u + 2u);  // 8..64, then 128 and 192
}

TEST(Sweep, InadmissibleWidthGetsErrorRow) {
  const CliResult r = run_cli({"sweep", "--n", "16", "--mu", "4", "--sweep", "p", "--grid", "8,24,32"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_TRUE(rows[1][9].empty());
  EXPECT_FALSE(rows[2][9].empty());
  EXPECT_TRUE(rows[2][5].empty());
  EXPECT_TRUE(rows[3][9].empty());
}

TEST(Sweep, SimulationColumnsAndSeries) {
  const CliResult r = run_cli({"sweep", "--n", "8", "--mu", "2", "--p", "8", "--gamma", "0.5", "--sigma", "0.2",
                         "--sweep", "p", "--grid", "6,16", "--series", "alpha=0,0.8", "--simulate",
                         "--n-theta", "50", "--n-noise", "2", "--workers", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0][0], "series_value");
  EXPECT_EQ(rows[1][0], "0");
  EXPECT_EQ(rows[3][0], "0.8");
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_FALSE(rows[i][7].empty());
  // p = 16 > N: clean and noise error do not depend on alpha
  EXPECT_EQ(rows[2][3], rows[4][3]);
  EXPECT_NE(rows[1][3], rows[3][3]);
}

TEST(Sweep, SingularValues) {
  const CliResult r = run_cli({"sweep", "--n", "16", "--mu", "1", "--p", "8", "--sweep", "alpha", "--grid", "0,1",
                         "--singular-values"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 1u + 2u * 8u);
  for (std::size_t i = 1; i <= 8; ++i) EXPECT_NEAR(std::stod(rows[i][2]), 4.0, 1e-12);
}

TEST(Spectrum, Kinds) {
  CliResult r = run_cli({"spectrum", "--kind", "polynomial", "--n", "3", "--degree", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto rows = csv_rows(r.out);
  ASSERT_GE(rows.size(), 5u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"k", "multiplicity", "eigenvalue"}));
  for (std::size_t i = 1; i < rows.size(); ++i)
    EXPECT_EQ(std::stod(rows[i][2]) > 0.0, i <= 3) << i;

  r = run_cli({"spectrum", "--kind", "gaussian", "--n", "3", "--sigma-k", "1", "--k-max", "10"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 12u);
  for (std::size_t i = 2; i < rows.size(); ++i) EXPECT_LT(std::stod(rows[i][2]), std::stod(rows[i - 1][2]));

  r = run_cli({"spectrum", "--kind", "ntk", "--n", "4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  rows = csv_rows(r.out);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const int k = std::stoi(rows[i][0]);
    if (k >= 3 && k % 2 == 1) EXPECT_EQ(std::stod(rows[i][2]), 0.0) << k;
  }
}

TEST(ExitCodes, ConfigAndNumerical) {
  EXPECT_EQ(run_cli({"theory", "--bogus"}).code, kExitConfig);
  EXPECT_EQ(run_cli({}).code, kExitConfig);
  EXPECT_EQ(run_cli({"theory", "--n", "abc"}).code, kExitConfig);
  EXPECT_EQ(run_cli({"theory", "--sigma", "-1"}).code, kExitConfig);
  EXPECT_EQ(run_cli({"spectrum", "--kind", "gaussian", "--sigma-k", "0.04"}).code, kExitNumerical);
  EXPECT_EQ(run_cli({"spectrum", "--kind", "nope"}).code, kExitConfig);
}

TEST(ConfigPrecedence, FlagsOverrideFileOverrideDefaults) {
  const fs::path p = temp_path("cfg.txt");
  {
    std::ofstream f(p);
    f << "n = 8\nmu = 2\nsigma = 1\nbeta = 0\np = 16\n";
  }
  CliResult r = run_cli({"theory", "--config", p.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NEAR(field(r.out, "e_noise"), 0.5, 1e-14);  // N sigma^2 / p
  r = run_cli({"theory", "--config", p.string(), "--sigma", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NEAR(field(r.out, "e_noise"), 2.0, 1e-14);
  EXPECT_NE(r.out.find("gamma=0 "), std::string::npos);
  {
    std::ofstream f(p);
    f << "colour = blue\n";
  }
  EXPECT_EQ(run_cli({"theory", "--config", p.string()}).code, kExitConfig);
  fs::remove(p);
}

TEST(Binary, EndToEnd) {
  const std::string cmd = std::string("\"") + WLSQ_TOOL_PATH + "\" theory --n 8 --p 8 > /dev/null";
  EXPECT_EQ(std::system(cmd.c_str()), 0);
  const std::string bad = std::string("\"") + WLSQ_TOOL_PATH + "\" theory --p 5 --n 4 2> /dev/null";
  const int status = std::system(bad.c_str());
  EXPECT_EQ(WEXITSTATUS(status), kExitConfig);
}

}  // namespace
}  // namespace wlsq::cli
