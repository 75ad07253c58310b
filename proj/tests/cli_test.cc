// Copyright 2026 The Privbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "absl/strings/numbers.h"
#include "absl/strings/str_split.h"
#include "gtest/gtest.h"
#include "privbound/io.h"
#include "privbound/mechanism.h"
#include "privbound/distribution.h"

namespace privbound::cli {
namespace {

bool Contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string Data(const std::string& name) {
  return std::string(PRIVBOUND_TEST_DATA_DIR) + "/" + name;
}

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Invoke(std::vector<std::string> args, const char* env_seed = nullptr) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = Run(args, out, err, env_seed);
  return {code, out.str(), err.str()};
}

// Value of the `key,value` row, or NaN.
double Row(const std::string& table, const std::string& key) {
  for (absl::string_view line : absl::StrSplit(table, '\n')) {
    std::vector<std::string> parts = absl::StrSplit(line, ',');
    if (parts.size() == 2 && parts[0] == key) {
      double v;
      if (absl::SimpleAtod(parts[1], &v)) return v;
    }
  }
  return std::nan("");
}

std::string TextRow(const std::string& table, const std::string& key) {
  for (absl::string_view line : absl::StrSplit(table, '\n')) {
    std::vector<std::string> parts = absl::StrSplit(line, ',');
    if (parts.size() == 2 && parts[0] == key) return parts[1];
  }
  return "";
}

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

TEST(FormatNumberTest, SixDecimals) {
  EXPECT_EQ(FormatNumber(0.4), "0.400000");
  EXPECT_EQ(FormatNumber(-1e-9), "0.000000");
  EXPECT_EQ(FormatNumber(-0.25), "-0.250000");
  EXPECT_EQ(FormatNumber(0.8812908992), "0.881291");
}

TEST(BoundsCommandTest, BscAtZeroBudget) {
  const auto r = Invoke({"bounds", "--dist", Data("bsc02.pxy"), "--eps", "0"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(Contains(r.out, "U2,0.400000\n")) << r.out;
  EXPECT_TRUE(Contains(r.out, "U1,0.721928\n")) << r.out;
  EXPECT_TRUE(Contains(r.out, "layered_T,-0.600000\n")) << r.out;
}

TEST(BoundsCommandTest, ErasureWithPerfectPrivacy) {
  const auto r = Invoke(
      {"bounds", "--dist", Data("erasure03.pxy"), "--eps", "0", "--with-g0"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(Contains(r.out, "g0,0.881291\n")) << r.out;
}

TEST(BoundsCommandTest, BudgetAboveInformationIsDomainError) {
  const auto r =
      Invoke({"bounds", "--dist", Data("bsc02.pxy"), "--eps", "0.5"});
  EXPECT_EQ(r.code, kDomainError);
  EXPECT_TRUE(Contains(r.err, "0.278072")) << r.err;
}

TEST(BoundsCommandTest, CsvHeaderAndSharpVariant) {
  const auto r = Invoke({"bounds", "--dist", Data("bsc02.pxy"), "--eps", "0.1",
                         "--sharp", "--csv"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out.rfind("key,value\n", 0), 0u);
  EXPECT_NEAR(Row(r.out, "L2"), -2.868892, 1e-6);
  EXPECT_NEAR(Row(r.out, "upper_h"), 0.821928, 1e-6);
}

TEST(BoundsCommandTest, ParseErrors) {
  EXPECT_EQ(Invoke({"bounds", "--dist", Data("missing.pxy")}).code, kParseError);
  EXPECT_EQ(Invoke({"bounds"}).code, kParseError);
  EXPECT_EQ(Invoke({"bounds", "--dist", Data("bsc02.pxy"), "--eps", "x"}).code,
            kParseError);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kParseError);
  const std::string bad = TempPath("privbound_bad.pxy");
  ASSERT_TRUE(WriteFile(bad, "pxy 2 2\n0.5 0.5\n").ok());
  const auto r = Invoke({"bounds", "--dist", bad});
  EXPECT_EQ(r.code, kParseError);
  std::remove(bad.c_str());
}

TEST(BoundsCommandTest, HelpExitsCleanly) {
  EXPECT_EQ(Invoke({"--help"}).code, kOk);
}

TEST(ConstructCommandTest, EfrlLeakage) {
  const std::string path = TempPath("privbound_efrl.puxy");
  const auto r = Invoke({"construct", "--dist", Data("bsc02.pxy"), "--method",
                         "efrl", "--eps", "0.1", "--out", path});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NEAR(Row(r.out, "leakage"), 0.1, 1e-6);
  auto text = ReadFile(path);
  ASSERT_TRUE(text.ok());
  auto mechanism = ParseMechanism(*text);
  ASSERT_TRUE(mechanism.ok());
  const auto report = *privbound::Report(*FamilyBsc(0.2), *mechanism);
  EXPECT_NEAR(report.leakage, 0.1, 1e-9);
  std::remove(path.c_str());
}

TEST(ConstructCommandTest, FrlIgnoresBudgetWithWarning) {
  const auto r = Invoke({"construct", "--dist", Data("bsc02.pxy"), "--method",
                         "frl", "--eps", "0.1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(Contains(r.err, "warning")) << r.err;
  EXPECT_NEAR(Row(r.out, "leakage"), 0, 1e-6);
}

TEST(ConstructCommandTest, EsfrlReportsConditionalBound) {
  const auto r = Invoke({"construct", "--dist", Data("bsc02.pxy"), "--method",
                         "esfrl", "--eps", "0.1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(TextRow(r.out, "cond_leakage_within_bound"), "yes");
  EXPECT_LE(Row(r.out, "cond_leakage"), Row(r.out, "cond_leakage_bound"));
}

TEST(ConstructCommandTest, RejectsUnknownMethodAndBadBudget) {
  EXPECT_EQ(Invoke({"construct", "--dist", Data("bsc02.pxy"), "--method", "x"})
                .code,
            kParseError);
  EXPECT_EQ(Invoke({"construct", "--dist", Data("bsc02.pxy"), "--method",
                    "efrl", "--eps", "0.3"})
                .code,
            kDomainError);
}

TEST(ConstructCommandTest, UnwritableOutput) {
  EXPECT_EQ(Invoke({"construct", "--dist", Data("bsc02.pxy"), "--out",
                    "/nonexistent-dir/x.puxy"})
                .code,
            kParseError);
}

TEST(OracleCommandTest, Examples) {
  const auto observed = Invoke({"oracle", "--dist", Data("function4.pxy"),
                                "--eps", "0.05", "--scenario", "observed"});
  ASSERT_EQ(observed.code, kOk) << observed.err;
  EXPECT_NEAR(Row(observed.out, "value"), 1.05, 1e-3);
  EXPECT_EQ(TextRow(observed.out, "feasible"), "yes");

  const auto hidden = Invoke({"oracle", "--dist", Data("bsc02.pxy"), "--eps",
                              "0", "--scenario", "hidden"});
  ASSERT_EQ(hidden.code, kOk) << hidden.err;
  EXPECT_NEAR(Row(hidden.out, "value"), 0, 1e-6);
}

TEST(OracleCommandTest, DeterministicAcrossRuns) {
  const std::vector<std::string> args = {"oracle", "--dist", Data("bsc02.pxy"),
                                         "--eps", "0.1", "--seed", "7",
                                         "--restarts", "2"};
  const auto a = Invoke(args);
  const auto b = Invoke(args);
  ASSERT_EQ(a.code, kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(OracleCommandTest, RejectsTinyCardinality) {
  EXPECT_EQ(Invoke({"oracle", "--dist", Data("bsc02.pxy"), "--card", "1"}).code,
            kParseError);
}

TEST(SweepCommandTest, BscCurves) {
  const auto r = Invoke({"sweep", "--family", "bsc", "--steps", "49"});
  ASSERT_EQ(r.code, kOk) << r.err;
  std::vector<std::string> lines =
      absl::StrSplit(r.out, '\n', absl::SkipEmpty());
  ASSERT_EQ(lines.size(), 50u);
  EXPECT_EQ(lines[0], "theta,h_y_given_x,u1,u2,l1,l2,l3,upper_h,g0,oracle_h");
  for (size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string> cells = absl::StrSplit(lines[i], ',');
    ASSERT_EQ(cells.size(), 10u) << lines[i];
    double theta, u1, u2;
    ASSERT_TRUE(absl::SimpleAtod(cells[0], &theta));
    ASSERT_TRUE(absl::SimpleAtod(cells[2], &u1));
    ASSERT_TRUE(absl::SimpleAtod(cells[3], &u2));
    EXPECT_NEAR(u2, 2 * theta, 1e-6);
    EXPECT_LT(u2, u1);
    EXPECT_EQ(cells[9], "");
  }
  EXPECT_EQ(lines[1].substr(0, 9), "0.010000,");
  EXPECT_EQ(lines.back().substr(0, 9), "0.490000,");
}

TEST(SweepCommandTest, ErasureUpperBoundsCoincide) {
  const auto r = Invoke({"sweep", "--family", "erasure", "--steps", "5"});
  ASSERT_EQ(r.code, kOk) << r.err;
  std::vector<std::string> lines =
      absl::StrSplit(r.out, '\n', absl::SkipEmpty());
  for (size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string> cells = absl::StrSplit(lines[i], ',');
    EXPECT_EQ(cells[2], cells[3]);
    EXPECT_EQ(cells[2], cells[8]);
  }
}

TEST(SweepCommandTest, FileOutputIsByteStable) {
  const std::string a = TempPath("privbound_sweep_a.csv");
  const std::string b = TempPath("privbound_sweep_b.csv");
  ASSERT_EQ(Invoke({"sweep", "--family", "bsc", "--steps", "7", "--eps", "0.05",
                    "--with-oracle", "--out", a})
                .code,
            kOk);
  ASSERT_EQ(Invoke({"sweep", "--family", "bsc", "--steps", "7", "--eps", "0.05",
                    "--with-oracle", "--out", b})
                .code,
            kOk);
  EXPECT_EQ(*ReadFile(a), *ReadFile(b));
  EXPECT_EQ(ReadFile(a)->find('\r'), std::string::npos);
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST(SweepCommandTest, Errors) {
  EXPECT_EQ(Invoke({"sweep", "--family", "bsc", "--steps", "1"}).code,
            kParseError);
  EXPECT_EQ(Invoke({"sweep", "--family", "gauss"}).code, kParseError);
  EXPECT_EQ(Invoke({"sweep", "--family", "bsc", "--out",
                    "/nonexistent-dir/s.csv"})
                .code,
            kParseError);
}

TEST(CheckCommandTest, BscPasses) {
  const auto r = Invoke({"check", "--dist", Data("bsc02.pxy"), "--eps", "0.1"});
  EXPECT_EQ(r.code, kOk) << r.out << r.err;
  EXPECT_TRUE(Contains(r.out, "all checks passed")) << r.out;
  EXPECT_TRUE(Contains(r.out, "saturation chain triggered: no")) << r.out;
}

TEST(CheckCommandTest, DeterministicSecretTriggersChain) {
  const auto r =
      Invoke({"check", "--dist", Data("function4.pxy"), "--eps", "0.05"});
  EXPECT_EQ(r.code, kOk) << r.out << r.err;
  EXPECT_TRUE(Contains(r.out, "saturation chain triggered: yes")) << r.out;
}

TEST(CheckCommandTest, CorruptedMechanismNamesInvariant) {
  const auto good = Invoke({"check", "--dist", Data("bsc02.pxy"),
                            "--debug-mechanism", Data("frl_bsc02.puxy")});
  EXPECT_EQ(good.code, kOk) << good.out << good.err;
  const auto bad = Invoke({"check", "--dist", Data("bsc02.pxy"),
                           "--debug-mechanism", Data("corrupted_frl.puxy")});
  EXPECT_EQ(bad.code, kCheckFailure);
  EXPECT_TRUE(Contains(bad.out, "frl.independence,")) << bad.out;
  EXPECT_TRUE(Contains(bad.out, "FAIL")) << bad.out;
  EXPECT_TRUE(Contains(bad.err, "failed")) << bad.err;
}

TEST(SeedTest, EnvironmentAndFlagPrecedence) {
  const std::vector<std::string> base = {"oracle", "--dist", Data("bsc02.pxy"),
                                         "--eps", "0.1", "--restarts", "2"};
  std::vector<std::string> with_flag = base;
  with_flag.insert(with_flag.end(), {"--seed", "11"});
  const auto env = Invoke(base, "11");
  const auto flag = Invoke(with_flag);
  const auto both = Invoke(with_flag, "3");
  ASSERT_EQ(env.code, kOk);
  EXPECT_EQ(env.out, flag.out);
  EXPECT_EQ(both.out, flag.out);
  EXPECT_EQ(Invoke(base, "abc").code, kParseError);
}

}  // namespace
}  // namespace privbound::cli
