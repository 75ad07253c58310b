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

#include "privbound/oracle.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "privbound/bounds.h"
#include "privbound/distribution.h"
#include "privbound/measures.h"
#include "privbound/representation.h"
#include "privbound/sandwich.h"
#include "testing/oracles.h"

namespace privbound {
namespace {

constexpr double kH03 = 0.881290899230693;

JointDistribution Function4() {
  const int f[] = {0, 1, 0, 1};
  return *FamilyFunction(4, f);
}

SearchConfig Quick() { return SearchConfig{.restarts = 2, .max_iters = 100}; }

void ExpectConsistent(const JointDistribution& j, double eps,
                      const OracleResult& result) {
  const auto r = *Report(j, result.mechanism);
  EXPECT_NEAR(result.value, r.utility, 1e-9);
  EXPECT_NEAR(result.leakage, r.leakage, 1e-9);
  EXPECT_TRUE(result.feasible);
  EXPECT_LE(r.leakage, eps + 1e-9);
  EXPECT_LE(result.value, *UpperH(j, eps) + 1e-6);
}

TEST(CardinalityTest, Defaults) {
  EXPECT_EQ(DefaultCardinalityH(*FamilyBsc(0.2)), 9);
  EXPECT_EQ(DefaultCardinalityH(*FamilyErasure(0.3)), 15);
  EXPECT_EQ(DefaultCardinalityG(*FamilyErasure(0.3)), 4);
}

TEST(SearchHTest, DeterministicSecretSaturates) {
  const auto j = Function4();
  const auto result = *SearchH(j, 0.05, 8, SearchConfig{});
  EXPECT_NEAR(result.value, 1.05, 1e-3);
  ExpectConsistent(j, 0.05, result);
}

TEST(SearchHTest, ErasureAtZeroBudget) {
  const auto j = *FamilyErasure(0.3);
  const auto result = *SearchH(j, 0, 4, SearchConfig{});
  EXPECT_NEAR(result.value, kH03, 1e-3);
  ExpectConsistent(j, 0, result);
}

TEST(SearchHTest, BinaryPayloadAtZeroBudgetMeetsUpperBound) {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 10; ++trial) {
    const auto j = testing::RandomJoint(rng, 2 + trial % 2, 2);
    const auto result = *SearchH(j, 0, DefaultCardinalityH(j), Quick());
    EXPECT_NEAR(result.value, UpperU2(j), 1e-3);
    ExpectConsistent(j, 0, result);
  }
}

TEST(SearchHTest, DominatesConstructions) {
  const auto j = *FamilyBsc(0.2);
  const auto result = *SearchH(j, 0.1, DefaultCardinalityH(j), SearchConfig{});
  const auto efrl = *Report(j, *Efrl(j, 0.1));
  EXPECT_GE(result.value, efrl.utility - 1e-9);
  EXPECT_GE(result.value, 0.1 - 1e-9);
  EXPECT_LE(result.value, 0.821928094887362 + 1e-6);
  ExpectConsistent(j, 0.1, result);
}

TEST(SearchHTest, Deterministic) {
  std::mt19937_64 rng(83);
  const auto j = testing::RandomJoint(rng, 3, 3);
  const double eps = 0.3 * MutualInformation(j);
  SearchConfig config = Quick();
  config.seed = 5;
  const auto a = *SearchH(j, eps, 6, config);
  const auto b = *SearchH(j, eps, 6, config);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.leakage, b.leakage);
  EXPECT_EQ(a.iterations, b.iterations);
  EXPECT_EQ(a.seeded_from, b.seeded_from);
  EXPECT_TRUE(std::equal(a.mechanism.kernel().begin(), a.mechanism.kernel().end(),
                         b.mechanism.kernel().begin(),
                         b.mechanism.kernel().end()));
}

TEST(SearchHTest, MonotoneInBudget) {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 4; ++trial) {
    const auto j = testing::RandomJoint(rng, 2, 3);
    const double mi = MutualInformation(j);
    double previous = -1;
    for (double share : {0.0, 0.25, 0.5, 0.75}) {
      const auto r = *SearchH(j, share * mi, 6, Quick());
      EXPECT_GE(r.value, previous - 1e-3);
      previous = r.value;
    }
  }
}

TEST(SearchHTest, RejectsBadArguments) {
  const auto j = *FamilyBsc(0.2);
  EXPECT_TRUE(absl::IsOutOfRange(SearchH(j, 0.5, 4, Quick()).status()));
  EXPECT_TRUE(absl::IsInvalidArgument(SearchH(j, 0.1, 1, Quick()).status()));
  SearchConfig bad = Quick();
  bad.restarts = -1;
  EXPECT_FALSE(SearchH(j, 0.1, 4, bad).ok());
}

TEST(SearchGTest, Examples) {
  const auto f = Function4();
  const auto g = *SearchG(f, 0.05, DefaultCardinalityG(f), SearchConfig{});
  EXPECT_NEAR(g.value, 1.05, 1e-3);
  EXPECT_EQ(g.mechanism.scenario(), Scenario::kHidden);
  ExpectConsistent(f, 0.05, g);

  const auto bsc = *FamilyBsc(0.2);
  const auto zero = *SearchG(bsc, 0, DefaultCardinalityG(bsc), SearchConfig{});
  EXPECT_NEAR(zero.value, 0, 1e-6);
  ExpectConsistent(bsc, 0, zero);
}

TEST(SearchGTest, NeverAboveObservedSearch) {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 8; ++trial) {
    const auto j = testing::RandomJoint(rng, 2, 2 + trial % 2);
    const double eps = 0.5 * MutualInformation(j);
    const auto h = *SearchH(j, eps, DefaultCardinalityH(j), Quick());
    const auto g = *SearchG(j, eps, DefaultCardinalityG(j), Quick());
    EXPECT_LE(g.value, h.value + 1e-6);
    ExpectConsistent(j, eps, g);
    for (int y = 0; y < j.ny(); ++y) {
      for (int x = 1; x < j.nx(); ++x) {
        for (int u = 0; u < g.mechanism.nu(); ++u) {
          EXPECT_EQ(g.mechanism(x, y, u), g.mechanism(0, y, u));
        }
      }
    }
  }
}

TEST(SandwichTest, DeterministicSecretTriggersChain) {
  const auto report = *SandwichCheck(Function4(), 0.05, SearchConfig{});
  EXPECT_TRUE(report.passed());
  EXPECT_TRUE(report.chain_triggered);
  for (const auto& item : report.items) EXPECT_TRUE(item.passed) << item.name;
}

TEST(SandwichTest, Bsc) {
  const auto report = *SandwichCheck(*FamilyBsc(0.2), 0.1, SearchConfig{});
  EXPECT_TRUE(report.passed());
  EXPECT_LE(report.best_lower - 1e-3, report.oracle_h);
  EXPECT_LE(report.oracle_h, 0.821928094887362 + 1e-6);
}

TEST(SandwichTest, ErasureAtZeroBudget) {
  const auto report = *SandwichCheck(*FamilyErasure(0.3), 0, SearchConfig{});
  EXPECT_TRUE(report.passed());
  EXPECT_NEAR(report.oracle_h, kH03, 1e-3);
  EXPECT_NEAR(report.oracle_g, kH03, 1e-3);
}

TEST(SandwichTest, ReportsFailuresWithGaps) {
  SandwichItem item{"x", 0.5, 1e-3, false};
  SandwichReport report;
  report.items.push_back(item);
  EXPECT_FALSE(report.passed());
  report.items[0].passed = true;
  EXPECT_TRUE(report.passed());
}

}  // namespace
}  // namespace privbound
