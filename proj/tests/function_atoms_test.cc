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

#include "privbound/function_atoms.h"

#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "privbound/bounds.h"
#include "privbound/distribution.h"
#include "privbound/measures.h"
#include "testing/oracles.h"

namespace privbound {
namespace {

constexpr double kH02 = 0.721928094887362;
constexpr double kPsiBsc02 = 0.321928094887362;

TEST(FunctionAtomSpaceTest, CountsAndConstraints) {
  auto j = *JointDistribution::Create(3, 2, {0.1, 0.2, 0.3, 0.1, 0.2, 0.1});
  auto space = FunctionAtomSpace::Create(j);
  ASSERT_TRUE(space.ok());
  EXPECT_EQ(space->atom_count(), 8);
  EXPECT_EQ(space->constraint_rows(), 1 + 3 * 1);
  EXPECT_LE(space->MaxViolation(space->ProductWeights()), 1e-12);
}

TEST(FunctionAtomSpaceTest, AtomsRangeOverSecretSupport) {
  auto j = *JointDistribution::Create(3, 3, {0.2, 0.1, 0.1, 0, 0, 0, 0.1, 0.2,
                                             0.3});
  auto space = *FunctionAtomSpace::Create(j);
  EXPECT_EQ(space.support(), (std::vector<int>{0, 2}));
  EXPECT_EQ(space.atom_count(), 9);
}

TEST(FunctionAtomSpaceTest, FeasibleWeightsGiveFunctionalRepresentations) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    const auto j = testing::RandomJoint(rng, 2 + trial % 2, 2 + trial / 2 % 2);
    auto space = *FunctionAtomSpace::Create(j);
    const auto w = space.ProductWeights();
    const auto m = *space.MechanismFromWeights(w);
    const auto ref = testing::ReferenceMeasures(testing::BuildTable(j, m));
    EXPECT_LE(ref.leakage, 1e-9);
    EXPECT_LE(ref.residual, 1e-9);
    EXPECT_NEAR(space.ConditionalLeakage(w),
                static_cast<double>(ref.cond_leakage), 1e-9);
  }
}

TEST(FunctionAtomSpaceTest, RejectsTooManyAtoms) {
  std::mt19937_64 rng(1);
  const auto j = testing::RandomJoint(rng, 9, 4);
  EXPECT_TRUE(absl::IsResourceExhausted(FunctionAtomSpace::Create(j).status()));
}

TEST(SfrlSearchTest, DeterministicSecretHasNoExcess) {
  const int f[] = {0, 1, 2, 0, 1};
  const auto j = *FamilyFunction(5, f);
  auto result = SfrlSearch(j, SearchConfig{});
  ASSERT_TRUE(result.ok());
  EXPECT_NEAR(result->psi_estimate, 0, 1e-9);
}

TEST(SfrlSearchTest, Bsc) {
  const auto j = *FamilyBsc(0.2);
  auto result = SfrlSearch(j, SearchConfig{});
  ASSERT_TRUE(result.ok());
  EXPECT_NEAR(result->psi_estimate, kPsiBsc02, 1e-3);
  const auto r = *Report(j, result->mechanism);
  EXPECT_LE(r.leakage, 1e-9);
  EXPECT_LE(r.residual, 1e-9);
}

TEST(SfrlSearchTest, BinaryPayloadMeetsLayeredBound) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const auto j = testing::RandomJoint(rng, 2, 2);
    auto result = SfrlSearch(j, SearchConfig{});
    ASSERT_TRUE(result.ok());
    EXPECT_NEAR(result->psi_estimate, PsiLower(j), 1e-3);
  }
}

TEST(SfrlSearchTest, TwoSidedCertificate) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const auto j = testing::RandomJoint(rng, 2 + trial % 2, 3);
    auto result = SfrlSearch(j, SearchConfig{.restarts = 1});
    ASSERT_TRUE(result.ok());
    const double mi = MutualInformation(j);
    EXPECT_GE(result->psi_estimate, PsiLower(j) - 1e-6);
    EXPECT_LE(result->psi_estimate, std::log2(mi + 1) + 4 + 1e-9);
    const auto r = *Report(j, result->mechanism);
    EXPECT_LE(r.leakage, 1e-9);
    EXPECT_LE(r.residual, 1e-9);
  }
}

TEST(SfrlSearchTest, LargeSpacesFallBackToSimplex) {
  std::mt19937_64 rng(41);
  const auto j = testing::RandomJoint(rng, 4, 4);
  auto result = SfrlSearch(j, SearchConfig{.restarts = 1, .max_iters = 20});
  ASSERT_TRUE(result.ok());
  EXPECT_TRUE(result->used_simplex);
  EXPECT_GE(result->psi_estimate, PsiLower(j) - 1e-6);
}

TEST(SfrlSearchTest, Deterministic) {
  std::mt19937_64 rng(43);
  const auto j = testing::RandomJoint(rng, 3, 3);
  const auto a = *SfrlSearch(j, SearchConfig{.seed = 9});
  const auto b = *SfrlSearch(j, SearchConfig{.seed = 9});
  EXPECT_EQ(a.psi_estimate, b.psi_estimate);
  EXPECT_EQ(a.weights, b.weights);
}

TEST(EsfrlTest, ZeroBudgetMatchesSearch) {
  const auto j = *FamilyBsc(0.2);
  const auto base = *SfrlSearch(j, SearchConfig{});
  const auto mixed = *Esfrl(j, 0, SearchConfig{});
  const auto a = *Report(j, base.mechanism);
  const auto b = *Report(j, mixed.mechanism);
  EXPECT_NEAR(a.utility, b.utility, 1e-9);
  EXPECT_NEAR(a.cond_leakage, b.cond_leakage, 1e-9);
  EXPECT_NEAR(a.entropy_u, b.entropy_u, 1e-9);
}

TEST(EsfrlTest, BscMixtureIdentity) {
  const auto j = *FamilyBsc(0.2);
  const auto result = *Esfrl(j, 0.1, SearchConfig{});
  const auto r = *Report(j, result.mechanism);
  EXPECT_NEAR(r.leakage, 0.1, 1e-9);
  EXPECT_LE(r.residual, 1e-9);
  EXPECT_NEAR(r.cond_leakage, 0.1 * kH02 + 0.9 * kPsiBsc02, 1e-3);
  EXPECT_NEAR(r.cond_leakage, 0.361928094887362, 1e-3);
  EXPECT_NEAR(r.cond_leakage,
              result.alpha * kH02 + (1 - result.alpha) * result.base_cond_leakage,
              1e-9);
}

TEST(EsfrlTest, DeterministicSecret) {
  const int f[] = {0, 1, 0, 1};
  const auto j = *FamilyFunction(4, f);
  const auto r = *Report(j, Esfrl(j, 0.05, SearchConfig{})->mechanism);
  EXPECT_LE(r.cond_leakage, 1e-9);
}

TEST(EsfrlTest, ContractsOnRandomJoints) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const int nx = 2 + trial % 2;
    const int ny = 2 + trial / 2 % 2;
    const auto j = testing::RandomJoint(rng, nx, ny);
    const double mi = MutualInformation(j);
    const double eps = 0.5 * mi;
    const auto result = *Esfrl(j, eps, SearchConfig{.restarts = 1});
    const auto r = *Report(j, result.mechanism);
    const double hxy = ConditionalEntropy(j, Conditioning::kXGivenY);
    EXPECT_NEAR(r.leakage, eps, 1e-9);
    EXPECT_LE(r.residual, 1e-9);
    EXPECT_NEAR(r.cond_leakage,
                result.alpha * hxy + (1 - result.alpha) * result.base_cond_leakage,
                1e-9);
    EXPECT_LE(r.cond_leakage, result.alpha * hxy +
                                  (1 - result.alpha) * (std::log2(mi + 1) + 4) +
                                  1e-9);
  }
}

}  // namespace
}  // namespace privbound
