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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "privbound/bounds.h"
#include "privbound/distribution.h"
#include "privbound/function_atoms.h"
#include "privbound/measures.h"
#include "privbound/oracle.h"
#include "privbound/perfect_privacy.h"
#include "privbound/representation.h"

namespace privbound {
namespace {

JointDistribution Random(int nx, int ny, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> draw(1.0);
  std::vector<double> p(static_cast<size_t>(nx) * ny);
  double total = 0;
  for (double& v : p) total += (v = draw(rng));
  for (double& v : p) v /= total;
  return *JointDistribution::Create(nx, ny, std::move(p));
}

void BM_Frl(benchmark::State& state) {
  const auto j = Random(state.range(0), state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(Frl(j));
}
BENCHMARK(BM_Frl)->Arg(2)->Arg(4)->Arg(8);

void BM_LayeredIntegral(benchmark::State& state) {
  const auto j = Random(state.range(0), state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(LayeredIntegral(j));
}
BENCHMARK(BM_LayeredIntegral)->Arg(2)->Arg(8)->Arg(32);

void BM_SfrlSearch(benchmark::State& state) {
  const auto j = Random(state.range(0), state.range(1), 3);
  SearchConfig config;
  config.restarts = 1;
  for (auto _ : state) benchmark::DoNotOptimize(SfrlSearch(j, config));
}
BENCHMARK(BM_SfrlSearch)
    ->Args({2, 2})
    ->Args({3, 3})
    ->Args({4, 4})
    ->Unit(benchmark::kMillisecond);

void BM_PerfectPrivacy(benchmark::State& state) {
  const auto j = Random(2, state.range(0), 4);
  for (auto _ : state) benchmark::DoNotOptimize(PerfectPrivacyUtility(j));
}
BENCHMARK(BM_PerfectPrivacy)->Arg(3)->Arg(5)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_SearchH(benchmark::State& state) {
  const auto j = Random(state.range(0), state.range(0), 5);
  const double eps = 0.5 * MutualInformation(j);
  SearchConfig config;
  config.restarts = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(SearchH(j, eps, DefaultCardinalityH(j), config));
  }
}
BENCHMARK(BM_SearchH)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace privbound

BENCHMARK_MAIN();
