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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "kernel_measures.h"
#include "privbound/bounds.h"
#include "privbound/function_atoms.h"
#include "privbound/measures.h"
#include "privbound/perfect_privacy.h"

namespace privbound {
namespace {

using internal::KernelObjective;
using internal::KernelValue;

constexpr double kFeasibility = 1e-9;
constexpr double kAscentSlack = 0;
constexpr double kNearBudget = 1e-6;
constexpr int kBisectionSteps = 60;
constexpr int kWindow = 50;

struct Seed {
  std::string label;
  Mechanism mechanism;
};

absl::Status CheckArguments(const JointDistribution& joint, double epsilon,
                            int cardinality, const SearchConfig& config) {
  if (auto s = Validate(config); !s.ok()) return s;
  if (cardinality < 2) {
    return absl::InvalidArgumentError(
        absl::StrFormat("cardinality must be at least 2, got %d", cardinality));
  }
  return CheckLeakageBudget(joint, epsilon);
}

// Mixes every row toward the output marginal, the input-independent channel
// with the same P_U, by the smallest weight that meets `limit`. Leakage is
// convex in the weight and vanishes at 1.
std::vector<double> Repair(const KernelObjective& f, std::vector<double> params,
                           double limit) {
  if (f.Evaluate(params).leakage <= limit) return params;
  const std::vector<double> marginal = f.OutputMarginal(params);
  const int nu = f.nu();
  auto mix = [&](double lambda) {
    std::vector<double> out(params.size());
    for (size_t i = 0; i < params.size(); ++i) {
      out[i] = (1 - lambda) * params[i] + lambda * marginal[i % nu];
    }
    return out;
  };
  double lo = 0;
  double hi = 1;
  for (int i = 0; i < kBisectionSteps; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (f.Evaluate(mix(mid)).leakage <= limit) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return mix(hi);
}

// Restricts `g` to directions that keep every row on the simplex to first
// order: centred over the row support, no decrease of empty entries.
void Tangent(std::span<const double> params, int nu, std::vector<double>& g) {
  for (size_t r = 0; r < params.size(); r += nu) {
    double sum = 0;
    int count = 0;
    for (int k = 0; k < nu; ++k) {
      if (params[r + k] > 1e-15) {
        sum += g[r + k];
        ++count;
      }
    }
    const double mean = count > 0 ? sum / count : 0.0;
    for (int k = 0; k < nu; ++k) {
      g[r + k] -= mean;
      if (params[r + k] <= 1e-15 && g[r + k] < 0) g[r + k] = 0;
    }
  }
}

double Dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct Ascent {
  std::vector<double> params;
  int iterations = 0;
};

Ascent Ascend(const KernelObjective& f, std::vector<double> params,
              double epsilon, const SearchConfig& config) {
  const double limit = epsilon + kAscentSlack;
  const int nu = f.nu();
  Ascent result;
  result.params = Repair(f, std::move(params), limit);
  KernelValue current = f.Evaluate(result.params);
  double step = config.step;
  double window_start = current.utility;
  std::vector<double> gu, gl;
  for (int it = 0; it < config.max_iters && step >= 1e-10; ++it) {
    if (it > 0 && it % kWindow == 0) {
      if (current.utility - window_start < config.tol) break;
      window_start = current.utility;
    }
    ++result.iterations;
    f.Gradients(result.params, gu, gl);
    Tangent(result.params, nu, gu);
    if (current.leakage >= epsilon - kNearBudget) {
      Tangent(result.params, nu, gl);
      const double along = Dot(gu, gl);
      const double norm = Dot(gl, gl);
      if (along > 0 && norm > 0) {
        for (size_t i = 0; i < gu.size(); ++i) gu[i] -= along / norm * gl[i];
      }
    }
    double scale = 0;
    for (double v : gu) scale = std::max(scale, std::abs(v));
    if (scale <= 1e-15) break;

    std::vector<double> candidate(result.params);
    for (size_t i = 0; i < candidate.size(); ++i) {
      candidate[i] += step / scale * gu[i];
    }
    for (size_t r = 0; r < candidate.size(); r += nu) {
      internal::ProjectToSimplex(std::span<double>(candidate).subspan(r, nu));
    }
    candidate = Repair(f, std::move(candidate), limit);
    const KernelValue next = f.Evaluate(candidate);
    if (next.utility > current.utility && next.leakage <= limit) {
      result.params = std::move(candidate);
      current = next;
      step = std::min(1.5 * step, 1.0);
    } else {
      step *= 0.5;
    }
  }
  return result;
}

std::vector<double> RandomKernel(int rows, int nu, uint64_t seed, int index) {
  std::seed_seq sequence{static_cast<uint32_t>(seed),
                         static_cast<uint32_t>(seed >> 32),
                         static_cast<uint32_t>(index)};
  std::mt19937_64 rng(sequence);
  std::exponential_distribution<double> draw(1.0);
  std::vector<double> kernel(static_cast<size_t>(rows) * nu);
  for (int r = 0; r < rows; ++r) {
    double total = 0;
    for (int k = 0; k < nu; ++k) {
      kernel[r * nu + k] = draw(rng);
      total += kernel[r * nu + k];
    }
    for (int k = 0; k < nu; ++k) kernel[r * nu + k] /= total;
  }
  return kernel;
}

// Y revealed with probability `share`, the hidden mechanism `base`
// otherwise. Symbols 0..ny-1 carry Y, the rest carry `base`.
absl::StatusOr<Mechanism> Timeshare(const JointDistribution& joint,
                                    const Mechanism& base, double share) {
  const int ny = joint.ny();
  const int nu = ny + base.nu();
  std::vector<double> table(static_cast<size_t>(ny) * nu, 0.0);
  for (int y = 0; y < ny; ++y) {
    table[y * nu + y] = share;
    const auto row = base.Row(0, y);
    for (int k = 0; k < base.nu(); ++k) {
      table[y * nu + ny + k] = (1 - share) * row[k];
    }
  }
  return Mechanism::FromHiddenKernel(nu, joint.nx(), ny, table);
}

struct Incumbent {
  double value = -1;
  double leakage = 0;
  std::optional<Mechanism> mechanism;
  std::string label;
};

class Search {
 public:
  Search(const JointDistribution& joint, double epsilon, Scenario scenario,
         const SearchConfig& config)
      : joint_(joint), epsilon_(epsilon), scenario_(scenario), config_(config) {}

  absl::Status Refine(const std::string& label,
                      std::vector<double> params, int nu) {
    const KernelObjective f(joint_, scenario_, nu);
    Ascent ascent = Ascend(f, std::move(params), epsilon_, config_);
    iterations_ += ascent.iterations;
    auto mechanism = Mechanism::Create(nu, joint_.nx(), joint_.ny(),
                                       f.Expand(ascent.params), scenario_);
    if (!mechanism.ok()) return mechanism.status();
    return Offer(label, *std::move(mechanism));
  }

  absl::Status RefineSeed(const Seed& seed) {
    const KernelObjective f(joint_, scenario_, seed.mechanism.nu());
    return Refine(seed.label, f.Parameters(seed.mechanism),
                  seed.mechanism.nu());
  }

  absl::Status RefineRandom(int cardinality, int index) {
    const KernelObjective f(joint_, scenario_, cardinality);
    return Refine("random",
                  RandomKernel(f.rows(), cardinality, config_.seed, index),
                  cardinality);
  }

  absl::StatusOr<OracleResult> Finish() {
    if (!best_.mechanism.has_value()) {
      return absl::InternalError("search produced no feasible mechanism");
    }
    return OracleResult{best_.value,         *std::move(best_.mechanism),
                        true,                best_.leakage,
                        iterations_,         config_.restarts,
                        std::move(best_.label)};
  }

 private:
  absl::Status Offer(const std::string& label, Mechanism mechanism) {
    auto report = Report(joint_, mechanism);
    if (!report.ok()) return report.status();
    if (scenario_ == Scenario::kObserved && report->residual > 1e-6) {
      auto improved = Improve(joint_, mechanism);
      if (!improved.ok()) return improved.status();
      mechanism = *std::move(improved);
    }
    auto compressed = Compress(joint_, mechanism);
    if (!compressed.ok()) return compressed.status();
    report = Report(joint_, *compressed);
    if (!report.ok()) return report.status();
    if (report->leakage > epsilon_ + kFeasibility) return absl::OkStatus();
    if (report->utility > best_.value + 1e-12) {
      best_.value = report->utility;
      best_.leakage = report->leakage;
      best_.mechanism = *std::move(compressed);
      best_.label = label;
    }
    return absl::OkStatus();
  }

  const JointDistribution& joint_;
  double epsilon_;
  Scenario scenario_;
  SearchConfig config_;
  Incumbent best_;
  int iterations_ = 0;
};

// Hidden constructions shared by both searches.
absl::StatusOr<std::vector<Seed>> HiddenSeeds(const JointDistribution& joint,
                                              double epsilon) {
  std::vector<Seed> seeds;
  std::optional<Mechanism> base;
  auto g0 = PerfectPrivacyUtility(joint);
  if (g0.ok()) {
    base = g0->mechanism;
    seeds.push_back({"g0", g0->mechanism});
    if (epsilon > 0) {
      auto saturated = SaturateLeakage(joint, g0->mechanism, epsilon);
      if (saturated.ok()) seeds.push_back({"saturated", *std::move(saturated)});
    }
  } else if (!absl::IsResourceExhausted(g0.status())) {
    return g0.status();
  }
  const double mi = MutualInformation(joint);
  if (epsilon > 0 && mi > 1e-12) {
    if (!base.has_value()) base = Mechanism::Constant(joint.nx(), joint.ny());
    auto mixed = Timeshare(joint, *base, epsilon / mi);
    if (!mixed.ok()) return mixed.status();
    seeds.push_back({"timeshare", *std::move(mixed)});
  }
  return seeds;
}

}  // namespace

int DefaultCardinalityH(const JointDistribution& joint) {
  return (joint.nx() * (joint.ny() - 1) + 1) * (joint.nx() + 1);
}

int DefaultCardinalityG(const JointDistribution& joint) {
  return joint.ny() + 1;
}

absl::StatusOr<OracleResult> SearchG(const JointDistribution& joint,
                                     double epsilon, int cardinality,
                                     const SearchConfig& config) {
  if (auto s = CheckArguments(joint, epsilon, cardinality, config); !s.ok()) {
    return s;
  }
  auto seeds = HiddenSeeds(joint, epsilon);
  if (!seeds.ok()) return seeds.status();
  Search search(joint, epsilon, Scenario::kHidden, config);
  for (const Seed& seed : *seeds) {
    if (auto s = search.RefineSeed(seed); !s.ok()) return s;
  }
  for (int r = 0; r < config.restarts; ++r) {
    if (auto s = search.RefineRandom(cardinality, r); !s.ok()) return s;
  }
  return search.Finish();
}

absl::StatusOr<OracleResult> SearchH(const JointDistribution& joint,
                                     double epsilon, int cardinality,
                                     const SearchConfig& config) {
  if (auto s = CheckArguments(joint, epsilon, cardinality, config); !s.ok()) {
    return s;
  }
  std::vector<Seed> seeds;
  auto efrl = Efrl(joint, epsilon);
  if (!efrl.ok()) return efrl.status();
  seeds.push_back({"efrl", *std::move(efrl)});
  auto esfrl = Esfrl(joint, epsilon, config);
  if (esfrl.ok()) {
    seeds.push_back({"esfrl", std::move(esfrl->mechanism)});
  } else if (!absl::IsResourceExhausted(esfrl.status())) {
    return esfrl.status();
  }
  auto frl = Frl(joint);
  if (!frl.ok()) return frl.status();
  seeds.push_back({"frl", *std::move(frl)});
  auto hidden = HiddenSeeds(joint, epsilon);
  if (!hidden.ok()) return hidden.status();
  for (Seed& seed : *hidden) seeds.push_back(std::move(seed));
  auto g = SearchG(joint, epsilon, DefaultCardinalityG(joint), config);
  if (!g.ok()) return g.status();
  seeds.push_back({g->seeded_from, std::move(g->mechanism)});

  Search search(joint, epsilon, Scenario::kObserved, config);
  for (const Seed& seed : seeds) {
    if (auto s = search.RefineSeed(seed); !s.ok()) return s;
  }
  for (int r = 0; r < config.restarts; ++r) {
    if (auto s = search.RefineRandom(cardinality, r); !s.ok()) return s;
  }
  return search.Finish();
}

}  // namespace privbound
