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

#include "privbound/bounds.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "privbound/measures.h"
#include "privbound/perfect_privacy.h"

namespace privbound {
namespace {

struct Quantities {
  double hx;
  double hy;
  double hy_given_x;
  double hx_given_y;
  double mi;
};

Quantities Measure(const JointDistribution& joint) {
  Quantities q;
  q.hx = EntropyX(joint);
  q.hy = EntropyY(joint);
  q.hy_given_x = ConditionalEntropy(joint, Conditioning::kYGivenX);
  q.hx_given_y = ConditionalEntropy(joint, Conditioning::kXGivenY);
  q.mi = MutualInformation(joint);
  return q;
}

double Alpha(const Quantities& q, double epsilon) {
  return (epsilon == 0 || q.hx <= 0) ? 0.0 : epsilon / q.hx;
}

double L1Formula(const Quantities& q, double epsilon) {
  return q.hy - q.hx + epsilon;
}

double L2Formula(const Quantities& q, double epsilon, L2Variant variant) {
  const double alpha = Alpha(q, epsilon);
  return q.hy_given_x - alpha * q.hx_given_y + epsilon -
         (1 - alpha) * StrongRepresentationConstant(q.mi, variant);
}

double L3Formula(const Quantities& q, double epsilon, double g0) {
  const double share = epsilon / q.mi;
  return share * q.hy + g0 * (1 - share);
}

double BinaryEntropyOf(double a) {
  const double p[2] = {a, 1 - a};
  return Entropy(p);
}

EntropyFloor FloorFormula(const JointDistribution& joint, const Quantities& q,
                          double epsilon) {
  const double alpha = std::min(Alpha(q, epsilon), 1.0);
  const std::vector<double> per_secret = PerSecretEntropies(joint);
  const double worst = *std::max_element(per_secret.begin(), per_secret.end());
  EntropyFloor floor;
  floor.value = alpha * q.hy_given_x + (1 - alpha) * worst +
                BinaryEntropyOf(alpha) + epsilon;
  floor.weak = q.hy_given_x + BinaryEntropyOf(alpha) + epsilon;
  return floor;
}

}  // namespace

double StrongRepresentationConstant(double mutual_information,
                                    L2Variant variant) {
  if (variant == L2Variant::kStandard) {
    return std::log2(mutual_information + 1) + 4;
  }
  const double c = std::numbers::log2e / std::numbers::e;
  return c + 2 + std::log2(mutual_information + c + 2);
}

absl::Status CheckLeakageBudget(const JointDistribution& joint, double epsilon) {
  if (!(epsilon >= 0)) {
    return absl::OutOfRangeError(
        absl::StrFormat("leakage budget %g is negative", epsilon));
  }
  const double mi = MutualInformation(joint);
  if (epsilon > 0 && !(epsilon < mi)) {
    return absl::OutOfRangeError(absl::StrFormat(
        "leakage budget %g must be below I(X;Y) = %.6f", epsilon, mi));
  }
  return absl::OkStatus();
}

absl::StatusOr<double> LowerL1(const JointDistribution& joint, double epsilon) {
  if (auto s = CheckLeakageBudget(joint, epsilon); !s.ok()) return s;
  return L1Formula(Measure(joint), epsilon);
}

absl::StatusOr<double> LowerL2(const JointDistribution& joint, double epsilon,
                               L2Variant variant) {
  if (auto s = CheckLeakageBudget(joint, epsilon); !s.ok()) return s;
  return L2Formula(Measure(joint), epsilon, variant);
}

absl::StatusOr<double> LowerL3(const JointDistribution& joint, double epsilon,
                               double g0) {
  if (auto s = CheckLeakageBudget(joint, epsilon); !s.ok()) return s;
  const Quantities q = Measure(joint);
  if (q.mi <= 1e-12) {
    return absl::FailedPreconditionError("I(X;Y) = 0; L3 is undefined");
  }
  return L3Formula(q, epsilon, g0);
}

absl::StatusOr<double> UpperH(const JointDistribution& joint, double epsilon) {
  if (!(epsilon >= 0)) {
    return absl::OutOfRangeError(
        absl::StrFormat("leakage budget %g is negative", epsilon));
  }
  return ConditionalEntropy(joint, Conditioning::kYGivenX) + epsilon;
}

double LayeredIntegral(const JointDistribution& joint) {
  double total = 0;
  std::vector<double> levels;
  for (int y = 0; y < joint.ny(); ++y) {
    levels.clear();
    for (int x = 0; x < joint.nx(); ++x) {
      if (joint.marginal_x()[x] <= 0) continue;
      const double v = joint(x, y) / joint.marginal_x()[x];
      if (v > 0) levels.push_back(v);
    }
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    double previous = 0;
    for (double level : levels) {
      // F_y is constant on (previous, level].
      double tail = 0;
      for (int x = 0; x < joint.nx(); ++x) {
        const double px = joint.marginal_x()[x];
        if (px > 0 && joint(x, y) / px >= level) tail += px;
      }
      if (tail > 0) total += (level - previous) * tail * std::log2(tail);
      previous = level;
    }
  }
  return std::min(total, 0.0);
}

double PsiLower(const JointDistribution& joint) {
  return -LayeredIntegral(joint) - MutualInformation(joint);
}

double UpperU1(const JointDistribution& joint) {
  return ConditionalEntropy(joint, Conditioning::kYGivenX);
}

double UpperU2(const JointDistribution& joint) {
  return UpperU1(joint) - PsiLower(joint);
}

absl::StatusOr<EntropyFloor> ComputeEntropyFloor(const JointDistribution& joint,
                                                 double epsilon) {
  if (auto s = CheckLeakageBudget(joint, epsilon); !s.ok()) return s;
  return FloorFormula(joint, Measure(joint), epsilon);
}

absl::StatusOr<BoundReport> ComputeBoundReport(const JointDistribution& joint,
                                               double epsilon,
                                               const BoundOptions& options) {
  if (!(epsilon >= 0)) {
    return absl::OutOfRangeError(
        absl::StrFormat("leakage budget %g is negative", epsilon));
  }
  const Quantities q = Measure(joint);
  BoundReport r;
  r.outside_validity = epsilon > 0 && !(epsilon < q.mi);
  if (r.outside_validity && !options.allow_outside_validity) {
    return absl::OutOfRangeError(absl::StrFormat(
        "leakage budget %g must be below I(X;Y) = %.6f", epsilon, q.mi));
  }
  r.epsilon = epsilon;
  r.alpha = Alpha(q, epsilon);
  r.mutual_information = q.mi;
  r.h_y_given_x = q.hy_given_x;
  r.h_x_given_y = q.hx_given_y;
  r.l1 = L1Formula(q, epsilon);
  r.l2_standard = L2Formula(q, epsilon, L2Variant::kStandard);
  r.l2_sharp = L2Formula(q, epsilon, L2Variant::kSharp);
  r.l2 = options.variant == L2Variant::kStandard ? r.l2_standard : r.l2_sharp;
  if (options.with_g0) {
    auto g0 = PerfectPrivacyUtility(joint);
    if (!g0.ok()) return g0.status();
    r.g0 = g0->value;
    if (q.mi > 1e-12) r.l3 = L3Formula(q, epsilon, g0->value);
  }
  r.best_lower = std::max({0.0, r.l1, r.l2, r.l3.value_or(0.0)});
  r.upper_h = q.hy_given_x + epsilon;
  r.best_upper = r.upper_h;
  if (epsilon == 0) {
    r.layered_integral = LayeredIntegral(joint);
    r.psi_lower = -*r.layered_integral - q.mi;
    r.u1 = q.hy_given_x;
    r.u2 = q.hy_given_x - *r.psi_lower;
    r.best_upper = std::min(r.upper_h, *r.u2);
  }
  r.entropy_floor = FloorFormula(joint, q, epsilon);
  r.utility_exceeds_budget = q.hy - q.hx > 0;
  if (!r.outside_validity && r.best_lower > r.upper_h + 1e-9) {
    return absl::InternalError(absl::StrFormat(
        "lower bound %.12g exceeds upper bound %.12g", r.best_lower, r.upper_h));
  }
  return r;
}

}  // namespace privbound
