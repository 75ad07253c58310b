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

// Closed-form bounds on the best utility I(Y;U) under a leakage budget
// I(X;U) <= epsilon, for the observed-secret scenario (h_epsilon) and the
// hidden-secret scenario (g_epsilon). All values are in bits and may be
// negative; only BoundReport::best_lower is clamped at zero.

#ifndef PRIVBOUND_BOUNDS_H_
#define PRIVBOUND_BOUNDS_H_

#include <optional>

#include "absl/status/statusor.h"
#include "privbound/distribution.h"

namespace privbound {

enum class L2Variant { kStandard, kSharp };

// Additive constant of the strong functional representation guarantee:
//   standard: log2(I + 1) + 4
//   sharp:    log2(e)/e + 2 + log2(I + log2(e)/e + 2)
double StrongRepresentationConstant(double mutual_information, L2Variant variant);

// Budgets must satisfy 0 <= epsilon < I(X;Y); epsilon = 0 is always
// accepted. Violations return OutOfRange.
absl::Status CheckLeakageBudget(const JointDistribution& joint, double epsilon);

// H(Y) - H(X) + epsilon.
absl::StatusOr<double> LowerL1(const JointDistribution& joint, double epsilon);

// H(Y|X) - alpha H(X|Y) + epsilon - (1 - alpha) C with alpha = epsilon / H(X).
absl::StatusOr<double> LowerL2(const JointDistribution& joint, double epsilon,
                               L2Variant variant = L2Variant::kStandard);

// epsilon H(Y) / I(X;Y) + g0 (1 - epsilon / I(X;Y)). Fails with
// FailedPrecondition when I(X;Y) <= 1e-12.
absl::StatusOr<double> LowerL3(const JointDistribution& joint, double epsilon,
                               double g0);

// H(Y|X) + epsilon. Requires epsilon >= 0.
absl::StatusOr<double> UpperH(const JointDistribution& joint, double epsilon);

// T = sum_y int_0^1 F_y(t) log2 F_y(t) dt with F_y(t) = P_X{P_{Y|X}(y|X) >= t},
// evaluated exactly on the breakpoints of the step functions F_y. T <= 0.
double LayeredIntegral(const JointDistribution& joint);

// -T - I(X;Y); a lower bound on the excess functional information. May be
// negative.
double PsiLower(const JointDistribution& joint);

// H(Y|X).
double UpperU1(const JointDistribution& joint);
// H(Y|X) + T + I(X;Y); exact for binary Y.
double UpperU2(const JointDistribution& joint);

struct EntropyFloor {
  // alpha H(Y|X) + (1 - alpha) max_x H(Y|X=x) + h(alpha) + epsilon.
  double value = 0;
  // H(Y|X) + h(alpha) + epsilon.
  double weak = 0;
};
absl::StatusOr<EntropyFloor> ComputeEntropyFloor(const JointDistribution& joint,
                                                 double epsilon);

struct BoundOptions {
  L2Variant variant = L2Variant::kStandard;
  // Solve the perfect-privacy program and report L3.
  bool with_g0 = false;
  // Evaluate the formulas even when epsilon >= I(X;Y) > 0 and set
  // outside_validity instead of failing.
  bool allow_outside_validity = false;
};

struct BoundReport {
  double epsilon = 0;
  double alpha = 0;
  double mutual_information = 0;
  double h_y_given_x = 0;
  double h_x_given_y = 0;
  double l1 = 0;
  double l2 = 0;  // the selected variant
  double l2_standard = 0;
  double l2_sharp = 0;
  std::optional<double> l3;
  std::optional<double> g0;
  double best_lower = 0;  // max(0, l1, l2, l3)
  double upper_h = 0;
  double best_upper = 0;  // min(upper_h, u2) at epsilon = 0, else upper_h
  // Populated only at epsilon = 0.
  std::optional<double> u1;
  std::optional<double> u2;
  std::optional<double> psi_lower;
  std::optional<double> layered_integral;
  EntropyFloor entropy_floor;
  // H(Y) - H(X) > 0, which guarantees an observed-secret utility strictly
  // above epsilon.
  bool utility_exceeds_budget = false;
  bool outside_validity = false;
};

absl::StatusOr<BoundReport> ComputeBoundReport(const JointDistribution& joint,
                                               double epsilon,
                                               const BoundOptions& options = {});

}  // namespace privbound

#endif  // PRIVBOUND_BOUNDS_H_
