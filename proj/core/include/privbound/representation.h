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

#ifndef PRIVBOUND_REPRESENTATION_H_
#define PRIVBOUND_REPRESENTATION_H_

#include <cstdint>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "privbound/distribution.h"
#include "privbound/mechanism.h"

namespace privbound {

// Knobs shared by the randomized searches (function-atom descent and the
// utility oracle).
struct SearchConfig {
  int restarts = 4;
  int max_iters = 200;
  double step = 0.1;
  uint64_t seed = 0;
  double tol = 1e-10;  // bits
};

absl::Status Validate(const SearchConfig& config);

// Builds U independent of X with Y a function of (X, U) by refining the
// per-secret interval partitions of [0, 1) whose cell lengths are
// P_{Y|X}(.|x) in payload order. Cells with identical label vectors are
// merged; labels follow first occurrence along [0, 1). The result satisfies
// |U| <= nx (ny - 1) + 1 and H(U) <= sum_x H(Y|X = x).
//
// Rows for (x, y) of probability zero are set to the constant output 0.
absl::StatusOr<Mechanism> Frl(const JointDistribution& joint);

// Appends W to `base`, where W = X with probability `alpha` and a fresh
// constant otherwise. The output symbol (u, w) is stored at
// u * (nx + 1) + w, with w = nx for the constant. `base` must be
// independent of X (leakage <= 1e-9); the output then leaks alpha * H(X).
absl::StatusOr<Mechanism> MixWithSecret(const JointDistribution& joint,
                                        const Mechanism& base, double alpha);

// FRL output mixed with the secret at alpha = epsilon / H(X), giving
// leakage exactly epsilon. Requires 0 <= epsilon < I(X;Y).
absl::StatusOr<Mechanism> Efrl(const JointDistribution& joint, double epsilon);

// epsilon / H(X), guarded for H(X) = 0.
absl::StatusOr<double> LeakageMixingWeight(const JointDistribution& joint,
                                           double epsilon);

// Returns (U, U') where U' is the interval construction applied with the
// compound secret (X, U). Leakage is unchanged, H(Y|X, U, U') = 0 and the
// utility strictly grows whenever H(Y|X,U) > 0. Mechanisms whose residual
// is already <= 1e-6 are returned as is.
absl::StatusOr<Mechanism> Improve(const JointDistribution& joint,
                                  const Mechanism& mechanism);

// Raises the leakage of a hidden mechanism with H(Y|X,U) = 0 to exactly
// `epsilon` by appending W = Y with probability
// (epsilon - I(X;U)) / I(X;Y|U), a constant otherwise. The resulting
// utility is epsilon + H(Y|X). Symbol (u, w) is stored at u * (ny + 1) + w.
absl::StatusOr<Mechanism> SaturateLeakage(const JointDistribution& joint,
                                          const Mechanism& mechanism,
                                          double epsilon);

}  // namespace privbound

#endif  // PRIVBOUND_REPRESENTATION_H_
