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

// Numerical search for the best utility I(Y;U) under I(X;U) <= epsilon.
// The search returns certified-feasible mechanisms, so its value is a lower
// estimate of the supremum.

#ifndef PRIVBOUND_ORACLE_H_
#define PRIVBOUND_ORACLE_H_

#include <string>

#include "absl/status/statusor.h"
#include "privbound/distribution.h"
#include "privbound/mechanism.h"
#include "privbound/representation.h"

namespace privbound {

struct OracleResult {
  double value = 0;  // I(Y;U) of `mechanism`
  Mechanism mechanism;
  bool feasible = false;  // leakage <= epsilon + 1e-9, checked on return
  double leakage = 0;
  int iterations = 0;  // ascent steps over all starting points
  int restarts_used = 0;
  // Starting point of the winner: efrl, esfrl, frl, g0, saturated,
  // timeshare or random.
  std::string seeded_from;
};

// (nx (ny - 1) + 1) (nx + 1).
int DefaultCardinalityH(const JointDistribution& joint);
// ny + 1.
int DefaultCardinalityG(const JointDistribution& joint);

// Searches kernels P_{U|XY}. Structured constructions are refined at their
// own alphabet size; `cardinality` sizes the random starting kernels.
absl::StatusOr<OracleResult> SearchH(const JointDistribution& joint,
                                     double epsilon, int cardinality,
                                     const SearchConfig& config);

// Searches kernels P_{U|Y}.
absl::StatusOr<OracleResult> SearchG(const JointDistribution& joint,
                                     double epsilon, int cardinality,
                                     const SearchConfig& config);

}  // namespace privbound

#endif  // PRIVBOUND_ORACLE_H_
