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

// Verifies constructive lower bounds <= searched optimum <= analytic upper
// bound on one (joint, epsilon) pair, and reports every comparison with its
// measured gap.

#ifndef PRIVBOUND_SANDWICH_H_
#define PRIVBOUND_SANDWICH_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "privbound/distribution.h"
#include "privbound/representation.h"

namespace privbound {

// Passes when measured <= limit.
struct SandwichItem {
  std::string name;
  double measured = 0;
  double limit = 0;
  bool passed = false;
};

struct SandwichReport {
  double epsilon = 0;
  double best_lower = 0;
  double upper_h = 0;
  double oracle_h = 0;
  double oracle_g = 0;
  double efrl_utility = 0;
  double esfrl_utility = 0;
  double improve_gain = 0;
  // The hidden search reached H(Y|X) + epsilon within 1e-3, so both
  // searches must agree within 2e-3.
  bool chain_triggered = false;
  std::vector<SandwichItem> items;

  bool passed() const;
};

absl::StatusOr<SandwichReport> SandwichCheck(const JointDistribution& joint,
                                             double epsilon,
                                             const SearchConfig& config);

}  // namespace privbound

#endif  // PRIVBOUND_SANDWICH_H_
