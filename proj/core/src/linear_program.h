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

// Small dense linear programming over standard-form polytopes
// {x >= 0 : A x = b}. Internal to privbound_core.

#ifndef PRIVBOUND_SRC_LINEAR_PROGRAM_H_
#define PRIVBOUND_SRC_LINEAR_PROGRAM_H_

#include <cstddef>
#include <span>
#include <vector>

#include "absl/status/statusor.h"

namespace privbound::internal {

// Row-major equality system A x = b.
struct EqualitySystem {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;
  std::vector<double> b;

  double& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  double at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

struct LpSolution {
  std::vector<double> x;
  double objective = 0;
  int pivots = 0;
};

// Minimizes c.x over {x >= 0 : A x = b} with a two-phase dense tableau
// simplex under Bland's rule. NotFound when infeasible, OutOfRange when
// unbounded.
absl::StatusOr<LpSolution> MinimizeLinear(const EqualitySystem& system,
                                          std::span<const double> cost);

// C(n, k) saturated at SIZE_MAX.
size_t BinomialSaturated(int n, int k);

// Number of rows of `system` that are linearly independent.
int Rank(const EqualitySystem& system);

// All basic feasible solutions of {x >= 0 : A x = b}, deduplicated within
// 1e-9 and listed in the lexicographic order of their first basis. Fails
// with ResourceExhausted when more than `max_bases` column subsets would
// have to be inspected.
absl::StatusOr<std::vector<std::vector<double>>> EnumerateVertices(
    const EqualitySystem& system, size_t max_bases);

}  // namespace privbound::internal

#endif  // PRIVBOUND_SRC_LINEAR_PROGRAM_H_
