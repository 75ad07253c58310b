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

// Utility and leakage of raw conditional kernels, with gradients, for the
// ascent loops of the oracle. Internal to privbound_core.

#ifndef PRIVBOUND_SRC_KERNEL_MEASURES_H_
#define PRIVBOUND_SRC_KERNEL_MEASURES_H_

#include <span>
#include <vector>

#include "privbound/distribution.h"
#include "privbound/mechanism.h"

namespace privbound::internal {

struct KernelValue {
  double utility = 0;  // I(Y;U)
  double leakage = 0;  // I(X;U)
};

// A kernel parametrized by free rows of length nu. Observed kernels have one
// row per (x, y) pair (index x * ny + y); hidden kernels one row per y.
class KernelObjective {
 public:
  KernelObjective(const JointDistribution& joint, Scenario scenario, int nu);

  int nu() const { return nu_; }
  int rows() const { return rows_; }
  Scenario scenario() const { return scenario_; }

  KernelValue Evaluate(std::span<const double> params) const;

  // d utility / d params and d leakage / d params, in bits.
  void Gradients(std::span<const double> params, std::vector<double>& utility,
                 std::vector<double>& leakage) const;

  // Output law P_U induced by `params`.
  std::vector<double> OutputMarginal(std::span<const double> params) const;

  // Full nx * ny row kernel.
  std::vector<double> Expand(std::span<const double> params) const;

  // Free rows of `mechanism`, which must have this objective's scenario
  // (or be hidden when the objective is observed) and alphabet.
  std::vector<double> Parameters(const Mechanism& mechanism) const;

 private:
  // Fills q(x,u), q(y,u) and q(u).
  void Marginals(std::span<const double> params, std::vector<double>& xu,
                 std::vector<double>& yu, std::vector<double>& u) const;

  const JointDistribution* joint_;
  Scenario scenario_;
  int nu_;
  int rows_;
};

// Euclidean projection of `row` onto the probability simplex.
void ProjectToSimplex(std::span<double> row);

}  // namespace privbound::internal

#endif  // PRIVBOUND_SRC_KERNEL_MEASURES_H_
