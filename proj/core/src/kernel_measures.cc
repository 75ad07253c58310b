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

#include "kernel_measures.h"

#include <algorithm>
#include <cmath>
#include <functional>

namespace privbound::internal {
namespace {

double EntropyOf(const std::vector<double>& p) {
  double h = 0;
  for (double v : p) {
    if (v > 0) h -= v * std::log2(v);
  }
  return h;
}

// log2(a / b) clamped so that vanishing cells give a large finite slope.
double LogRatio(double a, double b) {
  constexpr double kFloor = -60;
  if (a <= 0 || b <= 0) return kFloor;
  return std::max(std::log2(a / b), kFloor);
}

}  // namespace

KernelObjective::KernelObjective(const JointDistribution& joint,
                                 Scenario scenario, int nu)
    : joint_(&joint),
      scenario_(scenario),
      nu_(nu),
      rows_(scenario == Scenario::kHidden ? joint.ny()
                                          : joint.nx() * joint.ny()) {}

void KernelObjective::Marginals(std::span<const double> params,
                                std::vector<double>& xu, std::vector<double>& yu,
                                std::vector<double>& u) const {
  const int nx = joint_->nx();
  const int ny = joint_->ny();
  xu.assign(static_cast<size_t>(nx) * nu_, 0.0);
  yu.assign(static_cast<size_t>(ny) * nu_, 0.0);
  u.assign(nu_, 0.0);
  for (int x = 0; x < nx; ++x) {
    for (int y = 0; y < ny; ++y) {
      const double p = (*joint_)(x, y);
      if (p <= 0) continue;
      const int r = scenario_ == Scenario::kHidden ? y : x * ny + y;
      const double* row = &params[static_cast<size_t>(r) * nu_];
      for (int k = 0; k < nu_; ++k) {
        const double q = p * row[k];
        xu[x * nu_ + k] += q;
        yu[y * nu_ + k] += q;
        u[k] += q;
      }
    }
  }
}

KernelValue KernelObjective::Evaluate(std::span<const double> params) const {
  std::vector<double> xu, yu, u;
  Marginals(params, xu, yu, u);
  const double hu = EntropyOf(u);
  KernelValue value;
  value.utility = std::max(
      0.0, EntropyOf(joint_->marginal_y()) + hu - EntropyOf(yu));
  value.leakage = std::max(
      0.0, EntropyOf(joint_->marginal_x()) + hu - EntropyOf(xu));
  return value;
}

void KernelObjective::Gradients(std::span<const double> params,
                                std::vector<double>& utility,
                                std::vector<double>& leakage) const {
  std::vector<double> xu, yu, u;
  Marginals(params, xu, yu, u);
  const int nx = joint_->nx();
  const int ny = joint_->ny();
  utility.assign(params.size(), 0.0);
  leakage.assign(params.size(), 0.0);
  for (int x = 0; x < nx; ++x) {
    for (int y = 0; y < ny; ++y) {
      const double p = (*joint_)(x, y);
      if (p <= 0) continue;
      const int r = scenario_ == Scenario::kHidden ? y : x * ny + y;
      for (int k = 0; k < nu_; ++k) {
        const size_t i = static_cast<size_t>(r) * nu_ + k;
        utility[i] += p * LogRatio(yu[y * nu_ + k], u[k]);
        leakage[i] += p * LogRatio(xu[x * nu_ + k], u[k]);
      }
    }
  }
}

std::vector<double> KernelObjective::OutputMarginal(
    std::span<const double> params) const {
  std::vector<double> xu, yu, u;
  Marginals(params, xu, yu, u);
  return u;
}

std::vector<double> KernelObjective::Expand(
    std::span<const double> params) const {
  if (scenario_ == Scenario::kObserved) {
    return std::vector<double>(params.begin(), params.end());
  }
  const int nx = joint_->nx();
  const int ny = joint_->ny();
  std::vector<double> kernel(static_cast<size_t>(nx) * ny * nu_);
  for (int x = 0; x < nx; ++x) {
    std::copy(params.begin(), params.end(),
              kernel.begin() + static_cast<size_t>(x) * ny * nu_);
  }
  return kernel;
}

std::vector<double> KernelObjective::Parameters(
    const Mechanism& mechanism) const {
  if (scenario_ == Scenario::kObserved) {
    return std::vector<double>(mechanism.kernel().begin(),
                               mechanism.kernel().end());
  }
  const auto first = mechanism.kernel().subspan(
      0, static_cast<size_t>(joint_->ny()) * nu_);
  return std::vector<double>(first.begin(), first.end());
}

void ProjectToSimplex(std::span<double> row) {
  std::vector<double> sorted(row.begin(), row.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0;
  double shift = 0;
  for (size_t i = 0; i < sorted.size(); ++i) {
    cumulative += sorted[i];
    const double candidate = (cumulative - 1) / static_cast<double>(i + 1);
    if (sorted[i] - candidate > 0) shift = candidate;
  }
  double total = 0;
  for (double& v : row) {
    v = std::max(v - shift, 0.0);
    total += v;
  }
  for (double& v : row) v /= total;
}

}  // namespace privbound::internal
