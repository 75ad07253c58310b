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

#include "privbound/mechanism.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "privbound/measures.h"

namespace privbound {
namespace {

constexpr double kRowTolerance = 1e-9;
constexpr double kHiddenTolerance = 1e-12;

}  // namespace

std::string_view ScenarioName(Scenario scenario) {
  return scenario == Scenario::kHidden ? "hidden" : "observed";
}

absl::StatusOr<Mechanism> Mechanism::Create(int nu, int nx, int ny,
                                            std::vector<double> kernel,
                                            Scenario scenario) {
  if (nu < 1 || nx < 1 || ny < 1) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "alphabet sizes must be positive, got nu=%d nx=%d ny=%d", nu, nx, ny));
  }
  const size_t rows = static_cast<size_t>(nx) * ny;
  if (kernel.size() != rows * nu) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "kernel has %d entries, expected %d", kernel.size(), rows * nu));
  }
  for (size_t r = 0; r < rows; ++r) {
    const auto begin = kernel.begin() + static_cast<std::ptrdiff_t>(r * nu);
    const auto end = begin + nu;
    for (auto it = begin; it != end; ++it) {
      if (!std::isfinite(*it) || *it < 0) {
        return absl::InvalidArgumentError(absl::StrFormat(
            "row (x=%d, y=%d) has invalid entry %g", r / ny, r % ny, *it));
      }
    }
    const double mass = std::accumulate(begin, end, 0.0);
    if (std::abs(mass - 1.0) > kRowTolerance) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "row (x=%d, y=%d) sums to %.12g", r / ny, r % ny, mass));
    }
    // Rows already normalized to rounding are kept bit-exact.
    if (std::abs(mass - 1.0) > 8 * std::numeric_limits<double>::epsilon()) {
      std::for_each(begin, end, [mass](double& v) { v /= mass; });
    }
  }
  if (scenario == Scenario::kHidden) {
    for (int y = 0; y < ny; ++y) {
      for (int x = 1; x < nx; ++x) {
        for (int u = 0; u < nu; ++u) {
          const double a = kernel[(y)*nu + u];
          const double b = kernel[(x * ny + y) * nu + u];
          if (std::abs(a - b) > kHiddenTolerance) {
            return absl::InvalidArgumentError(absl::StrFormat(
                "hidden mechanism row for y=%d depends on x=%d", y, x));
          }
        }
      }
    }
  }
  return Mechanism(nu, nx, ny, std::move(kernel), scenario);
}

absl::StatusOr<Mechanism> Mechanism::FromHiddenKernel(
    int nu, int nx, int ny, std::span<const double> u_given_y) {
  if (nu < 1 || ny < 1 ||
      u_given_y.size() != static_cast<size_t>(ny) * nu) {
    return absl::InvalidArgumentError("P_{U|Y} table has the wrong size");
  }
  std::vector<double> kernel;
  kernel.reserve(static_cast<size_t>(nx) * ny * nu);
  for (int x = 0; x < nx; ++x) {
    kernel.insert(kernel.end(), u_given_y.begin(), u_given_y.end());
  }
  return Create(nu, nx, ny, std::move(kernel), Scenario::kHidden);
}

Mechanism Mechanism::Constant(int nx, int ny) {
  return Mechanism(1, nx, ny, std::vector<double>(static_cast<size_t>(nx) * ny, 1.0),
                   Scenario::kHidden);
}

std::vector<double> TripleDistribution::MarginalXY() const {
  std::vector<double> out(static_cast<size_t>(nx_) * ny_, 0.0);
  for (size_t r = 0; r < out.size(); ++r) {
    for (int u = 0; u < nu_; ++u) out[r] += q_[r * nu_ + u];
  }
  return out;
}

double TripleDistribution::JointEntropy(unsigned mask) const {
  const int sx = (mask & kX) ? nx_ : 1;
  const int sy = (mask & kY) ? ny_ : 1;
  const int su = (mask & kU) ? nu_ : 1;
  std::vector<double> marginal(static_cast<size_t>(sx) * sy * su, 0.0);
  for (int x = 0; x < nx_; ++x) {
    const int ix = (mask & kX) ? x : 0;
    for (int y = 0; y < ny_; ++y) {
      const int iy = (mask & kY) ? y : 0;
      for (int u = 0; u < nu_; ++u) {
        const int iu = (mask & kU) ? u : 0;
        marginal[(ix * sy + iy) * su + iu] += (*this)(x, y, u);
      }
    }
  }
  return Entropy(marginal);
}

absl::StatusOr<TripleDistribution> Extend(const JointDistribution& joint,
                                          const Mechanism& mechanism) {
  if (joint.nx() != mechanism.nx() || joint.ny() != mechanism.ny()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "size mismatch: distribution is %d x %d, mechanism expects %d x %d",
        joint.nx(), joint.ny(), mechanism.nx(), mechanism.ny()));
  }
  const int nu = mechanism.nu();
  std::vector<double> q(mechanism.kernel().size());
  for (int x = 0; x < joint.nx(); ++x) {
    for (int y = 0; y < joint.ny(); ++y) {
      const double p = joint(x, y);
      const auto row = mechanism.Row(x, y);
      for (int u = 0; u < nu; ++u) q[(x * joint.ny() + y) * nu + u] = p * row[u];
    }
  }
  return TripleDistribution(joint.nx(), joint.ny(), nu, std::move(q));
}

MechanismReport Evaluate(const TripleDistribution& triple) {
  using T = TripleDistribution;
  const double hx = triple.JointEntropy(T::kX);
  const double hy = triple.JointEntropy(T::kY);
  const double hu = triple.JointEntropy(T::kU);
  const double hxu = triple.JointEntropy(T::kX | T::kU);
  const double hyu = triple.JointEntropy(T::kY | T::kU);
  const double hxyu = triple.JointEntropy(T::kX | T::kY | T::kU);
  MechanismReport r;
  r.utility = std::max(hy + hu - hyu, 0.0);
  r.leakage = std::max(hx + hu - hxu, 0.0);
  r.cond_leakage = ConditionalMutualInformation(triple);
  r.residual = std::max(hxyu - hxu, 0.0);
  r.entropy_u = hu;
  r.cardinality = triple.nu();
  return r;
}

absl::StatusOr<MechanismReport> Report(const JointDistribution& joint,
                                       const Mechanism& mechanism) {
  auto triple = Extend(joint, mechanism);
  if (!triple.ok()) return triple.status();
  return Evaluate(*triple);
}

double DecompositionGap(const JointDistribution& joint,
                        const MechanismReport& report) {
  return report.utility - report.leakage -
         ConditionalEntropy(joint, Conditioning::kYGivenX) + report.residual +
         report.cond_leakage;
}

absl::StatusOr<Mechanism> Compress(const JointDistribution& joint,
                                   const Mechanism& mechanism) {
  auto triple = Extend(joint, mechanism);
  if (!triple.ok()) return triple.status();
  const int nx = joint.nx();
  const int ny = joint.ny();
  const int nu = mechanism.nu();
  const size_t rows = static_cast<size_t>(nx) * ny;

  std::vector<double> mass(nu, 0.0);
  for (size_t r = 0; r < rows; ++r) {
    for (int u = 0; u < nu; ++u) mass[u] += triple->probabilities()[r * nu + u];
  }
  // Group symbols by posterior over (x, y); groups in first-occurrence order.
  std::vector<int> group(nu, -1);
  std::vector<int> representative;
  for (int u = 0; u < nu; ++u) {
    if (mass[u] <= 0) continue;
    for (size_t g = 0; g < representative.size() && group[u] < 0; ++g) {
      const int v = representative[g];
      bool same = true;
      for (size_t r = 0; r < rows && same; ++r) {
        const double a = triple->probabilities()[r * nu + u] / mass[u];
        const double b = triple->probabilities()[r * nu + v] / mass[v];
        same = std::abs(a - b) <= 1e-12;
      }
      if (same) group[u] = static_cast<int>(g);
    }
    if (group[u] < 0) {
      group[u] = static_cast<int>(representative.size());
      representative.push_back(u);
    }
  }
  const int out_nu = std::max<int>(1, static_cast<int>(representative.size()));
  std::vector<double> kernel(rows * out_nu, 0.0);
  for (size_t r = 0; r < rows; ++r) {
    double kept = 0;
    for (int u = 0; u < nu; ++u) {
      if (group[u] < 0) continue;
      kernel[r * out_nu + group[u]] += mechanism.kernel()[r * nu + u];
      kept += mechanism.kernel()[r * nu + u];
    }
    if (kept <= 0) {
      // Row only reaches symbols that never occur; the row has zero weight.
      kernel[r * out_nu] = 1.0;
    } else {
      for (int g = 0; g < out_nu; ++g) kernel[r * out_nu + g] /= kept;
    }
  }
  return Mechanism::Create(out_nu, nx, ny, std::move(kernel),
                           mechanism.scenario());
}

}  // namespace privbound
