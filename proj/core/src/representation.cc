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

#include "privbound/representation.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "privbound/measures.h"

namespace privbound {
namespace {

constexpr double kBreakpointMerge = 1e-12;
constexpr double kIndependenceTolerance = 1e-9;
constexpr double kImproveThreshold = 1e-6;

}  // namespace

absl::Status Validate(const SearchConfig& config) {
  if (config.restarts < 1) {
    return absl::InvalidArgumentError("restarts must be at least 1");
  }
  if (config.max_iters < 1) {
    return absl::InvalidArgumentError("max_iters must be at least 1");
  }
  if (!(config.step > 0)) {
    return absl::InvalidArgumentError("step must be positive");
  }
  if (!(config.tol > 0)) {
    return absl::InvalidArgumentError("tol must be positive");
  }
  return absl::OkStatus();
}

absl::StatusOr<Mechanism> Frl(const JointDistribution& joint) {
  const int nx = joint.nx();
  const int ny = joint.ny();

  std::vector<int> support;
  std::vector<std::vector<double>> cumulative(nx);
  std::vector<double> breakpoints;
  for (int x = 0; x < nx; ++x) {
    if (joint.marginal_x()[x] <= 0) continue;
    support.push_back(x);
    const std::vector<double> cond = joint.ConditionalYGivenX(x);
    cumulative[x].resize(ny);
    double c = 0;
    for (int y = 0; y < ny; ++y) {
      c += cond[y];
      cumulative[x][y] = c;
      if (y < ny - 1 && c > kBreakpointMerge && c < 1 - kBreakpointMerge) {
        breakpoints.push_back(c);
      }
    }
    cumulative[x][ny - 1] = 1.0;
  }
  std::sort(breakpoints.begin(), breakpoints.end());
  std::vector<double> edges = {0.0};
  for (double b : breakpoints) {
    if (b - edges.back() > kBreakpointMerge) edges.push_back(b);
  }
  if (1.0 - edges.back() <= kBreakpointMerge) edges.pop_back();
  edges.push_back(1.0);

  // Label each cell by the payload it selects under every secret.
  std::map<std::vector<int>, int> label_ids;
  std::vector<std::vector<int>> labels;
  std::vector<double> mass;
  for (size_t c = 0; c + 1 < edges.size(); ++c) {
    const double mid = 0.5 * (edges[c] + edges[c + 1]);
    std::vector<int> label(nx, 0);
    for (int x : support) {
      int y = 0;
      while (y < ny - 1 && !(mid < cumulative[x][y])) ++y;
      label[x] = y;
    }
    auto [it, inserted] = label_ids.emplace(label, static_cast<int>(labels.size()));
    if (inserted) {
      labels.push_back(label);
      mass.push_back(0.0);
    }
    mass[it->second] += edges[c + 1] - edges[c];
  }

  const int nu = static_cast<int>(labels.size());
  std::vector<double> kernel(static_cast<size_t>(nx) * ny * nu, 0.0);
  for (int x = 0; x < nx; ++x) {
    for (int y = 0; y < ny; ++y) {
      double* row = &kernel[(static_cast<size_t>(x) * ny + y) * nu];
      double total = 0;
      if (joint(x, y) > 0) {
        for (int u = 0; u < nu; ++u) {
          if (labels[u][x] == y) {
            row[u] = mass[u];
            total += mass[u];
          }
        }
      }
      if (total > 0) {
        for (int u = 0; u < nu; ++u) row[u] /= total;
      } else {
        std::fill(row, row + nu, 0.0);
        row[0] = 1.0;
      }
    }
  }
  return Mechanism::Create(nu, nx, ny, std::move(kernel), Scenario::kObserved);
}

absl::StatusOr<Mechanism> MixWithSecret(const JointDistribution& joint,
                                        const Mechanism& base, double alpha) {
  if (!(alpha >= 0 && alpha <= 1)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("mixing weight %g outside [0, 1]", alpha));
  }
  auto report = Report(joint, base);
  if (!report.ok()) return report.status();
  if (report->leakage > kIndependenceTolerance) {
    return absl::FailedPreconditionError(absl::StrFormat(
        "base mechanism leaks %g bits; expected independence", report->leakage));
  }
  const int nx = joint.nx();
  const int ny = joint.ny();
  const int nu = base.nu();
  const int width = nx + 1;
  const int out_nu = nu * width;
  std::vector<double> kernel(static_cast<size_t>(nx) * ny * out_nu, 0.0);
  for (int x = 0; x < nx; ++x) {
    for (int y = 0; y < ny; ++y) {
      const auto row = base.Row(x, y);
      double* out = &kernel[(static_cast<size_t>(x) * ny + y) * out_nu];
      for (int u = 0; u < nu; ++u) {
        out[u * width + x] = alpha * row[u];
        out[u * width + nx] = (1 - alpha) * row[u];
      }
    }
  }
  return Mechanism::Create(out_nu, nx, ny, std::move(kernel), Scenario::kObserved);
}

absl::StatusOr<double> LeakageMixingWeight(const JointDistribution& joint,
                                           double epsilon) {
  if (!(epsilon >= 0)) {
    return absl::OutOfRangeError(
        absl::StrFormat("leakage budget %g is negative", epsilon));
  }
  const double mi = MutualInformation(joint);
  if (epsilon > 0 && !(epsilon < mi)) {
    return absl::OutOfRangeError(absl::StrFormat(
        "leakage budget %g must be below I(X;Y) = %.6f", epsilon, mi));
  }
  if (epsilon == 0) return 0.0;
  const double hx = EntropyX(joint);
  if (hx <= 1e-12) {
    return absl::FailedPreconditionError("H(X) = 0; mixing weight undefined");
  }
  return epsilon / hx;
}

absl::StatusOr<Mechanism> Efrl(const JointDistribution& joint, double epsilon) {
  auto alpha = LeakageMixingWeight(joint, epsilon);
  if (!alpha.ok()) return alpha.status();
  auto base = Frl(joint);
  if (!base.ok()) return base.status();
  return MixWithSecret(joint, *base, *alpha);
}

absl::StatusOr<Mechanism> Improve(const JointDistribution& joint,
                                  const Mechanism& mechanism) {
  auto triple = Extend(joint, mechanism);
  if (!triple.ok()) return triple.status();
  if (Evaluate(*triple).residual <= kImproveThreshold) return mechanism;

  const int nx = joint.nx();
  const int ny = joint.ny();
  const int nu = mechanism.nu();
  // Compound secret (x, u) at row x * nu + u.
  std::vector<double> compound(static_cast<size_t>(nx) * nu * ny, 0.0);
  for (int x = 0; x < nx; ++x) {
    for (int y = 0; y < ny; ++y) {
      for (int u = 0; u < nu; ++u) {
        compound[(static_cast<size_t>(x) * nu + u) * ny + y] = (*triple)(x, y, u);
      }
    }
  }
  auto compound_joint = JointDistribution::Create(nx * nu, ny, std::move(compound));
  if (!compound_joint.ok()) return compound_joint.status();
  auto extra = Frl(*compound_joint);
  if (!extra.ok()) return extra.status();

  const int nv = extra->nu();
  const int out_nu = nu * nv;
  std::vector<double> kernel(static_cast<size_t>(nx) * ny * out_nu, 0.0);
  for (int x = 0; x < nx; ++x) {
    for (int y = 0; y < ny; ++y) {
      const auto row = mechanism.Row(x, y);
      double* out = &kernel[(static_cast<size_t>(x) * ny + y) * out_nu];
      for (int u = 0; u < nu; ++u) {
        const auto extra_row = extra->Row(x * nu + u, y);
        for (int v = 0; v < nv; ++v) out[u * nv + v] = row[u] * extra_row[v];
      }
    }
  }
  auto combined =
      Mechanism::Create(out_nu, nx, ny, std::move(kernel), Scenario::kObserved);
  if (!combined.ok()) return combined.status();
  return Compress(joint, *combined);
}

absl::StatusOr<Mechanism> SaturateLeakage(const JointDistribution& joint,
                                          const Mechanism& mechanism,
                                          double epsilon) {
  if (mechanism.scenario() != Scenario::kHidden) {
    return absl::FailedPreconditionError(
        "mechanism must be hidden (Markov chain X - Y - U)");
  }
  auto triple = Extend(joint, mechanism);
  if (!triple.ok()) return triple.status();
  const MechanismReport report = Evaluate(*triple);
  if (report.residual > 1e-9) {
    return absl::FailedPreconditionError(absl::StrFormat(
        "H(Y|X,U) = %g exceeds 1e-9", report.residual));
  }
  const double mi = MutualInformation(joint);
  if (!(epsilon < mi)) {
    return absl::FailedPreconditionError(absl::StrFormat(
        "target leakage %g must be below I(X;Y) = %.6f", epsilon, mi));
  }
  if (report.leakage > epsilon + 1e-12) {
    return absl::FailedPreconditionError(absl::StrFormat(
        "mechanism already leaks %.9g > %.9g", report.leakage, epsilon));
  }
  using T = TripleDistribution;
  // I(X;Y|U) = H(X,U) + H(Y,U) - H(X,Y,U) - H(U).
  const double secret_payload_given_u =
      triple->JointEntropy(T::kX | T::kU) + triple->JointEntropy(T::kY | T::kU) -
      triple->JointEntropy(T::kX | T::kY | T::kU) - triple->JointEntropy(T::kU);
  if (!(secret_payload_given_u > 1e-9)) {
    return absl::FailedPreconditionError(absl::StrFormat(
        "I(X;Y|U) = %g; no leakage headroom", secret_payload_given_u));
  }
  const double alpha =
      std::max(epsilon - report.leakage, 0.0) / secret_payload_given_u;
  if (alpha == 0) return mechanism;
  if (!(alpha < 1)) {
    return absl::InternalError(absl::StrFormat("reveal weight %g >= 1", alpha));
  }
  const int nx = joint.nx();
  const int ny = joint.ny();
  const int nu = mechanism.nu();
  const int width = ny + 1;
  const int out_nu = nu * width;
  std::vector<double> table(static_cast<size_t>(ny) * out_nu, 0.0);
  for (int y = 0; y < ny; ++y) {
    const auto row = mechanism.Row(0, y);
    for (int u = 0; u < nu; ++u) {
      table[y * out_nu + u * width + y] = alpha * row[u];
      table[y * out_nu + u * width + ny] = (1 - alpha) * row[u];
    }
  }
  return Mechanism::FromHiddenKernel(out_nu, nx, ny, table);
}

}  // namespace privbound
