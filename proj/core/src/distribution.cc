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

#include "privbound/distribution.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace privbound {

JointDistribution::JointDistribution(int nx, int ny, std::vector<double> p)
    : nx_(nx), ny_(ny), p_(std::move(p)), px_(nx, 0.0), py_(ny, 0.0) {
  for (int x = 0; x < nx_; ++x) {
    for (int y = 0; y < ny_; ++y) {
      px_[x] += p_[x * ny_ + y];
      py_[y] += p_[x * ny_ + y];
    }
  }
}

absl::StatusOr<JointDistribution> JointDistribution::Create(
    int nx, int ny, std::vector<double> p) {
  if (nx < 1 || ny < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("alphabet sizes must be positive, got %d x %d", nx, ny));
  }
  if (p.size() != static_cast<size_t>(nx) * ny) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "dimension mismatch: expected %d entries, got %d", nx * ny, p.size()));
  }
  for (size_t i = 0; i < p.size(); ++i) {
    if (!std::isfinite(p[i])) {
      return absl::InvalidArgumentError(
          absl::StrFormat("non-finite entry at (%d, %d)", i / ny, i % ny));
    }
    if (p[i] < 0) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "negative entry %g at (%d, %d)", p[i], i / ny, i % ny));
    }
  }
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  if (std::abs(total - 1.0) > kMassTolerance) {
    return absl::InvalidArgumentError(
        absl::StrFormat("entries sum to %.12g, not 1", total));
  }
  for (double& v : p) v /= total;
  return JointDistribution(nx, ny, std::move(p));
}

std::vector<double> JointDistribution::ConditionalYGivenX(int x) const {
  std::vector<double> out(ny_, 0.0);
  if (px_[x] <= 0) return out;
  for (int y = 0; y < ny_; ++y) out[y] = p_[x * ny_ + y] / px_[x];
  return out;
}

std::vector<double> JointDistribution::ConditionalXGivenY(int y) const {
  std::vector<double> out(nx_, 0.0);
  if (py_[y] <= 0) return out;
  for (int x = 0; x < nx_; ++x) out[x] = p_[x * ny_ + y] / py_[y];
  return out;
}

namespace {

absl::Status CheckChannelParameter(double theta) {
  if (!(theta >= 0.0 && theta < 0.5)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("theta must lie in [0, 0.5), got %g", theta));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<JointDistribution> FamilyBsc(double theta) {
  if (auto s = CheckChannelParameter(theta); !s.ok()) return s;
  const double same = (1 - theta) / 2;
  const double flip = theta / 2;
  return JointDistribution::Create(2, 2, {same, flip, flip, same});
}

absl::StatusOr<JointDistribution> FamilyErasure(double theta) {
  if (auto s = CheckChannelParameter(theta); !s.ok()) return s;
  const double keep = (1 - theta) / 2;
  const double erase = theta / 2;
  // Columns are (0, e, 1).
  return JointDistribution::Create(2, 3, {keep, erase, 0.0, 0.0, erase, keep});
}

absl::StatusOr<JointDistribution> FamilyFunction(int ny,
                                                 std::span<const int> f) {
  if (ny < 1 || f.size() != static_cast<size_t>(ny)) {
    return absl::InvalidArgumentError(
        "function must assign a secret to every payload symbol");
  }
  if (*std::min_element(f.begin(), f.end()) < 0) {
    return absl::InvalidArgumentError("function values must be non-negative");
  }
  const int nx = *std::max_element(f.begin(), f.end()) + 1;
  std::vector<double> p(static_cast<size_t>(nx) * ny, 0.0);
  for (int y = 0; y < ny; ++y) p[f[y] * ny + y] = 1.0 / ny;
  return JointDistribution::Create(nx, ny, std::move(p));
}

}  // namespace privbound
