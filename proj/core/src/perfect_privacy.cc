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

#include "privbound/perfect_privacy.h"

#include <algorithm>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "linear_program.h"
#include "privbound/measures.h"

namespace privbound {
namespace {

std::vector<int> PayloadSupport(const JointDistribution& joint) {
  std::vector<int> support;
  for (int y = 0; y < joint.ny(); ++y) {
    if (joint.marginal_y()[y] > 0) support.push_back(y);
  }
  return support;
}

}  // namespace

absl::StatusOr<std::vector<PrivacyPolytopeVertex>> PolytopeVertices(
    const JointDistribution& joint) {
  const std::vector<int> support = PayloadSupport(joint);
  const int n = static_cast<int>(support.size());
  if (n > kMaxPerfectPrivacyPayload) {
    return absl::ResourceExhaustedError(absl::StrFormat(
        "payload support of %d symbols exceeds the limit of %d", n,
        kMaxPerfectPrivacyPayload));
  }
  // P_{X|Y} q = P_X and sum q = 1.
  internal::EqualitySystem system;
  system.rows = joint.nx() + 1;
  system.cols = n;
  system.a.assign(static_cast<size_t>(system.rows) * n, 0.0);
  system.b.assign(system.rows, 0.0);
  for (int j = 0; j < n; ++j) {
    const std::vector<double> posterior = joint.ConditionalXGivenY(support[j]);
    for (int x = 0; x < joint.nx(); ++x) system.at(x, j) = posterior[x];
    system.at(joint.nx(), j) = 1.0;
  }
  for (int x = 0; x < joint.nx(); ++x) system.b[x] = joint.marginal_x()[x];
  system.b[joint.nx()] = 1.0;

  auto basic = internal::EnumerateVertices(system, 1 << 20);
  if (!basic.ok()) return basic.status();
  if (basic->empty()) {
    return absl::InternalError("perfect-privacy polytope is empty");
  }
  std::vector<PrivacyPolytopeVertex> vertices;
  vertices.reserve(basic->size());
  for (const auto& v : *basic) {
    PrivacyPolytopeVertex vertex{std::vector<double>(joint.ny(), 0.0)};
    double mass = 0;
    for (int j = 0; j < n; ++j) mass += v[j];
    for (int j = 0; j < n; ++j) vertex.q[support[j]] = v[j] / mass;
    vertices.push_back(std::move(vertex));
  }
  return vertices;
}

absl::StatusOr<PerfectPrivacyResult> PerfectPrivacyUtility(
    const JointDistribution& joint) {
  auto vertices = PolytopeVertices(joint);
  if (!vertices.ok()) return vertices.status();
  const std::vector<int> support = PayloadSupport(joint);
  const int n = static_cast<int>(support.size());
  const int count = static_cast<int>(vertices->size());

  // Decompose P_Y over vertex posteriors at minimum average entropy.
  internal::EqualitySystem system;
  system.rows = n;
  system.cols = count;
  system.a.assign(static_cast<size_t>(n) * count, 0.0);
  system.b.assign(n, 0.0);
  std::vector<double> cost(count);
  for (int v = 0; v < count; ++v) {
    const auto& q = (*vertices)[v].q;
    for (int j = 0; j < n; ++j) system.at(j, v) = q[support[j]];
    cost[v] = Entropy(q);
  }
  for (int j = 0; j < n; ++j) system.b[j] = joint.marginal_y()[support[j]];
  auto lp = internal::MinimizeLinear(system, cost);
  if (!lp.ok()) return lp.status();

  std::vector<int> used;
  for (int v = 0; v < count; ++v) {
    if (lp->x[v] > 1e-14) used.push_back(v);
  }
  const int nu = static_cast<int>(used.size());
  const int ny = joint.ny();
  std::vector<double> table(static_cast<size_t>(ny) * nu, 0.0);
  for (int y = 0; y < ny; ++y) {
    double* row = &table[static_cast<size_t>(y) * nu];
    const double py = joint.marginal_y()[y];
    double total = 0;
    if (py > 0) {
      for (int k = 0; k < nu; ++k) {
        row[k] = lp->x[used[k]] * (*vertices)[used[k]].q[y] / py;
        total += row[k];
      }
    }
    if (total > 0) {
      for (int k = 0; k < nu; ++k) row[k] /= total;
    } else {
      row[0] = 1.0;
    }
  }
  auto mechanism = Mechanism::FromHiddenKernel(nu, joint.nx(), ny, table);
  if (!mechanism.ok()) return mechanism.status();
  const double value = std::max(EntropyY(joint) - lp->objective, 0.0);
  return PerfectPrivacyResult{value, *std::move(mechanism), *std::move(vertices),
                              std::move(lp->x)};
}

}  // namespace privbound
