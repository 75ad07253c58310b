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

#include "privbound/measures.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace privbound {

double Entropy(std::span<const double> p) {
  double h = 0;
  for (double v : p) {
    if (v > 0) h -= v * std::log2(v);
  }
  return h;
}

absl::StatusOr<double> BinaryEntropy(double a) {
  if (!(a >= 0.0 && a <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("binary entropy argument %g outside [0, 1]", a));
  }
  const double p[2] = {a, 1 - a};
  return Entropy(p);
}

double EntropyX(const JointDistribution& joint) {
  return Entropy(joint.marginal_x());
}

double EntropyY(const JointDistribution& joint) {
  return Entropy(joint.marginal_y());
}

double ConditionalEntropy(const JointDistribution& joint,
                          Conditioning direction) {
  double h = 0;
  if (direction == Conditioning::kYGivenX) {
    for (int x = 0; x < joint.nx(); ++x) {
      const double px = joint.marginal_x()[x];
      if (px > 0) h += px * Entropy(joint.ConditionalYGivenX(x));
    }
  } else {
    for (int y = 0; y < joint.ny(); ++y) {
      const double py = joint.marginal_y()[y];
      if (py > 0) h += py * Entropy(joint.ConditionalXGivenY(y));
    }
  }
  return std::max(h, 0.0);
}

double MutualInformation(const JointDistribution& joint) {
  const double mi =
      EntropyY(joint) - ConditionalEntropy(joint, Conditioning::kYGivenX);
  return std::max(mi, 0.0);
}

std::vector<double> PerSecretEntropies(const JointDistribution& joint) {
  std::vector<double> out(joint.nx(), 0.0);
  for (int x = 0; x < joint.nx(); ++x) {
    if (joint.marginal_x()[x] > 0) out[x] = Entropy(joint.ConditionalYGivenX(x));
  }
  return out;
}

double ConditionalMutualInformation(const TripleDistribution& triple) {
  const int nx = triple.nx();
  const int ny = triple.ny();
  const int nu = triple.nu();
  double total = 0;
  std::vector<double> xu(static_cast<size_t>(nx) * nu);
  std::vector<double> xs(nx);
  std::vector<double> us(nu);
  for (int y = 0; y < ny; ++y) {
    double py = 0;
    for (int x = 0; x < nx; ++x) {
      for (int u = 0; u < nu; ++u) py += triple(x, y, u);
    }
    if (py <= 0) continue;
    std::fill(xs.begin(), xs.end(), 0.0);
    std::fill(us.begin(), us.end(), 0.0);
    for (int x = 0; x < nx; ++x) {
      for (int u = 0; u < nu; ++u) {
        const double v = triple(x, y, u) / py;
        xu[x * nu + u] = v;
        xs[x] += v;
        us[u] += v;
      }
    }
    total += py * (Entropy(xs) + Entropy(us) - Entropy(xu));
  }
  return std::max(total, 0.0);
}

}  // namespace privbound
