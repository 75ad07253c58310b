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

#include "testing/oracles.h"

#include <cmath>
#include <utility>

namespace privbound::testing {

long double EntropyBits(const std::vector<long double>& p) {
  long double h = 0;
  for (long double v : p) {
    if (v > 0) h -= v * std::log2(v);
  }
  return h;
}

long double BinaryEntropyBits(long double a) {
  return EntropyBits({a, 1 - a});
}

long double Table3::H(bool x, bool y, bool u) const {
  const int sx = x ? nx : 1;
  const int sy = y ? ny : 1;
  const int su = u ? nu : 1;
  std::vector<long double> m(static_cast<size_t>(sx) * sy * su, 0.0L);
  for (int a = 0; a < nx; ++a) {
    for (int b = 0; b < ny; ++b) {
      for (int c = 0; c < nu; ++c) {
        const int i = ((x ? a : 0) * sy + (y ? b : 0)) * su + (u ? c : 0);
        m[i] += q[(static_cast<size_t>(a) * ny + b) * nu + c];
      }
    }
  }
  return EntropyBits(m);
}

Table3 BuildTable(const JointDistribution& joint, const Mechanism& mechanism) {
  Table3 t{joint.nx(), joint.ny(), mechanism.nu(), {}};
  t.q.resize(static_cast<size_t>(t.nx) * t.ny * t.nu);
  for (int x = 0; x < t.nx; ++x) {
    for (int y = 0; y < t.ny; ++y) {
      for (int u = 0; u < t.nu; ++u) {
        t.q[(static_cast<size_t>(x) * t.ny + y) * t.nu + u] =
            static_cast<long double>(joint(x, y)) * mechanism(x, y, u);
      }
    }
  }
  return t;
}

Table3 BuildTable(const JointDistribution& joint) {
  Table3 t{joint.nx(), joint.ny(), 1, {}};
  for (double p : joint.probabilities()) t.q.push_back(p);
  return t;
}

ReferenceReport ReferenceMeasures(const Table3& t) {
  ReferenceReport r;
  const long double hu = t.H(false, false, true);
  r.utility = t.H(false, true, false) + hu - t.H(false, true, true);
  r.leakage = t.H(true, false, false) + hu - t.H(true, false, true);
  r.cond_leakage = t.H(true, true, false) - t.H(false, true, false) -
                   t.H(true, true, true) + t.H(false, true, true);
  r.residual = t.H(true, true, true) - t.H(true, false, true);
  r.entropy_u = hu;
  return r;
}

long double MutualInformationRef(const JointDistribution& joint) {
  const Table3 t = BuildTable(joint);
  return t.H(true, false, false) + t.H(false, true, false) -
         t.H(true, true, false);
}

long double CondEntropyYGivenXRef(const JointDistribution& joint) {
  const Table3 t = BuildTable(joint);
  return t.H(true, true, false) - t.H(true, false, false);
}

long double CondEntropyXGivenYRef(const JointDistribution& joint) {
  const Table3 t = BuildTable(joint);
  return t.H(true, true, false) - t.H(false, true, false);
}

long double EntropyXRef(const JointDistribution& joint) {
  return BuildTable(joint).H(true, false, false);
}

long double EntropyYRef(const JointDistribution& joint) {
  return BuildTable(joint).H(false, true, false);
}

long double LayeredIntegralQuadrature(const JointDistribution& joint,
                                      int cells) {
  std::vector<long double> px(joint.nx(), 0.0L);
  for (int x = 0; x < joint.nx(); ++x) {
    for (int y = 0; y < joint.ny(); ++y) px[x] += joint(x, y);
  }
  long double total = 0;
  for (int y = 0; y < joint.ny(); ++y) {
    for (int i = 0; i < cells; ++i) {
      const long double t = (i + 0.5L) / cells;
      long double f = 0;
      for (int x = 0; x < joint.nx(); ++x) {
        if (px[x] > 0 && joint(x, y) / px[x] >= t) f += px[x];
      }
      if (f > 0) total += f * std::log2(f) / cells;
    }
  }
  return total;
}

JointDistribution RandomJoint(std::mt19937_64& rng, int nx, int ny) {
  std::exponential_distribution<double> draw(1.0);
  std::vector<double> p(static_cast<size_t>(nx) * ny);
  double total = 0;
  for (double& v : p) {
    v = draw(rng);
    total += v;
  }
  for (double& v : p) v /= total;
  return *JointDistribution::Create(nx, ny, std::move(p));
}

JointDistribution RandomFunctionJoint(std::mt19937_64& rng, int nx, int ny) {
  std::exponential_distribution<double> draw(1.0);
  std::uniform_int_distribution<int> pick(0, nx - 1);
  std::vector<double> py(ny);
  double total = 0;
  for (double& v : py) {
    v = draw(rng);
    total += v;
  }
  std::vector<double> p(static_cast<size_t>(nx) * ny, 0.0);
  for (int y = 0; y < ny; ++y) p[pick(rng) * ny + y] = py[y] / total;
  return *JointDistribution::Create(nx, ny, std::move(p));
}

}  // namespace privbound::testing
