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

#ifndef PRIVBOUND_DISTRIBUTION_H_
#define PRIVBOUND_DISTRIBUTION_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"

namespace privbound {

// Tolerance on the total mass accepted before renormalization.
inline constexpr double kMassTolerance = 1e-6;

// A finite joint law P_XY over {0..nx-1} x {0..ny-1}, stored x-major.
//
// Instances always hold a probability matrix whose entries sum to one (the
// constructor renormalizes inputs within kMassTolerance of unit mass). The
// class is an immutable value type.
class JointDistribution {
 public:
  // Validates and renormalizes `p` (row-major, nx rows of ny entries).
  // Fails on non-positive sizes, size mismatch, negative or non-finite
  // entries, or |sum - 1| > kMassTolerance.
  static absl::StatusOr<JointDistribution> Create(int nx, int ny,
                                                  std::vector<double> p);

  int nx() const { return nx_; }
  int ny() const { return ny_; }

  double operator()(int x, int y) const { return p_[x * ny_ + y]; }
  std::span<const double> probabilities() const { return p_; }

  const std::vector<double>& marginal_x() const { return px_; }
  const std::vector<double>& marginal_y() const { return py_; }

  // P_{Y|X}(.|x); all zeros when P(x) = 0.
  std::vector<double> ConditionalYGivenX(int x) const;
  // P_{X|Y}(.|y); all zeros when P(y) = 0.
  std::vector<double> ConditionalXGivenY(int y) const;

 private:
  JointDistribution(int nx, int ny, std::vector<double> p);

  int nx_;
  int ny_;
  std::vector<double> p_;
  std::vector<double> px_;
  std::vector<double> py_;
};

// Doubly symmetric binary pair: P(x,y) = (1-theta)/2 on the diagonal and
// theta/2 off it. Requires 0 <= theta < 1/2.
absl::StatusOr<JointDistribution> FamilyBsc(double theta);

// Binary X observed through an erasure: Y in {0, e, 1} with e stored at
// column 1. P(x,x) = (1-theta)/2, P(x,e) = theta/2. Requires 0 <= theta < 1/2.
absl::StatusOr<JointDistribution> FamilyErasure(double theta);

// Uniform Y on `ny` symbols and X = f(Y). nx is 1 + max(f).
absl::StatusOr<JointDistribution> FamilyFunction(int ny,
                                                 std::span<const int> f);

}  // namespace privbound

#endif  // PRIVBOUND_DISTRIBUTION_H_
