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

// Perfect privacy in the hidden-secret scenario: the largest I(Y;U) over
// kernels P_{U|Y} with U independent of X.
//
// Every posterior P_{Y|U=u} of such a kernel lies in
//   S = {q in simplex(Y) : P_{X|Y} q = P_X},
// and the posteriors average to P_Y. Since H is concave, the optimum
// decomposes P_Y over the vertices of S, which turns the problem into a
// linear program over vertex weights.

#ifndef PRIVBOUND_PERFECT_PRIVACY_H_
#define PRIVBOUND_PERFECT_PRIVACY_H_

#include <vector>

#include "absl/status/statusor.h"
#include "privbound/distribution.h"
#include "privbound/mechanism.h"

namespace privbound {

// Payload alphabets above this size (after dropping zero-probability
// symbols) are rejected; vertex enumeration is combinatorial.
inline constexpr int kMaxPerfectPrivacyPayload = 8;

struct PrivacyPolytopeVertex {
  std::vector<double> q;  // length ny; zero on payloads of probability 0
};

// Vertices of S, in the order of their first basis.
absl::StatusOr<std::vector<PrivacyPolytopeVertex>> PolytopeVertices(
    const JointDistribution& joint);

struct PerfectPrivacyResult {
  double value = 0;  // g0 in bits
  Mechanism mechanism;  // hidden; U indexes the vertices of positive weight
  std::vector<PrivacyPolytopeVertex> vertices;
  std::vector<double> weights;  // one per vertex
};

absl::StatusOr<PerfectPrivacyResult> PerfectPrivacyUtility(
    const JointDistribution& joint);

}  // namespace privbound

#endif  // PRIVBOUND_PERFECT_PRIVACY_H_
