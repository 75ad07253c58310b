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

// Shannon measures in bits with the convention 0 log 0 = 0.

#ifndef PRIVBOUND_MEASURES_H_
#define PRIVBOUND_MEASURES_H_

#include <span>

#include "absl/status/statusor.h"
#include "privbound/distribution.h"
#include "privbound/mechanism.h"

namespace privbound {

// -sum p log2 p over a probability vector. Non-positive entries contribute 0.
double Entropy(std::span<const double> p);

// h(a) = -a log2 a - (1-a) log2(1-a). Fails for a outside [0, 1].
absl::StatusOr<double> BinaryEntropy(double a);

enum class Conditioning { kYGivenX, kXGivenY };

double ConditionalEntropy(const JointDistribution& joint,
                          Conditioning direction);

double EntropyX(const JointDistribution& joint);
double EntropyY(const JointDistribution& joint);

// I(X;Y), clamped at 0.
double MutualInformation(const JointDistribution& joint);

// H(Y|X = x) for every x (0 where P(x) = 0).
std::vector<double> PerSecretEntropies(const JointDistribution& joint);

// I(X;U|Y) = sum_y P(y) I(X;U | Y = y), clamped at 0.
double ConditionalMutualInformation(const TripleDistribution& triple);

}  // namespace privbound

#endif  // PRIVBOUND_MEASURES_H_
