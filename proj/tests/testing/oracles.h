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

// Reference computations for tests. Everything here is written against raw
// probability tables in long double, without calling the library's measure
// code, so that agreement between the two is meaningful.

#ifndef PRIVBOUND_TESTS_TESTING_ORACLES_H_
#define PRIVBOUND_TESTS_TESTING_ORACLES_H_

#include <cstdint>
#include <random>
#include <vector>

#include "privbound/distribution.h"
#include "privbound/mechanism.h"

namespace privbound::testing {

long double EntropyBits(const std::vector<long double>& p);
long double BinaryEntropyBits(long double a);

// Joint law of (X, Y, U) as a dense table, index (x * ny + y) * nu + u.
struct Table3 {
  int nx = 0;
  int ny = 0;
  int nu = 0;
  std::vector<long double> q;

  // Entropy of the marginal over the chosen variables.
  long double H(bool x, bool y, bool u) const;
};

Table3 BuildTable(const JointDistribution& joint, const Mechanism& mechanism);
Table3 BuildTable(const JointDistribution& joint);  // nu = 1

struct ReferenceReport {
  long double utility;       // H(Y) + H(U) - H(Y,U)
  long double leakage;       // H(X) + H(U) - H(X,U)
  long double cond_leakage;  // H(X,Y) - H(Y) - H(X,Y,U) + H(Y,U)
  long double residual;      // H(X,Y,U) - H(X,U)
  long double entropy_u;
};
ReferenceReport ReferenceMeasures(const Table3& table);

long double MutualInformationRef(const JointDistribution& joint);
long double CondEntropyYGivenXRef(const JointDistribution& joint);
long double CondEntropyXGivenYRef(const JointDistribution& joint);
long double EntropyXRef(const JointDistribution& joint);
long double EntropyYRef(const JointDistribution& joint);

// sum_y int_0^1 F_y(t) log2 F_y(t) dt by the midpoint rule on `cells`
// equal cells.
long double LayeredIntegralQuadrature(const JointDistribution& joint,
                                      int cells);

// Dense random law with entries drawn from Exp(1) and normalized.
JointDistribution RandomJoint(std::mt19937_64& rng, int nx, int ny);

// Random law of Y on `ny` symbols and X = f(Y) for a uniformly drawn map
// f into {0..nx-1}. Secrets outside the image get probability zero.
JointDistribution RandomFunctionJoint(std::mt19937_64& rng, int nx, int ny);

}  // namespace privbound::testing

#endif  // PRIVBOUND_TESTS_TESTING_ORACLES_H_
