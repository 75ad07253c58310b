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

#ifndef PRIVBOUND_MECHANISM_H_
#define PRIVBOUND_MECHANISM_H_

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "privbound/distribution.h"

namespace privbound {

// Which inputs the disclosure kernel may depend on.
//   kHidden:   P_{U|Y}; the secret is not observed (Markov chain X - Y - U).
//   kObserved: P_{U|XY}; the kernel sees both the secret and the payload.
enum class Scenario { kHidden, kObserved };

std::string_view ScenarioName(Scenario scenario);

// A conditional kernel P_{U|XY} with one probability row per (x, y) pair.
// Row index is x * ny + y. Hidden mechanisms carry identical rows for every
// x sharing the same y.
class Mechanism {
 public:
  // `kernel` holds nx * ny rows of nu entries. Each row must be a
  // probability vector within 1e-9; rows off unit mass by more than
  // rounding are renormalized.
  static absl::StatusOr<Mechanism> Create(int nu, int nx, int ny,
                                          std::vector<double> kernel,
                                          Scenario scenario);

  // Lifts a P_{U|Y} table (ny rows of nu entries) to a hidden mechanism.
  static absl::StatusOr<Mechanism> FromHiddenKernel(
      int nu, int nx, int ny, std::span<const double> u_given_y);

  // U constant (nu = 1).
  static Mechanism Constant(int nx, int ny);

  int nu() const { return nu_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  Scenario scenario() const { return scenario_; }

  std::span<const double> Row(int x, int y) const {
    return std::span<const double>(kernel_).subspan(
        static_cast<size_t>((x * ny_ + y) * nu_), nu_);
  }
  double operator()(int x, int y, int u) const {
    return kernel_[(x * ny_ + y) * nu_ + u];
  }
  std::span<const double> kernel() const { return kernel_; }

 private:
  Mechanism(int nu, int nx, int ny, std::vector<double> kernel,
            Scenario scenario)
      : nu_(nu), nx_(nx), ny_(ny), kernel_(std::move(kernel)),
        scenario_(scenario) {}

  int nu_;
  int nx_;
  int ny_;
  std::vector<double> kernel_;
  Scenario scenario_;
};

// Joint law of (X, Y, U), stored with u fastest: index (x * ny + y) * nu + u.
class TripleDistribution {
 public:
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int nu() const { return nu_; }
  double operator()(int x, int y, int u) const {
    return q_[(x * ny_ + y) * nu_ + u];
  }
  std::span<const double> probabilities() const { return q_; }

  // Sums out U; returns the nx * ny source matrix.
  std::vector<double> MarginalXY() const;

  // Variable subsets for JointEntropy.
  enum Variables : unsigned { kX = 1, kY = 2, kU = 4 };
  // Entropy in bits of the marginal over the variables in `mask`.
  double JointEntropy(unsigned mask) const;

 private:
  friend absl::StatusOr<TripleDistribution> Extend(const JointDistribution&,
                                                   const Mechanism&);
  TripleDistribution(int nx, int ny, int nu, std::vector<double> q)
      : nx_(nx), ny_(ny), nu_(nu), q_(std::move(q)) {}

  int nx_;
  int ny_;
  int nu_;
  std::vector<double> q_;
};

// q(x,y,u) = p(x,y) * k(x,y)(u).
absl::StatusOr<TripleDistribution> Extend(const JointDistribution& joint,
                                          const Mechanism& mechanism);

// All quantities in bits.
struct MechanismReport {
  double utility = 0;       // I(Y;U)
  double leakage = 0;       // I(X;U)
  double cond_leakage = 0;  // I(X;U|Y)
  double residual = 0;      // H(Y|X,U)
  double entropy_u = 0;     // H(U)
  int cardinality = 0;      // |U|
};

MechanismReport Evaluate(const TripleDistribution& triple);

absl::StatusOr<MechanismReport> Report(const JointDistribution& joint,
                                       const Mechanism& mechanism);

// utility - leakage - H(Y|X) + residual + cond_leakage; zero for every
// valid pair up to rounding.
double DecompositionGap(const JointDistribution& joint,
                        const MechanismReport& report);

// Drops output symbols of zero probability and merges symbols whose
// posteriors over (X, Y) coincide within 1e-12. Every measure in
// MechanismReport except the cardinality and H(U) is unchanged.
absl::StatusOr<Mechanism> Compress(const JointDistribution& joint,
                                   const Mechanism& mechanism);

}  // namespace privbound

#endif  // PRIVBOUND_MECHANISM_H_
