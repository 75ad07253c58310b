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

// Search over U independent of X with Y = g(X) for a random function g.
//
// Every U with I(X;U) = 0 and H(Y|X,U) = 0 induces a law w on the functions
// g: support(X) -> Y with sum_{g : g(x) = y} w(g) = P_{Y|X}(y|x), and
// relabelling U by its induced function never increases I(X;U|Y). On this
// polytope I(X;U|Y) = H(X|Y) - sum_g w(g) H(X | g(X)) is linear in w.

#ifndef PRIVBOUND_FUNCTION_ATOMS_H_
#define PRIVBOUND_FUNCTION_ATOMS_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "privbound/distribution.h"
#include "privbound/mechanism.h"
#include "privbound/representation.h"

namespace privbound {

class FunctionAtomSpace {
 public:
  // Fails when the number of atoms would exceed kMaxAtoms.
  static absl::StatusOr<FunctionAtomSpace> Create(const JointDistribution& joint);

  static constexpr int kMaxAtoms = 1 << 16;

  // Secrets with positive probability, ascending. Atoms are functions on
  // this support; atom a maps support[i] to digit i of a in base ny.
  const std::vector<int>& support() const { return support_; }
  int atom_count() const { return atom_count_; }
  int Value(int atom, int support_index) const;

  // Equality constraints in row-major form: one unit-mass row followed by
  // sum_{g : g(x) = y} w(g) = P(y|x) for every support x and y < ny - 1.
  int constraint_rows() const { return static_cast<int>(rhs_.size()); }
  const std::vector<double>& constraint_matrix() const { return matrix_; }
  const std::vector<double>& constraint_rhs() const { return rhs_; }
  double MaxViolation(std::span<const double> weights) const;

  // H(X | g(X)) for every atom g.
  const std::vector<double>& atom_secret_entropy() const { return secret_entropy_; }

  // I(X;U|Y) of the atom-indexed representation, from the linear form.
  double ConditionalLeakage(std::span<const double> weights) const;

  // Product coupling w(g) = prod_x P(g(x) | x), a relative-interior point.
  std::vector<double> ProductWeights() const;

  // Observed mechanism with U = atom index restricted to atoms of positive
  // weight (ascending atom order). Rows are renormalized.
  absl::StatusOr<Mechanism> MechanismFromWeights(
      std::span<const double> weights) const;

 private:
  FunctionAtomSpace(const JointDistribution& joint);

  int nx_;
  int ny_;
  std::vector<int> support_;
  int atom_count_ = 0;
  double secret_given_payload_ = 0;  // H(X|Y)
  std::vector<std::vector<double>> y_given_x_;
  std::vector<double> matrix_;
  std::vector<double> rhs_;
  std::vector<double> secret_entropy_;
};

struct SfrlResult {
  Mechanism mechanism;
  // I(X;U|Y) of `mechanism`, an upper estimate of the excess functional
  // information.
  double psi_estimate = 0;
  std::vector<double> weights;  // over all atoms
  int vertices_evaluated = 0;
  bool used_simplex = false;  // vertex enumeration was too large
  bool iteration_limit_hit = false;
};

// Minimizes I(X;U|Y) over the function-atom polytope: scores every vertex
// (or solves the linear program when enumeration is too large), then runs
// projected descent from the best vertex and from `config.restarts` random
// interior points.
absl::StatusOr<SfrlResult> SfrlSearch(const JointDistribution& joint,
                                      const SearchConfig& config);

struct EsfrlResult {
  Mechanism mechanism;
  double alpha = 0;
  double base_cond_leakage = 0;  // psi estimate of the unmixed representation
};

// SfrlSearch output mixed with the secret at alpha = epsilon / H(X).
// I(X;U|Y) = alpha H(X|Y) + (1 - alpha) * base_cond_leakage.
absl::StatusOr<EsfrlResult> Esfrl(const JointDistribution& joint, double epsilon,
                                  const SearchConfig& config);

}  // namespace privbound

#endif  // PRIVBOUND_FUNCTION_ATOMS_H_
