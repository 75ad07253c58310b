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

#include "privbound/function_atoms.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Dense>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "linear_program.h"
#include "privbound/measures.h"

namespace privbound {
namespace {

constexpr size_t kMaxEnumeratedBases = 200000;
constexpr double kFeasibility = 1e-9;
constexpr int kStallWindow = 50;
constexpr int kDykstraIterations = 300;

// Euclidean projection onto {w >= 0 : A w = b} by Dykstra's alternating
// projections between the affine set and the orthant.
class PolytopeProjector {
 public:
  PolytopeProjector(const FunctionAtomSpace& space)
      : a_(Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                          Eigen::RowMajor>>(
            space.constraint_matrix().data(), space.constraint_rows(),
            space.atom_count())),
        b_(Eigen::Map<const Eigen::VectorXd>(space.constraint_rhs().data(),
                                             space.constraint_rows())),
        gram_((a_ * a_.transpose()).ldlt()) {}

  Eigen::VectorXd Project(const Eigen::VectorXd& v) const {
    Eigen::VectorXd x = v;
    Eigen::VectorXd p = Eigen::VectorXd::Zero(v.size());
    Eigen::VectorXd q = Eigen::VectorXd::Zero(v.size());
    for (int it = 0; it < kDykstraIterations; ++it) {
      const Eigen::VectorXd y = Affine(x + p);
      p = x + p - y;
      const Eigen::VectorXd next = (y + q).cwiseMax(0.0);
      q = y + q - next;
      const double change = (next - x).cwiseAbs().maxCoeff();
      x = next;
      if (change < 1e-13) break;
    }
    return x;
  }

 private:
  Eigen::VectorXd Affine(const Eigen::VectorXd& v) const {
    return v - a_.transpose() * gram_.solve(a_ * v - b_);
  }

  Eigen::MatrixXd a_;
  Eigen::VectorXd b_;
  Eigen::LDLT<Eigen::MatrixXd> gram_;
};

std::vector<double> ToStd(const Eigen::VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

}  // namespace

FunctionAtomSpace::FunctionAtomSpace(const JointDistribution& joint)
    : nx_(joint.nx()), ny_(joint.ny()) {
  for (int x = 0; x < nx_; ++x) {
    if (joint.marginal_x()[x] > 0) support_.push_back(x);
  }
}

absl::StatusOr<FunctionAtomSpace> FunctionAtomSpace::Create(
    const JointDistribution& joint) {
  FunctionAtomSpace space(joint);
  const int k = static_cast<int>(space.support_.size());
  const int ny = joint.ny();
  double atoms = std::pow(static_cast<double>(ny), k);
  if (atoms > kMaxAtoms) {
    return absl::ResourceExhaustedError(absl::StrFormat(
        "function-atom space has %.0f atoms (limit %d)", atoms, kMaxAtoms));
  }
  space.atom_count_ = static_cast<int>(atoms);
  space.secret_given_payload_ = ConditionalEntropy(joint, Conditioning::kXGivenY);
  for (int x : space.support_) {
    space.y_given_x_.push_back(joint.ConditionalYGivenX(x));
  }

  const int n = space.atom_count_;
  const int rows = 1 + k * (ny - 1);
  space.matrix_.assign(static_cast<size_t>(rows) * n, 0.0);
  space.rhs_.assign(rows, 0.0);
  std::fill(space.matrix_.begin(), space.matrix_.begin() + n, 1.0);
  space.rhs_[0] = 1.0;
  for (int i = 0; i < k; ++i) {
    for (int y = 0; y < ny - 1; ++y) {
      const int r = 1 + i * (ny - 1) + y;
      space.rhs_[r] = space.y_given_x_[i][y];
      for (int g = 0; g < n; ++g) {
        if (space.Value(g, i) == y) space.matrix_[static_cast<size_t>(r) * n + g] = 1.0;
      }
    }
  }

  const double hx = EntropyX(joint);
  space.secret_entropy_.resize(n);
  std::vector<double> image(ny);
  for (int g = 0; g < n; ++g) {
    std::fill(image.begin(), image.end(), 0.0);
    for (int i = 0; i < k; ++i) {
      image[space.Value(g, i)] += joint.marginal_x()[space.support_[i]];
    }
    space.secret_entropy_[g] = std::max(hx - Entropy(image), 0.0);
  }
  return space;
}

int FunctionAtomSpace::Value(int atom, int support_index) const {
  for (int i = 0; i < support_index; ++i) atom /= ny_;
  return atom % ny_;
}

double FunctionAtomSpace::MaxViolation(std::span<const double> weights) const {
  double worst = 0;
  const int n = atom_count_;
  for (size_t r = 0; r < rhs_.size(); ++r) {
    double lhs = 0;
    for (int g = 0; g < n; ++g) lhs += matrix_[r * n + g] * weights[g];
    worst = std::max(worst, std::abs(lhs - rhs_[r]));
  }
  for (double w : weights) worst = std::max(worst, -w);
  return worst;
}

double FunctionAtomSpace::ConditionalLeakage(
    std::span<const double> weights) const {
  double gain = 0;
  for (int g = 0; g < atom_count_; ++g) gain += weights[g] * secret_entropy_[g];
  return secret_given_payload_ - gain;
}

std::vector<double> FunctionAtomSpace::ProductWeights() const {
  std::vector<double> w(atom_count_, 1.0);
  for (int g = 0; g < atom_count_; ++g) {
    for (size_t i = 0; i < support_.size(); ++i) {
      w[g] *= y_given_x_[i][Value(g, static_cast<int>(i))];
    }
  }
  return w;
}

absl::StatusOr<Mechanism> FunctionAtomSpace::MechanismFromWeights(
    std::span<const double> weights) const {
  if (weights.size() != static_cast<size_t>(atom_count_)) {
    return absl::InvalidArgumentError("weight vector has the wrong length");
  }
  std::vector<int> used;
  for (int g = 0; g < atom_count_; ++g) {
    if (weights[g] > 1e-15) used.push_back(g);
  }
  if (used.empty()) return absl::InvalidArgumentError("all atom weights are zero");
  const int nu = static_cast<int>(used.size());
  std::vector<double> kernel(static_cast<size_t>(nx_) * ny_ * nu, 0.0);
  std::vector<int> position(nx_, -1);
  for (size_t i = 0; i < support_.size(); ++i) position[support_[i]] = static_cast<int>(i);
  for (int x = 0; x < nx_; ++x) {
    for (int y = 0; y < ny_; ++y) {
      double* row = &kernel[(static_cast<size_t>(x) * ny_ + y) * nu];
      double total = 0;
      if (position[x] >= 0 && y_given_x_[position[x]][y] > 0) {
        for (int u = 0; u < nu; ++u) {
          if (Value(used[u], position[x]) == y) {
            row[u] = weights[used[u]];
            total += row[u];
          }
        }
        if (total <= 0) {
          return absl::FailedPreconditionError(absl::StrFormat(
              "weights put no mass on payload %d under secret %d", y, x));
        }
        for (int u = 0; u < nu; ++u) row[u] /= total;
      } else {
        row[0] = 1.0;
      }
    }
  }
  return Mechanism::Create(nu, nx_, ny_, std::move(kernel), Scenario::kObserved);
}

absl::StatusOr<SfrlResult> SfrlSearch(const JointDistribution& joint,
                                      const SearchConfig& config) {
  if (auto s = Validate(config); !s.ok()) return s;
  auto space = FunctionAtomSpace::Create(joint);
  if (!space.ok()) return space.status();
  const int n = space->atom_count();

  internal::EqualitySystem system;
  system.rows = space->constraint_rows();
  system.cols = n;
  system.a = space->constraint_matrix();
  system.b = space->constraint_rhs();

  std::vector<double> best;
  double best_value = std::numeric_limits<double>::infinity();
  int vertices_evaluated = 0;
  bool used_simplex = false;
  const size_t bases = internal::BinomialSaturated(n, system.rows);
  if (bases <= kMaxEnumeratedBases) {
    auto vertices = internal::EnumerateVertices(system, kMaxEnumeratedBases);
    if (!vertices.ok()) return vertices.status();
    for (const auto& v : *vertices) {
      ++vertices_evaluated;
      const double value = space->ConditionalLeakage(v);
      if (value < best_value - 1e-15) {
        best_value = value;
        best = v;
      }
    }
  }
  if (best.empty()) {
    used_simplex = true;
    std::vector<double> cost(n);
    for (int g = 0; g < n; ++g) cost[g] = -space->atom_secret_entropy()[g];
    auto lp = internal::MinimizeLinear(system, cost);
    if (!lp.ok()) return lp.status();
    best = lp->x;
    best_value = space->ConditionalLeakage(best);
  }

  // Projected descent along the (constant) gradient of the linear form.
  const PolytopeProjector projector(*space);
  const Eigen::VectorXd ascent =
      Eigen::Map<const Eigen::VectorXd>(space->atom_secret_entropy().data(), n);
  const double scale = ascent.cwiseAbs().maxCoeff();
  bool iteration_limit_hit = false;
  if (scale > 0) {
    const Eigen::VectorXd direction = ascent / scale;
    const std::vector<double> product = space->ProductWeights();
    for (int start = 0; start <= config.restarts; ++start) {
      Eigen::VectorXd w;
      if (start == 0) {
        w = Eigen::Map<const Eigen::VectorXd>(best.data(), n);
      } else {
        std::seed_seq seq{static_cast<uint64_t>(config.seed),
                          static_cast<uint64_t>(start)};
        std::mt19937_64 rng(seq);
        std::exponential_distribution<double> draw(1.0);
        Eigen::VectorXd v(n);
        for (int g = 0; g < n; ++g) v(g) = draw(rng);
        v /= v.sum();
        for (int g = 0; g < n; ++g) v(g) = 0.5 * product[g] + 0.5 * v(g);
        w = projector.Project(v);
      }
      if (space->MaxViolation(ToStd(w)) > kFeasibility) continue;
      double value = space->ConditionalLeakage(ToStd(w));
      double step = config.step;
      std::vector<double> history = {value};
      int iter = 0;
      for (; iter < config.max_iters; ++iter) {
        const Eigen::VectorXd candidate = projector.Project(w + step * direction);
        const std::vector<double> cand = ToStd(candidate);
        const double cand_value = space->ConditionalLeakage(cand);
        if (space->MaxViolation(cand) <= kFeasibility && cand_value < value) {
          w = candidate;
          value = cand_value;
          step *= 1.5;
        } else {
          step *= 0.5;
        }
        history.push_back(value);
        if (step < 1e-12) break;
        if (history.size() > kStallWindow &&
            history[history.size() - 1 - kStallWindow] - value < config.tol) {
          break;
        }
      }
      if (iter == config.max_iters) iteration_limit_hit = true;
      if (value < best_value - 1e-12) {
        best_value = value;
        best = ToStd(w);
      }
    }
  }

  auto mechanism = space->MechanismFromWeights(best);
  if (!mechanism.ok()) return mechanism.status();
  auto report = Report(joint, *mechanism);
  if (!report.ok()) return report.status();
  SfrlResult result{*std::move(mechanism), report->cond_leakage, std::move(best),
                    vertices_evaluated, used_simplex, iteration_limit_hit};
  return result;
}

absl::StatusOr<EsfrlResult> Esfrl(const JointDistribution& joint, double epsilon,
                                  const SearchConfig& config) {
  auto alpha = LeakageMixingWeight(joint, epsilon);
  if (!alpha.ok()) return alpha.status();
  auto base = SfrlSearch(joint, config);
  if (!base.ok()) return base.status();
  auto mixed = MixWithSecret(joint, base->mechanism, *alpha);
  if (!mixed.ok()) return mixed.status();
  return EsfrlResult{*std::move(mixed), *alpha, base->psi_estimate};
}

}  // namespace privbound
