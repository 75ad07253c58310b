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

#include "linear_program.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include <Eigen/Dense>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace privbound::internal {
namespace {

constexpr double kPivotTolerance = 1e-11;
constexpr double kFeasibilityTolerance = 1e-9;
constexpr int kMaxPivots = 100000;

// Dense tableau: rows x (cols + 1), last column is the right-hand side.
class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * (cols + 1), 0.0),
        basis_(rows, -1) {}

  double& at(int r, int c) { return data_[static_cast<size_t>(r) * (cols_ + 1) + c]; }
  double at(int r, int c) const {
    return data_[static_cast<size_t>(r) * (cols_ + 1) + c];
  }
  double& rhs(int r) { return at(r, cols_); }
  double rhs(int r) const { return at(r, cols_); }
  std::vector<int>& basis() { return basis_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void Pivot(int row, int col) {
    const double p = at(row, col);
    for (int c = 0; c <= cols_; ++c) at(row, c) /= p;
    for (int r = 0; r < rows_; ++r) {
      if (r == row) continue;
      const double f = at(r, col);
      if (f == 0) continue;
      for (int c = 0; c <= cols_; ++c) at(r, c) -= f * at(row, c);
      at(r, col) = 0;
    }
    basis_[row] = col;
  }

  // Runs simplex iterations for `cost` over columns [0, allowed_cols).
  // Returns false when unbounded.
  absl::StatusOr<bool> Optimize(std::span<const double> cost, int allowed_cols,
                                int& pivots) {
    std::vector<double> reduced(cols_);
    while (true) {
      if (pivots > kMaxPivots) {
        return absl::DeadlineExceededError("simplex pivot limit reached");
      }
      for (int c = 0; c < cols_; ++c) {
        double z = cost[c];
        for (int r = 0; r < rows_; ++r) z -= cost[basis_[r]] * at(r, c);
        reduced[c] = z;
      }
      int entering = -1;
      for (int c = 0; c < allowed_cols; ++c) {
        if (reduced[c] < -kPivotTolerance) {
          entering = c;
          break;
        }
      }
      if (entering < 0) return true;
      int leaving = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int r = 0; r < rows_; ++r) {
        const double a = at(r, entering);
        if (a <= kPivotTolerance) continue;
        const double ratio = rhs(r) / a;
        if (ratio < best - 1e-14 ||
            (std::abs(ratio - best) <= 1e-14 && basis_[r] < basis_[leaving])) {
          best = ratio;
          leaving = r;
        }
      }
      if (leaving < 0) return false;
      Pivot(leaving, entering);
      ++pivots;
    }
  }

 private:
  int rows_;
  int cols_;
  std::vector<double> data_;
  std::vector<int> basis_;
};

// Gauss-Jordan elimination with partial pivoting. Returns the independent
// rows of [A | b] in reduced form, or NotFound if the system is
// inconsistent.
absl::StatusOr<EqualitySystem> IndependentRows(const EqualitySystem& system) {
  EqualitySystem s = system;
  const double scale = [&] {
    double m = 0;
    for (double v : s.a) m = std::max(m, std::abs(v));
    return std::max(m, 1.0);
  }();
  const double tol = 1e-10 * scale;
  int row = 0;
  for (int col = 0; col < s.cols && row < s.rows; ++col) {
    int pivot = row;
    for (int r = row + 1; r < s.rows; ++r) {
      if (std::abs(s.at(r, col)) > std::abs(s.at(pivot, col))) pivot = r;
    }
    if (std::abs(s.at(pivot, col)) <= tol) continue;
    for (int c = 0; c < s.cols; ++c) std::swap(s.at(row, c), s.at(pivot, c));
    std::swap(s.b[row], s.b[pivot]);
    const double p = s.at(row, col);
    for (int c = 0; c < s.cols; ++c) s.at(row, c) /= p;
    s.b[row] /= p;
    for (int r = 0; r < s.rows; ++r) {
      if (r == row) continue;
      const double f = s.at(r, col);
      if (f == 0) continue;
      for (int c = 0; c < s.cols; ++c) s.at(r, c) -= f * s.at(row, c);
      s.b[r] -= f * s.b[row];
    }
    ++row;
  }
  for (int r = row; r < s.rows; ++r) {
    if (std::abs(s.b[r]) > 1e-9) {
      return absl::NotFoundError("equality system is inconsistent");
    }
  }
  EqualitySystem out;
  out.rows = row;
  out.cols = s.cols;
  out.a.assign(s.a.begin(), s.a.begin() + static_cast<std::ptrdiff_t>(row) * s.cols);
  out.b.assign(s.b.begin(), s.b.begin() + row);
  return out;
}

}  // namespace

absl::StatusOr<LpSolution> MinimizeLinear(const EqualitySystem& system,
                                          std::span<const double> cost) {
  if (cost.size() != static_cast<size_t>(system.cols)) {
    return absl::InvalidArgumentError("cost vector has the wrong length");
  }
  const int m = system.rows;
  const int n = system.cols;
  Tableau t(m, n + m);
  for (int r = 0; r < m; ++r) {
    const double sign = system.b[r] < 0 ? -1.0 : 1.0;
    for (int c = 0; c < n; ++c) t.at(r, c) = sign * system.at(r, c);
    t.at(r, n + r) = 1.0;
    t.rhs(r) = sign * system.b[r];
    t.basis()[r] = n + r;
  }
  LpSolution solution;

  std::vector<double> phase1(n + m, 0.0);
  std::fill(phase1.begin() + n, phase1.end(), 1.0);
  auto bounded = t.Optimize(phase1, n + m, solution.pivots);
  if (!bounded.ok()) return bounded.status();
  double infeasibility = 0;
  for (int r = 0; r < m; ++r) {
    if (t.basis()[r] >= n) infeasibility += t.rhs(r);
  }
  if (infeasibility > kFeasibilityTolerance) {
    return absl::NotFoundError(
        absl::StrFormat("linear program infeasible (residual %g)", infeasibility));
  }
  // Drive artificial variables out of the basis where possible; rows where
  // no original column can enter are redundant and stay inert.
  for (int r = 0; r < m; ++r) {
    if (t.basis()[r] < n) continue;
    for (int c = 0; c < n; ++c) {
      if (std::abs(t.at(r, c)) > 1e-9) {
        t.Pivot(r, c);
        ++solution.pivots;
        break;
      }
    }
  }

  std::vector<double> phase2(n + m, 0.0);
  std::copy(cost.begin(), cost.end(), phase2.begin());
  bounded = t.Optimize(phase2, n, solution.pivots);
  if (!bounded.ok()) return bounded.status();
  if (!*bounded) return absl::OutOfRangeError("linear program is unbounded");

  solution.x.assign(n, 0.0);
  for (int r = 0; r < m; ++r) {
    if (t.basis()[r] < n) solution.x[t.basis()[r]] = std::max(t.rhs(r), 0.0);
  }
  solution.objective = 0;
  for (int c = 0; c < n; ++c) solution.objective += cost[c] * solution.x[c];
  return solution;
}

size_t BinomialSaturated(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (result > SIZE_MAX) return SIZE_MAX;
  }
  return static_cast<size_t>(result);
}

int Rank(const EqualitySystem& system) {
  EqualitySystem homogeneous = system;
  std::fill(homogeneous.b.begin(), homogeneous.b.end(), 0.0);
  auto reduced = IndependentRows(homogeneous);
  return reduced.ok() ? reduced->rows : 0;
}

absl::StatusOr<std::vector<std::vector<double>>> EnumerateVertices(
    const EqualitySystem& system, size_t max_bases) {
  auto reduced = IndependentRows(system);
  if (!reduced.ok()) return std::vector<std::vector<double>>{};
  const int r = reduced->rows;
  const int n = reduced->cols;
  if (r == 0) return std::vector<std::vector<double>>{std::vector<double>(n, 0.0)};
  const size_t combos = BinomialSaturated(n, r);
  if (combos > max_bases) {
    return absl::ResourceExhaustedError(absl::StrFormat(
        "vertex enumeration needs %d bases (limit %d)", combos, max_bases));
  }

  Eigen::MatrixXd a(r, n);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = reduced->at(i, j);
  }
  const Eigen::VectorXd b =
      Eigen::Map<const Eigen::VectorXd>(reduced->b.data(), r);

  std::vector<std::vector<double>> vertices;
  std::vector<int> cols(r);
  for (int i = 0; i < r; ++i) cols[i] = i;
  Eigen::MatrixXd basis(r, r);
  while (true) {
    for (int i = 0; i < r; ++i) basis.col(i) = a.col(cols[i]);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(basis);
    lu.setThreshold(1e-10);
    if (lu.isInvertible()) {
      const Eigen::VectorXd xb = lu.solve(b);
      const bool feasible =
          (basis * xb - b).cwiseAbs().maxCoeff() <= kFeasibilityTolerance &&
          xb.minCoeff() >= -kFeasibilityTolerance;
      if (feasible) {
        std::vector<double> x(n, 0.0);
        for (int i = 0; i < r; ++i) x[cols[i]] = std::max(xb(i), 0.0);
        const bool duplicate =
            std::any_of(vertices.begin(), vertices.end(), [&](const auto& v) {
              for (int j = 0; j < n; ++j) {
                if (std::abs(v[j] - x[j]) > 1e-9) return false;
              }
              return true;
            });
        if (!duplicate) vertices.push_back(std::move(x));
      }
    }
    // Next combination in lexicographic order.
    int i = r - 1;
    while (i >= 0 && cols[i] == n - r + i) --i;
    if (i < 0) break;
    ++cols[i];
    for (int k = i + 1; k < r; ++k) cols[k] = cols[k - 1] + 1;
  }
  return vertices;
}

}  // namespace privbound::internal
