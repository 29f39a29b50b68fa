// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kregret/lp.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace kregret {
namespace {

constexpr double kPivotTolerance = 1e-11;

// Row-major dense tableau [A | b] with an explicit basis.
class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows), cols_(cols), cells_((cols + 1) * rows, 0.0),
        basis_(rows, -1) {}

  double& at(int r, int c) { return cells_[r * (cols_ + 1) + c]; }
  double at(int r, int c) const { return cells_[r * (cols_ + 1) + c]; }
  double& rhs(int r) { return at(r, cols_); }
  double rhs(int r) const { return at(r, cols_); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::vector<int>& basis() { return basis_; }
  const std::vector<int>& basis() const { return basis_; }

  void Pivot(int row, int col, std::vector<double>& reduced) {
    const int width = cols_ + 1;
    double* pivot_row = &cells_[row * width];
    const double inv = 1.0 / pivot_row[col];
    for (int c = 0; c < width; ++c) pivot_row[c] *= inv;
    pivot_row[col] = 1.0;
    for (int r = 0; r < rows_; ++r) {
      if (r == row) continue;
      double* target = &cells_[r * width];
      const double factor = target[col];
      if (factor == 0.0) continue;
      for (int c = 0; c < width; ++c) target[c] -= factor * pivot_row[c];
      target[col] = 0.0;
    }
    const double factor = reduced[col];
    if (factor != 0.0) {
      for (int c = 0; c < width; ++c) reduced[c] -= factor * pivot_row[c];
      reduced[col] = 0.0;
    }
    basis_[row] = col;
  }

  void RemoveRow(int row) {
    const int width = cols_ + 1;
    cells_.erase(cells_.begin() + row * width,
                 cells_.begin() + (row + 1) * width);
    basis_.erase(basis_.begin() + row);
    --rows_;
  }

 private:
  int rows_;
  int cols_;
  std::vector<double> cells_;
  std::vector<int> basis_;
};

// Reduced costs (with -objective in the last slot) for the current basis.
std::vector<double> ReducedCosts(const Tableau& t,
                                 const std::vector<double>& cost) {
  std::vector<double> reduced(cost);
  reduced.resize(t.cols() + 1, 0.0);
  for (int r = 0; r < t.rows(); ++r) {
    const double cb = cost[t.basis()[r]];
    if (cb == 0.0) continue;
    for (int c = 0; c <= t.cols(); ++c) reduced[c] -= cb * t.at(r, c);
  }
  return reduced;
}

enum class PhaseOutcome { kOptimal, kUnbounded, kIterationLimit };

PhaseOutcome RunPhase(Tableau& t, std::vector<double>& reduced,
                      const std::vector<bool>& barred,
                      const SimplexOptions& options, int& pivots) {
  while (true) {
    int entering = -1;
    for (int c = 0; c < t.cols(); ++c) {
      if (!barred[c] && reduced[c] < -options.optimality_tolerance) {
        entering = c;
        break;
      }
    }
    if (entering < 0) return PhaseOutcome::kOptimal;

    int leaving = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int r = 0; r < t.rows(); ++r) {
      const double a = t.at(r, entering);
      if (a <= kPivotTolerance) continue;
      const double ratio = std::max(0.0, t.rhs(r)) / a;
      if (leaving < 0 || ratio < best_ratio - 1e-12) {
        best_ratio = ratio;
        leaving = r;
      } else if (ratio <= best_ratio + 1e-12 &&
                 t.basis()[r] < t.basis()[leaving]) {
        leaving = r;
      }
    }
    if (leaving < 0) return PhaseOutcome::kUnbounded;
    if (pivots >= options.max_iterations) return PhaseOutcome::kIterationLimit;
    t.Pivot(leaving, entering, reduced);
    ++pivots;
  }
}

}  // namespace

std::string_view LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kIterationLimit:
      return "iteration_limit";
  }
  return "unknown";
}

absl::Status LinearProgram::Validate() const {
  const size_t n = objective_.size();
  if (n == 0) return absl::InvalidArgumentError("program has no variables");
  if (bounds_.size() != n) {
    return absl::InvalidArgumentError("bound list does not match objective");
  }
  for (size_t i = 0; i < constraints_.size(); ++i) {
    const Constraint& row = constraints_[i];
    if (row.coefficients.size() != n) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "constraint %d has %d coefficients, expected %d", i,
          row.coefficients.size(), n));
    }
    if (!std::isfinite(row.rhs)) {
      return absl::InvalidArgumentError(
          absl::StrFormat("constraint %d has a non-finite rhs", i));
    }
  }
  for (size_t j = 0; j < n; ++j) {
    const VariableBound& b = bounds_[j];
    if (!std::isfinite(b.lower) ||
        (b.upper.has_value() &&
         (!std::isfinite(*b.upper) || *b.upper < b.lower))) {
      return absl::InvalidArgumentError(
          absl::StrFormat("variable %d has invalid bounds", j));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<LpSolution> Solve(const LinearProgram& lp,
                                 const SimplexOptions& options) {
  if (absl::Status s = lp.Validate(); !s.ok()) return s;
  const int n = lp.num_variables();
  const auto bounds = lp.bounds();

  // Shift x = lower + x' so every structural variable is >= 0, then collect
  // rows as (coefficients, is_greater_equal, rhs) with rhs >= 0.
  struct Row {
    std::vector<double> a;
    bool ge;
    double b;
  };
  std::vector<Row> rows;
  auto push = [&](std::vector<double> a, bool ge, double b) {
    if (b < 0.0) {
      for (double& x : a) x = -x;
      b = -b;
      ge = !ge;
    }
    rows.push_back({std::move(a), ge, b});
  };
  for (const Constraint& c : lp.constraints()) {
    double shifted = c.rhs;
    for (int j = 0; j < n; ++j) shifted -= c.coefficients[j] * bounds[j].lower;
    if (c.relation != Relation::kGreaterEqual) push(c.coefficients, false, shifted);
    if (c.relation != Relation::kLessEqual) push(c.coefficients, true, shifted);
  }
  for (int j = 0; j < n; ++j) {
    if (!bounds[j].upper.has_value()) continue;
    std::vector<double> a(n, 0.0);
    a[j] = 1.0;
    push(std::move(a), false, *bounds[j].upper - bounds[j].lower);
  }

  const int m = static_cast<int>(rows.size());
  int artificial_count = 0;
  for (const Row& r : rows) artificial_count += r.ge ? 1 : 0;
  const int slack_begin = n;
  const int artificial_begin = n + m;
  const int cols = n + m + artificial_count;

  Tableau t(m, cols);
  int next_artificial = artificial_begin;
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j < n; ++j) t.at(r, j) = rows[r].a[j];
    t.rhs(r) = rows[r].b;
    if (rows[r].ge) {
      t.at(r, slack_begin + r) = -1.0;
      t.at(r, next_artificial) = 1.0;
      t.basis()[r] = next_artificial++;
    } else {
      t.at(r, slack_begin + r) = 1.0;
      t.basis()[r] = slack_begin + r;
    }
  }

  LpSolution solution;
  int pivots = 0;
  std::vector<bool> barred(cols, false);

  if (artificial_count > 0) {
    std::vector<double> phase_one_cost(cols + 1, 0.0);
    for (int c = artificial_begin; c < cols; ++c) phase_one_cost[c] = 1.0;
    std::vector<double> reduced = ReducedCosts(t, phase_one_cost);
    const PhaseOutcome outcome = RunPhase(t, reduced, barred, options, pivots);
    solution.pivots = pivots;
    if (outcome == PhaseOutcome::kIterationLimit) {
      solution.status = LpStatus::kIterationLimit;
      return solution;
    }
    double scale = 1.0;
    for (const Row& r : rows) scale = std::max(scale, r.b);
    if (-reduced[cols] > options.feasibility_tolerance * scale) {
      solution.status = LpStatus::kInfeasible;
      return solution;
    }
    // Artificials left in the basis sit at zero. Pivot them out, or drop the
    // row when it is a linear combination of the others.
    for (int r = t.rows() - 1; r >= 0; --r) {
      if (t.basis()[r] < artificial_begin) continue;
      int col = -1;
      for (int c = 0; c < artificial_begin; ++c) {
        if (std::abs(t.at(r, c)) > 1e-9) {
          col = c;
          break;
        }
      }
      if (col >= 0) {
        t.Pivot(r, col, reduced);
      } else {
        t.RemoveRow(r);
      }
    }
    for (int c = artificial_begin; c < cols; ++c) barred[c] = true;
  }

  std::vector<double> cost(cols + 1, 0.0);
  const auto objective = lp.objective();
  for (int j = 0; j < n; ++j) cost[j] = objective[j];
  std::vector<double> reduced = ReducedCosts(t, cost);
  const PhaseOutcome outcome = RunPhase(t, reduced, barred, options, pivots);
  solution.pivots = pivots;
  if (outcome == PhaseOutcome::kIterationLimit) {
    solution.status = LpStatus::kIterationLimit;
    return solution;
  }
  if (outcome == PhaseOutcome::kUnbounded) {
    solution.status = LpStatus::kUnbounded;
    return solution;
  }

  solution.status = LpStatus::kOptimal;
  solution.values.assign(n, 0.0);
  for (int r = 0; r < t.rows(); ++r) {
    const int b = t.basis()[r];
    if (b < n) solution.values[b] = std::max(0.0, t.rhs(r));
  }
  double value = 0.0;
  for (int j = 0; j < n; ++j) {
    solution.values[j] += bounds[j].lower;
    value += objective[j] * solution.values[j];
  }
  solution.objective_value = value;
  return solution;
}

}  // namespace kregret
