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

// Dense two-phase simplex for small linear programs, and the builder for the
// happiness-ratio program that drives greedy selection:
//
//   min y
//   s.t.  sum_j q[j] v[j] <= y    for every q in S
//         sum_j p[j] v[j]  = 1
//         v >= 0,  y <= 1
//
// Its optimum is the worst ratio max_{q in S} u(q) / u(p) over nonnegative
// linear utilities, capped at 1.

#ifndef KREGRET_LP_H_
#define KREGRET_LP_H_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "kregret/types.h"

namespace kregret {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct Constraint {
  std::vector<double> coefficients;
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;
};

struct VariableBound {
  double lower = 0.0;
  std::optional<double> upper;
};

// Minimization problem over num_variables() variables.
class LinearProgram {
 public:
  explicit LinearProgram(int num_variables)
      : objective_(num_variables, 0.0), bounds_(num_variables) {}

  int num_variables() const { return static_cast<int>(objective_.size()); }

  void SetObjective(std::vector<double> coefficients) {
    objective_ = std::move(coefficients);
  }
  void AddConstraint(Constraint row) { constraints_.push_back(std::move(row)); }
  void SetBound(int variable, VariableBound bound) {
    bounds_[variable] = bound;
  }

  std::span<const double> objective() const { return objective_; }
  std::span<const Constraint> constraints() const { return constraints_; }
  std::span<const VariableBound> bounds() const { return bounds_; }

  // Every row and the bound list must match the objective's width, bounds
  // must be finite with lower <= upper.
  absl::Status Validate() const;

 private:
  std::vector<double> objective_;
  std::vector<Constraint> constraints_;
  std::vector<VariableBound> bounds_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

std::string_view LpStatusName(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  double objective_value = 0.0;
  std::vector<double> values;  // filled when Optimal
  int pivots = 0;
};

struct SimplexOptions {
  double feasibility_tolerance = 1e-9;
  double optimality_tolerance = 1e-9;
  int max_iterations = 10000;
};

// Two-phase tableau simplex with Bland's rule. Equalities are split into two
// opposing inequalities. Only malformed programs produce an error status;
// infeasible, unbounded and iteration-capped runs are reported in the
// solution status.
absl::StatusOr<LpSolution> Solve(const LinearProgram& lp,
                                 const SimplexOptions& options = {});

// Variables are v[0..d-1] followed by y. Rows: one "q.v - y <= 0" per member
// of `selected`, then "p.v = 1", then "y <= 1".
absl::StatusOr<LinearProgram> BuildHappinessLp(
    std::span<const Point* const> selected, const Point& candidate);

}  // namespace kregret

#endif  // KREGRET_LP_H_
