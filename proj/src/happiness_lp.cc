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

#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "kregret/lp.h"

namespace kregret {

absl::StatusOr<LinearProgram> BuildHappinessLp(
    std::span<const Point* const> selected, const Point& candidate) {
  if (selected.empty()) {
    return absl::InvalidArgumentError("happiness LP needs a nonempty S");
  }
  const int d = candidate.dim();
  bool positive = false;
  for (double c : candidate.coords) positive |= c > 0.0;
  if (!positive) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "candidate %d is all-zero; the normalization row is unsatisfiable",
        candidate.id));
  }
  for (const Point* q : selected) {
    if (q->dim() != d) {
      return absl::InvalidArgumentError("dimension mismatch in happiness LP");
    }
    if (q->id == candidate.id) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "candidate %d is already in the selected set", candidate.id));
    }
  }

  const int y = d;
  LinearProgram lp(d + 1);
  std::vector<double> objective(d + 1, 0.0);
  objective[y] = 1.0;
  lp.SetObjective(std::move(objective));

  for (const Point* q : selected) {
    std::vector<double> row(q->coords);
    row.push_back(-1.0);
    lp.AddConstraint({std::move(row), Relation::kLessEqual, 0.0});
  }
  std::vector<double> norm(candidate.coords);
  norm.push_back(0.0);
  lp.AddConstraint({std::move(norm), Relation::kEqual, 1.0});
  std::vector<double> cap(d + 1, 0.0);
  cap[y] = 1.0;
  lp.AddConstraint({std::move(cap), Relation::kLessEqual, 1.0});
  return lp;
}

}  // namespace kregret
