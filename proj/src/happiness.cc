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

#include "kregret/happiness.h"

#include <algorithm>
#include <limits>
#include <unordered_set>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace kregret {
namespace {

double Clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

absl::StatusOr<std::vector<const Point*>> Resolve(
    const Dataset& data, std::span<const PointId> subset) {
  std::vector<const Point*> out;
  out.reserve(subset.size());
  for (PointId id : subset) {
    const Point* p = data.Find(id);
    if (p == nullptr) {
      return absl::NotFoundError(
          absl::StrFormat("point id %d is not in the dataset", id));
    }
    out.push_back(p);
  }
  return out;
}

double Score(const UtilityVector& u, const Point& p,
             const UtilityPrecision& precision) {
  return precision.Apply(Dot(u.weights(), p.coords));
}

absl::Status CheckDims(const Dataset& data, const UtilityClass& utilities) {
  if (utilities.is_finite() && utilities.vectors().front().dim() != data.dim()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "utility class has dimension %d but dataset has %d",
        utilities.vectors().front().dim(), data.dim()));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<double> HappinessRatio(const Dataset& data,
                                      std::span<const PointId> subset,
                                      const UtilityVector& u,
                                      UtilityPrecision precision) {
  if (subset.empty()) {
    return absl::InvalidArgumentError("happiness ratio of an empty set");
  }
  if (u.dim() != data.dim()) {
    return absl::InvalidArgumentError("utility dimension mismatch");
  }
  auto members = Resolve(data, subset);
  if (!members.ok()) return members.status();
  double best_in_set = 0.0;
  for (const Point* p : *members) {
    best_in_set = std::max(best_in_set, Score(u, *p, precision));
  }
  double best_overall = 0.0;
  for (const Point& p : data.points()) {
    best_overall = std::max(best_overall, Score(u, p, precision));
  }
  if (best_overall <= 0.0) {
    return absl::FailedPreconditionError(
        "happiness ratio undefined: every point has zero utility");
  }
  return Clamp01(best_in_set / best_overall);
}

absl::StatusOr<double> RestrictedMinHappiness(
    std::span<const Point* const> selected, const Point& candidate,
    const UtilityClass& utilities, const EvalOptions& options) {
  if (selected.empty()) {
    return absl::InvalidArgumentError("restricted ratio needs a nonempty S");
  }
  if (utilities.is_finite()) {
    double worst = 1.0;
    for (const UtilityVector& u : utilities.vectors()) {
      if (u.dim() != candidate.dim()) {
        return absl::InvalidArgumentError("utility dimension mismatch");
      }
      double best_in_set = 0.0;
      for (const Point* q : selected) {
        best_in_set = std::max(best_in_set,
                               Score(u, *q, utilities.precision()));
      }
      const double with_candidate = std::max(
          best_in_set, Score(u, candidate, utilities.precision()));
      if (with_candidate <= 0.0) continue;
      worst = std::min(worst, best_in_set / with_candidate);
    }
    return Clamp01(worst);
  }

  auto lp = BuildHappinessLp(selected, candidate);
  if (!lp.ok()) return lp.status();
  auto solution = Solve(*lp, options.simplex);
  if (!solution.ok()) return solution.status();
  if (options.lp_counter != nullptr) ++*options.lp_counter;
  switch (solution->status) {
    case LpStatus::kOptimal:
      return Clamp01(solution->objective_value);
    case LpStatus::kInfeasible:
      return 1.0;
    default:
      return absl::InternalError(absl::StrFormat(
          "happiness LP for candidate %d ended with status %s", candidate.id,
          std::string(LpStatusName(solution->status))));
  }
}

absl::StatusOr<double> MinHappiness(const Dataset& data,
                                    std::span<const PointId> subset,
                                    const UtilityClass& utilities,
                                    const EvalOptions& options) {
  if (absl::Status s = CheckDims(data, utilities); !s.ok()) return s;
  if (subset.empty()) return 0.0;
  if (utilities.is_finite()) {
    double worst = 1.0;
    for (const UtilityVector& u : utilities.vectors()) {
      auto ratio = HappinessRatio(data, subset, u, utilities.precision());
      if (!ratio.ok()) return ratio.status();
      worst = std::min(worst, *ratio);
    }
    return worst;
  }

  auto members = Resolve(data, subset);
  if (!members.ok()) return members.status();
  std::unordered_set<PointId> in_set(subset.begin(), subset.end());
  double worst = 1.0;
  for (const Point& p : data.points()) {
    if (in_set.contains(p.id)) continue;
    if (std::all_of(p.coords.begin(), p.coords.end(),
                    [](double c) { return c <= 0.0; })) {
      continue;
    }
    auto ratio = RestrictedMinHappiness(*members, p, utilities, options);
    if (!ratio.ok()) return ratio.status();
    worst = std::min(worst, *ratio);
  }
  return worst;
}

absl::StatusOr<double> MarginalGain(const Dataset& data,
                                    std::span<const PointId> subset,
                                    PointId candidate,
                                    const UtilityClass& utilities,
                                    const EvalOptions& options) {
  if (std::find(subset.begin(), subset.end(), candidate) != subset.end()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "candidate %d is already in the subset", candidate));
  }
  auto before = MinHappiness(data, subset, utilities, options);
  if (!before.ok()) return before.status();
  std::vector<PointId> grown(subset.begin(), subset.end());
  grown.push_back(candidate);
  auto after = MinHappiness(data, grown, utilities, options);
  if (!after.ok()) return after.status();
  return *after - *before;
}

absl::StatusOr<double> MaxRegretRatio(const Dataset& data,
                                      std::span<const PointId> subset,
                                      const UtilityClass& utilities,
                                      const EvalOptions& options) {
  auto h = MinHappiness(data, subset, utilities, options);
  if (!h.ok()) return h.status();
  return 1.0 - *h;
}

}  // namespace kregret
