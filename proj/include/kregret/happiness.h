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

// Happiness and regret evaluation.
//
// For a utility u and a subset S of D, the happiness ratio is
// max_{q in S} u(q) / max_{p in D} u(p); the minimum happiness ratio over a
// class U is its infimum over u in U, and the maximum regret ratio is one
// minus that. For the full nonnegative linear class the infimum is evaluated
// per candidate maximizer p in D \ S with the happiness LP:
//
//   H_D(S, U) = min_{p in D \ S} LP(S, p)
//
// which is exact because max_D u is always attained at some concrete p.

#ifndef KREGRET_HAPPINESS_H_
#define KREGRET_HAPPINESS_H_

#include <cstdint>
#include <span>

#include "absl/status/statusor.h"
#include "kregret/lp.h"
#include "kregret/types.h"

namespace kregret {

// Tolerance for comparing ratios against each other and against 1.
inline constexpr double kRatioTolerance = 1e-9;

struct EvalOptions {
  SimplexOptions simplex;
  // When set, incremented once per solved LP.
  int64_t* lp_counter = nullptr;
};

// max_{p in S} u(p) / max_{p in D} u(p). Fails when the denominator is zero,
// when S is empty or names an unknown id.
absl::StatusOr<double> HappinessRatio(const Dataset& data,
                                      std::span<const PointId> subset,
                                      const UtilityVector& u,
                                      UtilityPrecision precision = {});

// Minimum happiness ratio H_D(S, U), clamped to [0, 1]. The empty set scores
// 0 by convention.
absl::StatusOr<double> MinHappiness(const Dataset& data,
                                    std::span<const PointId> subset,
                                    const UtilityClass& utilities,
                                    const EvalOptions& options = {});

// H_{S + p}(S, U): the ratio greedy selection minimizes. For the full class
// this is the happiness LP's optimum (1 when the LP is infeasible, meaning p
// cannot beat S under any normalized utility). For a finite class it is
// min_u max_S u / max_{S + p} u, with utilities that score zero on S + p
// ignored.
absl::StatusOr<double> RestrictedMinHappiness(
    std::span<const Point* const> selected, const Point& candidate,
    const UtilityClass& utilities, const EvalOptions& options = {});

// H_D(S + p, U) - H_D(S, U).
absl::StatusOr<double> MarginalGain(const Dataset& data,
                                    std::span<const PointId> subset,
                                    PointId candidate,
                                    const UtilityClass& utilities,
                                    const EvalOptions& options = {});

// 1 - H_D(S, U).
absl::StatusOr<double> MaxRegretRatio(const Dataset& data,
                                      std::span<const PointId> subset,
                                      const UtilityClass& utilities,
                                      const EvalOptions& options = {});

}  // namespace kregret

#endif  // KREGRET_HAPPINESS_H_
