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

// Greedy k-regret selection.
//
//   PresGreed      seeds S with the maximizer of one dimension, then adds the
//                  candidate p minimizing H_{S+p}(S, U) until k points are
//                  chosen or no candidate pushes that ratio below 1.
//   StocPresGreed  the same loop, scanning a uniform random sample of
//                  s = ceil((n/k) ln(lambda / (lambda - 1 + eps))) remaining
//                  candidates per step instead of all of them.
//   NaiveGreedy    the textbook greedy that starts from the empty set and
//                  maximizes H_D(S + p, U) directly.
//
// ExhaustiveOptimal enumerates every subset of size <= k and is meant as a
// test oracle on small inputs.

#ifndef KREGRET_SELECTION_H_
#define KREGRET_SELECTION_H_

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "kregret/happiness.h"
#include "kregret/types.h"

namespace kregret {

struct SelectionOptions {
  // Dimension whose maximizer is preselected.
  int preselect_dimension = 0;
  // Evaluate H_D(S_i, U) after every step to fill GreedyTrace marginal gains.
  // Costs one full evaluation per step; the final value is always computed.
  bool record_gains = true;
  // Candidate evaluations per step are split across this many threads. The
  // winner reduction is sequential, so results do not depend on it.
  int workers = 1;
  SimplexOptions simplex;
};

// Draws up to `count` ids from `remaining` (ascending ids). `step` is the
// 1-based greedy step being filled (2..k).
using CandidateSampler = std::function<std::vector<PointId>(
    std::span<const PointId> remaining, int64_t count, int step,
    std::mt19937_64& rng)>;

// Uniform sampling without replacement (partial Fisher-Yates).
std::vector<PointId> UniformSample(std::span<const PointId> remaining,
                                   int64_t count, int step,
                                   std::mt19937_64& rng);

struct StochasticOptions {
  double epsilon = 0.1;
  double lambda = 1.1;
  uint64_t seed = 0;
  // Replaces UniformSample, e.g. to replay fixed samples.
  CandidateSampler sampler;
};

// ceil((n / k) * ln(lambda / (lambda - 1 + eps))), at least 1. Fails when
// lambda - 1 + eps <= 0 or the arguments are out of range.
absl::StatusOr<int64_t> SampleSize(int64_t n, int k, double epsilon,
                                   double lambda);

absl::StatusOr<SelectionResult> PresGreed(const Dataset& candidates, int k,
                                          const UtilityClass& utilities,
                                          const SelectionOptions& options = {});

absl::StatusOr<SelectionResult> StocPresGreed(
    const Dataset& candidates, int k, const UtilityClass& utilities,
    const StochasticOptions& stochastic,
    const SelectionOptions& options = {});

absl::StatusOr<SelectionResult> NaiveGreedy(
    const Dataset& candidates, int k, const UtilityClass& utilities,
    const SelectionOptions& options = {});

inline constexpr int64_t kDefaultOracleBudget = 1'000'000;

// Best subset of size <= k by H_D(S, U); ties go to the lexicographically
// smallest ascending id sequence. Refuses (ResourceExhausted) when the
// number of subsets exceeds `budget`.
absl::StatusOr<SelectionResult> ExhaustiveOptimal(
    const Dataset& candidates, int k, const UtilityClass& utilities,
    int64_t budget = kDefaultOracleBudget,
    const SimplexOptions& simplex = {});

// Number of subsets of size 1..k of an n-set, saturating at INT64_MAX.
int64_t CountSubsetsUpTo(int64_t n, int k);

}  // namespace kregret

#endif  // KREGRET_SELECTION_H_
