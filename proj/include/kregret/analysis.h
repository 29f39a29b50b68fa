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

// Greedy submodularity ratio and greedy curvature of H_D(., U) along a
// greedy trace, and the approximation bounds they feed.
//
// With S_0 = {} and S_i the first i greedy picks, the greedy submodularity
// ratio is the largest gamma with
//
//   sum_{p in T \ S_i} Delta_{S_i}(p) >= gamma * Delta_{S_i}(T)
//
// for all |T| = k and i = 0..k-1, and the greedy curvature is the smallest
// alpha with
//
//   Delta_{S_{i-1} + T}(q_i) >= (1 - alpha) * Delta_{S_{i-1}}(q_i)
//
// for all |T| = k and q_i in S_{k-1} \ T. Pairs whose right-hand side gain is
// zero constrain nothing and are skipped. When the T-sets are sampled rather
// than enumerated, gamma is an upper estimate and alpha a lower one.

#ifndef KREGRET_ANALYSIS_H_
#define KREGRET_ANALYSIS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "kregret/happiness.h"
#include "kregret/selection.h"
#include "kregret/types.h"

namespace kregret {

enum class SubsetMode { kExhaustive, kSampled };

std::string_view SubsetModeName(SubsetMode mode);

struct SubsetEnumeration {
  std::vector<std::vector<PointId>> subsets;  // each sorted ascending
  SubsetMode mode = SubsetMode::kExhaustive;
  int64_t budget = 0;
  uint64_t seed = 0;
};

inline constexpr int64_t kDefaultSubsetBudget = 100'000;

// All k-subsets of the candidates when there are at most `budget` of them,
// otherwise `budget` distinct uniformly sampled k-subsets.
absl::StatusOr<SubsetEnumeration> EnumerateSubsets(const Dataset& candidates,
                                                   int k, int64_t budget,
                                                   uint64_t seed);

// Memoized H_D(S, U) keyed by the sorted id set.
class HappinessCache {
 public:
  HappinessCache(const Dataset& data, const UtilityClass& utilities,
                 EvalOptions options = {})
      : data_(data), utilities_(utilities), options_(options) {}

  absl::StatusOr<double> Value(std::vector<PointId> ids);
  size_t size() const { return values_.size(); }

 private:
  const Dataset& data_;
  const UtilityClass& utilities_;
  EvalOptions options_;
  std::map<std::vector<PointId>, double> values_;
};

struct RatioEstimate {
  double value = 0.0;
  // No pair constrained the scalar; value is the neutral default.
  bool vacuous = false;
  SubsetMode mode = SubsetMode::kExhaustive;
  int64_t pairs_evaluated = 0;
};

absl::StatusOr<RatioEstimate> GreedySubmodularityRatio(
    const Dataset& candidates, const GreedyTrace& trace, int k,
    const UtilityClass& utilities, const SubsetEnumeration& subsets,
    HappinessCache& cache);

absl::StatusOr<RatioEstimate> GreedyCurvature(
    const Dataset& candidates, const GreedyTrace& trace, int k,
    const UtilityClass& utilities, const SubsetEnumeration& subsets,
    HappinessCache& cache);

// (1/alpha) [1 - (1 - alpha gamma / k)^(k-1)], with the alpha -> 0 limit
// gamma (k-1) / k.
absl::StatusOr<double> PresGreedBound(double alpha, double gamma, int k);

// 1 - exp(-(1 - eps)(k - 1) gamma / (lambda k)).
absl::StatusOr<double> StocBound(double epsilon, double lambda, double gamma,
                                 int k);

struct AnalysisOptions {
  int64_t subset_budget = kDefaultSubsetBudget;
  uint64_t seed = 0;
  double epsilon = 0.1;
  double lambda = 1.1;
  bool run_optimal = true;
  int64_t oracle_budget = kDefaultOracleBudget;
  SelectionOptions selection;
};

struct AnalysisReport {
  int k = 0;
  std::vector<PointId> presgreed_ids;
  double presgreed_value = 0.0;
  RatioEstimate gamma;
  RatioEstimate alpha;
  SubsetMode subset_mode = SubsetMode::kExhaustive;
  int64_t subset_count = 0;
  int64_t subset_budget = 0;
  uint64_t seed = 0;
  double epsilon = 0.0;
  double lambda = 0.0;
  double presgreed_bound = 0.0;
  double stoc_bound = 0.0;
  // Present when the exhaustive oracle ran within budget.
  std::optional<double> optimal_value;
  std::optional<std::vector<PointId>> optimal_ids;
  // presgreed_value >= presgreed_bound * optimal_value (within 1e-9).
  std::optional<bool> presgreed_bound_holds;
};

// Runs PresGreed, estimates gamma and alpha on its trace, evaluates both
// bounds and, when affordable, the exhaustive optimum.
absl::StatusOr<AnalysisReport> Analyze(const Dataset& candidates, int k,
                                       const UtilityClass& utilities,
                                       const AnalysisOptions& options = {});

}  // namespace kregret

#endif  // KREGRET_ANALYSIS_H_
