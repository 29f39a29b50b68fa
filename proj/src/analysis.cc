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

#include "kregret/analysis.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace kregret {
namespace {

constexpr double kGainTolerance = 1e-12;

std::vector<PointId> Union(const std::vector<PointId>& a,
                           const std::vector<PointId>& b) {
  std::vector<PointId> out(a);
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Contains(const std::vector<PointId>& sorted, PointId id) {
  return std::binary_search(sorted.begin(), sorted.end(), id);
}

std::vector<PointId> Sorted(std::vector<PointId> ids) {
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

std::string_view SubsetModeName(SubsetMode mode) {
  return mode == SubsetMode::kExhaustive ? "exhaustive" : "sampled";
}

absl::StatusOr<SubsetEnumeration> EnumerateSubsets(const Dataset& candidates,
                                                   int k, int64_t budget,
                                                   uint64_t seed) {
  const int64_t n = static_cast<int64_t>(candidates.size());
  if (k < 1 || k > n) {
    return absl::InvalidArgumentError(
        absl::StrFormat("subset size %d outside [1, %d]", k, n));
  }
  if (budget < 1) return absl::InvalidArgumentError("budget must be positive");
  SubsetEnumeration out;
  out.budget = budget;
  out.seed = seed;
  const std::vector<PointId> ids = candidates.ids();

  const int64_t total = CountSubsetsUpTo(n, k) - CountSubsetsUpTo(n, k - 1);
  if (total <= budget) {
    out.mode = SubsetMode::kExhaustive;
    out.subsets.reserve(total);
    std::vector<int> index(k);
    std::iota(index.begin(), index.end(), 0);
    while (true) {
      std::vector<PointId> subset(k);
      for (int j = 0; j < k; ++j) subset[j] = ids[index[j]];
      out.subsets.push_back(Sorted(std::move(subset)));
      int j = k - 1;
      while (j >= 0 && index[j] == n - k + j) --j;
      if (j < 0) break;
      ++index[j];
      for (int t = j + 1; t < k; ++t) index[t] = index[t - 1] + 1;
    }
    return out;
  }

  // Floyd's algorithm draws one uniform k-subset per round; duplicates are
  // rejected until `budget` distinct subsets exist.
  out.mode = SubsetMode::kSampled;
  std::mt19937_64 rng(seed);
  std::set<std::vector<PointId>> seen;
  out.subsets.reserve(budget);
  while (static_cast<int64_t>(out.subsets.size()) < budget) {
    std::set<int64_t> chosen;
    for (int64_t j = n - k; j < n; ++j) {
      std::uniform_int_distribution<int64_t> pick(0, j);
      const int64_t t = pick(rng);
      if (!chosen.insert(t).second) chosen.insert(j);
    }
    std::vector<PointId> subset;
    subset.reserve(k);
    for (int64_t idx : chosen) subset.push_back(ids[idx]);
    subset = Sorted(std::move(subset));
    if (seen.insert(subset).second) out.subsets.push_back(std::move(subset));
  }
  return out;
}

absl::StatusOr<double> HappinessCache::Value(std::vector<PointId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (auto it = values_.find(ids); it != values_.end()) return it->second;
  auto h = MinHappiness(data_, ids, utilities_, options_);
  if (!h.ok()) return h.status();
  values_.emplace(std::move(ids), *h);
  return *h;
}

absl::StatusOr<RatioEstimate> GreedySubmodularityRatio(
    const Dataset& candidates, const GreedyTrace& trace, int k,
    const UtilityClass& utilities, const SubsetEnumeration& subsets,
    HappinessCache& cache) {
  (void)candidates;
  (void)utilities;
  RatioEstimate estimate;
  estimate.mode = subsets.mode;
  double gamma = 1.0;
  const size_t last = std::min<size_t>(k - 1, trace.steps.size());
  for (size_t i = 0; i <= last && i < static_cast<size_t>(k); ++i) {
    const std::vector<PointId> base = Sorted(trace.Prefix(i));
    auto h_base = cache.Value(base);
    if (!h_base.ok()) return h_base.status();
    for (const std::vector<PointId>& t : subsets.subsets) {
      auto h_union = cache.Value(Union(base, t));
      if (!h_union.ok()) return h_union.status();
      const double set_gain = *h_union - *h_base;
      if (set_gain <= kGainTolerance) continue;
      double singleton_sum = 0.0;
      for (PointId p : t) {
        if (Contains(base, p)) continue;
        auto h_p = cache.Value(Union(base, {p}));
        if (!h_p.ok()) return h_p.status();
        singleton_sum += *h_p - *h_base;
      }
      gamma = std::min(gamma, singleton_sum / set_gain);
      ++estimate.pairs_evaluated;
    }
  }
  estimate.vacuous = estimate.pairs_evaluated == 0;
  estimate.value = std::clamp(gamma, 0.0, 1.0);
  return estimate;
}

absl::StatusOr<RatioEstimate> GreedyCurvature(
    const Dataset& candidates, const GreedyTrace& trace, int k,
    const UtilityClass& utilities, const SubsetEnumeration& subsets,
    HappinessCache& cache) {
  (void)candidates;
  (void)utilities;
  RatioEstimate estimate;
  estimate.mode = subsets.mode;
  double alpha = 0.0;
  // q_i ranges over S_{k-1}, i.e. steps 1..k-1.
  const size_t last = std::min<size_t>(k - 1, trace.steps.size());
  for (size_t i = 1; i <= last; ++i) {
    const PointId q = trace.steps[i - 1].chosen;
    const std::vector<PointId> base = Sorted(trace.Prefix(i - 1));
    auto h_base = cache.Value(base);
    if (!h_base.ok()) return h_base.status();
    auto h_base_q = cache.Value(Union(base, {q}));
    if (!h_base_q.ok()) return h_base_q.status();
    const double own_gain = *h_base_q - *h_base;
    if (own_gain <= kGainTolerance) continue;
    for (const std::vector<PointId>& t : subsets.subsets) {
      if (Contains(t, q)) continue;
      const std::vector<PointId> context = Union(base, t);
      auto h_context = cache.Value(context);
      if (!h_context.ok()) return h_context.status();
      auto h_context_q = cache.Value(Union(context, {q}));
      if (!h_context_q.ok()) return h_context_q.status();
      const double eroded_gain = *h_context_q - *h_context;
      alpha = std::max(alpha, 1.0 - eroded_gain / own_gain);
      ++estimate.pairs_evaluated;
    }
  }
  estimate.vacuous = estimate.pairs_evaluated == 0;
  estimate.value = std::clamp(alpha, 0.0, 1.0);
  return estimate;
}

absl::StatusOr<double> PresGreedBound(double alpha, double gamma, int k) {
  if (!(alpha >= 0.0 && alpha <= 1.0) || !(gamma >= 0.0 && gamma <= 1.0)) {
    return absl::InvalidArgumentError("alpha and gamma must lie in [0, 1]");
  }
  if (k < 2) return absl::InvalidArgumentError("bound needs k >= 2");
  const double steps = k - 1;
  if (alpha < 1e-12) return gamma * steps / k;
  // (1/a)[1 - (1 - a g / k)^(k-1)] written with expm1/log1p so that small
  // alpha keeps full precision.
  const double value =
      -std::expm1(steps * std::log1p(-alpha * gamma / k)) / alpha;
  return std::clamp(value, 0.0, 1.0);
}

absl::StatusOr<double> StocBound(double epsilon, double lambda, double gamma,
                                 int k) {
  if (!(epsilon > 0.0 && epsilon <= 1.0) || !(lambda >= 1.0) ||
      !(gamma >= 0.0 && gamma <= 1.0)) {
    return absl::InvalidArgumentError(
        "need eps in (0, 1], lambda >= 1 and gamma in [0, 1]");
  }
  if (k < 2) return absl::InvalidArgumentError("bound needs k >= 2");
  const double exponent = (1.0 - epsilon) * (k - 1) * gamma / (lambda * k);
  return std::clamp(-std::expm1(-exponent), 0.0, 1.0);
}

absl::StatusOr<AnalysisReport> Analyze(const Dataset& candidates, int k,
                                       const UtilityClass& utilities,
                                       const AnalysisOptions& options) {
  if (k < 2) return absl::InvalidArgumentError("analysis needs k >= 2");
  if (static_cast<size_t>(k) > candidates.size()) {
    return absl::InvalidArgumentError("analysis needs k <= |C|");
  }
  AnalysisReport report;
  report.k = k;
  report.seed = options.seed;
  report.epsilon = options.epsilon;
  report.lambda = options.lambda;

  auto greedy = PresGreed(candidates, k, utilities, options.selection);
  if (!greedy.ok()) return greedy.status();
  report.presgreed_ids = greedy->selected_ids;
  report.presgreed_value = greedy->min_happiness;

  auto subsets =
      EnumerateSubsets(candidates, k, options.subset_budget, options.seed);
  if (!subsets.ok()) return subsets.status();
  report.subset_mode = subsets->mode;
  report.subset_count = static_cast<int64_t>(subsets->subsets.size());
  report.subset_budget = options.subset_budget;

  HappinessCache cache(candidates, utilities,
                       EvalOptions{options.selection.simplex, nullptr});
  auto gamma = GreedySubmodularityRatio(candidates, greedy->trace, k,
                                        utilities, *subsets, cache);
  if (!gamma.ok()) return gamma.status();
  auto alpha = GreedyCurvature(candidates, greedy->trace, k, utilities,
                               *subsets, cache);
  if (!alpha.ok()) return alpha.status();
  report.gamma = *gamma;
  report.alpha = *alpha;

  auto pg_bound = PresGreedBound(alpha->value, gamma->value, k);
  if (!pg_bound.ok()) return pg_bound.status();
  auto sp_bound = StocBound(options.epsilon, options.lambda, gamma->value, k);
  if (!sp_bound.ok()) return sp_bound.status();
  report.presgreed_bound = *pg_bound;
  report.stoc_bound = *sp_bound;

  if (options.run_optimal) {
    auto optimal = ExhaustiveOptimal(candidates, k, utilities,
                                     options.oracle_budget,
                                     options.selection.simplex);
    if (optimal.ok()) {
      report.optimal_value = optimal->min_happiness;
      report.optimal_ids = optimal->selected_ids;
      report.presgreed_bound_holds =
          report.presgreed_value >=
          report.presgreed_bound * optimal->min_happiness - 1e-9;
    } else if (!absl::IsResourceExhausted(optimal.status())) {
      return optimal.status();
    }
  }
  return report;
}

}  // namespace kregret
