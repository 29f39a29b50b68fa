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

#include "kregret/selection.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>
#include <unordered_set>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace kregret {
namespace {

using Clock = std::chrono::steady_clock;

absl::Status CheckInputs(const Dataset& candidates, int k,
                         const UtilityClass& utilities) {
  if (k < 1) return absl::InvalidArgumentError("k must be at least 1");
  if (candidates.empty()) {
    return absl::InvalidArgumentError("candidate set is empty");
  }
  if (utilities.is_finite() &&
      utilities.vectors().front().dim() != candidates.dim()) {
    return absl::InvalidArgumentError(
        "utility class and candidates differ in dimensionality");
  }
  return absl::OkStatus();
}

// Restricted ratio of every pooled candidate against `selected`, in pool
// order. LP counts are summed per worker and added once at the end.
absl::StatusOr<std::vector<double>> EvaluatePool(
    const Dataset& candidates, std::span<const Point* const> selected,
    std::span<const size_t> pool, const UtilityClass& utilities,
    const SelectionOptions& options, int64_t& lp_evaluations) {
  std::vector<double> values(pool.size(), 1.0);
  const size_t workers = std::clamp<size_t>(
      options.workers < 1 ? 1 : static_cast<size_t>(options.workers), 1,
      std::max<size_t>(1, pool.size()));
  std::vector<int64_t> counters(workers, 0);
  std::vector<absl::Status> errors(workers);

  auto run = [&](size_t worker) {
    EvalOptions eval{options.simplex, &counters[worker]};
    for (size_t i = worker; i < pool.size(); i += workers) {
      auto h = RestrictedMinHappiness(selected, candidates[pool[i]], utilities,
                                      eval);
      if (!h.ok()) {
        errors[worker] = h.status();
        return;
      }
      values[i] = *h;
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (size_t w = 0; w < workers; ++w) threads.emplace_back(run, w);
  }
  for (size_t w = 0; w < workers; ++w) {
    if (!errors[w].ok()) return errors[w];
    lp_evaluations += counters[w];
  }
  return values;
}

// Fills marginal gains and the final min happiness from the chosen ids.
absl::Status Finish(const Dataset& candidates, const UtilityClass& utilities,
                    const SelectionOptions& options, SelectionResult& result) {
  EvalOptions eval{options.simplex, nullptr};
  if (options.record_gains) {
    double previous = 0.0;
    for (size_t i = 0; i < result.trace.steps.size(); ++i) {
      std::vector<PointId> prefix = result.trace.Prefix(i + 1);
      auto h = MinHappiness(candidates, prefix, utilities, eval);
      if (!h.ok()) return h.status();
      result.trace.steps[i].marginal_gain = std::max(0.0, *h - previous);
      previous = std::max(previous, *h);
    }
    result.min_happiness = previous;
  } else {
    auto h = MinHappiness(candidates, result.selected_ids, utilities, eval);
    if (!h.ok()) return h.status();
    result.min_happiness = *h;
  }
  result.max_regret = 1.0 - result.min_happiness;
  return absl::OkStatus();
}

SelectionResult TakeEverything(const Dataset& candidates) {
  SelectionResult result;
  result.truncated = true;
  int step = 1;
  for (const Point& p : candidates.points()) {
    result.selected_ids.push_back(p.id);
    result.trace.steps.push_back({step++, p.id, std::nullopt, std::nullopt});
  }
  return result;
}

// Pool of dataset indices to scan at a given step, in dataset order.
using PoolFn = std::function<std::vector<size_t>(
    std::span<const size_t> remaining, int step)>;

absl::StatusOr<SelectionResult> PreselectGreedy(
    const Dataset& candidates, int k, const UtilityClass& utilities,
    const SelectionOptions& options, const PoolFn& pool_fn) {
  if (absl::Status s = CheckInputs(candidates, k, utilities); !s.ok()) {
    return s;
  }
  const int d = candidates.dim();
  if (options.preselect_dimension < 0 || options.preselect_dimension >= d) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "preselect dimension %d outside [0, %d)", options.preselect_dimension,
        d));
  }
  if (static_cast<size_t>(k) > candidates.size()) {
    SelectionResult result = TakeEverything(candidates);
    if (absl::Status s = Finish(candidates, utilities, options, result);
        !s.ok()) {
      return s;
    }
    return result;
  }

  const auto start = Clock::now();
  SelectionResult result;
  size_t first = 0;
  for (size_t i = 1; i < candidates.size(); ++i) {
    if (candidates[i].coords[options.preselect_dimension] >
        candidates[first].coords[options.preselect_dimension]) {
      first = i;
    }
  }
  std::vector<bool> taken(candidates.size(), false);
  std::vector<const Point*> selected = {&candidates[first]};
  taken[first] = true;
  result.selected_ids.push_back(candidates[first].id);
  result.trace.steps.push_back({1, candidates[first].id, std::nullopt,
                                std::nullopt});

  std::vector<size_t> remaining;
  for (int step = 2; step <= k; ++step) {
    remaining.clear();
    for (size_t i = 0; i < candidates.size(); ++i) {
      if (!taken[i]) remaining.push_back(i);
    }
    if (remaining.empty()) break;
    const std::vector<size_t> pool = pool_fn(remaining, step);
    auto values = EvaluatePool(candidates, selected, pool, utilities, options,
                               result.trace.lp_evaluations);
    if (!values.ok()) return values.status();

    // Strict improvement from h* = 1, first winner in pool order.
    double best = 1.0 - kRatioTolerance;
    std::optional<size_t> winner;
    for (size_t i = 0; i < pool.size(); ++i) {
      if ((*values)[i] < best) {
        best = (*values)[i];
        winner = i;
      }
    }
    if (!winner.has_value()) break;
    const size_t chosen = pool[*winner];
    taken[chosen] = true;
    selected.push_back(&candidates[chosen]);
    result.selected_ids.push_back(candidates[chosen].id);
    result.trace.steps.push_back(
        {step, candidates[chosen].id, (*values)[*winner], std::nullopt});
  }
  result.trace.elapsed = Clock::now() - start;

  if (absl::Status s = Finish(candidates, utilities, options, result);
      !s.ok()) {
    return s;
  }
  return result;
}

}  // namespace

std::vector<PointId> UniformSample(std::span<const PointId> remaining,
                                   int64_t count, int /*step*/,
                                   std::mt19937_64& rng) {
  std::vector<PointId> pool(remaining.begin(), remaining.end());
  const size_t take =
      std::min<size_t>(pool.size(), static_cast<size_t>(std::max<int64_t>(
                                        count, 0)));
  for (size_t i = 0; i < take; ++i) {
    std::uniform_int_distribution<size_t> pick(i, pool.size() - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(take);
  return pool;
}

absl::StatusOr<int64_t> SampleSize(int64_t n, int k, double epsilon,
                                   double lambda) {
  if (n < 1 || k < 1) {
    return absl::InvalidArgumentError("sample size needs n >= 1 and k >= 1");
  }
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    return absl::InvalidArgumentError("epsilon must lie in (0, 1]");
  }
  if (!(lambda >= 1.0)) {
    return absl::InvalidArgumentError("lambda must be at least 1");
  }
  const double denominator = lambda - 1.0 + epsilon;
  if (!(denominator > 0.0)) {
    return absl::InvalidArgumentError("lambda - 1 + epsilon must be positive");
  }
  const double s = static_cast<double>(n) / k * std::log(lambda / denominator);
  // Guard against 1705.0000000001 style round-off before taking the ceiling.
  const double rounded = std::round(s);
  const double ceiled =
      std::abs(s - rounded) < 1e-9 * std::max(1.0, s) ? rounded : std::ceil(s);
  return std::max<int64_t>(1, static_cast<int64_t>(ceiled));
}

absl::StatusOr<SelectionResult> PresGreed(const Dataset& candidates, int k,
                                          const UtilityClass& utilities,
                                          const SelectionOptions& options) {
  return PreselectGreedy(
      candidates, k, utilities, options,
      [](std::span<const size_t> remaining, int) {
        return std::vector<size_t>(remaining.begin(), remaining.end());
      });
}

absl::StatusOr<SelectionResult> StocPresGreed(
    const Dataset& candidates, int k, const UtilityClass& utilities,
    const StochasticOptions& stochastic, const SelectionOptions& options) {
  if (absl::Status s = CheckInputs(candidates, k, utilities); !s.ok()) {
    return s;
  }
  auto s = SampleSize(static_cast<int64_t>(candidates.size()), k,
                      stochastic.epsilon, stochastic.lambda);
  if (!s.ok()) return s.status();
  const int64_t sample_size = *s;

  std::mt19937_64 rng(stochastic.seed);
  const CandidateSampler& sampler =
      stochastic.sampler ? stochastic.sampler : CandidateSampler(UniformSample);
  absl::Status sampler_error;
  auto pool_fn = [&](std::span<const size_t> remaining, int step) {
    std::vector<PointId> ids;
    ids.reserve(remaining.size());
    for (size_t idx : remaining) ids.push_back(candidates[idx].id);
    std::vector<PointId> drawn = sampler(ids, sample_size, step, rng);
    std::vector<size_t> pool;
    pool.reserve(drawn.size());
    std::unordered_set<PointId> seen;
    for (PointId id : drawn) {
      auto idx = candidates.IndexOf(id);
      if (!idx.has_value() || !seen.insert(id).second ||
          !std::binary_search(remaining.begin(), remaining.end(), *idx)) {
        sampler_error = absl::InvalidArgumentError(absl::StrFormat(
            "sampler returned id %d that is not a distinct remaining "
            "candidate",
            id));
        continue;
      }
      pool.push_back(*idx);
    }
    std::sort(pool.begin(), pool.end());
    return pool;
  };
  auto result = PreselectGreedy(candidates, k, utilities, options, pool_fn);
  if (!sampler_error.ok()) return sampler_error;
  return result;
}

absl::StatusOr<SelectionResult> NaiveGreedy(const Dataset& candidates, int k,
                                            const UtilityClass& utilities,
                                            const SelectionOptions& options) {
  if (absl::Status s = CheckInputs(candidates, k, utilities); !s.ok()) {
    return s;
  }
  if (static_cast<size_t>(k) > candidates.size()) {
    SelectionResult result = TakeEverything(candidates);
    if (absl::Status s = Finish(candidates, utilities, options, result);
        !s.ok()) {
      return s;
    }
    return result;
  }
  const auto start = Clock::now();
  SelectionResult result;
  EvalOptions eval{options.simplex, &result.trace.lp_evaluations};
  std::vector<bool> taken(candidates.size(), false);
  double current = 0.0;
  for (int step = 1; step <= k; ++step) {
    double best = -1.0;
    std::optional<size_t> winner;
    std::vector<PointId> trial = result.selected_ids;
    trial.push_back(0);
    for (size_t i = 0; i < candidates.size(); ++i) {
      if (taken[i]) continue;
      trial.back() = candidates[i].id;
      auto h = MinHappiness(candidates, trial, utilities, eval);
      if (!h.ok()) return h.status();
      if (*h > best + kRatioTolerance) {
        best = *h;
        winner = i;
      }
    }
    if (!winner.has_value()) break;
    taken[*winner] = true;
    result.selected_ids.push_back(candidates[*winner].id);
    result.trace.steps.push_back({step, candidates[*winner].id, std::nullopt,
                                  std::max(0.0, best - current)});
    current = std::max(current, best);
  }
  result.trace.elapsed = Clock::now() - start;
  result.min_happiness = current;
  result.max_regret = 1.0 - current;
  return result;
}

int64_t CountSubsetsUpTo(int64_t n, int k) {
  constexpr int64_t kMax = std::numeric_limits<int64_t>::max();
  int64_t total = 0;
  int64_t binom = 1;  // C(n, 0)
  for (int64_t r = 1; r <= std::min<int64_t>(k, n); ++r) {
    // C(n, r) = C(n, r-1) * (n - r + 1) / r, exact at every step.
    const __int128 next = static_cast<__int128>(binom) * (n - r + 1) / r;
    if (next > kMax) return kMax;
    binom = static_cast<int64_t>(next);
    if (total > kMax - binom) return kMax;
    total += binom;
  }
  return total;
}

absl::StatusOr<SelectionResult> ExhaustiveOptimal(
    const Dataset& candidates, int k, const UtilityClass& utilities,
    int64_t budget, const SimplexOptions& simplex) {
  if (absl::Status s = CheckInputs(candidates, k, utilities); !s.ok()) {
    return s;
  }
  const int64_t n = static_cast<int64_t>(candidates.size());
  const int64_t count = CountSubsetsUpTo(n, k);
  if (count > budget) {
    return absl::ResourceExhaustedError(absl::StrFormat(
        "exhaustive search needs %d subsets, budget is %d", count, budget));
  }
  const auto start = Clock::now();
  SelectionResult result;
  EvalOptions eval{simplex, &result.trace.lp_evaluations};
  double best = -1.0;
  std::vector<PointId> best_ids;
  const int max_size = static_cast<int>(std::min<int64_t>(k, n));
  for (int size = 1; size <= max_size; ++size) {
    std::vector<int> index(size);
    std::iota(index.begin(), index.end(), 0);
    std::vector<PointId> ids(size);
    while (true) {
      for (int j = 0; j < size; ++j) ids[j] = candidates[index[j]].id;
      std::vector<PointId> sorted_ids = ids;
      std::sort(sorted_ids.begin(), sorted_ids.end());
      auto h = MinHappiness(candidates, ids, utilities, eval);
      if (!h.ok()) return h.status();
      const bool better = *h > best + 1e-12;
      const bool tie = std::abs(*h - best) <= 1e-12 &&
                       std::lexicographical_compare(
                           sorted_ids.begin(), sorted_ids.end(),
                           best_ids.begin(), best_ids.end());
      if (better || tie) {
        best = std::max(best, *h);
        best_ids = sorted_ids;
      }
      // Next combination in lexicographic order.
      int j = size - 1;
      while (j >= 0 && index[j] == n - size + j) --j;
      if (j < 0) break;
      ++index[j];
      for (int t = j + 1; t < size; ++t) index[t] = index[t - 1] + 1;
    }
  }
  result.trace.elapsed = Clock::now() - start;
  result.selected_ids = best_ids;
  for (size_t i = 0; i < best_ids.size(); ++i) {
    result.trace.steps.push_back(
        {static_cast<int>(i) + 1, best_ids[i], std::nullopt, std::nullopt});
  }
  result.min_happiness = best;
  result.max_regret = 1.0 - best;
  return result;
}

}  // namespace kregret
