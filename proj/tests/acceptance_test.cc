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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "absl/strings/numbers.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "kregret/analysis.h"
#include "kregret/data_io.h"
#include "kregret/happiness.h"
#include "kregret/selection.h"
#include "kregret/skyline.h"
#include "oracles.h"

namespace kregret {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double Round2(double x) { return std::floor(x * 100.0 + 0.5 + 1e-9) / 100.0; }

// Expected toy rows: utility and h.r. per vector, then min h.r.
struct ToyScoreRow {
  PointId id;
  double utility[4];
  double ratio[4];
  double min_ratio;
};

const std::vector<ToyScoreRow>& ToyScores() {
  static const auto* rows = new std::vector<ToyScoreRow>{
      {1, {0.96, 0.60, 0.61, 0.72}, {1.00, 0.63, 0.84, 1.00}, 0.63},
      {2, {0.88, 0.54, 0.67, 0.69}, {0.92, 0.57, 0.92, 0.96}, 0.57},
      {3, {0.80, 0.39, 0.73, 0.64}, {0.83, 0.41, 1.00, 0.89}, 0.41},
      {4, {0.74, 0.66, 0.32, 0.57}, {0.77, 0.69, 0.44, 0.79}, 0.44},
      {5, {0.68, 0.85, 0.46, 0.66}, {0.71, 0.89, 0.63, 0.92}, 0.63},
      {6, {0.66, 0.40, 0.68, 0.58}, {0.69, 0.42, 0.93, 0.81}, 0.42},
      {7, {0.66, 0.85, 0.48, 0.66}, {0.69, 0.89, 0.66, 0.92}, 0.66},
      {8, {0.64, 0.29, 0.73, 0.56}, {0.67, 0.31, 1.00, 0.78}, 0.31},
      {9, {0.62, 0.95, 0.44, 0.67}, {0.66, 1.00, 0.60, 0.93}, 0.60}};
  return *rows;
}

Outcome ToyScoreCheck() {
  const auto start = Clock::now();
  const ToyInstance toy = NbaToy();
  const auto vectors = toy.utilities.vectors();
  int mismatches = 0;
  int exact_min = 0;
  std::string cells;
  for (const ToyScoreRow& row : ToyScores()) {
    const std::vector<PointId> s = {row.id};
    for (int j = 0; j < 4; ++j) {
      const double u = toy.utilities.precision().Apply(
          *Utility(vectors[j], *toy.data.Find(row.id)));
      const double h = *HappinessRatio(toy.data, s, vectors[j],
                                       toy.utilities.precision());
      if (std::abs(u - row.utility[j]) > 0.005) {
        ++mismatches;
        cells += absl::StrFormat(" id %d u%d utility %.4f vs %.2f;", row.id,
                                 j, u, row.utility[j]);
      }
      if (std::abs(h - row.ratio[j]) > 0.005) {
        ++mismatches;
        cells += absl::StrFormat(" id %d u%d h.r. %.4f vs %.2f;", row.id, j,
                                 h, row.ratio[j]);
      }
    }
    const double m = *MinHappiness(toy.data, s, toy.utilities);
    if (Round2(m) == row.min_ratio) ++exact_min;
  }
  const double secs = Seconds(start);
  return {mismatches == 0 && exact_min == 9 && secs < 1.0,
          absl::StrFormat("72 cells, %d outside +/-0.005:%s min h.r. exact "
                          "%d/9; %.3fs",
                          mismatches, cells, exact_min, secs)};
}

Outcome ToyPresGreedCheck() {
  const auto start = Clock::now();
  const ToyInstance toy = NbaToy();
  auto result = PresGreed(toy.data, 3, toy.utilities);
  if (!result.ok()) return {false, std::string(result.status().message())};
  const std::map<PointId, double> iteration1 = {
      {2, 0.91}, {3, 0.84}, {4, 0.91}, {5, 0.71},
      {6, 0.90}, {7, 0.71}, {8, 0.84}, {9, 0.63}};
  const std::map<PointId, double> iteration2 = {
      {2, 0.91}, {3, 0.84}, {4, 1.00}, {5, 1.00},
      {6, 0.90}, {7, 1.00}, {8, 0.84}};
  int mismatches = 0;
  auto check = [&](const std::vector<PointId>& s,
                   const std::map<PointId, double>& printed) {
    std::vector<const Point*> selected;
    for (PointId id : s) selected.push_back(toy.data.Find(id));
    for (const auto& [id, value] : printed) {
      const double h = *RestrictedMinHappiness(selected, *toy.data.Find(id),
                                               toy.utilities);
      if (std::abs(h - value) > 0.005) ++mismatches;
    }
  };
  check({1}, iteration1);
  check({1, 9}, iteration2);
  const bool order = result->selected_ids == std::vector<PointId>{1, 9, 3};
  const double secs = Seconds(start);
  return {order && mismatches == 0 && Round2(result->min_happiness) == 1.0 &&
              secs < 1.0,
          absl::StrFormat("ids %s, 15 H_{i,j} with %d mismatches, final "
                          "%.2f; %.3fs",
                          order ? "(1,9,3)" : "WRONG", mismatches,
                          result->min_happiness, secs)};
}

Outcome ToyReplayCheck() {
  const ToyInstance toy = NbaToy();
  struct Row {
    std::vector<PointId> first, second, expected;
    double value;
  };
  const std::vector<Row> rows = {
      {{2, 3, 6, 7, 8, 9}, {2, 3, 4, 5, 6, 8}, {1, 9, 3}, 1.00},
      {{2, 5, 6, 7, 9}, {2, 4, 5, 6, 8}, {1, 9, 8}, 1.00},
      {{2, 4, 7, 8}, {3, 4, 5, 9}, {1, 7, 3}, 0.89},
      {{2, 6, 7}, {2, 4, 5}, {1, 7, 2}, 0.89}};
  int matches = 0;
  double sum = 0.0;
  for (const Row& row : rows) {
    StochasticOptions stochastic;
    stochastic.sampler = [&row](std::span<const PointId>, int64_t, int step,
                                std::mt19937_64&) {
      return step == 2 ? row.first : row.second;
    };
    auto result = StocPresGreed(toy.data, 3, toy.utilities, stochastic);
    if (!result.ok()) return {false, std::string(result.status().message())};
    const double value = Round2(result->min_happiness);
    sum += value;
    if (result->selected_ids == row.expected && value == row.value) ++matches;
  }
  const double mean = sum / 4.0;
  return {matches == 4 && std::abs(mean - 0.945) < 1e-12,
          absl::StrFormat("%d/4 runs match; mean of printed-precision "
                          "values %.3f",
                          matches, mean)};
}

Outcome NonSubmodularCheck() {
  auto data = Dataset::Create({{1, {0.0, 1.0}}, {2, {1.0, 0.0}}});
  auto u = UtilityClass::Finite(
      {*UtilityVector::Create({1.0, 0.0}), *UtilityVector::Create({0.0, 1.0})});
  const std::vector<PointId> s1 = {1};
  const std::vector<PointId> s2 = {2};
  const std::vector<PointId> all = {1, 2};
  const double h_all = *MinHappiness(*data, all, *u);
  const double h1 = *MinHappiness(*data, s1, *u);
  const double h2 = *MinHappiness(*data, s2, *u);
  const double h0 = *MinHappiness(*data, {}, *u);
  const bool values = std::abs(h_all - 1.0) <= 1e-12 && std::abs(h1) <= 1e-12 &&
                      std::abs(h2) <= 1e-12 && std::abs(h0) <= 1e-12;
  const bool violated = h1 + h2 < h_all + h0 - 1e-12;
  return {values && violated,
          absl::StrFormat("H(D)=%g H(S1)=%g H(S2)=%g H(empty)=%g; "
                          "H(S1)+H(S2) < H(S1 u S2)+H(S1 n S2): %s",
                          h_all, h1, h2, h0, violated ? "yes" : "no")};
}

Outcome PerVectorPropertyCheck() {
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> n_dist(2, 8);
  std::uniform_int_distribution<int> d_dist(1, 4);
  int64_t checks = 0;
  int64_t violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = n_dist(rng);
    const int d = d_dist(rng);
    std::vector<std::vector<double>> rows(n, std::vector<double>(d));
    for (auto& r : rows) {
      for (double& c : r) c = unit(rng);
    }
    std::vector<double> w(d);
    for (double& c : w) c = unit(rng);
    w[0] += 0.01;
    rows[0][0] += 0.01;  // keeps max utility positive
    auto data = Dataset::FromRows(rows);
    auto u = UtilityClass::Finite({*UtilityVector::Create(w)});
    const uint32_t full = (1u << n) - 1;
    std::vector<double> h(full + 1);
    for (uint32_t mask = 0; mask <= full; ++mask) {
      std::vector<PointId> ids;
      for (int i = 0; i < n; ++i) {
        if (mask >> i & 1) ids.push_back(i);
      }
      h[mask] = *MinHappiness(*data, ids, *u);
    }
    for (uint32_t s2 = 0; s2 <= full; ++s2) {
      for (uint32_t s1 = s2;; s1 = (s1 - 1) & s2) {
        ++checks;
        if (h[s1] > h[s2] + 1e-12) ++violations;
        for (int q = 0; q < n; ++q) {
          if (s2 >> q & 1) continue;
          ++checks;
          const double d1 = h[s1 | 1u << q] - h[s1];
          const double d2 = h[s2 | 1u << q] - h[s2];
          if (d1 < d2 - 1e-12) ++violations;
        }
        if (s1 == 0) break;
      }
    }
  }
  return {violations == 0,
          absl::StrFormat("1000 instances, %d nested-pair checks, %d "
                          "violations",
                          checks, violations)};
}

Outcome LpGridCheck() {
  const auto start = Clock::now();
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto grid2 = oracle::SimplexGrid(2, 100);
  const auto grid3 = oracle::SimplexGrid(3, 100);
  int bad = 0;
  double worst_gap = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + trial % 2;
    const int m = 1 + static_cast<int>(unit(rng) * 4);
    std::vector<Point> s;
    std::vector<oracle::Vec> raw;
    for (int i = 0; i < m; ++i) {
      std::vector<double> x(d);
      for (double& c : x) c = unit(rng);
      s.push_back({i, x});
      raw.push_back(x);
    }
    std::vector<double> x(d);
    for (double& c : x) c = 0.01 + unit(rng);
    std::vector<const Point*> ptrs;
    for (const Point& p : s) ptrs.push_back(&p);
    const double lp =
        *RestrictedMinHappiness(ptrs, Point{99, x}, UtilityClass::FullLinear());
    const double grid =
        oracle::GridRestrictedRatio(raw, x, d == 2 ? grid2 : grid3);
    worst_gap = std::max(worst_gap, grid - lp);
    if (lp > grid + 1e-9 || lp < grid - 0.02) ++bad;
  }
  const double secs = Seconds(start);
  return {bad == 0 && secs < 30.0,
          absl::StrFormat("100 instances, %d outside [grid-0.02, grid+1e-9], "
                          "max gap %.4f; %.2fs",
                          bad, worst_gap, secs)};
}

Outcome DeterministicGuaranteeCheck() {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> size_dist(5, 12);
  std::uniform_int_distribution<int> dim_dist(2, 4);
  int violations = 0;
  int bound_formula_mismatch = 0;
  double min_slack = 1.0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = size_dist(rng);
    const int d = dim_dist(rng);
    const int k = 2 + trial % 3;
    auto raw = GenerateAntiCorrelated(n, d, rng());
    if (!raw.ok()) return {false, std::string(raw.status().message())};
    AnalysisOptions options;
    options.subset_budget = 1'000'000;
    options.selection.record_gains = false;
    auto report = Analyze(*raw, k, UtilityClass::FullLinear(), options);
    if (!report.ok()) return {false, std::string(report.status().message())};
    if (report->subset_mode != SubsetMode::kExhaustive ||
        !report->optimal_value.has_value()) {
      return {false, "instance was not solved exhaustively"};
    }
    const double series = oracle::PresGreedBoundSeries(
        report->alpha.value, report->gamma.value, k);
    if (std::abs(series - report->presgreed_bound) > 1e-9) {
      ++bound_formula_mismatch;
    }
    const double slack = report->presgreed_value -
                         report->presgreed_bound * *report->optimal_value;
    min_slack = std::min(min_slack, slack);
    if (slack < -1e-9) ++violations;
  }
  return {violations == 0 && bound_formula_mismatch == 0,
          absl::StrFormat("200 instances, %d violations, min slack %.4f, "
                          "%d bound-formula mismatches",
                          violations, min_slack, bound_formula_mismatch)};
}

absl::StatusOr<Dataset> SkylineCandidates(int64_t n, int d, uint64_t seed) {
  auto raw = GenerateAntiCorrelated(n, d, seed);
  if (!raw.ok()) return raw.status();
  auto sky = ComputeSkyline(*raw);
  if (!sky.ok()) return sky.status();
  return Normalize(*sky);
}

Outcome StochasticGuaranteeCheck() {
  const auto start = Clock::now();
  auto pool = SkylineCandidates(400, 4, 3);
  if (!pool.ok()) return {false, std::string(pool.status().message())};
  if (pool->size() < 50) return {false, "skyline smaller than 50"};
  std::vector<Point> first(pool->points().begin(), pool->points().begin() + 50);
  auto candidates = Normalize(*Dataset::Create(first));
  const UtilityClass full = UtilityClass::FullLinear();
  const int k = 8;
  const double eps = 0.1;
  const double lambda = 1.1;

  AnalysisOptions options;
  options.subset_budget = 1000;
  options.seed = 1;
  options.epsilon = eps;
  options.lambda = lambda;
  options.run_optimal = false;
  options.selection.record_gains = false;
  auto report = Analyze(*candidates, k, full, options);
  if (!report.ok()) return {false, std::string(report.status().message())};

  SelectionOptions selection;
  selection.record_gains = false;
  std::vector<double> values;
  for (uint64_t seed = 0; seed < 200; ++seed) {
    StochasticOptions stochastic;
    stochastic.epsilon = eps;
    stochastic.lambda = lambda;
    stochastic.seed = seed;
    auto r = StocPresGreed(*candidates, k, full, stochastic, selection);
    if (!r.ok()) return {false, std::string(r.status().message())};
    values.push_back(r->min_happiness);
  }
  const double mean =
      std::accumulate(values.begin(), values.end(), 0.0) / values.size();
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  var /= values.size() - 1;
  const double se = std::sqrt(var / values.size());
  const double threshold =
      report->stoc_bound * report->presgreed_value - 3.0 * se;
  const double secs = Seconds(start);
  return {mean >= threshold && secs < 300.0,
          absl::StrFormat("gamma_hat %.4f (%s, %d T-sets), bound %.4f x "
                          "presgreed %.4f; mean %.4f se %.4f >= %.4f; %.1fs",
                          report->gamma.value,
                          std::string(SubsetModeName(report->subset_mode)),
                          report->subset_count, report->stoc_bound,
                          report->presgreed_value, mean, se, threshold, secs)};
}

Outcome SpeedupCheck() {
  const auto start = Clock::now();
  int64_t n = 10000;
  absl::StatusOr<Dataset> candidates;
  while (true) {
    candidates = SkylineCandidates(n, 6, 2026);
    if (!candidates.ok()) {
      return {false, std::string(candidates.status().message())};
    }
    if (candidates->size() >= 5000) break;
    n *= 2;
  }
  const UtilityClass full = UtilityClass::FullLinear();
  const int k = 30;
  SelectionOptions selection;
  selection.record_gains = false;
  auto baseline = PresGreed(*candidates, k, full, selection);
  if (!baseline.ok()) return {false, std::string(baseline.status().message())};
  int lp_ok = 0;
  int regret_ok = 0;
  double max_ratio = 0.0;
  double max_diff = -1.0;
  for (uint64_t seed = 0; seed < 20; ++seed) {
    StochasticOptions stochastic;
    stochastic.seed = seed;
    auto r = StocPresGreed(*candidates, k, full, stochastic, selection);
    if (!r.ok()) return {false, std::string(r.status().message())};
    const double ratio = static_cast<double>(r->trace.lp_evaluations) /
                         baseline->trace.lp_evaluations;
    const double diff = r->max_regret - baseline->max_regret;
    max_ratio = std::max(max_ratio, ratio);
    max_diff = std::max(max_diff, diff);
    if (ratio <= 0.5) ++lp_ok;
    if (diff <= 0.1) ++regret_ok;
  }
  const double secs = Seconds(start);
  return {lp_ok == 20 && regret_ok >= 18,
          absl::StrFormat("|C|=%d from n=%d; LP ratio <= 0.5 in %d/20 (max "
                          "%.3f); regret diff <= 0.1 in %d/20 (max %.4f); "
                          "presgreed regret %.4f; %.1fs",
                          candidates->size(), n, lp_ok, max_ratio, regret_ok,
                          max_diff, baseline->max_regret, secs)};
}

Outcome MonotoneKCheck() {
  auto candidates = SkylineCandidates(1000, 4, 11);
  if (!candidates.ok()) {
    return {false, std::string(candidates.status().message())};
  }
  const UtilityClass full = UtilityClass::FullLinear();
  SelectionOptions selection;
  selection.record_gains = false;
  double previous = 2.0;
  int increases = 0;
  std::string series;
  for (int k = 1; k <= 15; ++k) {
    auto r = PresGreed(*candidates, k, full, selection);
    if (!r.ok()) return {false, std::string(r.status().message())};
    if (r->max_regret > previous + 1e-12) ++increases;
    previous = r->max_regret;
    if (k == 1 || k == 5 || k == 10 || k == 15) {
      series += absl::StrFormat(" k=%d:%.4f", k, r->max_regret);
    }
  }
  return {increases == 0,
          absl::StrFormat("|C|=%d, %d increases;%s", candidates->size(),
                          increases, series)};
}

Outcome SampleSizeCheck() {
  const int64_t a = *SampleSize(10000, 10, 0.1, 1.1);
  const int64_t b = *SampleSize(10000, 10, 1.0, 1.0);
  const int64_t c = *SampleSize(10000, 10, 0.01, 1.01);
  // Independent evaluation of the same closed form.
  const int64_t a_ref =
      static_cast<int64_t>(std::ceil(1000.0 * std::log(1.1 / 0.2)));
  const int64_t c_ref =
      static_cast<int64_t>(std::ceil(1000.0 * std::log(1.01 / 0.02)));
  return {a == 1705 && b == 1 && c == 3922 && a == a_ref && c == c_ref,
          absl::StrFormat("%d, %d, %d", a, b, c)};
}

}  // namespace
}  // namespace kregret

// Usage: acceptance_test [--known-red=N,M,...]
// Known-red criteria still print FAIL when they fail but do not change the
// exit code. Each one must have a written justification.
int main(int argc, char** argv) {
  using kregret::Outcome;
  std::set<size_t> known_red;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    const std::string prefix = "--known-red=";
    if (arg.rfind(prefix, 0) != 0) {
      std::fprintf(stderr, "unknown argument %s\n", argv[i]);
      return 2;
    }
    for (absl::string_view item :
         absl::StrSplit(arg.substr(prefix.size()), ',', absl::SkipEmpty())) {
      size_t value = 0;
      if (!absl::SimpleAtoi(item, &value)) {
        std::fprintf(stderr, "bad criterion number in %s\n", argv[i]);
        return 2;
      }
      known_red.insert(value);
    }
  }
  const std::vector<std::pair<std::string, std::function<Outcome()>>> checks =
      {{"Toy utilities and happiness ratios", kregret::ToyScoreCheck},
       {"Toy PresGreed steps", kregret::ToyPresGreedCheck},
       {"Toy StocPresGreed replays", kregret::ToyReplayCheck},
       {"Non-submodular witness", kregret::NonSubmodularCheck},
       {"Per-vector monotone submodular property suite",
        kregret::PerVectorPropertyCheck},
       {"LP versus grid oracle", kregret::LpGridCheck},
       {"Deterministic guarantee end to end", kregret::DeterministicGuaranteeCheck},
       {"Stochastic guarantee in expectation", kregret::StochasticGuaranteeCheck},
       {"Sampling speedup at desk scale", kregret::SpeedupCheck},
       {"Regret nonincreasing in k", kregret::MonotoneKCheck},
       {"Sample-size formula", kregret::SampleSizeCheck}};
  int failed = 0;
  for (size_t i = 0; i < checks.size(); ++i) {
    const Outcome outcome = checks[i].second();
    const bool excused = !outcome.pass && known_red.contains(i + 1);
    std::printf("%s criterion %zu: %s (%s)%s\n",
                outcome.pass ? "PASS" : "FAIL", i + 1,
                checks[i].first.c_str(), outcome.detail.c_str(),
                excused ? " [known red, see README]" : "");
    std::fflush(stdout);
    if (!outcome.pass && !excused) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
