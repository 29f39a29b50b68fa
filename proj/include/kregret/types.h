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

// Domain types shared by every k-regret module: points, datasets, linear
// utility vectors and utility classes, and the greedy selection result.

#ifndef KREGRET_TYPES_H_
#define KREGRET_TYPES_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "absl/status/statusor.h"

namespace kregret {

using PointId = int64_t;

struct Point {
  PointId id = 0;
  std::vector<double> coords;

  int dim() const { return static_cast<int>(coords.size()); }
};

// An ordered, immutable collection of nonnegative points sharing one
// dimensionality. Ids are unique but need not be contiguous.
class Dataset {
 public:
  Dataset() = default;

  // Validates dimensionality, nonnegativity and id uniqueness. An empty
  // point list is accepted (d = 0) so pipelines can report it downstream.
  static absl::StatusOr<Dataset> Create(std::vector<Point> points,
                                        bool normalized = false);

  // Assigns ids 0..n-1 in row order.
  static absl::StatusOr<Dataset> FromRows(
      const std::vector<std::vector<double>>& rows);

  std::span<const Point> points() const { return points_; }
  const Point& operator[](size_t index) const { return points_[index]; }
  size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  int dim() const { return dim_; }
  bool normalized() const { return normalized_; }

  // Returns nullptr for unknown ids.
  const Point* Find(PointId id) const;
  std::optional<size_t> IndexOf(PointId id) const;

  std::vector<PointId> ids() const;

 private:
  std::vector<Point> points_;
  std::unordered_map<PointId, size_t> index_;
  int dim_ = 0;
  bool normalized_ = false;
};

// Nonnegative weight vector of a linear utility function u(p) = w . p.
class UtilityVector {
 public:
  static absl::StatusOr<UtilityVector> Create(std::vector<double> weights);

  std::span<const double> weights() const { return weights_; }
  int dim() const { return static_cast<int>(weights_.size()); }

 private:
  explicit UtilityVector(std::vector<double> weights)
      : weights_(std::move(weights)) {}
  std::vector<double> weights_;
};

// Optional half-up decimal rounding applied to utility scores before they
// are compared or divided.
struct UtilityPrecision {
  std::optional<int> decimals;

  double Apply(double score) const;
};

// Either an explicit list of utility vectors or the whole class of
// nonnegative linear utilities (evaluated through linear programs).
class UtilityClass {
 public:
  static absl::StatusOr<UtilityClass> Finite(std::vector<UtilityVector> vectors,
                                             UtilityPrecision precision = {});
  static UtilityClass FullLinear();

  bool is_finite() const { return finite_; }
  std::span<const UtilityVector> vectors() const { return vectors_; }
  const UtilityPrecision& precision() const { return precision_; }

 private:
  UtilityClass() = default;
  bool finite_ = false;
  std::vector<UtilityVector> vectors_;
  UtilityPrecision precision_;
};

struct GreedyStep {
  int index = 0;  // 1-based step number
  PointId chosen = 0;
  // Restricted ratio that won the step; empty for preselected points and for
  // baselines that score candidates differently.
  std::optional<double> restricted_happiness;
  // H(S_i) - H(S_{i-1}); empty when gains were not recorded.
  std::optional<double> marginal_gain;
};

struct GreedyTrace {
  std::vector<GreedyStep> steps;
  int64_t lp_evaluations = 0;
  std::chrono::duration<double, std::milli> elapsed{0};

  // S_i as ids in selection order, i = 0..steps.size().
  std::vector<PointId> Prefix(size_t i) const;
};

struct SelectionResult {
  std::vector<PointId> selected_ids;  // selection order
  GreedyTrace trace;
  double min_happiness = 0.0;
  double max_regret = 1.0;
  // Set when k exceeded the candidate count and every candidate was returned.
  bool truncated = false;
};

// Sum_j u[j] * p[j]. Fails on dimension mismatch.
absl::StatusOr<double> Utility(const UtilityVector& u, const Point& p);

// Unchecked dot product for hot loops; sizes must agree.
double Dot(std::span<const double> weights, std::span<const double> coords);

}  // namespace kregret

#endif  // KREGRET_TYPES_H_
