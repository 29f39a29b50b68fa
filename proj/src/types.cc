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

#include "kregret/types.h"

#include <cmath>
#include <string>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace kregret {

absl::StatusOr<Dataset> Dataset::Create(std::vector<Point> points,
                                        bool normalized) {
  Dataset out;
  out.dim_ = points.empty() ? 0 : points.front().dim();
  out.index_.reserve(points.size());
  for (size_t i = 0; i < points.size(); ++i) {
    const Point& p = points[i];
    if (p.dim() != out.dim_) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "point %d has %d coordinates, expected %d", p.id, p.dim(), out.dim_));
    }
    for (double c : p.coords) {
      if (!(c >= 0.0) || !std::isfinite(c)) {
        return absl::InvalidArgumentError(absl::StrFormat(
            "point %d has a negative or non-finite coordinate", p.id));
      }
      if (normalized && c > 1.0) {
        return absl::InvalidArgumentError(absl::StrFormat(
            "point %d has coordinate %g > 1 in a normalized dataset", p.id,
            c));
      }
    }
    if (!out.index_.emplace(p.id, i).second) {
      return absl::InvalidArgumentError(
          absl::StrFormat("duplicate point id %d", p.id));
    }
  }
  out.points_ = std::move(points);
  out.normalized_ = normalized;
  return out;
}

absl::StatusOr<Dataset> Dataset::FromRows(
    const std::vector<std::vector<double>>& rows) {
  std::vector<Point> points;
  points.reserve(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    points.push_back({static_cast<PointId>(i), rows[i]});
  }
  return Create(std::move(points));
}

const Point* Dataset::Find(PointId id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &points_[it->second];
}

std::optional<size_t> Dataset::IndexOf(PointId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<PointId> Dataset::ids() const {
  std::vector<PointId> out;
  out.reserve(points_.size());
  for (const Point& p : points_) out.push_back(p.id);
  return out;
}

absl::StatusOr<UtilityVector> UtilityVector::Create(
    std::vector<double> weights) {
  bool any_positive = false;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      return absl::InvalidArgumentError(
          "utility weights must be finite and nonnegative");
    }
    any_positive |= w > 0.0;
  }
  if (!any_positive) {
    return absl::InvalidArgumentError(
        "utility vector needs at least one positive weight");
  }
  return UtilityVector(std::move(weights));
}

double UtilityPrecision::Apply(double score) const {
  if (!decimals.has_value()) return score;
  const double scale = std::pow(10.0, *decimals);
  // Nudge so that x.xx5 stored as x.xx4999... still rounds up.
  return std::floor(score * scale + 0.5 + 1e-9) / scale;
}

absl::StatusOr<UtilityClass> UtilityClass::Finite(
    std::vector<UtilityVector> vectors, UtilityPrecision precision) {
  if (vectors.empty()) {
    return absl::InvalidArgumentError("finite utility class is empty");
  }
  for (const UtilityVector& v : vectors) {
    if (v.dim() != vectors.front().dim()) {
      return absl::InvalidArgumentError(
          "utility vectors have mixed dimensionality");
    }
  }
  if (precision.decimals.has_value() &&
      (*precision.decimals < 0 || *precision.decimals > 15)) {
    return absl::InvalidArgumentError("precision must be 0..15 decimals");
  }
  UtilityClass out;
  out.finite_ = true;
  out.vectors_ = std::move(vectors);
  out.precision_ = precision;
  return out;
}

UtilityClass UtilityClass::FullLinear() { return UtilityClass(); }

std::vector<PointId> GreedyTrace::Prefix(size_t i) const {
  std::vector<PointId> out;
  for (size_t j = 0; j < i && j < steps.size(); ++j) {
    out.push_back(steps[j].chosen);
  }
  return out;
}

double Dot(std::span<const double> weights, std::span<const double> coords) {
  double sum = 0.0;
  for (size_t j = 0; j < weights.size(); ++j) sum += weights[j] * coords[j];
  return sum;
}

absl::StatusOr<double> Utility(const UtilityVector& u, const Point& p) {
  if (u.dim() != p.dim()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "utility has %d weights but point %d has %d coordinates", u.dim(),
        p.id, p.dim()));
  }
  return Dot(u.weights(), p.coords);
}

}  // namespace kregret
