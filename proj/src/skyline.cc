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

#include "kregret/skyline.h"

#include <algorithm>
#include <numeric>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace kregret {
namespace {

bool DominatesUnchecked(const std::vector<double>& p,
                        const std::vector<double>& q) {
  bool strictly = false;
  for (size_t j = 0; j < p.size(); ++j) {
    if (p[j] < q[j]) return false;
    if (p[j] > q[j]) strictly = true;
  }
  return strictly;
}

}  // namespace

absl::StatusOr<bool> Dominates(const Point& p, const Point& q) {
  if (p.dim() != q.dim()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "cannot compare point %d (d=%d) with point %d (d=%d)", p.id, p.dim(),
        q.id, q.dim()));
  }
  return DominatesUnchecked(p.coords, q.coords);
}

absl::StatusOr<Dataset> ComputeSkyline(const Dataset& data) {
  if (data.empty()) {
    return absl::InvalidArgumentError("skyline of an empty dataset");
  }
  const size_t n = data.size();
  std::vector<double> sums(n);
  for (size_t i = 0; i < n; ++i) {
    sums[i] = std::accumulate(data[i].coords.begin(), data[i].coords.end(),
                              0.0);
  }
  // Any dominator of a point sorts strictly before it: its sum is at least as
  // large (rounded addition is monotone) and ties fall back to a
  // lexicographic coordinate order.
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (sums[a] != sums[b]) return sums[a] > sums[b];
    if (data[a].coords != data[b].coords) {
      return data[a].coords > data[b].coords;
    }
    return a < b;
  });

  std::vector<size_t> window;
  for (size_t idx : order) {
    const auto& coords = data[idx].coords;
    bool dominated = false;
    for (size_t w : window) {
      if (DominatesUnchecked(data[w].coords, coords)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) window.push_back(idx);
  }
  std::sort(window.begin(), window.end());

  std::vector<Point> kept;
  kept.reserve(window.size());
  for (size_t idx : window) kept.push_back(data[idx]);
  return Dataset::Create(std::move(kept), data.normalized());
}

std::vector<double> DimensionMaxima(const Dataset& data) {
  std::vector<double> maxima(data.dim(), 0.0);
  for (const Point& p : data.points()) {
    for (int j = 0; j < data.dim(); ++j) {
      maxima[j] = std::max(maxima[j], p.coords[j]);
    }
  }
  return maxima;
}

absl::StatusOr<Dataset> Normalize(const Dataset& data) {
  if (data.empty()) {
    return absl::InvalidArgumentError("cannot normalize an empty dataset");
  }
  const std::vector<double> maxima = DimensionMaxima(data);
  std::vector<Point> scaled(data.points().begin(), data.points().end());
  for (Point& p : scaled) {
    for (int j = 0; j < data.dim(); ++j) {
      if (maxima[j] > 0.0) p.coords[j] = std::min(1.0, p.coords[j] / maxima[j]);
    }
  }
  return Dataset::Create(std::move(scaled), /*normalized=*/true);
}

}  // namespace kregret
