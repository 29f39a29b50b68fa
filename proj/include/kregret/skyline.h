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

// Dominance, skyline filtering and per-dimension normalization. These run
// before selection: a k-regret answer only ever needs skyline points, and
// every quantity the selection computes is invariant under per-dimension
// positive scaling.

#ifndef KREGRET_SKYLINE_H_
#define KREGRET_SKYLINE_H_

#include <vector>

#include "absl/status/statusor.h"
#include "kregret/types.h"

namespace kregret {

// True iff p >= q on every dimension and p > q on at least one.
absl::StatusOr<bool> Dominates(const Point& p, const Point& q);

// Block-nested-loop skyline over points presorted by coordinate sum. Keeps
// original ids and input order. Exact duplicates do not dominate each other,
// so both copies survive.
absl::StatusOr<Dataset> ComputeSkyline(const Dataset& data);

// Per-dimension maxima over the dataset (zero for all-zero dimensions).
std::vector<double> DimensionMaxima(const Dataset& data);

// Divides every coordinate by its dimension's maximum; all-zero dimensions
// stay zero. The result is flagged normalized.
absl::StatusOr<Dataset> Normalize(const Dataset& data);

}  // namespace kregret

#endif  // KREGRET_SKYLINE_H_
