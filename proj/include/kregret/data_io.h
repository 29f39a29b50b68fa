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

// Dataset generators, CSV ingestion and serialization, and the embedded NBA
// fixtures used by examples and tests.

#ifndef KREGRET_DATA_IO_H_
#define KREGRET_DATA_IO_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "kregret/types.h"

namespace kregret {

// Anti-correlated points in [0,1]^d: each point's coordinate total is drawn
// from Normal(0.5 d, 0.05 d), split evenly, then mixed by 4d random pairwise
// transfers that preserve the total and keep coordinates in [0, 1]. Points
// good on one dimension are therefore bad on others, which yields large
// skylines. Deterministic per seed.
absl::StatusOr<Dataset> GenerateAntiCorrelated(int64_t n, int d,
                                               uint64_t seed);

// Independent Uniform[0,1) coordinates.
absl::StatusOr<Dataset> GenerateUniform(int64_t n, int d, uint64_t seed);

// Comma-separated numeric rows, optional single header row (detected by a
// non-numeric cell in the first row), blank lines ignored. Ids are 0-based
// row indices. Errors name the offending line.
absl::StatusOr<Dataset> ParseCsv(std::string_view text);
absl::StatusOr<Dataset> ReadCsv(const std::string& path);

// Shortest round-trip decimal form, LF line endings, no id column.
std::string FormatCsv(const Dataset& data,
                      const std::vector<std::string>& header = {});
absl::Status WriteCsv(const Dataset& data, const std::string& path,
                      const std::vector<std::string>& header = {});

struct NamedDataset {
  Dataset data;
  std::vector<std::string> names;
};

// The 16 skyline players of the 2009 regular season on (points, rebounds,
// steals), raw counts, ids 0..15.
NamedDataset Nba2009Skyline();
std::string_view Nba2009SkylineCsv();

struct ToyInstance {
  // ids 1..9; coordinates are divided by the 16-player maxima and printed to
  // 2 dp, so the steals column tops out at 0.76.
  Dataset data;
  UtilityClass utilities;
  std::vector<std::string> names;  // names[i] belongs to id i + 1
};

// The first nine of those players, normalized, with the four utility vectors
// <.9,.05,.05>, <.05,.9,.05>, <.05,.05,.9>, <.33,.33,.34>. Scores are rounded
// to two decimals.
ToyInstance NbaToy();

}  // namespace kregret

#endif  // KREGRET_DATA_IO_H_
