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

#include "kregret/data_io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "absl/strings/ascii.h"

namespace kregret {
namespace {

constexpr std::string_view kNba2009Csv =
    "points,rebounds,steals\n"
    "2472,623,112\n"
    "2258,554,125\n"
    "2045,373,142\n"
    "1896,732,52\n"
    "1681,950,80\n"
    "1667,401,132\n"
    "1640,949,85\n"
    "1631,257,143\n"
    "1503,1082,75\n"
    "1401,529,141\n"
    "1399,356,152\n"
    "1386,762,117\n"
    "1269,705,130\n"
    "1110,360,189\n"
    "824,445,145\n"
    "556,871,95\n";

const std::vector<std::string>& Nba2009Names() {
  static const auto* names = new std::vector<std::string>{
      "Kevin Durant",    "LeBron James",     "Dwyane Wade",
      "Amare Stoudemire", "Zach Randolph",   "Stephen Jackson",
      "David Lee",       "Monta Ellis",      "Dwight Howard",
      "Andre Iguodala",  "Stephen Curry",    "Gerald Wallace",
      "Josh Smith",      "Rajon Rondo",      "Jason Kidd",
      "Marcus Camby"};
  return *names;
}

bool ParseNumber(absl::string_view cell, double& out) {
  cell = absl::StripAsciiWhitespace(cell);
  if (cell.empty()) return false;
  if (cell.front() == '+') cell.remove_prefix(1);
  const char* end = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(cell.data(), end, out);
  return ec == std::errc() && ptr == end && std::isfinite(out);
}

absl::Status ValidateShape(int64_t n, int d) {
  if (n < 1) return absl::InvalidArgumentError("n must be at least 1");
  if (d < 1) return absl::InvalidArgumentError("d must be at least 1");
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<Dataset> GenerateAntiCorrelated(int64_t n, int d,
                                               uint64_t seed) {
  if (absl::Status s = ValidateShape(n, d); !s.ok()) return s;
  if (d < 2) {
    return absl::InvalidArgumentError("anti-correlation needs d >= 2");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> total_dist(0.5 * d, 0.05 * d);
  std::uniform_int_distribution<int> pick_dim(0, d - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<Point> points;
  points.reserve(n);
  for (int64_t i = 0; i < n; ++i) {
    const double total = std::clamp(total_dist(rng), 1e-6, double(d));
    std::vector<double> x(d, total / d);
    for (int round = 0; round < 4 * d; ++round) {
      const int a = pick_dim(rng);
      int b = pick_dim(rng);
      if (a == b) b = (b + 1) % d;
      // Move delta from b to a; both stay inside [0, 1].
      const double lo = -std::min(x[a], 1.0 - x[b]);
      const double hi = std::min(x[b], 1.0 - x[a]);
      const double delta = lo + (hi - lo) * unit(rng);
      x[a] += delta;
      x[b] -= delta;
    }
    for (double& c : x) c = std::clamp(c, 0.0, 1.0);
    points.push_back({i, std::move(x)});
  }
  return Dataset::Create(std::move(points));
}

absl::StatusOr<Dataset> GenerateUniform(int64_t n, int d, uint64_t seed) {
  if (absl::Status s = ValidateShape(n, d); !s.ok()) return s;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Point> points;
  points.reserve(n);
  for (int64_t i = 0; i < n; ++i) {
    std::vector<double> x(d);
    for (double& c : x) c = unit(rng);
    points.push_back({i, std::move(x)});
  }
  return Dataset::Create(std::move(points));
}

absl::StatusOr<Dataset> ParseCsv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  int line_number = 0;
  bool first_row = true;
  size_t width = 0;
  for (absl::string_view line :
       absl::StrSplit(absl::string_view(text.data(), text.size()), '\n')) {
    ++line_number;
    line = absl::StripSuffix(line, "\r");
    if (absl::StripAsciiWhitespace(line).empty()) continue;
    std::vector<absl::string_view> cells = absl::StrSplit(line, ',');
    std::vector<double> values(cells.size());
    bool numeric = true;
    for (size_t j = 0; j < cells.size(); ++j) {
      if (!ParseNumber(cells[j], values[j])) {
        numeric = false;
        break;
      }
    }
    if (first_row) {
      first_row = false;
      width = cells.size();
      if (!numeric) continue;  // header
    }
    if (!numeric) {
      return absl::InvalidArgumentError(
          absl::StrFormat("line %d: non-numeric cell", line_number));
    }
    if (cells.size() != width) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "line %d: expected %d columns, found %d", line_number, width,
          cells.size()));
    }
    for (double v : values) {
      if (v < 0.0) {
        return absl::InvalidArgumentError(
            absl::StrFormat("line %d: negative value %g", line_number, v));
      }
    }
    rows.push_back(std::move(values));
  }
  if (rows.empty()) return absl::InvalidArgumentError("CSV has no data rows");
  return Dataset::FromRows(rows);
}

absl::StatusOr<Dataset> ReadCsv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  auto data = ParseCsv(buffer.str());
  if (!data.ok()) {
    return absl::Status(data.status().code(),
                        path + ": " + std::string(data.status().message()));
  }
  return data;
}

std::string FormatCsv(const Dataset& data,
                      const std::vector<std::string>& header) {
  std::string out;
  for (size_t j = 0; j < header.size(); ++j) {
    if (j > 0) out += ',';
    out += header[j];
  }
  if (!header.empty()) out += '\n';
  char buffer[64];
  for (const Point& p : data.points()) {
    for (size_t j = 0; j < p.coords.size(); ++j) {
      if (j > 0) out += ',';
      auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer),
                                     p.coords[j]);
      out.append(buffer, ptr);
    }
    out += '\n';
  }
  return out;
}

absl::Status WriteCsv(const Dataset& data, const std::string& path,
                      const std::vector<std::string>& header) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return absl::PermissionDeniedError("cannot write " + path);
  out << FormatCsv(data, header);
  if (!out) return absl::DataLossError("write failed for " + path);
  return absl::OkStatus();
}

std::string_view Nba2009SkylineCsv() { return kNba2009Csv; }

NamedDataset Nba2009Skyline() {
  auto data = ParseCsv(kNba2009Csv);
  return {*std::move(data), Nba2009Names()};
}

ToyInstance NbaToy() {
  static constexpr double kCoords[9][3] = {
      {1.00, 0.58, 0.59}, {0.91, 0.51, 0.66}, {0.83, 0.34, 0.75},
      {0.77, 0.68, 0.28}, {0.68, 0.88, 0.42}, {0.67, 0.37, 0.70},
      {0.66, 0.88, 0.45}, {0.66, 0.24, 0.76}, {0.61, 1.00, 0.40}};
  std::vector<Point> points;
  for (int i = 0; i < 9; ++i) {
    points.push_back({i + 1, {kCoords[i][0], kCoords[i][1], kCoords[i][2]}});
  }
  std::vector<UtilityVector> vectors;
  for (const auto& w : {std::vector<double>{0.9, 0.05, 0.05},
                        std::vector<double>{0.05, 0.9, 0.05},
                        std::vector<double>{0.05, 0.05, 0.9},
                        std::vector<double>{0.33, 0.33, 0.34}}) {
    vectors.push_back(*UtilityVector::Create(w));
  }
  const auto& all_names = Nba2009Names();
  return {*Dataset::Create(std::move(points)),
          *UtilityClass::Finite(std::move(vectors), UtilityPrecision{2}),
          std::vector<std::string>(all_names.begin(), all_names.begin() + 9)};
}

}  // namespace kregret
