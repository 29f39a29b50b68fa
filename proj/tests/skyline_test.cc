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

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "kregret/data_io.h"

namespace kregret {
namespace {

// Quadratic reference: keep p unless some q is >= everywhere and > somewhere.
std::vector<PointId> BruteSkyline(const Dataset& data) {
  std::vector<PointId> out;
  for (const Point& p : data.points()) {
    bool dominated = false;
    for (const Point& q : data.points()) {
      bool ge = true;
      bool gt = false;
      for (int j = 0; j < p.dim(); ++j) {
        ge = ge && q.coords[j] >= p.coords[j];
        gt = gt || q.coords[j] > p.coords[j];
      }
      if (ge && gt) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(p.id);
  }
  return out;
}

TEST(DominatesTest, StrictOnOneDimension) {
  EXPECT_TRUE(*Dominates({0, {0.5, 0.5}}, {1, {0.5, 0.4}}));
  EXPECT_FALSE(*Dominates({0, {0.5, 0.5}}, {1, {0.5, 0.5}}));
  EXPECT_FALSE(*Dominates({0, {0.6, 0.1}}, {1, {0.5, 0.5}}));
  EXPECT_FALSE(Dominates({0, {0.6}}, {1, {0.5, 0.5}}).ok());
}

TEST(SkylineTest, MatchesBruteForceOnRandomData) {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    auto data = GenerateUniform(60, 1 + seed % 4, seed);
    ASSERT_TRUE(data.ok());
    auto sky = ComputeSkyline(*data);
    ASSERT_TRUE(sky.ok());
    EXPECT_EQ(sky->ids(), BruteSkyline(*data)) << "seed " << seed;
  }
}

TEST(SkylineTest, KeepsDuplicatesAndInputOrder) {
  auto data = Dataset::Create({{5, {0.2, 0.9}},
                               {2, {0.5, 0.5}},
                               {9, {0.1, 0.1}},
                               {1, {0.5, 0.5}},
                               {3, {0.9, 0.2}}});
  ASSERT_TRUE(data.ok());
  auto sky = ComputeSkyline(*data);
  ASSERT_TRUE(sky.ok());
  EXPECT_EQ(sky->ids(), (std::vector<PointId>{5, 2, 1, 3}));
}

TEST(SkylineTest, Nba2009FixtureIsItsOwnSkyline) {
  const NamedDataset nba = Nba2009Skyline();
  auto sky = ComputeSkyline(nba.data);
  ASSERT_TRUE(sky.ok());
  EXPECT_EQ(sky->size(), 16u);
}

TEST(SkylineTest, EmptyInputIsAnError) {
  EXPECT_FALSE(ComputeSkyline(Dataset()).ok());
}

TEST(NormalizeTest, DividesByColumnMaxima) {
  auto data = Dataset::Create({{0, {2.0, 0.0, 10.0}}, {1, {4.0, 0.0, 5.0}}});
  ASSERT_TRUE(data.ok());
  EXPECT_EQ(DimensionMaxima(*data), (std::vector<double>{4.0, 0.0, 10.0}));
  auto scaled = Normalize(*data);
  ASSERT_TRUE(scaled.ok());
  EXPECT_TRUE(scaled->normalized());
  EXPECT_EQ((*scaled)[0].coords, (std::vector<double>{0.5, 0.0, 1.0}));
  EXPECT_EQ((*scaled)[1].coords, (std::vector<double>{1.0, 0.0, 0.5}));
  EXPECT_EQ(scaled->ids(), data->ids());
  EXPECT_FALSE(Normalize(Dataset()).ok());
}

}  // namespace
}  // namespace kregret
