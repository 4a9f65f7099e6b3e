// Copyright 2026 The Sectorise Authors
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

#include "sectorise/non_border.h"

#include <gtest/gtest.h>

#include <random>

#include "test_support.h"

namespace sectorise {
namespace {

// 2x2 grid: a = 0 and b = 1 on the top row, 2 below a, 3 below b.
struct TopRow {
  ColourState state;
  NonBorderConstraint c;
  explicit TopRow(std::vector<Colour> colours)
      : state(testing::Grid2d(2, 2), 2, std::move(colours)),
        c(state, OrderedPath({0, 1}, &state.geometry())) {}
};

// The path is the whole one-dimensional geometry.
TEST(NonBorderTest, OneDimensionalAlwaysHolds) {
  testing::ForEachColouring(5, 3, [](const std::vector<Colour>& col) {
    ColourState s(testing::Line(5), 3, col);
    NonBorderConstraint c(s, OrderedPath({0, 1, 2, 3, 4}, &s.geometry()));
    ASSERT_TRUE(c.Check());
    ASSERT_EQ(c.IntViolation(), 0);
  });
}

TEST(NonBorderTest, Examples) {
  TopRow ok({1, 1, 1, 1});
  EXPECT_TRUE(ok.c.Check());
  EXPECT_EQ(ok.c.IntViolation(), 0);

  TopRow one({1, 1, 1, 2});
  EXPECT_FALSE(one.c.Check());
  EXPECT_EQ(one.c.IntViolation(), 1);
  EXPECT_EQ(one.c.IntVarViolation(1), 1);
  EXPECT_EQ(one.c.IntVarViolation(0), 0);
  EXPECT_EQ(one.c.IntVarViolation(3), 0);
  EXPECT_EQ(one.c.IntProbeAssign(3, 1), -1);
  EXPECT_EQ(one.c.IntProbeAssign(3, 2), 0);
  EXPECT_EQ(one.c.IntProbeAssign(1, 2), -1);

  TopRow two({1, 1, 2, 2});
  EXPECT_EQ(two.c.IntViolation(), 2);
  EXPECT_EQ(two.c.off_path_neighbours(0), std::vector<Vertex>{2});
}

TEST(NonBorderTest, OffPathCommitTouchesOnlyPathNeighbours) {
  TopRow r({1, 1, 1, 1});
  r.c.CommitAssign(3, 2);
  r.state.Assign(3, 2);
  EXPECT_EQ(r.c.IntVarViolation(0), 0);
  EXPECT_EQ(r.c.IntVarViolation(1), 1);
  EXPECT_EQ(r.c.IntViolation(), 1);
}

TEST(NonBorderTest, RandomMovesMatchScratch) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = testing::Grid2d(4, 4);
    ColourState s(g, 3, testing::RandomColouring(rng, 16, 3));
    NonBorderConstraint c(s, OrderedPath({0, 1, 5, 6, 10}, g.get()));
    for (int step = 0; step < 200; ++step) {
      const Vertex v = std::uniform_int_distribution<Vertex>(0, 15)(rng);
      const Colour to = std::uniform_int_distribution<Colour>(1, 3)(rng);
      ColourState after = s;
      after.Assign(v, to);
      NonBorderConstraint fresh(after, c.path());
      ASSERT_EQ(c.IntProbeAssign(v, to), fresh.IntViolation() - c.IntViolation());
      c.CommitAssign(v, to);
      s.Assign(v, to);
      ASSERT_EQ(c.Violation(), c.ScratchViolation());
      ASSERT_EQ(c.IntViolation() == 0, c.Check());
    }
  }
}

}  // namespace
}  // namespace sectorise
