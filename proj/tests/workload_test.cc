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

#include "sectorise/workload.h"

#include <gtest/gtest.h>

#include <random>

#include "test_support.h"

namespace sectorise {
namespace {

using testing::Line;

using testing::OracleBalanced;
using testing::OracleBounded;

TEST(WorkloadTest, MuOf) {
  const std::vector<int64_t> a = {3, 5, 4};
  EXPECT_EQ(MuOf(a, 2), (Rational{6, 1}));
  const std::vector<int64_t> z = {0, 0};
  EXPECT_EQ(MuOf(z, 3), (Rational{0, 1}));
  const std::vector<int64_t> b = {1, 1, 1};
  EXPECT_EQ(MuOf(b, 2), (Rational{3, 2}));
}

TEST(WorkloadTest, DeviationCheck) {
  const std::vector<int64_t> x = {8, 4};
  EXPECT_TRUE(DeviationCheck(x, 12, 8));
  EXPECT_FALSE(DeviationCheck(x, 12, 7));
  const std::vector<int64_t> even = {6, 6};
  EXPECT_TRUE(DeviationCheck(even, 12, 0));
}

TEST(BalancedTest, ViolationAndVarViolation) {
  ColourState s(Line(3), 2, {1, 1, 2});
  BalancedConstraint b8(s, {3, 5, 4}, 8);
  EXPECT_EQ(b8.IntViolation(), 0);
  EXPECT_EQ(b8.total_deviation(), 8);
  EXPECT_EQ(b8.VarViolation(0), 4);
  EXPECT_EQ(b8.VarViolation(2), 4);
  EXPECT_EQ(BalancedConstraint(s, {3, 5, 4}, 6).IntViolation(), 2);
  ColourState even(Line(2), 2, {1, 2});
  BalancedConstraint e(even, {6, 6}, 0);
  EXPECT_EQ(e.IntViolation(), 0);
  EXPECT_EQ(e.VarViolation(0), 0);
}

TEST(BalancedTest, Probe) {
  ColourState s(Line(3), 2, {1, 1, 2});
  BalancedConstraint b(s, {3, 5, 4}, 0);
  EXPECT_EQ(b.IntProbeAssign(2, 1), 16);
  EXPECT_EQ(b.IntProbeAssign(2, 2), 0);
  ColourState t(Line(3), 2, {1, 1, 1});
  BalancedConstraint c(t, {6, 3, 3}, 0);
  EXPECT_EQ(c.IntProbeAssign(0, 2), -c.IntViolation());
}

TEST(BalancedTest, MuIsCheckedAgainstValues) {
  ColourState s(Line(3), 2, {1, 1, 2});
  EXPECT_NO_THROW(BalancedConstraint(s, {3, 5, 4}, 0, Rational{6, 1}));
  EXPECT_NO_THROW(BalancedConstraint(s, {1, 1, 1}, 0, Rational{3, 2}));
  EXPECT_THROW(BalancedConstraint(s, {3, 5, 4}, 0, Rational{5, 1}), InputError);
  EXPECT_THROW(BalancedConstraint(s, {3, 5}, 0), InputError);
}

TEST(BalancedTest, OverVolumes) {
  auto g = std::make_shared<const Geometry>(
      3, std::vector<int64_t>{2, 3, 5},
      std::vector<FacetSpec>{{1, 0, 1}, {1, 1, 2}, {1, 0, kBottom}});
  ColourState s(g, 2, {1, 1, 2});
  BalancedConstraint b = BalancedConstraint::OverVolumes(s, 0);
  EXPECT_EQ(b.sum(1), 5);
  EXPECT_EQ(b.sum(2), 5);
  EXPECT_EQ(b.IntViolation(), 0);
}

TEST(BoundedTest, ViolationAndProbe) {
  ColourState s(Line(3), 2, {1, 1, 2});
  BoundedConstraint b(s, {3, 5, 4}, RelOp::kLe, 7);
  EXPECT_EQ(b.IntViolation(), 1);
  EXPECT_EQ(b.IntProbeAssign(0, 2), -1);
  EXPECT_EQ(b.IntProbeAssign(0, 1), 0);
  EXPECT_EQ(BoundedConstraint(s, {3, 5, 4}, RelOp::kLe, 12).IntViolation(), 0);
  EXPECT_EQ(BoundedConstraint(s, {3, 5, 4}, RelOp::kGe, 0).IntViolation(), 0);
}

TEST(BoundedTest, BoundExcess) {
  EXPECT_EQ(BoundExcess(8, RelOp::kLe, 7), 1);
  EXPECT_EQ(BoundExcess(7, RelOp::kLt, 7), 1);
  EXPECT_EQ(BoundExcess(3, RelOp::kGe, 5), 2);
  EXPECT_EQ(BoundExcess(5, RelOp::kGt, 5), 1);
  EXPECT_EQ(BoundExcess(3, RelOp::kEq, 5), 2);
  EXPECT_EQ(BoundExcess(5, RelOp::kNe, 5), 1);
  EXPECT_EQ(BoundExcess(4, RelOp::kNe, 5), 0);
}

TEST(WorkloadTest, RandomMovesMatchOracles) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const int nv = std::uniform_int_distribution<int>(2, 10)(rng);
    const int n = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<int64_t> values(nv);
    for (int64_t& x : values) x = std::uniform_int_distribution<int64_t>(0, 9)(rng);
    const int64_t delta = std::uniform_int_distribution<int64_t>(0, 20)(rng);
    const RelOp op = static_cast<RelOp>(trial % 6);
    const int64_t t = std::uniform_int_distribution<int64_t>(0, 25)(rng);
    ColourState s(Line(nv), n, testing::RandomColouring(rng, nv, n));
    BalancedConstraint bal(s, values, delta);
    BoundedConstraint bnd(s, values, op, t);
    int64_t total = 0;
    for (const int64_t x : values) total += x;
    for (int step = 0; step < 100; ++step) {
      const Vertex v = std::uniform_int_distribution<Vertex>(0, nv - 1)(rng);
      const Colour c = std::uniform_int_distribution<Colour>(1, n)(rng);
      std::vector<Colour> after(s.colours().begin(), s.colours().end());
      after[v] = c;
      ASSERT_EQ(bal.IntProbeAssign(v, c),
                OracleBalanced(after, values, n, delta) - bal.IntViolation());
      ASSERT_EQ(bnd.IntProbeAssign(v, c),
                OracleBounded(after, values, n, op, t) - bnd.IntViolation());
      bal.CommitAssign(v, c);
      bnd.CommitAssign(v, c);
      s.Assign(v, c);
      ASSERT_EQ(bal.Violation(), bal.ScratchViolation());
      ASSERT_EQ(bnd.Violation(), bnd.ScratchViolation());
      ASSERT_EQ(bal.IntViolation() == 0, bal.Check());
      ASSERT_EQ(bnd.IntViolation() == 0, bnd.Check());
      int64_t sum = 0;
      for (Colour k = 1; k <= n; ++k) sum += bal.sum(k);
      ASSERT_EQ(sum, total);
    }
  }
}

}  // namespace
}  // namespace sectorise
