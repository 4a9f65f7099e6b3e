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

#include "sectorise/systematic.h"

#include <gtest/gtest.h>

#include <random>

#include "sectorise/connected.h"
#include "sectorise/stretch_sum.h"
#include "test_support.h"

namespace sectorise {
namespace {

using testing::Line;

OrderedPath Identity(int m) {
  std::vector<Vertex> p(m);
  for (int i = 0; i < m; ++i) p[i] = i;
  return OrderedPath(p);
}

// One stretch per used colour, and the stretch count relates to N.
ColouringCheck Contiguous(RelOp op) {
  return [op](std::span<const Colour> c, int64_t n) {
    std::vector<char> seen(DomainStore::kMaxColours + 1, 0);
    int k = 0;
    for (size_t i = 0; i < c.size(); ++i) {
      if (i > 0 && c[i] == c[i - 1]) continue;
      if (seen[c[i]]) return false;
      seen[c[i]] = 1;
      ++k;
    }
    return Holds(k, op, n);
  };
}

TEST(DomainStoreTest, Basics) {
  DomainStore s(3, 4);
  EXPECT_EQ(s.DomainSize(0), 4);
  EXPECT_EQ(s.counter(), (std::vector<int64_t>{0, 1, 2, 3, 4}));
  EXPECT_TRUE(s.Remove(0, 2));
  EXPECT_FALSE(s.Remove(0, 2));
  EXPECT_EQ(s.Values(0), (std::vector<Colour>{1, 3, 4}));
  EXPECT_TRUE(s.Fix(1, 3));
  EXPECT_TRUE(s.IsSingleton(1));
  EXPECT_EQ(s.Value(1), 3);
  EXPECT_FALSE(s.failed());
  s.Remove(1, 3);
  EXPECT_TRUE(s.failed());
}

TEST(PropagateConnected1dTest, Examples) {
  DomainStore s = DomainStore::FromSets(2, {{1, 2}, {1}, {1, 2}, {2}});
  const PropagationResult r = PropagateConnected1d(s, Identity(4), 1, RelOp::kGe);
  EXPECT_FALSE(r.failed);
  EXPECT_EQ(s.Values(0), std::vector<Colour>{1});
  EXPECT_EQ(s.Values(2), (std::vector<Colour>{1, 2}));
  const DomainStore want = BruteForceFilter(
      Contiguous(RelOp::kGe), DomainStore::FromSets(2, {{1, 2}, {1}, {1, 2}, {2}}));
  EXPECT_EQ(s.mask(0), want.mask(0));
  EXPECT_EQ(s.mask(2), want.mask(2));

  DomainStore full(5, 3);
  full.Fix(2, 2);
  DomainStore rules = full;
  PropagateConnected1dRules(rules, Identity(5), 2);
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(rules.DomainSize(i), i == 2 ? 1 : 3);
  }

  DomainStore split = DomainStore::FromSets(2, {{1}, {2}, {1}});
  EXPECT_TRUE(PropagateConnected1dRules(split, Identity(3), 0).failed);
  EXPECT_TRUE(split.failed());
}

TEST(PropagateConnected1dTest, RulesAloneAreNotDomainConsistent) {
  const std::vector<std::vector<Colour>> sets = {{2, 4}, {1, 3, 4}, {4},
                                                 {2, 3}, {2, 3}, {1, 4}};
  DomainStore rules = DomainStore::FromSets(4, sets);
  PropagateConnected1dRules(rules, Identity(6), 2);
  DomainStore full = DomainStore::FromSets(4, sets);
  PropagateConnected1d(full, Identity(6), 2, RelOp::kGe);
  const DomainStore want =
      BruteForceFilter(Contiguous(RelOp::kGe), DomainStore::FromSets(4, sets));
  EXPECT_EQ(want.Values(1), std::vector<Colour>{4});
  EXPECT_GT(rules.DomainSize(1), 1);
  EXPECT_EQ(full, want);
}

TEST(PropagateConnected1dTest, CounterDomainIsPruned) {
  DomainStore s = DomainStore::FromSets(3, {{1}, {1, 2}, {3}});
  PropagateConnected1d(s, Identity(3), 0, RelOp::kEq);
  EXPECT_EQ(s.counter(), (std::vector<int64_t>{2, 3}));
  EXPECT_EQ(s, BruteForceFilter(Contiguous(RelOp::kEq),
                                DomainStore::FromSets(3, {{1}, {1, 2}, {3}})));
}

TEST(PropagateConnected1dTest, RandomStoresMatchBruteForce) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = std::uniform_int_distribution<int>(1, 7)(rng);
    const int n = std::uniform_int_distribution<int>(1, 4)(rng);
    DomainStore s(m, n);
    for (int i = 0; i < m; ++i) {
      for (Colour c = 1; c <= n; ++c) {
        if (std::bernoulli_distribution(0.3)(rng)) s.Remove(i, c);
      }
    }
    if (s.failed()) continue;
    const Vertex trigger = std::uniform_int_distribution<Vertex>(0, m - 1)(rng);
    const auto values = s.Values(trigger);
    s.Fix(trigger, values[std::uniform_int_distribution<size_t>(0, values.size() - 1)(rng)]);
    const RelOp op = static_cast<RelOp>(trial % 6);
    const DomainStore want = BruteForceFilter(Contiguous(op), s);
    PropagateConnected1d(s, Identity(m), trigger, op);
    ASSERT_EQ(s, want) << "trial " << trial;
  }
}

TEST(ColourGraphCpTest, Edges) {
  const auto g = Line(2);
  EXPECT_EQ(ColourGraphCp(DomainStore(2, 3), *g).size(), 1u);
  EXPECT_TRUE(ColourGraphCp(DomainStore::FromSets(3, {{1}, {2}}), *g).empty());
  EXPECT_EQ(ColourGraphCp(DomainStore::FromSets(3, {{1, 2}, {2, 3}}), *g).size(), 1u);
}

TEST(ConnectedFeasibilityTest, Examples) {
  const auto g = Line(3);
  DomainStore sat = DomainStore::FromSets(2, {{1}, {1}, {2}});
  sat.SetCounter({2});
  EXPECT_EQ(ConnectedFeasibility(sat, *g, RelOp::kEq), Feasibility::kSubsumed);
  DomainStore bad = DomainStore::FromSets(2, {{1}, {2}, {1}});
  bad.SetCounter({3});
  EXPECT_EQ(ConnectedFeasibility(bad, *g, RelOp::kEq), Feasibility::kFailed);
  DomainStore mixed = DomainStore::FromSets(2, {{1, 2}, {1, 2}, {2}});
  EXPECT_EQ(ConnectedFeasibility(mixed, *g, RelOp::kEq), Feasibility::kFeasible);
}

TEST(ConnectedFeasibilityTest, NeverFailsASatisfiableStore) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const int nv = std::uniform_int_distribution<int>(2, 6)(rng);
    const auto g = testing::RandomGeometry(rng, nv);
    const int n = 3;
    DomainStore s(nv, n);
    for (int i = 0; i < nv; ++i) {
      for (Colour c = 1; c <= n; ++c) {
        if (std::bernoulli_distribution(0.35)(rng)) s.Remove(i, c);
      }
    }
    if (s.failed()) continue;
    const RelOp op = static_cast<RelOp>(trial % 6);
    bool satisfiable = false;
    ColourState state(g, n);
    testing::ForEachColouring(nv, n, [&](const std::vector<Colour>& c) {
      for (int i = 0; i < nv; ++i) {
        if (!s.Contains(i, c[i])) return;
      }
      state.SetAll(c);
      for (const int64_t k : s.counter()) {
        satisfiable = satisfiable || CheckConnected(state, op, k);
      }
    });
    if (satisfiable) {
      ASSERT_NE(ConnectedFeasibility(s, *g, op), Feasibility::kFailed);
    }
  }
}

TEST(SignatureTest, Vars) {
  const std::vector<Colour> a = {1, 1, 2};
  EXPECT_EQ(SignatureVars(a), (std::vector<int>{1, 0}));
  const std::vector<Colour> b = {3, 3, 3, 3};
  EXPECT_EQ(SignatureVars(b), (std::vector<int>{1, 1, 1}));
  const std::vector<Colour> c = {1, 2, 1};
  EXPECT_EQ(SignatureVars(c), (std::vector<int>{0, 0}));
}

TEST(SignatureTest, Dfa) {
  SignatureDfa dfa(RelOp::kGe, 120);
  dfa.Start(50);
  dfa.Step(1, 80);
  EXPECT_EQ(dfa.counter(), 130);
  dfa.Step(0, 130);
  EXPECT_FALSE(dfa.failed());
  EXPECT_TRUE(dfa.Accepting());

  const std::vector<Colour> a = {1, 1, 2};
  const std::vector<int64_t> av = {50, 80, 130};
  EXPECT_TRUE(StretchSumDfaCheck(a, av, RelOp::kGe, 120));
  const std::vector<Colour> b = {1, 2};
  const std::vector<int64_t> bv = {50, 80};
  EXPECT_FALSE(StretchSumDfaCheck(b, bv, RelOp::kGe, 120));
  const std::vector<Colour> one = {1};
  const std::vector<int64_t> ov = {120};
  EXPECT_TRUE(StretchSumDfaCheck(one, ov, RelOp::kGe, 120));
}

TEST(SignatureTest, DfaAgreesWithCheckOnSmallInputs) {
  for (int m = 1; m <= 4; ++m) {
    testing::ForEachColouring(m, 2, [&](const std::vector<Colour>& c) {
      testing::ForEachColouring(m, 3, [&](const std::vector<Colour>& vals) {
        const std::vector<int64_t> v(vals.begin(), vals.end());
        for (int64_t t = 1; t <= 6; ++t) {
          for (const RelOp op : {RelOp::kGe, RelOp::kLe, RelOp::kEq}) {
            ASSERT_EQ(StretchSumDfaCheck(c, v, op, t), CheckStretchSum(c, v, op, t));
          }
        }
      });
    });
  }
}

TEST(BruteForceTest, Solve) {
  ColourState s(Line(3), 2, {1, 2, 1});
  ConnectedConstraint one(s, RelOp::kEq, 1);
  const auto sols = BruteForceSolve(s, {&one});
  EXPECT_EQ(sols, (std::vector<std::vector<Colour>>{{1, 1, 1}, {2, 2, 2}}));
  EXPECT_EQ(std::vector<Colour>(s.colours().begin(), s.colours().end()),
            (std::vector<Colour>{1, 2, 1}));
  EXPECT_EQ(one.IntViolation(), 2);

  ConnectedConstraint five(s, RelOp::kEq, 5);
  EXPECT_TRUE(BruteForceSolve(s, {&five}).empty());
  EXPECT_EQ(BruteForceSolve(s, {}).size(), 8u);

  ColourState big(Line(11), 2);
  EXPECT_THROW(BruteForceSolve(big, {}), InputError);
  ColourState wide(Line(3), 5);
  EXPECT_THROW(BruteForceSolve(wide, {}), InputError);
}

TEST(BruteForceTest, Filter) {
  const DomainStore dc = DomainStore::FromSets(2, {{1}, {1}, {1, 2}, {2}});
  EXPECT_EQ(BruteForceFilter(Contiguous(RelOp::kGe), dc), dc);
  const DomainStore none = BruteForceFilter(
      Contiguous(RelOp::kGe), DomainStore::FromSets(2, {{1}, {2}, {1}}));
  EXPECT_TRUE(none.failed());
}

}  // namespace
}  // namespace sectorise
