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

// Acceptance suite: one PASS/FAIL line per criterion. Reference values come
// from the oracles in test_support.h, not from the engine's own scratch
// paths.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sectorise/bench.h"
#include "sectorise/colour_state.h"
#include "sectorise/compact.h"
#include "sectorise/connected.h"
#include "sectorise/engine.h"
#include "sectorise/instance_io.h"
#include "sectorise/non_border.h"
#include "sectorise/stretch_sum.h"
#include "sectorise/systematic.h"
#include "sectorise/workload.h"
#include "test_support.h"

namespace sectorise {
namespace {

using Clock = std::chrono::steady_clock;
namespace oracle = testing;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

template <typename T>
T Uniform(std::mt19937_64& rng, T lo, T hi) {
  return std::uniform_int_distribution<T>(lo, hi)(rng);
}

RelOp RandomOp(std::mt19937_64& rng) {
  return static_cast<RelOp>(Uniform<int>(rng, 0, 5));
}

std::vector<int64_t> RandomValues(std::mt19937_64& rng, size_t m, int64_t lo,
                                  int64_t hi) {
  std::vector<int64_t> v(m);
  for (int64_t& x : v) x = Uniform<int64_t>(rng, lo, hi);
  return v;
}

std::vector<Colour> Colours(const ColourState& s) {
  return {s.colours().begin(), s.colours().end()};
}

// Colours along a path, by position.
std::vector<Colour> Along(const std::vector<Colour>& c,
                          const std::vector<Vertex>& path) {
  std::vector<Colour> out;
  for (const Vertex v : path) out.push_back(c[v]);
  return out;
}

// Declarative semantics, evaluated on a plain colouring.
bool SemConnected(const Geometry& g, const std::vector<Colour>& c, int n,
                  RelOp op, int64_t counter) {
  oracle::OracleComponents uf(g, c);
  const auto per = uf.PerColour(c, n);
  int total = 0;
  for (int k = 1; k <= n; ++k) {
    if (per[k] > 1) return false;
    total += per[k];
  }
  return Holds(total, op, counter);
}

bool SemStretch(const std::vector<Colour>& along,
                const std::vector<int64_t>& values, RelOp op, int64_t t) {
  for (const int64_t s : oracle::OracleRunSums(along, values)) {
    if (!Holds(s, op, t)) return false;
  }
  return true;
}

bool SemBalanced(const std::vector<Colour>& c, const std::vector<int64_t>& w,
                 int n, int64_t delta_scaled) {
  std::vector<int64_t> x(n + 1, 0);
  int64_t total = 0;
  for (size_t v = 0; v < c.size(); ++v) {
    x[c[v]] += w[v];
    total += w[v];
  }
  int64_t dev = 0;
  for (int i = 1; i <= n; ++i) dev += std::abs(n * x[i] - total);
  return dev <= delta_scaled;
}

bool SemBounded(const std::vector<Colour>& c, const std::vector<int64_t>& w,
                int n, RelOp op, int64_t t) {
  std::vector<int64_t> x(n + 1, 0);
  for (size_t v = 0; v < c.size(); ++v) x[c[v]] += w[v];
  for (int i = 1; i <= n; ++i) {
    if (!Holds(x[i], op, t)) return false;
  }
  return true;
}

bool SemNonBorder(const Geometry& g, const std::vector<Colour>& c,
                  const std::vector<Vertex>& path) {
  std::vector<char> on(g.num_vertices(), 0);
  for (const Vertex v : path) on[v] = 1;
  for (const Vertex v : path) {
    for (const Vertex w : g.Adjacent(v)) {
      if (!on[w] && c[w] != c[v]) return false;
    }
  }
  return true;
}

// Random instance with every constraint kind over one state.
struct Bundle {
  std::shared_ptr<const Geometry> g;
  int n;
  std::vector<Vertex> path;
  std::vector<int64_t> dwell;
  std::vector<int64_t> work;
  RelOp conn_op, stretch_op, bound_op;
  int64_t conn_n, stretch_t, bound_t, delta, compact_t;
  std::unique_ptr<ColourState> state;
  std::unique_ptr<ConnectedConstraint> connected;
  std::unique_ptr<CompactConstraint> compact;
  std::unique_ptr<StretchSumConstraint> stretch;
  std::unique_ptr<BalancedConstraint> balanced;
  std::unique_ptr<BoundedConstraint> bounded;
  std::unique_ptr<NonBorderConstraint> non_border;

  Bundle(std::mt19937_64& rng, std::shared_ptr<const Geometry> geometry, int colours)
      : g(std::move(geometry)), n(colours) {
    const int nv = g->num_vertices();
    path = oracle::RandomWalk(rng, *g, Uniform<int>(rng, 1, std::min(nv, 12)));
    dwell = RandomValues(rng, path.size(), 1, 5);
    work = RandomValues(rng, nv, 0, 9);
    conn_op = RandomOp(rng);
    stretch_op = RandomOp(rng);
    bound_op = RandomOp(rng);
    conn_n = Uniform<int64_t>(rng, 1, n + 1);
    stretch_t = Uniform<int64_t>(rng, 1, 10);
    int64_t total = 0;
    for (const int64_t x : work) total += x;
    bound_t = Uniform<int64_t>(rng, 0, total);
    delta = Uniform<int64_t>(rng, 0, 2 * total);
    compact_t = Uniform<int64_t>(rng, 0, 4 * g->num_facets());
    state = std::make_unique<ColourState>(g, n);
    connected = std::make_unique<ConnectedConstraint>(*state, conn_op, conn_n);
    compact = std::make_unique<CompactConstraint>(*state, CompactMode::kBorderTotal,
                                                  compact_t);
    stretch = std::make_unique<StretchSumConstraint>(
        *state, OrderedPath(path, g.get()), dwell, stretch_op, stretch_t);
    balanced = std::make_unique<BalancedConstraint>(*state, work, delta);
    bounded = std::make_unique<BoundedConstraint>(*state, work, bound_op, bound_t);
    non_border =
        std::make_unique<NonBorderConstraint>(*state, OrderedPath(path, g.get()));
  }

  std::vector<Constraint*> All() {
    return {connected.get(), compact.get(), stretch.get(),
            balanced.get(), bounded.get(), non_border.get()};
  }
  void SetAll(const std::vector<Colour>& c) {
    state->SetAll(c);
    for (Constraint* k : All()) k->Reset();
  }
  // Oracle semantics, in All() order.
  std::vector<bool> Semantics(const std::vector<Colour>& c) const {
    return {SemConnected(*g, c, n, conn_op, conn_n),
            oracle::OracleBorderTotal(*g, c) <= compact_t,
            SemStretch(Along(c, path), dwell, stretch_op, stretch_t),
            SemBalanced(c, work, n, delta),
            SemBounded(c, work, n, bound_op, bound_t),
            SemNonBorder(*g, c, path)};
  }
  // Oracle violations, in All() order.
  std::vector<double> Violations(const std::vector<Colour>& c) const {
    return {static_cast<double>(
                oracle::OracleConnectedViolation(*g, c, n, conn_op, conn_n)),
            static_cast<double>(
                std::max<int64_t>(oracle::OracleBorderTotal(*g, c) - compact_t, 0)),
            static_cast<double>(oracle::OracleStretchViolation(
                Along(c, path), dwell, stretch_op, stretch_t)),
            static_cast<double>(oracle::OracleBalanced(c, work, n, delta)),
            static_cast<double>(oracle::OracleBounded(c, work, n, bound_op, bound_t)),
            static_cast<double>(oracle::OracleNonBorder(*g, c, path))};
  }
};

const char* kKinds[] = {"connected", "compact_b", "stretch_sum",
                        "balanced",  "bounded",   "non_border"};

Outcome ViolationSemantics() {
  const auto start = Clock::now();
  std::mt19937_64 rng(101);
  int instances = 0;
  int64_t colourings = 0;
  std::vector<int64_t> mismatches(6, 0);
  std::vector<int64_t> satisfied(6, 0);
  for (; instances < 60; ++instances) {
    const int nv = Uniform<int>(rng, 3, 8);
    const int n = Uniform<int>(rng, 2, 3);
    Bundle b(rng, oracle::RandomGeometry(rng, nv), n);
    oracle::ForEachColouring(nv, n, [&](const std::vector<Colour>& c) {
      ++colourings;
      b.SetAll(c);
      const auto sem = b.Semantics(c);
      const auto all = b.All();
      for (int k = 0; k < 6; ++k) {
        const bool zero = all[k]->Violation() == 0;
        if (zero != sem[k] || all[k]->Check() != sem[k]) ++mismatches[k];
        satisfied[k] += sem[k];
      }
    });
  }
  const double secs = Seconds(start);
  std::ostringstream os;
  bool ok = secs <= 60;
  os << instances << " instances, " << colourings << " colourings;";
  for (int k = 0; k < 6; ++k) {
    ok = ok && mismatches[k] == 0;
    os << " " << kKinds[k] << " " << mismatches[k] << " mismatches ("
       << satisfied[k] << " satisfied)";
    os << (k < 5 ? "," : ";");
  }
  os << " " << secs << " s";
  return {ok, os.str()};
}

Outcome DeltaExactness() {
  const auto start = Clock::now();
  std::mt19937_64 rng(202);
  constexpr int kProbes = 10000;
  // Six bundle constraints plus compact mode B squared and mode A.
  std::vector<int64_t> probes(8, 0), bad(8, 0);
  double worst_a = 0;
  while (probes[0] < kProbes) {
    const int nv = Uniform<int>(rng, 4, 30);
    const int n = Uniform<int>(rng, 2, 4);
    auto g = Uniform<int>(rng, 0, 1) ? oracle::RandomGeometry(rng, nv)
                                     : oracle::Grid2d(Uniform<int>(rng, 2, 6),
                                                      Uniform<int>(rng, 2, 6));
    Bundle b(rng, g, n);
    b.SetAll(oracle::RandomColouring(rng, g->num_vertices(), n));
    CompactConstraint square(*b.state, CompactMode::kBorderTotal, b.compact_t,
                             WeightFn::kSquare);
    const int64_t t_a = Uniform<int64_t>(rng, 0, 6);
    CompactConstraint sphere(*b.state, CompactMode::kSphericity, t_a,
                             WeightFn::kIdentity, true);
    for (int step = 0; step < 100 && probes[0] < kProbes; ++step) {
      const Vertex v = Uniform<Vertex>(rng, 0, g->num_vertices() - 1);
      const Colour c = Uniform<Colour>(rng, 1, n);
      const std::vector<Colour> before = Colours(*b.state);
      std::vector<Colour> after = before;
      after[v] = c;
      const auto vb = b.Violations(before);
      const auto va = b.Violations(after);
      const auto all = b.All();
      for (int k = 0; k < 6; ++k) {
        ++probes[k];
        if (all[k]->ProbeAssign(v, c) != va[k] - vb[k]) ++bad[k];
      }
      // Square weights: Σ f(Border(v)) plus f of the outer areas, halved.
      auto squared = [&](const std::vector<Colour>& col) {
        int64_t sum = 0;
        for (Vertex u = 0; u < g->num_vertices(); ++u) {
          const int64_t x = oracle::OracleBorder(*g, col, u);
          int64_t outer = 0;
          for (Facet f = 0; f < g->num_facets(); ++f) {
            if (g->facet(f).first == u && g->facet(f).second == kBottom) {
              outer += g->facet(f).area;
            }
          }
          sum += x * x + outer * outer;
        }
        return std::max(0.5 * static_cast<double>(sum) - b.compact_t, 0.0);
      };
      ++probes[6];
      if (square.ProbeAssign(v, c) != squared(after) - squared(before)) ++bad[6];
      ++probes[7];
      const double want =
          std::max(oracle::OracleSphericity(*g, after) - t_a, 0.0) -
          std::max(oracle::OracleSphericity(*g, before) - t_a, 0.0);
      const double err = std::abs(sphere.ProbeAssign(v, c) - want);
      worst_a = std::max(worst_a, err);
      if (err > 1e-9) ++bad[7];
      if (Uniform<int>(rng, 0, 1)) {
        for (Constraint* k : all) k->CommitAssign(v, c);
        square.CommitAssign(v, c);
        sphere.CommitAssign(v, c);
        b.state->Assign(v, c);
      }
    }
  }
  const double secs = Seconds(start);
  const char* names[] = {"connected", "compact_b", "stretch_sum", "balanced",
                         "bounded",   "non_border", "compact_b_square",
                         "compact_a"};
  std::ostringstream os;
  bool ok = secs <= 60;
  for (int k = 0; k < 8; ++k) {
    ok = ok && bad[k] == 0 && probes[k] >= kProbes;
    os << names[k] << " " << bad[k] << "/" << probes[k] << (k < 7 ? ", " : "");
  }
  os << "; compact_a max error " << worst_a << "; " << secs << " s";
  return {ok, os.str()};
}

Outcome Incrementality() {
  std::mt19937_64 rng(303);
  const auto g = oracle::Grid2d(20, 20);
  const int n = 4;
  const int nv = g->num_vertices();
  Model m(ColourState(g, n, oracle::RandomColouring(rng, nv, n)));
  const auto work = RandomValues(rng, nv, 1, 10);
  const auto walk_a = oracle::RandomWalk(rng, *g, 40);
  const auto walk_b = oracle::RandomWalk(rng, *g, 25);
  const auto dwell_a = RandomValues(rng, walk_a.size(), 20, 100);
  const auto dwell_b = RandomValues(rng, walk_b.size(), 20, 100);
  m.Emplace<ConnectedConstraint>("connected", 1, RelOp::kEq, n);
  m.Emplace<CompactConstraint>("compact_a", 1, CompactMode::kSphericity, 50);
  m.Emplace<CompactConstraint>("compact_b", 1, CompactMode::kBorderTotal, 100,
                               WeightFn::kSquare);
  m.Emplace<StretchSumConstraint>("stretch_ge", 1, OrderedPath(walk_a, g.get()),
                                  dwell_a, RelOp::kGe, 120);
  m.Emplace<StretchSumConstraint>("stretch_le", 1, OrderedPath(walk_b, g.get()),
                                  dwell_b, RelOp::kLe, 300);
  m.Emplace<BalancedConstraint>("balanced", 1, work, 40);
  m.AddConstraint("balanced_size",
                  std::make_unique<BalancedConstraint>(
                      BalancedConstraint::OverVolumes(m.state(), 8)));
  m.Emplace<BoundedConstraint>("bounded", 1, work, RelOp::kLe, 600);
  m.Emplace<NonBorderConstraint>("non_border_a", 1, OrderedPath(walk_a, g.get()));
  m.Emplace<NonBorderConstraint>("non_border_b", 1, OrderedPath(walk_b, g.get()));

  auto reference = [&](const std::vector<Colour>& c) {
    const std::vector<int64_t> ones(nv, 1);
    std::vector<double> r;
    r.push_back(static_cast<double>(
        oracle::OracleConnectedViolation(*g, c, n, RelOp::kEq, n)));
    r.push_back(std::max(oracle::OracleSphericity(*g, c) - 50, 0.0));
    int64_t sq = 0;
    for (Vertex u = 0; u < nv; ++u) {
      const int64_t x = oracle::OracleBorder(*g, c, u);
      const int64_t outer = static_cast<int64_t>(
          4 - g->Adjacent(u).size());  // unit cells on the grid boundary
      sq += x * x + outer * outer;
    }
    r.push_back(std::max(0.5 * static_cast<double>(sq) - 100, 0.0));
    r.push_back(static_cast<double>(
        oracle::OracleStretchViolation(Along(c, walk_a), dwell_a, RelOp::kGe, 120)));
    r.push_back(static_cast<double>(
        oracle::OracleStretchViolation(Along(c, walk_b), dwell_b, RelOp::kLe, 300)));
    r.push_back(static_cast<double>(oracle::OracleBalanced(c, work, n, 40)));
    r.push_back(static_cast<double>(oracle::OracleBalanced(c, ones, n, 8)));
    r.push_back(static_cast<double>(oracle::OracleBounded(c, work, n, RelOp::kLe, 600)));
    r.push_back(static_cast<double>(oracle::OracleNonBorder(*g, c, walk_a)));
    r.push_back(static_cast<double>(oracle::OracleNonBorder(*g, c, walk_b)));
    return r;
  };

  int checks = 0;
  int64_t bad = 0;
  std::string first_bad;
  auto compare = [&](int64_t step) {
    ++checks;
    const auto want = reference(Colours(m.state()));
    const auto got = m.Violations();
    for (int k = 0; k < m.num_constraints(); ++k) {
      const double tol = k == 1 ? 1e-9 : 0.0;
      if (std::abs(got[k] - want[k]) > tol) {
        if (bad++ == 0) {
          first_bad = m.constraint_id(k) + " at move " + std::to_string(step);
        }
      }
    }
  };
  constexpr int kMoves = 10000;
  int swaps = 0;
  for (int step = 1; step <= kMoves; ++step) {
    if (Uniform<int>(rng, 0, 9) == 0) {
      ++swaps;
      m.Commit(Move::Swap(Uniform<Vertex>(rng, 0, nv - 1),
                          Uniform<Vertex>(rng, 0, nv - 1)));
    } else {
      m.Commit(Move::Assign(Uniform<Vertex>(rng, 0, nv - 1),
                            Uniform<Colour>(rng, 1, n)));
    }
    if (step % 500 == 0) compare(step);
  }
  std::ostringstream os;
  os << kMoves << " moves (" << swaps << " swaps) on a 20x20 grid, "
     << m.num_constraints() << " constraints, " << checks
     << " comparisons against oracles, " << bad << " mismatches";
  if (bad) os << " (first: " << first_bad << ")";
  return {bad == 0, os.str()};
}

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

Outcome DomainConsistency() {
  const auto start = Clock::now();
  std::mt19937_64 rng(404);
  int instances = 0, agree = 0, rules_agree = 0, failed = 0;
  while (instances < 500) {
    const int m = Uniform<int>(rng, 1, 10);
    const int n = Uniform<int>(rng, 1, 4);
    const double p = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
    DomainStore s(m, n);
    for (int i = 0; i < m; ++i) {
      for (Colour c = 1; c <= n; ++c) {
        if (std::bernoulli_distribution(p)(rng)) s.Remove(i, c);
      }
    }
    if (s.failed()) continue;
    if (Uniform<int>(rng, 0, 1)) {
      std::vector<int64_t> counter;
      for (int64_t k = 0; k <= n + 1; ++k) {
        if (Uniform<int>(rng, 0, 1)) counter.push_back(k);
      }
      if (counter.empty()) continue;
      s.SetCounter(counter);
    }
    const Vertex trigger = Uniform<Vertex>(rng, 0, m - 1);
    const auto vals = s.Values(trigger);
    s.Fix(trigger, vals[Uniform<size_t>(rng, 0, vals.size() - 1)]);
    const RelOp op = RandomOp(rng);
    std::vector<Vertex> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    const OrderedPath path(order);
    const DomainStore want = BruteForceFilter(Contiguous(op), s);
    DomainStore full = s;
    PropagateConnected1d(full, path, trigger, op);
    DomainStore rules = s;
    PropagateConnected1dRules(rules, path, trigger);
    ++instances;
    agree += full == want;
    failed += want.failed();
    // The rules never touch the counter, so compare colour domains only.
    bool same = rules.failed() == want.failed();
    for (int i = 0; same && !want.failed() && i < m; ++i) {
      same = rules.mask(i) == want.mask(i);
    }
    rules_agree += same;
  }
  std::ostringstream os;
  os << agree << "/" << instances << " fixpoints equal to brute-force filtering ("
     << failed << " unsatisfiable); pruning rules alone match on colour domains in "
     << rules_agree << "/" << instances << "; " << Seconds(start) << " s";
  return {agree == instances, os.str()};
}

Outcome DfaEquivalence() {
  const auto start = Clock::now();
  int64_t cases = 0, bad = 0;
  for (int m = 1; m <= 6; ++m) {
    const int n = std::min(m, 3);
    oracle::ForEachColouring(m, n, [&](const std::vector<Colour>& c) {
      oracle::ForEachColouring(m, 5, [&](const std::vector<Colour>& vals) {
        const std::vector<int64_t> v(vals.begin(), vals.end());
        for (int64_t t = 1; t <= 10; ++t) {
          for (const RelOp op : {RelOp::kGe, RelOp::kLe}) {
            ++cases;
            if (StretchSumDfaCheck(c, v, op, t) != CheckStretchSum(c, v, op, t)) ++bad;
          }
        }
      });
    });
  }
  std::ostringstream os;
  os << cases << " cases (|V| 1..6, colours up to 3, values 1..5, t 1..10, >= and <=), "
     << bad << " disagreements; " << Seconds(start) << " s";
  return {bad == 0, os.str()};
}

Outcome WorkedExample() {
  const std::vector<Colour> seq = {1, 1, 4, 4, 4, 4, 4, 4, 1, 1, 1, 2};
  const std::vector<Stretch> got = Stretches(seq);
  const std::vector<std::vector<Colour>> want_runs = {
      {1, 1}, {4, 4, 4, 4, 4, 4}, {1, 1, 1}, {2}};
  bool ok = got.size() == want_runs.size();
  std::ostringstream os;
  os << got.size() << " stretches:";
  for (size_t i = 0; i < got.size(); ++i) {
    os << " [" << got[i].first << "," << got[i].last << "]";
    if (!ok) continue;
    const std::vector<Colour> run(seq.begin() + got[i].first,
                                  seq.begin() + got[i].last + 1);
    ok = run == want_runs[i];
  }
  ok = ok && got == std::vector<Stretch>{{0, 1}, {2, 7}, {8, 10}, {11, 11}};
  return {ok, os.str()};
}

Outcome DivergenceLedger() {
  std::mt19937_64 rng(707);
  constexpr int kProbes = 10000;
  int probes = 0;
  int64_t split_only = 0, merge_only = 0, both = 0, false_div = 0;
  int64_t structural_agree = 0, unclamped_div = 0, unclamped_plain = 0;
  while (probes < kProbes) {
    const int n = Uniform<int>(rng, 2, 4);
    auto g = Uniform<int>(rng, 0, 1) ? oracle::RandomGeometry(rng, Uniform<int>(rng, 5, 25))
                                     : oracle::Grid2d(Uniform<int>(rng, 3, 8),
                                                      Uniform<int>(rng, 3, 8));
    const int nv = g->num_vertices();
    ColourState s(g, n, oracle::RandomColouring(rng, nv, n));
    if (Uniform<int>(rng, 0, 1)) {
      GrowRegions(s, std::min(n, nv), rng);
      for (int k = 0; k < nv / 5; ++k) {
        s.Assign(Uniform<Vertex>(rng, 0, nv - 1), Uniform<Colour>(rng, 1, n));
      }
    }
    ConnectedConstraint c(s, RandomOp(rng), Uniform<int64_t>(rng, 1, n + 1));
    for (int step = 0; step < 50 && probes < kProbes; ++step, ++probes) {
      const Vertex v = Uniform<Vertex>(rng, 0, nv - 1);
      const Colour to = Uniform<Colour>(rng, 1, n);
      const Colour from = s.colour(v);
      const std::vector<Colour> before = Colours(s);
      std::vector<Colour> after = before;
      after[v] = to;
      oracle::OracleComponents ub(*g, before), ua(*g, after);
      const auto pb = ub.PerColour(before, n);
      const auto pa = ua.PerColour(after, n);
      const bool split = from != to && pa[from] - pb[from] >= 1;
      const bool merge = from != to && pb[to] - pa[to] >= 1;
      const int64_t fast = c.ProbeAssignFast(v, to);
      const int64_t exact = c.ProbeAssignExact(v, to);
      if (fast != exact) {
        if (split && merge) {
          ++both;
        } else if (split) {
          ++split_only;
        } else if (merge) {
          ++merge_only;
        } else {
          ++false_div;
        }
      } else if (split || merge) {
        ++structural_agree;
      }
      if (c.ProbeAssignUnclamped(v, to) != exact) {
        ++unclamped_div;
        if (!split && !merge) ++unclamped_plain;
      }
      if (Uniform<int>(rng, 0, 1)) {
        c.CommitAssign(v, to);
        s.Assign(v, to);
      }
    }
  }
  std::ostringstream os;
  os << probes << " probes; divergences: " << split_only << " split, " << merge_only
     << " merge, " << both << " split+merge, " << false_div << " false; "
     << structural_agree << " split/merge moves without divergence; unclamped form "
     << unclamped_div << " divergences (" << unclamped_plain
     << " outside splits and merges)";
  return {false_div == 0, os.str()};
}

Outcome ProbeScaling() {
  const auto start = Clock::now();
  ProbeBenchOptions opt;
  opt.grids = {{10, 10}, {40, 25}, {100, 100}};
  opt.probes = 100000;
  opt.repeats = 5;
  const auto rows = ProbeBench(opt);
  std::map<std::string, std::map<int, double>> ns;
  std::map<int, double> degree;
  for (const ProbeBenchRow& r : rows) {
    ns[r.constraint][r.vertices] = r.mean_ns;
    degree[r.vertices] = r.mean_degree;
  }
  bool ok = true;
  std::ostringstream os;
  for (const std::string name : {"connected", "balanced", "non_border"}) {
    const double ratio = ns[name][10000] / ns[name][1000];
    ok = ok && ratio <= 2.0;
    os << name << " " << ns[name][100] << "/" << ns[name][1000] << "/"
       << ns[name][10000] << " ns (ratio " << ratio << "), ";
  }
  os << "mean degree " << degree[1000] << " -> " << degree[10000];
  const double secs = Seconds(start);
  os << "; " << secs << " s";
  return {ok && secs <= 120, os.str()};
}

Outcome EndToEnd() {
  const auto start = Clock::now();
  int solved = 0, replayed = 0;
  std::ostringstream iters;
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    GenerateOptions gen;
    gen.seed = seed;
    gen.w = 10;
    gen.h = 10;
    gen.num_colours = 4;
    gen.num_flights = 1;
    const Instance inst = Generate(gen);
    SearchConfig cfg = inst.search;
    cfg.max_iterations = 50000;
    cfg.seed = seed;
    auto a = BuildModel(inst);
    auto b = BuildModel(inst);
    const SearchResult ra = Search(*a, cfg);
    const SearchResult rb = Search(*b, cfg);
    const bool ok = ra.solved() && CheckSolution(inst, {4, ra.best, {}}).satisfied();
    solved += ok;
    replayed += TraceCsv(*a, ra.trace) == TraceCsv(*b, rb.trace) && ra.best == rb.best;
    iters << (seed > 1 ? "," : "") << (ok ? std::to_string(ra.best_iteration) : "-");
  }
  std::ostringstream os;
  os << solved << "/10 seeds solved within 50000 iterations (best at " << iters.str()
     << "), " << replayed << "/10 replays identical; " << Seconds(start) << " s";
  return {solved >= 8 && replayed == 10, os.str()};
}

}  // namespace
}  // namespace sectorise

int main() {
  using sectorise::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"violation semantics equivalence", sectorise::ViolationSemantics},
      {"delta exactness", sectorise::DeltaExactness},
      {"incrementality", sectorise::Incrementality},
      {"1D connected propagator domain consistency", sectorise::DomainConsistency},
      {"stretch sum DFA equivalence", sectorise::DfaEquivalence},
      {"worked stretches example", sectorise::WorkedExample},
      {"connected delta divergence ledger", sectorise::DivergenceLedger},
      {"probe cost scaling", sectorise::ProbeScaling},
      {"end-to-end solve", sectorise::EndToEnd},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", index, name,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
