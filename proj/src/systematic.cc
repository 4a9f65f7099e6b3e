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

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "sectorise/connected.h"

namespace sectorise {

DomainStore::DomainStore(int num_vars, int num_colours)
    : num_colours_(num_colours) {
  if (num_colours < 1 || num_colours > kMaxColours) {
    throw InputError("colour count must be in 1.." +
                     std::to_string(kMaxColours));
  }
  const Mask full = ((Mask{1} << (num_colours + 1)) - 1) & ~Mask{1};
  dom_.assign(num_vars, full);
  for (int k = 0; k <= num_colours; ++k) counter_.push_back(k);
}

DomainStore DomainStore::FromSets(
    int num_colours, const std::vector<std::vector<Colour>>& sets) {
  DomainStore s(static_cast<int>(sets.size()), num_colours);
  for (size_t i = 0; i < sets.size(); ++i) {
    Mask m = 0;
    for (const Colour c : sets[i]) {
      if (c < 1 || c > num_colours) throw InputError("colour out of range");
      m |= Mask{1} << c;
    }
    s.dom_[i] = m;
    if (m == 0) s.failed_ = true;
  }
  return s;
}

int DomainStore::DomainSize(int i) const { return std::popcount(dom_[i]); }

Colour DomainStore::Value(int i) const {
  return static_cast<Colour>(std::countr_zero(dom_[i]));
}

std::vector<Colour> DomainStore::Values(int i) const {
  std::vector<Colour> out;
  for (Colour c = 1; c <= num_colours_; ++c) {
    if (Contains(i, c)) out.push_back(c);
  }
  return out;
}

bool DomainStore::Remove(int i, Colour c) {
  return Restrict(i, ~(Mask{1} << c));
}

bool DomainStore::Restrict(int i, Mask keep) {
  const Mask next = dom_[i] & keep;
  if (next == dom_[i]) return false;
  dom_[i] = next;
  if (next == 0) failed_ = true;
  return true;
}

void DomainStore::SetCounter(std::vector<int64_t> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  counter_ = std::move(values);
  if (counter_.empty()) failed_ = true;
}

bool DomainStore::RestrictCounter(const std::function<bool(int64_t)>& keep) {
  const size_t before = counter_.size();
  std::erase_if(counter_, [&](int64_t k) { return !keep(k); });
  if (counter_.empty()) failed_ = true;
  return counter_.size() != before;
}

namespace {

// Applies one round of the rules for the singleton at path position p.
// Returns false on failure.
bool ApplyRules(DomainStore& s, const OrderedPath& path, int p,
                PropagationResult& out, bool& changed) {
  const int m = path.size();
  const Colour c = s.Value(path.at(p));
  auto prune = [&](int q, Colour d) {
    const Vertex v = path.at(q);
    if (s.Contains(v, d)) {
      s.Remove(v, d);
      out.pruned.push_back({v, d});
      changed = true;
    }
  };
  int l = -1;
  for (int q = p - 1; q >= 0; --q) {
    if (!s.Contains(path.at(q), c)) {
      l = q;
      break;
    }
  }
  int r = m;
  for (int q = p + 1; q < m; ++q) {
    if (!s.Contains(path.at(q), c)) {
      r = q;
      break;
    }
  }
  if (l >= 0) {
    for (int q = 0; q < l; ++q) prune(q, c);
    if (s.IsSingleton(path.at(l))) {
      const Colour d = s.Value(path.at(l));
      for (int q = p + 1; q < m; ++q) prune(q, d);
    }
  }
  if (r < m) {
    for (int q = r + 1; q < m; ++q) prune(q, c);
    if (s.IsSingleton(path.at(r))) {
      const Colour d = s.Value(path.at(r));
      for (int q = 0; q < p; ++q) prune(q, d);
    }
  }
  if (s.failed()) return false;
  // Farthest singletons of c on either side of p within (l, r).
  const DomainStore::Mask only_c = DomainStore::Mask{1} << c;
  int lo = p;
  for (int q = l + 1; q < p; ++q) {
    if (s.mask(path.at(q)) == only_c) {
      lo = q;
      break;
    }
  }
  int hi = p;
  for (int q = r - 1; q > p; --q) {
    if (s.mask(path.at(q)) == only_c) {
      hi = q;
      break;
    }
  }
  for (int q = lo + 1; q < hi; ++q) {
    const Vertex v = path.at(q);
    if (s.mask(v) == only_c) continue;
    for (const Colour d : s.Values(v)) {
      if (d != c) prune(q, d);
    }
  }
  return !s.failed();
}

void CheckStore(const DomainStore& store, const OrderedPath& path) {
  for (const Vertex v : path.interior()) {
    if (v < 0 || v >= store.size()) {
      throw InputError("path vertex " + std::to_string(v) +
                       " outside the store");
    }
  }
}

}  // namespace

PropagationResult PropagateConnected1dRules(DomainStore& store,
                                            const OrderedPath& path,
                                            Vertex trigger) {
  CheckStore(store, path);
  PropagationResult out;
  if (store.failed()) {
    out.failed = true;
    return out;
  }
  const std::optional<int> start = path.Position(trigger);
  if (!start) throw InputError("trigger vertex is not on the path");
  if (!store.IsSingleton(trigger)) return out;
  bool changed = false;
  if (!ApplyRules(store, path, *start, out, changed)) {
    out.failed = true;
    return out;
  }
  while (changed) {
    changed = false;
    for (int p = 0; p < path.size(); ++p) {
      if (!store.IsSingleton(path.at(p))) continue;
      if (!ApplyRules(store, path, p, out, changed)) {
        out.failed = true;
        return out;
      }
    }
  }
  return out;
}

PropagationResult PropagateConnected1d(DomainStore& store,
                                       const OrderedPath& path,
                                       Vertex trigger, RelOp op) {
  PropagationResult out = PropagateConnected1dRules(store, path, trigger);
  if (out.failed) return out;
  const int m = path.size();
  const int n = store.num_colours();
  if (n > 16) {
    throw InputError("support pass limited to 16 colours");
  }
  // Layered automaton over (last colour, used colours). alive[i] holds the
  // states after position i that are reachable from the start.
  using State = std::pair<Colour, uint32_t>;
  std::vector<std::map<State, std::vector<State>>> layers(m);
  std::map<State, char> frontier{{{0, 0u}, 1}};
  for (int i = 0; i < m; ++i) {
    std::map<State, char> next;
    for (const auto& [st, unused] : frontier) {
      const auto [last, used] = st;
      for (const Colour c : store.Values(path.at(i))) {
        State to;
        if (c == last) {
          to = st;
        } else if (used >> c & 1u) {
          continue;
        } else {
          to = {c, used | (1u << c)};
        }
        layers[i][to].push_back(st);
        next[to] = 1;
      }
    }
    frontier = std::move(next);
  }
  // Counter values with a witness, and the accepting final states.
  auto satisfies = [&](uint32_t used, int64_t k) {
    return Holds(std::popcount(used), op, k);
  };
  std::map<State, char> live;
  std::vector<char> counter_ok(store.counter().size(), 0);
  for (const auto& [st, unused] : frontier) {
    bool any = false;
    for (size_t j = 0; j < store.counter().size(); ++j) {
      if (satisfies(st.second, store.counter()[j])) {
        counter_ok[j] = 1;
        any = true;
      }
    }
    if (any || m == 0) live[st] = 1;
  }
  if (m == 0) {
    return out;
  }
  // Walk back, collecting supported colours per position.
  for (int i = m - 1; i >= 0; --i) {
    const Vertex v = path.at(i);
    DomainStore::Mask support = 0;
    std::map<State, char> prev;
    for (const auto& [st, preds] : layers[i]) {
      if (!live.count(st)) continue;
      for (const State& p : preds) {
        // The colour taken at i is the last colour of `st`.
        support |= DomainStore::Mask{1} << st.first;
        prev[p] = 1;
      }
    }
    for (const Colour c : store.Values(v)) {
      if (!(support >> c & 1u)) out.pruned.push_back({v, c});
    }
    store.Restrict(v, support);
    live = std::move(prev);
  }
  size_t j = 0;
  store.RestrictCounter([&](int64_t) { return counter_ok[j++] != 0; });
  out.failed = store.failed();
  return out;
}

std::vector<std::pair<Vertex, Vertex>> ColourGraphCp(const DomainStore& store,
                                                     const Geometry& g) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (const Vertex w : g.Adjacent(v)) {
      if (v < w && (store.mask(v) & store.mask(w)) != 0) edges.push_back({v, w});
    }
  }
  return edges;
}

Feasibility ConnectedFeasibility(const DomainStore& store, const Geometry& g,
                                 RelOp op) {
  if (store.failed()) return Feasibility::kFailed;
  const int nv = g.num_vertices();
  if (store.size() != nv) throw InputError("store does not match geometry");
  bool all_fixed = true;
  for (Vertex v = 0; v < nv; ++v) all_fixed = all_fixed && store.IsSingleton(v);
  auto counter_allows = [&](int lo, int hi) {
    for (const int64_t k : store.counter()) {
      for (int x = lo; x <= hi; ++x) {
        if (Holds(x, op, k)) return true;
      }
    }
    return false;
  };
  if (all_fixed) {
    std::vector<Colour> colours(nv);
    for (Vertex v = 0; v < nv; ++v) colours[v] = store.Value(v);
    ColourState s(std::make_shared<const Geometry>(g), store.num_colours(),
                  colours);
    const ComponentSet comps = ConnectedComponents(s);
    std::vector<int> seen(store.num_colours() + 1, 0);
    for (const Component& c : comps) {
      if (++seen[c.colour] > 1) return Feasibility::kFailed;
    }
    const int used = static_cast<int>(comps.size());
    return counter_allows(used, used) ? Feasibility::kSubsumed
                                      : Feasibility::kFailed;
  }
  // Vertices fixed to c must share one component of the graph induced by
  // the vertices that can still take c.
  int fixed_colours = 0;
  DomainStore::Mask possible = 0;
  for (Vertex v = 0; v < nv; ++v) possible |= store.mask(v);
  for (Colour c = 1; c <= store.num_colours(); ++c) {
    std::vector<Vertex> fixed;
    for (Vertex v = 0; v < nv; ++v) {
      if (store.mask(v) == (DomainStore::Mask{1} << c)) fixed.push_back(v);
    }
    if (fixed.empty()) continue;
    ++fixed_colours;
    std::vector<char> seen(nv, 0);
    std::vector<Vertex> stack{fixed.front()};
    seen[fixed.front()] = 1;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (const Vertex w : g.Adjacent(u)) {
        if (!seen[w] && store.Contains(w, c)) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    for (const Vertex v : fixed) {
      if (!seen[v]) return Feasibility::kFailed;
    }
  }
  const int max_used = std::min(std::popcount(possible), nv);
  return counter_allows(std::max(fixed_colours, nv > 0 ? 1 : 0), max_used)
             ? Feasibility::kFeasible
             : Feasibility::kFailed;
}

std::vector<int> SignatureVars(std::span<const Colour> colours) {
  std::vector<int> sig;
  for (size_t i = 1; i < colours.size(); ++i) {
    sig.push_back(Iverson(colours[i] == colours[i - 1]));
  }
  return sig;
}

void SignatureDfa::Step(int sig, int64_t value) {
  if (failed_) return;
  if (sig == 1) {
    k_ += value;
  } else if (Holds(k_, op_, t_)) {
    k_ = value;
  } else {
    failed_ = true;
  }
}

bool StretchSumDfaCheck(std::span<const Colour> colours,
                        std::span<const int64_t> values, RelOp op, int64_t t) {
  if (colours.size() != values.size()) {
    throw InputError("colours and values differ in length");
  }
  SignatureDfa dfa(op, t);
  if (colours.empty()) return dfa.Accepting();
  dfa.Start(values[0]);
  const std::vector<int> sig = SignatureVars(colours);
  for (size_t i = 0; i < sig.size(); ++i) dfa.Step(sig[i], values[i + 1]);
  return dfa.Accepting();
}

DomainStore BruteForceFilter(const ColouringCheck& check,
                             const DomainStore& store) {
  DomainStore out = store;
  if (store.failed()) return out;
  const int nv = store.size();
  std::vector<std::vector<Colour>> values(nv);
  for (int i = 0; i < nv; ++i) values[i] = store.Values(i);
  std::vector<DomainStore::Mask> support(nv, 0);
  std::vector<char> counter_support(store.counter().size(), 0);
  std::vector<size_t> idx(nv, 0);
  std::vector<Colour> colours(nv);
  bool any = false;
  for (;;) {
    for (int i = 0; i < nv; ++i) colours[i] = values[i][idx[i]];
    for (size_t j = 0; j < store.counter().size(); ++j) {
      if (check(colours, store.counter()[j])) {
        any = true;
        counter_support[j] = 1;
        for (int i = 0; i < nv; ++i) support[i] |= DomainStore::Mask{1} << colours[i];
      }
    }
    int i = 0;
    while (i < nv && ++idx[i] == values[i].size()) idx[i++] = 0;
    if (i == nv) break;
  }
  if (!any) {
    out.Fail();
    return out;
  }
  for (int i = 0; i < nv; ++i) out.Restrict(i, support[i]);
  size_t j = 0;
  out.RestrictCounter([&](int64_t) { return counter_support[j++] != 0; });
  return out;
}

std::vector<std::vector<Colour>> BruteForceSolve(
    ColourState& state, const std::vector<Constraint*>& constraints,
    int limit) {
  const int nv = state.num_vertices();
  const int n = state.num_colours();
  if (nv > limit) {
    throw InputError("brute force limited to " + std::to_string(limit) +
                     " vertices");
  }
  if (n > 4) throw InputError("brute force limited to 4 colours");
  const std::vector<Colour> original(state.colours().begin(),
                                     state.colours().end());
  std::vector<std::vector<Colour>> solutions;
  std::vector<Colour> colours(nv, 1);
  for (;;) {
    state.SetAll(colours);
    bool ok = true;
    for (const Constraint* c : constraints) {
      if (!c->Check()) {
        ok = false;
        break;
      }
    }
    if (ok) solutions.push_back(colours);
    int i = 0;
    while (i < nv && ++colours[i] > n) colours[i++] = 1;
    if (i == nv) break;
  }
  state.SetAll(original);
  for (Constraint* c : constraints) c->Reset();
  return solutions;
}

}  // namespace sectorise
