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

#include "sectorise/connected.h"

#include <algorithm>
#include <limits>
#include <string>

namespace sectorise {

ConnectedConstraint::ConnectedConstraint(ColourState& state, RelOp op,
                                         int64_t counter, ConnectedMode mode)
    : state_(&state), op_(op), counter_(counter), mode_(mode) {
  if (mode_ == ConnectedMode::kExact) state.EnableComponents();
  Reset();
}

void ConnectedConstraint::Reset() {
  ncc_by_colour_.assign(state_->num_colours() + 1, 0);
  if (state_->components_enabled()) {
    const ComponentTracker& t = state_->components();
    for (Colour c = 1; c <= state_->num_colours(); ++c) {
      ncc_by_colour_[c] = t.count(c);
    }
  } else {
    for (const Component& comp : ConnectedComponents(*state_)) {
      ++ncc_by_colour_[comp.colour];
    }
  }
  ncc_ = 0;
  excess_ = 0;
  for (Colour c = 1; c <= state_->num_colours(); ++c) {
    ncc_ += ncc_by_colour_[c];
    excess_ += Excess(ncc_by_colour_[c]);
  }
  violation_ = ViolationFor(ncc_, excess_);
}

int64_t ConnectedConstraint::VarViolationColour(Vertex v) const {
  return ncc_by_colour_[state_->colour(v)] - 1;
}

int ConnectedConstraint::VarViolationCounter() const {
  return 1 - Iverson(Holds(ncc_, op_, counter_));
}

bool ConnectedConstraint::NoNeighbourHas(Vertex v, Colour c) const {
  for (const Vertex w : state_->geometry().Adjacent(v)) {
    if (state_->colour(w) == c) return false;
  }
  return true;
}

int64_t ConnectedConstraint::ProbeAssignExact(Vertex v, Colour c) const {
  const Colour from = state_->colour(v);
  if (from == c) return 0;
  const MoveAnalysis& a = state_->components().Analyse(v, c);
  const int d_from = a.DeltaComponents(from);
  const int d_to = a.DeltaComponents(c);
  const int64_t excess = excess_ - Excess(ncc_by_colour_[from]) -
                         Excess(ncc_by_colour_[c]) +
                         Excess(ncc_by_colour_[from] + d_from) +
                         Excess(ncc_by_colour_[c] + d_to);
  return ViolationFor(ncc_ + d_from + d_to, excess) - violation_;
}

int64_t ConnectedConstraint::ProbeAssignFast(Vertex v, Colour c) const {
  const Colour from = state_->colour(v);
  if (from == c) return 0;
  const int p = Iverson(NoNeighbourHas(v, c));
  const int m = Iverson(NoNeighbourHas(v, from));
  const int64_t excess = excess_ - Excess(ncc_by_colour_[from]) -
                         Excess(ncc_by_colour_[c]) +
                         Excess(ncc_by_colour_[from] - m) +
                         Excess(ncc_by_colour_[c] + p);
  return ViolationFor(ncc_ + p - m, excess) - violation_;
}

int64_t ConnectedConstraint::ProbeAssignUnclamped(Vertex v, Colour c) const {
  const Colour from = state_->colour(v);
  if (from == c) return 0;
  const int p = Iverson(NoNeighbourHas(v, c));
  const int m = Iverson(NoNeighbourHas(v, from));
  return p - m + Iverson(Holds(ncc_, op_, counter_)) -
         Iverson(Holds(ncc_ + p - m, op_, counter_));
}

void ConnectedConstraint::CommitAssign(Vertex v, Colour c) {
  const Colour from = state_->colour(v);
  if (from == c) return;
  int d_from;
  int d_to;
  if (mode_ == ConnectedMode::kExact) {
    const MoveAnalysis& a = state_->components().Analyse(v, c);
    d_from = a.DeltaComponents(from);
    d_to = a.DeltaComponents(c);
  } else {
    d_to = Iverson(NoNeighbourHas(v, c));
    d_from = -Iverson(NoNeighbourHas(v, from));
  }
  excess_ -= Excess(ncc_by_colour_[from]) + Excess(ncc_by_colour_[c]);
  ncc_by_colour_[from] += d_from;
  ncc_by_colour_[c] += d_to;
  excess_ += Excess(ncc_by_colour_[from]) + Excess(ncc_by_colour_[c]);
  ncc_ += d_from + d_to;
  violation_ = ViolationFor(ncc_, excess_);
}

int64_t ConnectedConstraint::ProbeCounter(int64_t n) const {
  return Iverson(Holds(ncc_, op_, counter_)) - Iverson(Holds(ncc_, op_, n));
}

void ConnectedConstraint::CommitCounter(int64_t n) {
  counter_ = n;
  violation_ = ViolationFor(ncc_, excess_);
}

double ConnectedConstraint::ScratchViolation() const {
  std::vector<int> count(state_->num_colours() + 1, 0);
  int total = 0;
  for (const Component& comp : ConnectedComponents(*state_)) {
    ++count[comp.colour];
    ++total;
  }
  int64_t excess = 0;
  for (const int k : count) excess += Excess(k);
  return static_cast<double>(ViolationFor(total, excess));
}

bool ConnectedConstraint::Check() const {
  return CheckConnected(*state_, op_, counter_);
}

bool CheckConnected(const ColourState& s, RelOp op, int64_t n) {
  // Every pair of equally coloured vertices must be joined by a path that
  // stays inside the colour; equivalently the colour classes are connected,
  // and then the number of components equals the number of used colours.
  const Geometry& g = s.geometry();
  std::vector<char> seen(s.num_vertices(), 0);
  std::vector<char> colour_seen(s.num_colours() + 1, 0);
  std::vector<Vertex> stack;
  int used = 0;
  for (Vertex start = 0; start < s.num_vertices(); ++start) {
    if (seen[start]) continue;
    const Colour c = s.colour(start);
    if (colour_seen[c]) return false;
    colour_seen[c] = 1;
    ++used;
    stack.assign(1, start);
    seen[start] = 1;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (const Vertex w : g.Adjacent(u)) {
        if (!seen[w] && s.colour(w) == c) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return Holds(used, op, n);
}

int ConnectedTargetCount(RelOp op, int64_t n, int num_colours,
                         int num_vertices) {
  for (int k = std::min(num_colours, num_vertices); k >= 1; --k) {
    if (Holds(k, op, n)) return k;
  }
  throw InitError("no component count in 1.." +
                  std::to_string(std::min(num_colours, num_vertices)) +
                  " stands in relation " + std::string(RelOpName(op)) + " " +
                  std::to_string(n));
}

namespace {

// Multi-source BFS distances; unreachable vertices get max().
std::vector<int> Distances(const Geometry& g, const std::vector<Vertex>& from) {
  std::vector<int> dist(g.num_vertices(), std::numeric_limits<int>::max());
  std::vector<Vertex> queue;
  for (const Vertex s : from) {
    dist[s] = 0;
    queue.push_back(s);
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (const Vertex w : g.Adjacent(u)) {
      if (dist[w] == std::numeric_limits<int>::max()) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

void GrowRegionsAround(ColourState& state,
                       const std::vector<std::vector<Vertex>>& fixed, int k,
                       std::mt19937_64& rng) {
  const Geometry& g = state.geometry();
  const int n = g.num_vertices();
  if (k < 1 || k > n || k > state.num_colours() ||
      static_cast<int>(fixed.size()) > k) {
    throw InitError("cannot grow " + std::to_string(k) + " regions over " +
                    std::to_string(n) + " vertices");
  }
  std::vector<std::vector<Vertex>> regions = fixed;
  std::vector<Vertex> taken;
  for (const auto& r : regions) {
    if (r.empty()) throw InitError("empty seed region");
    taken.insert(taken.end(), r.begin(), r.end());
  }
  if (taken.empty()) {
    const Vertex first = static_cast<Vertex>(
        std::uniform_int_distribution<int>(0, n - 1)(rng));
    regions.push_back({first});
    taken.push_back(first);
  }
  // Farthest-point seeding; ties broken at random.
  while (static_cast<int>(regions.size()) < k) {
    const std::vector<int> dist = Distances(g, taken);
    int best = -1;
    std::vector<Vertex> candidates;
    for (Vertex v = 0; v < n; ++v) {
      if (dist[v] == 0) continue;
      // Unreachable vertices are the farthest of all.
      if (dist[v] > best) {
        best = dist[v];
        candidates.clear();
      }
      if (dist[v] == best) candidates.push_back(v);
    }
    if (candidates.empty()) {
      throw InitError("not enough free vertices for " + std::to_string(k) +
                      " regions");
    }
    const Vertex seed = candidates[std::uniform_int_distribution<size_t>(
        0, candidates.size() - 1)(rng)];
    regions.push_back({seed});
    taken.push_back(seed);
  }

  std::vector<Colour> colour(n, 0);
  std::vector<std::vector<Vertex>> queues(k);
  std::vector<size_t> head(k, 0);
  std::vector<int64_t> size(k, 0);
  for (int i = 0; i < k; ++i) {
    for (const Vertex v : regions[i]) {
      if (colour[v] != 0) throw InitError("seed regions overlap");
      colour[v] = i + 1;
      queues[i].push_back(v);
      size[i] += g.volume(v);
    }
  }
  // Always grow the smallest region that can still grow.
  for (;;) {
    int pick = -1;
    for (int i = 0; i < k; ++i) {
      if (head[i] < queues[i].size() && (pick == -1 || size[i] < size[pick])) {
        pick = i;
      }
    }
    if (pick == -1) break;
    const Vertex u = queues[pick][head[pick]++];
    for (const Vertex w : g.Adjacent(u)) {
      if (colour[w] == 0) {
        colour[w] = pick + 1;
        size[pick] += g.volume(w);
        queues[pick].push_back(w);
      }
    }
  }
  if (std::find(colour.begin(), colour.end(), 0) != colour.end()) {
    throw InitError("geometry is disconnected; region growing cannot reach "
                    "every vertex");
  }
  state.SetAll(std::move(colour));
}

void GrowRegions(ColourState& state, int k, std::mt19937_64& rng) {
  GrowRegionsAround(state, {}, k, rng);
}

void HardInitConnected(ColourState& state, RelOp op, int64_t n,
                       std::mt19937_64& rng) {
  GrowRegions(state,
              ConnectedTargetCount(op, n, state.num_colours(),
                                   state.num_vertices()),
              rng);
}

}  // namespace sectorise
