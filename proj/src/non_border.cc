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

namespace sectorise {

bool CheckNonBorder(const ColourState& s, const OrderedPath& path) {
  const Geometry& g = s.geometry();
  for (const Vertex v : path.interior()) {
    for (const Vertex w : g.Adjacent(v)) {
      if (!path.Contains(w) && s.colour(w) != s.colour(v)) return false;
    }
  }
  return true;
}

NonBorderConstraint::NonBorderConstraint(ColourState& state, OrderedPath path)
    : state_(&state), path_(std::move(path)) {
  const Geometry& g = state.geometry();
  const int n = g.num_vertices();
  on_path_.assign(n, 0);
  for (const Vertex v : path_.interior()) on_path_[g.CheckVertex(v)] = 1;
  off_path_.assign(n, {});
  path_neighbours_.assign(n, {});
  for (const Vertex v : path_.interior()) {
    for (const Vertex w : g.Adjacent(v)) {
      if (on_path_[w]) continue;
      off_path_[v].push_back(w);
      path_neighbours_[w].push_back(v);
    }
  }
  Reset();
}

void NonBorderConstraint::Reset() {
  var_.assign(on_path_.size(), 0);
  violation_ = 0;
  for (const Vertex v : path_.interior()) {
    for (const Vertex w : off_path_[v]) {
      var_[v] += Iverson(state_->colour(w) != state_->colour(v));
    }
    violation_ += var_[v];
  }
}

int64_t NonBorderConstraint::IntProbeAssign(Vertex v, Colour c) const {
  const Colour old = state_->colour(v);
  if (c == old) return 0;
  int64_t delta = 0;
  const auto& others = on_path_[v] ? off_path_[v] : path_neighbours_[v];
  for (const Vertex w : others) {
    const Colour cw = state_->colour(w);
    delta += Iverson(cw != c) - Iverson(cw != old);
  }
  return delta;
}

void NonBorderConstraint::CommitAssign(Vertex v, Colour c) {
  const Colour old = state_->colour(v);
  if (c == old) return;
  if (on_path_[v]) {
    const int64_t d = IntProbeAssign(v, c);
    var_[v] += d;
    violation_ += d;
    return;
  }
  for (const Vertex u : path_neighbours_[v]) {
    const Colour cu = state_->colour(u);
    const int64_t d = Iverson(cu != c) - Iverson(cu != old);
    var_[u] += d;
    violation_ += d;
  }
}

double NonBorderConstraint::ScratchViolation() const {
  const Geometry& g = state_->geometry();
  int64_t total = 0;
  for (const Vertex v : path_.interior()) {
    for (const Vertex w : g.Adjacent(v)) {
      if (!path_.Contains(w)) {
        total += Iverson(state_->colour(w) != state_->colour(v));
      }
    }
  }
  return static_cast<double>(total);
}

}  // namespace sectorise
