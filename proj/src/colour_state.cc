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

#include "sectorise/colour_state.h"

#include <algorithm>
#include <string>
#include <utility>

namespace sectorise {

ColourState::ColourState(std::shared_ptr<const Geometry> g, int num_colours,
                         std::vector<Colour> colours)
    : geometry_(std::move(g)),
      num_colours_(num_colours),
      colours_(std::move(colours)) {
  if (num_colours_ < 1) throw InputError("need at least one colour");
  if (static_cast<int>(colours_.size()) != geometry_->num_vertices()) {
    throw InputError("colour table size does not match vertex count");
  }
  colour_size_.assign(num_colours_ + 1, 0);
  for (const Colour c : colours_) {
    CheckColour(c);
    if (colour_size_[c]++ == 0) ++used_colours_;
  }
}

ColourState::ColourState(std::shared_ptr<const Geometry> g, int num_colours)
    : ColourState(g, num_colours,
                  std::vector<Colour>(g->num_vertices(), 1)) {}

ColourState::~ColourState() = default;

ColourState::ColourState(const ColourState& other)
    : geometry_(other.geometry_),
      num_colours_(other.num_colours_),
      colours_(other.colours_),
      colour_size_(other.colour_size_),
      used_colours_(other.used_colours_),
      revision_(other.revision_) {
  if (other.tracker_) EnableComponents();
}

ColourState& ColourState::operator=(const ColourState& other) {
  if (this == &other) return *this;
  ColourState copy(other);
  *this = std::move(copy);
  return *this;
}

ColourState::ColourState(ColourState&& other) noexcept
    : geometry_(std::move(other.geometry_)),
      num_colours_(other.num_colours_),
      colours_(std::move(other.colours_)),
      colour_size_(std::move(other.colour_size_)),
      used_colours_(other.used_colours_),
      revision_(other.revision_),
      tracker_(std::move(other.tracker_)) {
  if (tracker_) tracker_->state_ = this;
}

ColourState& ColourState::operator=(ColourState&& other) noexcept {
  geometry_ = std::move(other.geometry_);
  num_colours_ = other.num_colours_;
  colours_ = std::move(other.colours_);
  colour_size_ = std::move(other.colour_size_);
  used_colours_ = other.used_colours_;
  revision_ = other.revision_;
  tracker_ = std::move(other.tracker_);
  if (tracker_) tracker_->state_ = this;
  return *this;
}

void ColourState::CheckColour(Colour c) const {
  if (c < 1 || c > num_colours_) {
    throw InputError("colour " + std::to_string(c) + " outside 1.." +
                     std::to_string(num_colours_));
  }
}

void ColourState::Assign(Vertex v, Colour c) {
  if (v == kBottom) throw InputError("the outside vertex cannot be recoloured");
  geometry_->CheckVertex(v);
  CheckColour(c);
  const Colour old = colours_[v];
  if (old != c) {
    const MoveAnalysis* analysis = nullptr;
    if (tracker_) analysis = &tracker_->Analyse(v, c);
    colours_[v] = c;
    if (--colour_size_[old] == 0) --used_colours_;
    if (colour_size_[c]++ == 0) ++used_colours_;
    if (tracker_) tracker_->Commit(*analysis);
  }
  ++revision_;
}

void ColourState::SetAll(std::vector<Colour> colours) {
  if (static_cast<int>(colours.size()) != num_vertices()) {
    throw InputError("colour table size does not match vertex count");
  }
  for (const Colour c : colours) CheckColour(c);
  colours_ = std::move(colours);
  colour_size_.assign(num_colours_ + 1, 0);
  used_colours_ = 0;
  for (const Colour c : colours_) {
    if (colour_size_[c]++ == 0) ++used_colours_;
  }
  ++revision_;
  if (tracker_) tracker_->Rebuild();
}

ComponentTracker& ColourState::EnableComponents() {
  if (!tracker_) tracker_ = std::make_unique<ComponentTracker>(*this);
  return *tracker_;
}

// ---------------------------------------------------------------------------

ComponentTracker::ComponentTracker(const ColourState& state) : state_(&state) {
  Rebuild();
}

void ComponentTracker::Rebuild() {
  const int n = state_->num_vertices();
  const Geometry& g = state_->geometry();
  comp_of_.assign(n, -1);
  pos_.assign(n, 0);
  comps_.clear();
  free_.clear();
  count_.assign(state_->num_colours() + 1, 0);
  num_components_ = 0;
  mark_.assign(n, 0);
  owner_.assign(n, -1);
  stamp_ = 0;
  cache_valid_ = false;
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (comp_of_[s] != -1) continue;
    const Colour c = state_->colour(s);
    const int id = NewComponent(c);
    queue.assign(1, s);
    comp_of_[s] = id;
    for (size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      pos_[u] = static_cast<int>(comps_[id].members.size());
      comps_[id].members.push_back(u);
      comps_[id].volume += g.volume(u);
      for (const Vertex w : g.Adjacent(u)) {
        if (comp_of_[w] == -1 && state_->colour(w) == c) {
          comp_of_[w] = id;
          queue.push_back(w);
        }
      }
    }
  }
}

int ComponentTracker::NewComponent(Colour c) {
  int id;
  if (!free_.empty()) {
    id = free_.back();
    free_.pop_back();
  } else {
    id = static_cast<int>(comps_.size());
    comps_.emplace_back();
  }
  Component& comp = comps_[id];
  comp.colour = c;
  comp.volume = 0;
  comp.members.clear();
  comp.alive = true;
  ++count_[c];
  ++num_components_;
  return id;
}

void ComponentTracker::Release(int comp) {
  Component& c = comps_[comp];
  --count_[c.colour];
  --num_components_;
  c.alive = false;
  c.members.clear();
  c.volume = 0;
  free_.push_back(comp);
}

void ComponentTracker::Move(Vertex v, int to_comp) {
  const int from = comp_of_[v];
  const int64_t vol = state_->geometry().volume(v);
  if (from >= 0) {
    auto& members = comps_[from].members;
    const Vertex last = members.back();
    members[pos_[v]] = last;
    pos_[last] = pos_[v];
    members.pop_back();
    comps_[from].volume -= vol;
  }
  comp_of_[v] = to_comp;
  pos_[v] = static_cast<int>(comps_[to_comp].members.size());
  comps_[to_comp].members.push_back(v);
  comps_[to_comp].volume += vol;
}

std::vector<int> ComponentTracker::LiveComponents() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(comps_.size()); ++i) {
    if (comps_[i].alive) out.push_back(i);
  }
  return out;
}

namespace {

int FindClass(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

const MoveAnalysis& ComponentTracker::Analyse(Vertex v, Colour to) const {
  if (cache_valid_ && cache_.vertex == v && cache_.to == to &&
      cache_.revision == state_->revision()) {
    return cache_;
  }
  const Geometry& g = state_->geometry();
  MoveAnalysis& a = cache_;
  a.vertex = v;
  a.to = to;
  a.from = state_->colour(v);
  a.revision = state_->revision();
  a.old_component = comp_of_[v];
  a.old_volume = comps_[a.old_component].volume;
  a.piece_volumes.clear();
  a.merged.clear();
  a.merged_volume = g.volume(v);
  a.pieces = 0;
  finished_pieces_.clear();
  cache_valid_ = true;
  if (a.from == to) {
    a.pieces = 1;
    a.piece_volumes.push_back(a.old_volume);
    return a;
  }

  for (const Vertex w : g.Adjacent(v)) {
    if (state_->colour(w) != to) continue;
    const int cw = comp_of_[w];
    if (std::find(a.merged.begin(), a.merged.end(), cw) == a.merged.end()) {
      a.merged.push_back(cw);
      a.merged_volume += comps_[cw].volume;
    }
  }

  // Same-coloured neighbours seed one search each.
  if (++stamp_ == 0) {
    std::fill(mark_.begin(), mark_.end(), 0);
    stamp_ = 1;
  }
  mark_[v] = stamp_;
  owner_[v] = -2;
  int k = 0;
  for (const Vertex w : g.Adjacent(v)) {
    if (state_->colour(w) != a.from) continue;
    if (static_cast<int>(queues_.size()) <= k) queues_.emplace_back();
    queues_[k].assign(1, w);
    mark_[w] = stamp_;
    owner_[w] = k;
    ++k;
  }
  if (k == 0) return a;  // v was alone
  const int64_t rest = a.old_volume - g.volume(v);
  if (k == 1) {
    a.pieces = 1;
    a.piece_volumes.push_back(rest);
    return a;
  }

  search_class_.resize(k);
  for (int i = 0; i < k; ++i) search_class_[i] = i;
  std::vector<size_t> head(k, 0);
  std::vector<int64_t> volume(k, 0);
  for (int i = 0; i < k; ++i) volume[i] = g.volume(queues_[i][0]);

  int classes = k;
  std::vector<char> active(k);
  for (;;) {
    // Termination: everything met, or at most one class still growing.
    if (classes == 1) break;
    std::fill(active.begin(), active.end(), 0);
    int active_classes = 0;
    for (int i = 0; i < k; ++i) {
      if (head[i] < queues_[i].size()) {
        const int r = FindClass(search_class_, i);
        if (!active[r]) {
          active[r] = 1;
          ++active_classes;
        }
      }
    }
    if (active_classes <= 1) break;
    for (int i = 0; i < k; ++i) {
      if (head[i] >= queues_[i].size()) continue;
      const Vertex u = queues_[i][head[i]++];
      for (const Vertex x : g.Adjacent(u)) {
        if (state_->colour(x) != a.from) continue;
        if (mark_[x] != stamp_) {
          mark_[x] = stamp_;
          owner_[x] = i;
          queues_[i].push_back(x);
          volume[i] += g.volume(x);
        } else if (owner_[x] >= 0) {
          const int ri = FindClass(search_class_, i);
          const int rx = FindClass(search_class_, owner_[x]);
          if (ri != rx) {
            search_class_[rx] = ri;
            --classes;
          }
        }
      }
    }
  }

  a.pieces = classes;
  if (classes == 1) {
    a.piece_volumes.push_back(rest);
    return a;
  }
  // Group searches by class; classes with a live frontier are the remainder.
  std::vector<int> class_index(k, -1);
  std::vector<std::vector<int>> groups;
  std::vector<char> growing;
  for (int i = 0; i < k; ++i) {
    const int r = FindClass(search_class_, i);
    if (class_index[r] == -1) {
      class_index[r] = static_cast<int>(groups.size());
      groups.emplace_back();
      growing.push_back(0);
    }
    groups[class_index[r]].push_back(i);
    if (head[i] < queues_[i].size()) growing[class_index[r]] = 1;
  }
  int keep = -1;  // the group that stays under the old component id
  for (int gi = 0; gi < static_cast<int>(groups.size()); ++gi) {
    if (growing[gi]) keep = gi;
  }
  if (keep == -1) {
    size_t best = 0;
    for (int gi = 0; gi < static_cast<int>(groups.size()); ++gi) {
      size_t sz = 0;
      for (const int i : groups[gi]) sz += queues_[i].size();
      if (keep == -1 || sz > best) {
        keep = gi;
        best = sz;
      }
    }
  }
  int64_t split_off = 0;
  for (int gi = 0; gi < static_cast<int>(groups.size()); ++gi) {
    if (gi == keep) continue;
    int64_t vol = 0;
    for (const int i : groups[gi]) vol += volume[i];
    split_off += vol;
    a.piece_volumes.push_back(vol);
    finished_pieces_.push_back(groups[gi]);
  }
  a.piece_volumes.push_back(rest - split_off);
  return a;
}

void ComponentTracker::Commit(const MoveAnalysis& a) {
  const Vertex v = a.vertex;
  const Geometry& g = state_->geometry();
  // Detach v.
  const int old = a.old_component;
  {
    auto& members = comps_[old].members;
    const Vertex last = members.back();
    members[pos_[v]] = last;
    pos_[last] = pos_[v];
    members.pop_back();
    comps_[old].volume -= g.volume(v);
    comp_of_[v] = -1;
  }
  if (a.pieces == 0) {
    Release(old);
  } else {
    for (const auto& piece : finished_pieces_) {
      const int id = NewComponent(a.from);
      for (const int i : piece) {
        for (const Vertex u : queues_[i]) Move(u, id);
      }
    }
  }
  // Attach v, folding the smaller merged components into the largest.
  if (a.merged.empty()) {
    const int id = NewComponent(a.to);
    Move(v, id);
  } else {
    int target = a.merged[0];
    for (const int c : a.merged) {
      if (comps_[c].members.size() > comps_[target].members.size()) target = c;
    }
    for (const int c : a.merged) {
      if (c == target) continue;
      const std::vector<Vertex> moving = comps_[c].members;
      for (const Vertex u : moving) Move(u, target);
      Release(c);
    }
    Move(v, target);
  }
  cache_valid_ = false;
}

// ---------------------------------------------------------------------------

ComponentSet ConnectedComponents(const ColourState& s) {
  const Geometry& g = s.geometry();
  const int n = s.num_vertices();
  std::vector<int> seen(n, 0);
  ComponentSet out;
  std::vector<Vertex> queue;
  for (Vertex start = 0; start < n; ++start) {
    if (seen[start]) continue;
    Component comp;
    comp.colour = s.colour(start);
    queue.assign(1, start);
    seen[start] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      comp.vertices.push_back(u);
      comp.volume += g.volume(u);
      comp.border_area += BorderArea(s, u);
      for (const Vertex w : g.Adjacent(u)) {
        if (!seen[w] && s.colour(w) == comp.colour) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(comp.vertices.begin(), comp.vertices.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> ColourGraphEdges(const ColourState& s) {
  const Geometry& g = s.geometry();
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex v = 0; v < s.num_vertices(); ++v) {
    for (const Vertex w : g.Adjacent(v)) {
      if (v < w && s.colour(v) == s.colour(w)) out.emplace_back(v, w);
    }
  }
  return out;
}

int64_t BorderArea(const ColourState& s, Vertex v) {
  const Geometry& g = s.geometry();
  int64_t total = 0;
  const Colour c = s.colour(v);
  for (const Facet f : g.FacetsOf(v)) {
    const Vertex w = g.Across(f, v);
    if (w == kBottom || s.colour(w) != c) total += g.area(f);
  }
  return total;
}

std::vector<Stretch> Stretches(std::span<const Colour> seq) {
  std::vector<Stretch> out;
  const int m = static_cast<int>(seq.size());
  int first = 0;
  for (int i = 1; i <= m; ++i) {
    if (i == m || seq[i] != seq[first]) {
      out.push_back({first, i - 1});
      first = i;
    }
  }
  return out;
}

}  // namespace sectorise
