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

#ifndef SECTORISE_COLOUR_STATE_H_
#define SECTORISE_COLOUR_STATE_H_

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "sectorise/geometry.h"
#include "sectorise/types.h"

namespace sectorise {

class ComponentTracker;

// A total assignment of colours 1..n to the vertices of a geometry. The
// outside vertex reads as kBottomColour. Optionally maintains the connected
// components of the colour graph incrementally (see ComponentTracker).
class ColourState {
 public:
  ColourState(std::shared_ptr<const Geometry> g, int num_colours,
              std::vector<Colour> colours);
  // Every vertex coloured 1.
  ColourState(std::shared_ptr<const Geometry> g, int num_colours);
  ~ColourState();
  ColourState(const ColourState& other);
  ColourState& operator=(const ColourState& other);
  ColourState(ColourState&&) noexcept;
  ColourState& operator=(ColourState&&) noexcept;

  const Geometry& geometry() const { return *geometry_; }
  const std::shared_ptr<const Geometry>& geometry_ptr() const {
    return geometry_;
  }
  int num_colours() const { return num_colours_; }
  int num_vertices() const { return static_cast<int>(colours_.size()); }

  Colour colour(Vertex v) const {
    return v == kBottom ? kBottomColour : colours_[v];
  }
  std::span<const Colour> colours() const { return colours_; }
  // Number of vertices currently carrying colour c.
  int ColourSize(Colour c) const { return colour_size_[c]; }
  int UsedColours() const { return used_colours_; }
  uint64_t revision() const { return revision_; }

  // Throws InputError for v == kBottom, unknown v, or c outside 1..n.
  // Assigning the current colour only bumps the revision.
  void Assign(Vertex v, Colour c);
  // Replaces the whole assignment; component tracking is rebuilt. Anything
  // observing this state must be Reset() afterwards.
  void SetAll(std::vector<Colour> colours);

  // Starts incremental component maintenance; idempotent.
  ComponentTracker& EnableComponents();
  bool components_enabled() const { return tracker_ != nullptr; }
  // Requires EnableComponents() to have been called.
  const ComponentTracker& components() const { return *tracker_; }

 private:
  void CheckColour(Colour c) const;

  std::shared_ptr<const Geometry> geometry_;
  int num_colours_;
  std::vector<Colour> colours_;
  std::vector<int> colour_size_;
  int used_colours_ = 0;
  uint64_t revision_ = 0;
  std::unique_ptr<ComponentTracker> tracker_;
};

// Effect of a prospective move v := to on the component structure, computed
// against the state before the move.
struct MoveAnalysis {
  Vertex vertex = kBottom;
  Colour from = 0;
  Colour to = 0;
  uint64_t revision = 0;
  // Component of v before the move and its volume.
  int old_component = -1;
  int64_t old_volume = 0;
  // Number of components the old component falls into once v leaves it;
  // 0 when v was its only member.
  int pieces = 0;
  std::vector<int64_t> piece_volumes;
  // Distinct components of colour `to` adjacent to v; v joins them all.
  std::vector<int> merged;
  int64_t merged_volume = 0;  // including v itself

  int DeltaComponents(Colour c) const {
    if (from == to) return 0;
    if (c == from) return pieces - 1;
    if (c == to) return 1 - static_cast<int>(merged.size());
    return 0;
  }
};

// Connected components of the colour graph, kept exact under single-vertex
// recolouring. Removing a vertex is resolved by interleaved breadth-first
// searches from its same-coloured neighbours that stop as soon as all but
// one have either met or run out, so the cost is bounded by the pieces that
// actually split off. Merges relabel the smaller components.
class ComponentTracker {
 public:
  explicit ComponentTracker(const ColourState& state);

  int component_of(Vertex v) const { return comp_of_[v]; }
  int num_components() const { return num_components_; }
  // NCC_c: number of components of colour c.
  int count(Colour c) const { return count_[c]; }
  Colour colour(int comp) const { return comps_[comp].colour; }
  int64_t volume(int comp) const { return comps_[comp].volume; }
  std::span<const Vertex> members(int comp) const {
    return comps_[comp].members;
  }
  // Ids of live components, unordered.
  std::vector<int> LiveComponents() const;

  // Cached per (revision, v, to); the reference stays valid until the next
  // call.
  const MoveAnalysis& Analyse(Vertex v, Colour to) const;

 private:
  friend class ColourState;
  struct Component {
    Colour colour = 0;
    int64_t volume = 0;
    std::vector<Vertex> members;
    bool alive = false;
  };

  void Rebuild();
  // Called by ColourState::Assign after the colour array has changed.
  void Commit(const MoveAnalysis& a);
  int NewComponent(Colour c);
  void Release(int comp);
  void Move(Vertex v, int to_comp);

  const ColourState* state_;
  std::vector<int> comp_of_;
  std::vector<int> pos_;  // position of a vertex in its member list
  std::vector<Component> comps_;
  std::vector<int> free_;
  std::vector<int> count_;
  int num_components_ = 0;

  // Scratch for Analyse.
  mutable MoveAnalysis cache_;
  mutable bool cache_valid_ = false;
  mutable std::vector<uint32_t> mark_;
  mutable std::vector<int> owner_;
  mutable uint32_t stamp_ = 0;
  mutable std::vector<std::vector<Vertex>> queues_;
  mutable std::vector<int> search_class_;  // union-find over searches
  // Searches whose vertices form a finished piece, grouped per piece.
  mutable std::vector<std::vector<int>> finished_pieces_;
};

// From-scratch component extraction with Compact's attributes.
struct Component {
  Colour colour = 0;
  std::vector<Vertex> vertices;
  int64_t border_area = 0;  // σ
  int64_t volume = 0;       // ν
};
using ComponentSet = std::vector<Component>;

ComponentSet ConnectedComponents(const ColourState& s);

// Same-coloured edges, each reported once with first < second.
std::vector<std::pair<Vertex, Vertex>> ColourGraphEdges(const ColourState& s);

// Area of the facets of v whose other side is ⊥ or differently coloured.
int64_t BorderArea(const ColourState& s, Vertex v);

// A maximal run of equal values, as inclusive indices.
struct Stretch {
  int first;
  int last;
  bool operator==(const Stretch&) const = default;
};

// Left-to-right scan for maximal equal-colour spans.
std::vector<Stretch> Stretches(std::span<const Colour> seq);

}  // namespace sectorise

#endif  // SECTORISE_COLOUR_STATE_H_
