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

#ifndef SECTORISE_GEOMETRY_H_
#define SECTORISE_GEOMETRY_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sectorise/types.h"

namespace sectorise {

// One facet of the region structure. A facet owned by a single vertex is a
// border facet; a facet owned by two vertices is the unique facet they share.
struct FacetSpec {
  int64_t area = 1;
  Vertex first = 0;
  Vertex second = kBottom;  // kBottom for a border facet.
};

// The region graph with its facet structure. Adjacency is derived from
// facets with two owners, so every edge has exactly one shared facet by
// construction. Immutable once built.
class Geometry {
 public:
  // Throws InputError when the facet structure is malformed: non-positive
  // areas or volumes, unknown or repeated owners, or two facets shared by
  // the same pair of vertices.
  Geometry(int dim, std::vector<int64_t> volumes, std::vector<FacetSpec> facets);

  // A w x h x d cuboid of same-sized cells with 6-neighbour adjacency in 3D.
  // With dim == 2 the depth must be 1 and adjacency is 4-neighbour.
  static Geometry Grid(int w, int h, int d, int64_t cell_area = 1,
                       int64_t cell_volume = 1, int dim = 3);

  int dim() const { return dim_; }
  int num_vertices() const { return static_cast<int>(volumes_.size()); }
  int num_facets() const { return static_cast<int>(facets_.size()); }
  int64_t num_edges() const { return num_edges_; }

  int64_t volume(Vertex v) const { return volumes_[CheckVertex(v)]; }
  int64_t total_volume() const { return total_volume_; }
  const FacetSpec& facet(Facet f) const { return facets_[f]; }
  int64_t area(Facet f) const { return facets_[f].area; }

  // The facets of v (the facet function), in facet-id order.
  std::span<const Facet> FacetsOf(Vertex v) const;
  // Sorted neighbours of v.
  std::span<const Vertex> Adjacent(Vertex v) const;
  // Facet shared with each entry of Adjacent(v), position for position.
  std::span<const Facet> AdjacentFacets(Vertex v) const;

  bool AreAdjacent(Vertex v, Vertex w) const;
  // Throws InputError if v and w are not adjacent.
  Facet SharedFacet(Vertex v, Vertex w) const;
  // The vertex across facet f from v, or kBottom for a border facet.
  Vertex Across(Facet f, Vertex v) const {
    const FacetSpec& s = facets_[f];
    return s.first == v ? s.second : s.first;
  }

  bool IsBorderVertex(Vertex v) const { return border_area_[CheckVertex(v)] > 0; }
  std::vector<Vertex> BorderVertices() const;
  // Total area of the border facets of v.
  int64_t BorderFacetArea(Vertex v) const { return border_area_[CheckVertex(v)]; }

  // Grid provenance, if this geometry came from Grid().
  struct GridSpec {
    int w, h, d;
    int64_t cell_area, cell_volume;
  };
  const std::optional<GridSpec>& grid_spec() const { return grid_spec_; }

  int max_degree() const { return max_degree_; }

  // Throws InputError for ids outside 0..num_vertices-1.
  Vertex CheckVertex(Vertex v) const;

 private:
  int dim_;
  std::vector<int64_t> volumes_;
  std::vector<FacetSpec> facets_;
  int64_t total_volume_ = 0;
  int64_t num_edges_ = 0;
  int max_degree_ = 0;
  // CSR layouts.
  std::vector<int> facet_begin_;
  std::vector<Facet> facet_ids_;
  std::vector<int> adj_begin_;
  std::vector<Vertex> adj_;
  std::vector<Facet> adj_facet_;
  std::vector<int64_t> border_area_;
  std::optional<GridSpec> grid_spec_;
};

// A geometry plus the outside vertex (kBottom) adjacent to every border
// vertex. The outside vertex owns the single facet kBottomFacet.
class EnvelopedGeometry {
 public:
  static constexpr Facet kBottomFacet = -2;

  explicit EnvelopedGeometry(std::shared_ptr<const Geometry> base);

  const Geometry& base() const { return *base_; }
  const std::shared_ptr<const Geometry>& base_ptr() const { return base_; }

  // Neighbours in the enveloped graph. Adjacent(kBottom) is the border set;
  // for other vertices kBottom is appended when they are border vertices.
  std::vector<Vertex> Adjacent(Vertex v) const;
  // Extended facet function.
  std::vector<Facet> FacetsOf(Vertex v) const;
  int BottomDegree() const { return static_cast<int>(border_.size()); }
  int64_t BorderArea(Vertex v) const { return base_->BorderFacetArea(v); }

 private:
  std::shared_ptr<const Geometry> base_;
  std::vector<Vertex> border_;
};

EnvelopedGeometry Envelop(std::shared_ptr<const Geometry> g);
// An enveloped geometry already has its outside vertex; adding a second one
// would corrupt border logic.
EnvelopedGeometry Envelop(const EnvelopedGeometry&) = delete;

// A sequence of distinct vertices read left to right, with kBottom as the
// implicit predecessor of the first and successor of the last vertex.
class OrderedPath {
 public:
  OrderedPath() = default;
  // Throws InputError on repeated vertices, or, when g is given, on
  // consecutive vertices that are not adjacent.
  explicit OrderedPath(std::vector<Vertex> interior,
                       const Geometry* g = nullptr);

  int size() const { return static_cast<int>(seq_.size()); }
  bool empty() const { return seq_.empty(); }
  Vertex at(int i) const { return seq_[i]; }
  std::span<const Vertex> interior() const { return seq_; }
  // ⊥ v1 ... vm ⊥
  std::vector<Vertex> WithSentinels() const;

  // Position of v in the path, if on it.
  std::optional<int> Position(Vertex v) const;
  bool Contains(Vertex v) const { return Position(v).has_value(); }
  Vertex Pred(Vertex v) const;
  Vertex Succ(Vertex v) const;
  // v strictly left of w.
  bool Precedes(Vertex v, Vertex w) const;

 private:
  std::vector<Vertex> seq_;
  std::vector<std::pair<Vertex, int>> index_;  // sorted by vertex
};

}  // namespace sectorise

#endif  // SECTORISE_GEOMETRY_H_
