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

#include "sectorise/geometry.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace sectorise {

Geometry::Geometry(int dim, std::vector<int64_t> volumes,
                   std::vector<FacetSpec> facets)
    : dim_(dim), volumes_(std::move(volumes)), facets_(std::move(facets)) {
  if (dim_ != 2 && dim_ != 3) throw InputError("dimension must be 2 or 3");
  const int n = num_vertices();
  for (Vertex v = 0; v < n; ++v) {
    if (volumes_[v] <= 0) {
      throw InputError("vertex " + std::to_string(v) +
                       " has non-positive volume");
    }
    total_volume_ += volumes_[v];
  }

  std::vector<int> facet_count(n, 0);
  std::vector<int> degree(n, 0);
  border_area_.assign(n, 0);
  for (Facet f = 0; f < num_facets(); ++f) {
    const FacetSpec& s = facets_[f];
    const std::string where = "facet " + std::to_string(f);
    if (s.area <= 0) throw InputError(where + " has non-positive area");
    if (s.first < 0 || s.first >= n) throw InputError(where + ": bad owner");
    if (s.second != kBottom && (s.second < 0 || s.second >= n)) {
      throw InputError(where + ": bad second owner");
    }
    if (s.second == s.first) throw InputError(where + ": owners coincide");
    ++facet_count[s.first];
    if (s.second == kBottom) {
      border_area_[s.first] += s.area;
    } else {
      ++facet_count[s.second];
      ++degree[s.first];
      ++degree[s.second];
      ++num_edges_;
    }
  }

  facet_begin_.assign(n + 1, 0);
  adj_begin_.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    facet_begin_[v + 1] = facet_begin_[v] + facet_count[v];
    adj_begin_[v + 1] = adj_begin_[v] + degree[v];
    max_degree_ = std::max(max_degree_, degree[v]);
  }
  facet_ids_.resize(facet_begin_[n]);
  adj_.resize(adj_begin_[n]);
  adj_facet_.resize(adj_begin_[n]);
  std::vector<int> fill_f(facet_begin_.begin(), facet_begin_.end() - 1);
  std::vector<int> fill_a(adj_begin_.begin(), adj_begin_.end() - 1);
  for (Facet f = 0; f < num_facets(); ++f) {
    const FacetSpec& s = facets_[f];
    facet_ids_[fill_f[s.first]++] = f;
    if (s.second == kBottom) continue;
    facet_ids_[fill_f[s.second]++] = f;
    adj_[fill_a[s.first]] = s.second;
    adj_facet_[fill_a[s.first]++] = f;
    adj_[fill_a[s.second]] = s.first;
    adj_facet_[fill_a[s.second]++] = f;
  }
  // Sort each adjacency row by neighbour, carrying the facet along; a
  // repeated neighbour means two shared facets for one edge.
  std::vector<std::pair<Vertex, Facet>> row;
  for (Vertex v = 0; v < n; ++v) {
    row.clear();
    for (int i = adj_begin_[v]; i < adj_begin_[v + 1]; ++i) {
      row.emplace_back(adj_[i], adj_facet_[i]);
    }
    std::sort(row.begin(), row.end());
    for (size_t i = 0; i < row.size(); ++i) {
      if (i > 0 && row[i].first == row[i - 1].first) {
        throw InputError("vertices " + std::to_string(v) + " and " +
                         std::to_string(row[i].first) +
                         " share more than one facet");
      }
      adj_[adj_begin_[v] + i] = row[i].first;
      adj_facet_[adj_begin_[v] + i] = row[i].second;
    }
  }
}

Geometry Geometry::Grid(int w, int h, int d, int64_t cell_area,
                        int64_t cell_volume, int dim) {
  if (w < 1 || h < 1 || d < 1) throw InputError("grid dimensions must be >= 1");
  if (dim == 2 && d != 1) throw InputError("a 2D grid must have depth 1");
  if (dim != 2 && dim != 3) throw InputError("dimension must be 2 or 3");
  const auto id = [&](int x, int y, int z) { return x + w * (y + h * z); };
  std::vector<FacetSpec> facets;
  // Along each axis a cell has a low and a high face; the high face of one
  // cell is the low face of the next.
  const auto axis = [&](int nx, int ny, int nz, int ax) {
    for (int z = 0; z < nz; ++z) {
      for (int y = 0; y < ny; ++y) {
        for (int x = 0; x < nx; ++x) {
          const int c[3] = {x, y, z};
          const int lim[3] = {w, h, d};
          const Vertex self = id(x, y, z);
          if (c[ax] == 0) facets.push_back({cell_area, self, kBottom});
          if (c[ax] + 1 < lim[ax]) {
            int nc[3] = {x, y, z};
            ++nc[ax];
            facets.push_back({cell_area, self, id(nc[0], nc[1], nc[2])});
          } else {
            facets.push_back({cell_area, self, kBottom});
          }
        }
      }
    }
  };
  axis(w, h, d, 0);
  axis(w, h, d, 1);
  if (dim == 3) axis(w, h, d, 2);
  Geometry g(dim,
             std::vector<int64_t>(static_cast<size_t>(w) * h * d, cell_volume),
             std::move(facets));
  g.grid_spec_ = GridSpec{w, h, d, cell_area, cell_volume};
  return g;
}

Vertex Geometry::CheckVertex(Vertex v) const {
  if (v < 0 || v >= num_vertices()) {
    throw InputError("unknown vertex " + std::to_string(v));
  }
  return v;
}

std::span<const Facet> Geometry::FacetsOf(Vertex v) const {
  CheckVertex(v);
  return {facet_ids_.data() + facet_begin_[v],
          static_cast<size_t>(facet_begin_[v + 1] - facet_begin_[v])};
}

std::span<const Vertex> Geometry::Adjacent(Vertex v) const {
  CheckVertex(v);
  return {adj_.data() + adj_begin_[v],
          static_cast<size_t>(adj_begin_[v + 1] - adj_begin_[v])};
}

std::span<const Facet> Geometry::AdjacentFacets(Vertex v) const {
  CheckVertex(v);
  return {adj_facet_.data() + adj_begin_[v],
          static_cast<size_t>(adj_begin_[v + 1] - adj_begin_[v])};
}

bool Geometry::AreAdjacent(Vertex v, Vertex w) const {
  const auto adj = Adjacent(v);
  return std::binary_search(adj.begin(), adj.end(), w);
}

Facet Geometry::SharedFacet(Vertex v, Vertex w) const {
  const auto adj = Adjacent(v);
  const auto it = std::lower_bound(adj.begin(), adj.end(), w);
  if (it == adj.end() || *it != w) {
    throw InputError("vertices " + std::to_string(v) + " and " +
                     std::to_string(w) + " are not adjacent");
  }
  return AdjacentFacets(v)[it - adj.begin()];
}

std::vector<Vertex> Geometry::BorderVertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < num_vertices(); ++v) {
    if (border_area_[v] > 0) out.push_back(v);
  }
  return out;
}

EnvelopedGeometry::EnvelopedGeometry(std::shared_ptr<const Geometry> base)
    : base_(std::move(base)), border_(base_->BorderVertices()) {}

std::vector<Vertex> EnvelopedGeometry::Adjacent(Vertex v) const {
  if (v == kBottom) return border_;
  const auto adj = base_->Adjacent(v);
  std::vector<Vertex> out(adj.begin(), adj.end());
  if (base_->IsBorderVertex(v)) out.push_back(kBottom);
  return out;
}

std::vector<Facet> EnvelopedGeometry::FacetsOf(Vertex v) const {
  if (v == kBottom) return {kBottomFacet};
  const auto f = base_->FacetsOf(v);
  return {f.begin(), f.end()};
}

EnvelopedGeometry Envelop(std::shared_ptr<const Geometry> g) {
  return EnvelopedGeometry(std::move(g));
}

OrderedPath::OrderedPath(std::vector<Vertex> interior, const Geometry* g)
    : seq_(std::move(interior)) {
  index_.reserve(seq_.size());
  for (int i = 0; i < size(); ++i) {
    if (seq_[i] < 0) throw InputError("path contains an invalid vertex");
    if (g != nullptr) {
      g->CheckVertex(seq_[i]);
      if (i > 0 && !g->AreAdjacent(seq_[i - 1], seq_[i])) {
        throw InputError("path vertices " + std::to_string(seq_[i - 1]) +
                         " and " + std::to_string(seq_[i]) +
                         " are not adjacent");
      }
    }
    index_.emplace_back(seq_[i], i);
  }
  std::sort(index_.begin(), index_.end());
  for (size_t i = 1; i < index_.size(); ++i) {
    if (index_[i].first == index_[i - 1].first) {
      throw InputError("path visits vertex " +
                       std::to_string(index_[i].first) + " twice");
    }
  }
}

std::vector<Vertex> OrderedPath::WithSentinels() const {
  std::vector<Vertex> out;
  out.reserve(seq_.size() + 2);
  out.push_back(kBottom);
  out.insert(out.end(), seq_.begin(), seq_.end());
  out.push_back(kBottom);
  return out;
}

std::optional<int> OrderedPath::Position(Vertex v) const {
  const auto it = std::lower_bound(
      index_.begin(), index_.end(), std::make_pair(v, -1));
  if (it == index_.end() || it->first != v) return std::nullopt;
  return it->second;
}

Vertex OrderedPath::Pred(Vertex v) const {
  const auto p = Position(v);
  if (!p) throw InputError("vertex " + std::to_string(v) + " not on path");
  return *p == 0 ? kBottom : seq_[*p - 1];
}

Vertex OrderedPath::Succ(Vertex v) const {
  const auto p = Position(v);
  if (!p) throw InputError("vertex " + std::to_string(v) + " not on path");
  return *p + 1 == size() ? kBottom : seq_[*p + 1];
}

bool OrderedPath::Precedes(Vertex v, Vertex w) const {
  const auto pv = Position(v);
  const auto pw = Position(w);
  if (!pv || !pw) throw InputError("vertex not on path");
  return *pv < *pw;
}

}  // namespace sectorise
