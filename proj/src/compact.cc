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

#include "sectorise/compact.h"

#include <cmath>
#include <numbers>

namespace sectorise {

double SphereSurface(double volume, int dim) {
  if (volume < 0) throw InputError("negative volume");
  if (dim == 2) return 2.0 * std::sqrt(std::numbers::pi * volume);
  return std::cbrt(std::numbers::pi) * std::pow(6.0 * volume, 2.0 / 3.0);
}

int64_t NeighbourBorderDelta(Colour old_v, Colour c_w, Colour new_v,
                             int64_t area) {
  if (old_v != c_w && c_w == new_v) return -area;
  if (old_v == c_w && c_w != new_v) return area;
  return 0;
}

CompactConstraint::CompactConstraint(ColourState& state, CompactMode mode,
                                     int64_t threshold, WeightFn weight,
                                     bool exact_probe)
    : state_(&state),
      mode_(mode),
      threshold_(threshold),
      weight_(weight),
      exact_probe_(exact_probe) {
  if (mode_ == CompactMode::kSphericity) state.EnableComponents();
  Reset();
}

void CompactConstraint::Reset() {
  const Geometry& g = state_->geometry();
  const int n = state_->num_vertices();
  border_.assign(n, 0);
  doubled_total_ = 0;
  border_sum_ = 0;
  for (Vertex v = 0; v < n; ++v) {
    border_[v] = BorderArea(*state_, v);
    border_sum_ += border_[v];
    doubled_total_ += Weigh(border_[v]) + Weigh(g.BorderFacetArea(v));
  }
  sphere_sum_ = 0;
  if (mode_ == CompactMode::kSphericity) {
    const ComponentTracker& t = state_->components();
    for (const int comp : t.LiveComponents()) {
      sphere_sum_ += SphereSurface(static_cast<double>(t.volume(comp)), g.dim());
    }
  }
}

double CompactConstraint::Measure() const {
  if (mode_ == CompactMode::kBorderTotal) {
    return 0.5 * static_cast<double>(doubled_total_) -
           static_cast<double>(threshold_);
  }
  return static_cast<double>(border_sum_) - sphere_sum_ -
         static_cast<double>(threshold_);
}

double CompactConstraint::Violation() const { return Excess(Measure()); }

double CompactConstraint::VarViolation(Vertex v) const {
  return static_cast<double>(Weigh(border_[v]));
}

int64_t CompactConstraint::ProbeBorder(Vertex v, Colour c) const {
  const Geometry& g = state_->geometry();
  const Colour old = state_->colour(v);
  const auto adj = g.Adjacent(v);
  const auto facets = g.AdjacentFacets(v);
  int64_t delta = 0;
  for (size_t i = 0; i < adj.size(); ++i) {
    delta += NeighbourBorderDelta(old, state_->colour(adj[i]), c,
                                  g.area(facets[i]));
  }
  return delta;
}

double CompactConstraint::ProbeSphericityExact(Vertex v, Colour c) const {
  if (state_->colour(v) == c) return 0.0;
  const Geometry& g = state_->geometry();
  const MoveAnalysis& a = state_->components().Analyse(v, c);
  const ComponentTracker& t = state_->components();
  double sphere = sphere_sum_ -
                  SphereSurface(static_cast<double>(a.old_volume), g.dim());
  for (const int64_t vol : a.piece_volumes) {
    sphere += SphereSurface(static_cast<double>(vol), g.dim());
  }
  for (const int comp : a.merged) {
    sphere -= SphereSurface(static_cast<double>(t.volume(comp)), g.dim());
  }
  sphere += SphereSurface(static_cast<double>(a.merged_volume), g.dim());
  // Every changed facet changes the border of both of its sides.
  const int64_t borders = border_sum_ + 2 * ProbeBorder(v, c);
  const double after = static_cast<double>(borders) - sphere -
                       static_cast<double>(threshold_);
  return Excess(after) - Violation();
}

double CompactConstraint::ProbeAssign(Vertex v, Colour c) const {
  if (state_->colour(v) == c) return 0.0;
  if (mode_ == CompactMode::kSphericity) {
    if (exact_probe_) return ProbeSphericityExact(v, c);
    const double s = Measure();
    return Excess(s + static_cast<double>(ProbeBorder(v, c))) - Excess(s);
  }
  const Geometry& g = state_->geometry();
  const Colour old = state_->colour(v);
  const auto adj = g.Adjacent(v);
  const auto facets = g.AdjacentFacets(v);
  int64_t own = 0;
  int64_t doubled = 0;
  for (size_t i = 0; i < adj.size(); ++i) {
    const Vertex w = adj[i];
    const int64_t d =
        NeighbourBorderDelta(old, state_->colour(w), c, g.area(facets[i]));
    if (d == 0) continue;
    own += d;
    doubled += Weigh(border_[w] + d) - Weigh(border_[w]);
  }
  doubled += Weigh(border_[v] + own) - Weigh(border_[v]);
  const double s = Measure();
  return Excess(s + 0.5 * static_cast<double>(doubled)) - Excess(s);
}

void CompactConstraint::CommitAssign(Vertex v, Colour c) {
  const Colour old = state_->colour(v);
  if (old == c) return;
  const Geometry& g = state_->geometry();
  if (mode_ == CompactMode::kSphericity) {
    const MoveAnalysis& a = state_->components().Analyse(v, c);
    const ComponentTracker& t = state_->components();
    sphere_sum_ -= SphereSurface(static_cast<double>(a.old_volume), g.dim());
    for (const int64_t vol : a.piece_volumes) {
      sphere_sum_ += SphereSurface(static_cast<double>(vol), g.dim());
    }
    for (const int comp : a.merged) {
      sphere_sum_ -= SphereSurface(static_cast<double>(t.volume(comp)), g.dim());
    }
    sphere_sum_ += SphereSurface(static_cast<double>(a.merged_volume), g.dim());
  }
  const auto adj = g.Adjacent(v);
  const auto facets = g.AdjacentFacets(v);
  int64_t own = 0;
  for (size_t i = 0; i < adj.size(); ++i) {
    const Vertex w = adj[i];
    const int64_t d =
        NeighbourBorderDelta(old, state_->colour(w), c, g.area(facets[i]));
    if (d == 0) continue;
    own += d;
    doubled_total_ += Weigh(border_[w] + d) - Weigh(border_[w]);
    border_[w] += d;
  }
  doubled_total_ += Weigh(border_[v] + own) - Weigh(border_[v]);
  border_[v] += own;
  border_sum_ += 2 * own;
}

double CompactConstraint::ScratchViolation() const {
  const Geometry& g = state_->geometry();
  if (mode_ == CompactMode::kBorderTotal) {
    int64_t doubled = 0;
    for (Vertex v = 0; v < state_->num_vertices(); ++v) {
      doubled += Weigh(BorderArea(*state_, v)) + Weigh(g.BorderFacetArea(v));
    }
    return Excess(0.5 * static_cast<double>(doubled) -
                  static_cast<double>(threshold_));
  }
  double total = 0;
  for (const Component& comp : ConnectedComponents(*state_)) {
    total += static_cast<double>(comp.border_area) -
             SphereSurface(static_cast<double>(comp.volume), g.dim());
  }
  return Excess(total - static_cast<double>(threshold_));
}

bool CompactConstraint::Check() const {
  const Geometry& g = state_->geometry();
  if (mode_ == CompactMode::kBorderTotal && weight_ == WeightFn::kIdentity) {
    // Each facet once: outer facets always, shared facets when their two
    // sides differ in colour.
    int64_t total = 0;
    for (Facet f = 0; f < g.num_facets(); ++f) {
      const FacetSpec& s = g.facet(f);
      if (s.second == kBottom ||
          state_->colour(s.first) != state_->colour(s.second)) {
        total += s.area;
      }
    }
    return total <= threshold_;
  }
  if (mode_ == CompactMode::kBorderTotal) {
    return ScratchViolation() == 0.0;
  }
  double total = 0;
  for (const Component& comp : ConnectedComponents(*state_)) {
    total += static_cast<double>(comp.border_area) -
             SphereSurface(static_cast<double>(comp.volume), g.dim());
  }
  return total <= static_cast<double>(threshold_) + kTolerance;
}

}  // namespace sectorise
