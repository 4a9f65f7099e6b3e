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

#ifndef SECTORISE_COMPACT_H_
#define SECTORISE_COMPACT_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "sectorise/colour_state.h"
#include "sectorise/constraint.h"
#include "sectorise/types.h"

namespace sectorise {

enum class CompactMode {
  // Sum over components of (border area - equal-volume sphere surface).
  kSphericity,
  // Total border area of all vertices.
  kBorderTotal,
};

enum class WeightFn { kIdentity, kSquare };

// Surface of the ball (3D) or perimeter of the disc (2D) of the given
// volume. Throws InputError for negative volumes.
double SphereSurface(double volume, int dim);

// Change of Border(w) when v, sharing facet area `area` with w, moves from
// old_v to new_v while w keeps colour c_w.
int64_t NeighbourBorderDelta(Colour old_v, Colour c_w, Colour new_v,
                             int64_t area);

class CompactConstraint : public Constraint {
 public:
  static constexpr double kTolerance = 1e-9;

  // Sphericity mode enables component tracking on `state`.
  CompactConstraint(ColourState& state, CompactMode mode, int64_t threshold,
                    WeightFn weight = WeightFn::kIdentity,
                    bool exact_probe = false);

  std::string_view kind() const override { return "compact"; }
  double Violation() const override;
  double VarViolation(Vertex v) const override;
  // Border-total mode: exact in O(deg v). Sphericity mode: exact when
  // constructed with exact_probe, otherwise the neighbour-impact
  // approximation, which ignores component splits, merges and sphere terms.
  double ProbeAssign(Vertex v, Colour c) const override;
  void CommitAssign(Vertex v, Colour c) override;
  void Reset() override;
  double ScratchViolation() const override;
  bool Check() const override;

  CompactMode mode() const { return mode_; }
  WeightFn weight() const { return weight_; }
  int64_t threshold() const { return threshold_; }
  bool exact_probe() const { return exact_probe_; }

  // Cached Border(v).
  int64_t border_area(Vertex v) const { return border_[v]; }
  // Σ_w NeighbourBorderDelta over the neighbours of v: the change of
  // Border(v) under v := c.
  int64_t ProbeBorder(Vertex v, Colour c) const;
  // Exact sphericity-mode delta by component analysis.
  double ProbeSphericityExact(Vertex v, Colour c) const;

  // Border-total mode: twice the weighted total border area.
  int64_t doubled_total() const { return doubled_total_; }

 private:
  int64_t Weigh(int64_t x) const {
    return weight_ == WeightFn::kIdentity ? x : x * x;
  }
  double Excess(double s) const { return s > 0 ? s : 0.0; }
  // The quantity compared with the threshold.
  double Measure() const;

  const ColourState* state_;
  CompactMode mode_;
  int64_t threshold_;
  WeightFn weight_;
  bool exact_probe_;
  std::vector<int64_t> border_;
  // Σ_v f(Border(v)) + Σ_v f(outer area of v). Boundary facets are seen
  // from one side only, so adding them a second time makes halving count
  // every facet exactly once.
  int64_t doubled_total_ = 0;
  int64_t border_sum_ = 0;  // Σ_v Border(v) = Σ σ over components
  double sphere_sum_ = 0;   // Σ over components of SphereSurface(ν)
};

}  // namespace sectorise

#endif  // SECTORISE_COMPACT_H_
