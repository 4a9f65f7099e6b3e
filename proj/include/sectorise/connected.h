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

#ifndef SECTORISE_CONNECTED_H_
#define SECTORISE_CONNECTED_H_

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "sectorise/colour_state.h"
#include "sectorise/constraint.h"
#include "sectorise/types.h"

namespace sectorise {

enum class ConnectedMode {
  // Component counts are recounted exactly for the two colours a move
  // touches; probes and commits are always exact.
  kExact,
  // Component counts follow the constant-per-neighbour estimate: v founds a
  // new component of c when no neighbour has c, and dissolves one of its old
  // colour when no neighbour shares it. Splits and multi-way merges are
  // missed, so the counts can drift from the truth.
  kPaperFast,
};

// Every colour forms at most one connected component, and the total number
// of components stands in relation `op` with the counter N.
class ConnectedConstraint : public Constraint {
 public:
  // Enables component tracking on `state` in exact mode.
  ConnectedConstraint(ColourState& state, RelOp op, int64_t counter,
                      ConnectedMode mode = ConnectedMode::kExact);

  std::string_view kind() const override { return "connected"; }
  double Violation() const override { return static_cast<double>(violation_); }
  double VarViolation(Vertex v) const override {
    return static_cast<double>(VarViolationColour(v));
  }
  double ProbeAssign(Vertex v, Colour c) const override {
    return static_cast<double>(mode_ == ConnectedMode::kExact
                                   ? ProbeAssignExact(v, c)
                                   : ProbeAssignFast(v, c));
  }
  void CommitAssign(Vertex v, Colour c) override;
  void Reset() override;
  double ScratchViolation() const override;
  bool Check() const override;

  RelOp op() const { return op_; }
  ConnectedMode mode() const { return mode_; }
  int64_t counter() const { return counter_; }
  int ncc() const { return ncc_; }
  int ncc(Colour c) const { return ncc_by_colour_[c]; }
  int64_t IntViolation() const { return violation_; }

  // NCC_c - 1 for the colour of v.
  int64_t VarViolationColour(Vertex v) const;
  // 1 - [NCC op N].
  int VarViolationCounter() const;

  int64_t ProbeAssignExact(Vertex v, Colour c) const;
  // O(deg v): estimated component changes, clamped per colour as the
  // violation is.
  int64_t ProbeAssignFast(Vertex v, Colour c) const;
  // The same estimate without the per-colour clamp: it also miscounts moves
  // that introduce an unused colour or empty a colour.
  int64_t ProbeAssignUnclamped(Vertex v, Colour c) const;

  int64_t ProbeCounter(int64_t n) const;
  void CommitCounter(int64_t n);

 private:
  // Presence tests over the neighbourhood of v.
  bool NoNeighbourHas(Vertex v, Colour c) const;
  int64_t Excess(int count) const { return count > 1 ? count - 1 : 0; }
  int64_t ViolationFor(int ncc_total, int64_t excess_sum) const {
    return (Holds(ncc_total, op_, counter_) ? 0 : 1) + excess_sum;
  }

  const ColourState* state_;
  RelOp op_;
  int64_t counter_;
  ConnectedMode mode_;
  std::vector<int> ncc_by_colour_;
  int ncc_ = 0;
  int64_t excess_ = 0;  // Σ_c max(NCC_c - 1, 0)
  int64_t violation_ = 0;
};

// Semantics check on an arbitrary state: each colour forms at most one
// component and the component count relates to n.
bool CheckConnected(const ColourState& s, RelOp op, int64_t n);

// Component count the hard initialisation aims for: the largest k no larger
// than the colour and vertex counts with k op n. Throws InitError if none.
int ConnectedTargetCount(RelOp op, int64_t n, int num_colours, int num_vertices);

// Recolours `state` into exactly k connected regions with colours 1..k by
// simultaneous breadth-first growth from spread-out seeds. Throws InitError
// if k exceeds the vertex count or some vertex cannot be reached.
void GrowRegions(ColourState& state, int k, std::mt19937_64& rng);

// As GrowRegions, but region i starts from all of fixed[i] (colour i + 1);
// the remaining k - fixed.size() seeds are placed away from them. Fixed
// regions are not checked for connectivity.
void GrowRegionsAround(ColourState& state,
                       const std::vector<std::vector<Vertex>>& fixed, int k,
                       std::mt19937_64& rng);

// Hard-mode start: grows ConnectedTargetCount(...) regions.
void HardInitConnected(ColourState& state, RelOp op, int64_t n,
                       std::mt19937_64& rng);

}  // namespace sectorise

#endif  // SECTORISE_CONNECTED_H_
