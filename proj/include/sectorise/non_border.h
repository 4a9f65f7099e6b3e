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

#ifndef SECTORISE_NON_BORDER_H_
#define SECTORISE_NON_BORDER_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "sectorise/colour_state.h"
#include "sectorise/constraint.h"
#include "sectorise/geometry.h"
#include "sectorise/types.h"

namespace sectorise {

// Every neighbour of a path vertex that is itself off the path carries the
// path vertex's colour.
bool CheckNonBorder(const ColourState& s, const OrderedPath& path);

class NonBorderConstraint : public Constraint {
 public:
  NonBorderConstraint(ColourState& state, OrderedPath path);

  std::string_view kind() const override { return "non_border"; }
  double Violation() const override { return static_cast<double>(violation_); }
  double VarViolation(Vertex v) const override {
    return static_cast<double>(IntVarViolation(v));
  }
  double ProbeAssign(Vertex v, Colour c) const override {
    return static_cast<double>(IntProbeAssign(v, c));
  }
  void CommitAssign(Vertex v, Colour c) override;
  void Reset() override;
  double ScratchViolation() const override;
  bool Check() const override { return CheckNonBorder(*state_, path_); }

  const OrderedPath& path() const { return path_; }
  bool on_path(Vertex v) const { return on_path_[v] != 0; }
  // Adjacent(v) minus the path, for v on the path.
  const std::vector<Vertex>& off_path_neighbours(Vertex v) const {
    return off_path_[v];
  }
  int64_t IntViolation() const { return violation_; }
  // Off-path neighbours of v with another colour; 0 off the path.
  int64_t IntVarViolation(Vertex v) const {
    return on_path_[v] ? var_[v] : 0;
  }
  int64_t IntProbeAssign(Vertex v, Colour c) const;

 private:
  const ColourState* state_;
  OrderedPath path_;
  std::vector<char> on_path_;
  std::vector<std::vector<Vertex>> off_path_;
  // In-path neighbours of off-path vertices.
  std::vector<std::vector<Vertex>> path_neighbours_;
  std::vector<int64_t> var_;
  int64_t violation_ = 0;
};

}  // namespace sectorise

#endif  // SECTORISE_NON_BORDER_H_
