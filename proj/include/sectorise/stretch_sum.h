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

#ifndef SECTORISE_STRETCH_SUM_H_
#define SECTORISE_STRETCH_SUM_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "sectorise/colour_state.h"
#include "sectorise/constraint.h"
#include "sectorise/geometry.h"
#include "sectorise/types.h"

namespace sectorise {

// True iff every stretch of `colours` has a value sum s with s op t.
bool CheckStretchSum(std::span<const Colour> colours,
                     std::span<const int64_t> values, RelOp op, int64_t t);

struct StretchRecord {
  Vertex left;
  Vertex right;
  Colour colour;
  int64_t sum;
  bool operator==(const StretchRecord&) const = default;
};

// Value sums of stretches of the colours along `path`, compared with t.
// `values` is indexed by path position.
class StretchSumConstraint : public Constraint {
 public:
  StretchSumConstraint(ColourState& state, OrderedPath path,
                       std::vector<int64_t> values, RelOp op, int64_t t);

  std::string_view kind() const override { return "stretch_sum"; }
  double Violation() const override { return static_cast<double>(violation_); }
  double VarViolation(Vertex v) const override {
    return static_cast<double>(IntVarViolation(v));
  }
  double ProbeAssign(Vertex v, Colour d) const override {
    return static_cast<double>(IntProbeAssign(v, d));
  }
  void CommitAssign(Vertex v, Colour d) override;
  void Reset() override;
  double ScratchViolation() const override;
  bool Check() const override;

  const OrderedPath& path() const { return path_; }
  std::span<const int64_t> values() const { return values_; }
  RelOp op() const { return op_; }
  int64_t threshold() const { return t_; }
  int64_t IntViolation() const { return violation_; }

  // Vertices off the path score 0.
  int64_t IntVarViolation(Vertex v) const;
  // Exact: compares the stretches touching v before and after the move.
  int64_t IntProbeAssign(Vertex v, Colour d) const;
  // The closed-form case table for op >= evaluated literally. Used to
  // measure how often it disagrees with the exact delta.
  int64_t TableProbeAssign(Vertex v, Colour d) const;

  // The record of the stretch holding v, or nullopt off the path.
  std::optional<StretchRecord> Record(Vertex v) const;
  // All stretches from left to right.
  std::vector<StretchRecord> Records() const;

  // Colours the path greedily from left to right so that every stretch
  // satisfies the relation; consecutive stretches alternate colours and
  // vertices off the path are left alone. Throws InitError when no
  // segmentation exists or only one colour is available and the whole path
  // fails. Observers of `state` must be Reset() afterwards.
  void HardInit(ColourState& state) const;

  // Path positions [first, last] of exactly `count` consecutive stretches
  // that all satisfy the relation, or nullopt if there are none.
  std::optional<std::vector<std::pair<int, int>>> Segmentation(
      int count) const;

 private:
  // Sum of values over positions [a, b].
  int64_t Sum(int a, int b) const { return prefix_[b + 1] - prefix_[a]; }
  bool Bad(int a, int b) const { return !Holds(Sum(a, b), op_, t_); }
  Colour ColourAt(int i) const { return state_->colour(path_.at(i)); }
  void Relabel(int a, int b);

  const ColourState* state_;
  OrderedPath path_;
  std::vector<int64_t> values_;
  RelOp op_;
  int64_t t_;
  std::vector<int64_t> prefix_;
  // Stretch bounds per position.
  std::vector<int> left_;
  std::vector<int> right_;
  int64_t violation_ = 0;
};

}  // namespace sectorise

#endif  // SECTORISE_STRETCH_SUM_H_
