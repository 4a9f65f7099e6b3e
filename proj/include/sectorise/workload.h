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

#ifndef SECTORISE_WORKLOAD_H_
#define SECTORISE_WORKLOAD_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sectorise/colour_state.h"
#include "sectorise/constraint.h"
#include "sectorise/types.h"

namespace sectorise {

struct Rational {
  int64_t num = 0;
  int64_t den = 1;
  bool operator==(const Rational&) const = default;
};

// Σ values / n in lowest terms.
Rational MuOf(std::span<const int64_t> values, int n);

// Σ_i |n·X[i] - mu_num| <= delta_scaled, with mu_num = n·μ.
bool DeviationCheck(std::span<const int64_t> sums, int64_t mu_num,
                    int64_t delta_scaled);

// Sums of values per colour; index 0 unused.
std::vector<int64_t> ColourSums(const ColourState& s,
                                std::span<const int64_t> values);

// Deviation-balanced colour sums. All deviations are scaled by the colour
// count n, so μ = mu_num / n stays integral.
class BalancedConstraint : public Constraint {
 public:
  // `mu`, when given, must equal Σ values / n; InputError otherwise.
  BalancedConstraint(ColourState& state, std::vector<int64_t> values,
                     int64_t delta_scaled,
                     std::optional<Rational> mu = std::nullopt);
  // Balance over vertex volumes.
  static BalancedConstraint OverVolumes(ColourState& state,
                                        int64_t delta_scaled);

  std::string_view kind() const override { return "balanced"; }
  double Violation() const override { return static_cast<double>(violation_); }
  double VarViolation(Vertex v) const override {
    return static_cast<double>(Deviation(state_->colour(v)));
  }
  double ProbeAssign(Vertex v, Colour c) const override {
    return static_cast<double>(IntProbeAssign(v, c));
  }
  void CommitAssign(Vertex v, Colour c) override;
  void Reset() override;
  double ScratchViolation() const override;
  bool Check() const override;

  int64_t mu_num() const { return mu_num_; }
  Rational mu() const;
  int64_t delta_scaled() const { return delta_; }
  int64_t sum(Colour c) const { return sums_[c]; }
  std::span<const int64_t> values() const { return values_; }
  // Σ_i |n·X[i] - mu_num|.
  int64_t total_deviation() const { return dev_; }
  int64_t IntViolation() const { return violation_; }
  int64_t IntProbeAssign(Vertex v, Colour c) const;

 private:
  int64_t Deviation(Colour c) const {
    const int64_t x = n_ * sums_[c] - mu_num_;
    return x < 0 ? -x : x;
  }
  int64_t DeviationOf(int64_t sum) const {
    const int64_t x = n_ * sum - mu_num_;
    return x < 0 ? -x : x;
  }
  int64_t Excess(int64_t dev) const {
    return dev > delta_ ? dev - delta_ : 0;
  }

  const ColourState* state_;
  std::vector<int64_t> values_;
  int64_t n_;
  int64_t mu_num_;
  int64_t delta_;
  std::vector<int64_t> sums_;
  int64_t dev_ = 0;
  int64_t violation_ = 0;
};

// Unbalanced excess of x over the relation x op t, in value units.
int64_t BoundExcess(int64_t x, RelOp op, int64_t t);

// Every colour sum satisfies X[i] op t.
class BoundedConstraint : public Constraint {
 public:
  BoundedConstraint(ColourState& state, std::vector<int64_t> values, RelOp op,
                    int64_t t);

  std::string_view kind() const override { return "bounded"; }
  double Violation() const override { return static_cast<double>(violation_); }
  double VarViolation(Vertex v) const override {
    return static_cast<double>(BoundExcess(sums_[state_->colour(v)], op_, t_));
  }
  double ProbeAssign(Vertex v, Colour c) const override {
    return static_cast<double>(IntProbeAssign(v, c));
  }
  void CommitAssign(Vertex v, Colour c) override;
  void Reset() override;
  double ScratchViolation() const override;
  bool Check() const override;

  RelOp op() const { return op_; }
  int64_t threshold() const { return t_; }
  int64_t sum(Colour c) const { return sums_[c]; }
  int64_t IntViolation() const { return violation_; }
  int64_t IntProbeAssign(Vertex v, Colour c) const;

 private:
  const ColourState* state_;
  std::vector<int64_t> values_;
  RelOp op_;
  int64_t t_;
  std::vector<int64_t> sums_;
  int64_t violation_ = 0;
};

}  // namespace sectorise

#endif  // SECTORISE_WORKLOAD_H_
