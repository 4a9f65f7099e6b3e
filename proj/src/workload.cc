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

#include "sectorise/workload.h"

#include <numeric>
#include <string>

namespace sectorise {

Rational MuOf(std::span<const int64_t> values, int n) {
  if (n < 1) throw InputError("colour count must be positive");
  const int64_t total = std::accumulate(values.begin(), values.end(),
                                        int64_t{0});
  const int64_t g = std::gcd(total, static_cast<int64_t>(n));
  if (g == 0) return {0, 1};
  return {total / g, n / g};
}

bool DeviationCheck(std::span<const int64_t> sums, int64_t mu_num,
                    int64_t delta_scaled) {
  const int64_t n = static_cast<int64_t>(sums.size());
  int64_t dev = 0;
  for (const int64_t x : sums) {
    const int64_t d = n * x - mu_num;
    dev += d < 0 ? -d : d;
  }
  return dev <= delta_scaled;
}

std::vector<int64_t> ColourSums(const ColourState& s,
                                std::span<const int64_t> values) {
  std::vector<int64_t> sums(s.num_colours() + 1, 0);
  for (Vertex v = 0; v < s.num_vertices(); ++v) sums[s.colour(v)] += values[v];
  return sums;
}

namespace {

void CheckValues(const ColourState& s, std::span<const int64_t> values) {
  if (static_cast<int>(values.size()) != s.num_vertices()) {
    throw InputError("expected one value per vertex, got " +
                     std::to_string(values.size()));
  }
}

}  // namespace

BalancedConstraint::BalancedConstraint(ColourState& state,
                                       std::vector<int64_t> values,
                                       int64_t delta_scaled,
                                       std::optional<Rational> mu)
    : state_(&state),
      values_(std::move(values)),
      n_(state.num_colours()),
      delta_(delta_scaled) {
  CheckValues(state, values_);
  if (delta_ < 0) throw InputError("delta must be non-negative");
  mu_num_ = std::accumulate(values_.begin(), values_.end(), int64_t{0});
  if (mu) {
    // μ·n must equal the total, i.e. num·n == total·den.
    if (mu->den <= 0 || mu->num * n_ != mu_num_ * mu->den) {
      throw InputError("mu is not the average of the values over the colours");
    }
  }
  Reset();
}

BalancedConstraint BalancedConstraint::OverVolumes(ColourState& state,
                                                   int64_t delta_scaled) {
  std::vector<int64_t> volumes(state.num_vertices());
  for (Vertex v = 0; v < state.num_vertices(); ++v) {
    volumes[v] = state.geometry().volume(v);
  }
  return BalancedConstraint(state, std::move(volumes), delta_scaled);
}

Rational BalancedConstraint::mu() const {
  return MuOf(values_, static_cast<int>(n_));
}

void BalancedConstraint::Reset() {
  sums_ = ColourSums(*state_, values_);
  dev_ = 0;
  for (Colour c = 1; c <= n_; ++c) dev_ += Deviation(c);
  violation_ = Excess(dev_);
}

int64_t BalancedConstraint::IntProbeAssign(Vertex v, Colour c) const {
  const Colour d = state_->colour(v);
  if (c == d) return 0;
  // s' is the deviation sum without the two touched colours.
  const int64_t s_prime = dev_ - Deviation(c) - Deviation(d);
  const int64_t after = s_prime + DeviationOf(sums_[c] + values_[v]) +
                        DeviationOf(sums_[d] - values_[v]);
  return Excess(after) - violation_;
}

void BalancedConstraint::CommitAssign(Vertex v, Colour c) {
  const Colour d = state_->colour(v);
  if (c == d) return;
  dev_ -= Deviation(c) + Deviation(d);
  sums_[c] += values_[v];
  sums_[d] -= values_[v];
  dev_ += Deviation(c) + Deviation(d);
  violation_ = Excess(dev_);
}

double BalancedConstraint::ScratchViolation() const {
  const std::vector<int64_t> sums = ColourSums(*state_, values_);
  int64_t dev = 0;
  for (Colour c = 1; c <= n_; ++c) dev += DeviationOf(sums[c]);
  return static_cast<double>(Excess(dev));
}

bool BalancedConstraint::Check() const {
  const std::vector<int64_t> sums = ColourSums(*state_, values_);
  return DeviationCheck(std::span(sums).subspan(1), mu_num_, delta_);
}

int64_t BoundExcess(int64_t x, RelOp op, int64_t t) {
  switch (op) {
    case RelOp::kLe:
      return x > t ? x - t : 0;
    case RelOp::kLt:
      return x >= t ? x - t + 1 : 0;
    case RelOp::kEq:
      return x > t ? x - t : t - x;
    case RelOp::kNe:
      return Iverson(x == t);
    case RelOp::kGt:
      return x <= t ? t + 1 - x : 0;
    case RelOp::kGe:
      return x < t ? t - x : 0;
  }
  return 0;
}

BoundedConstraint::BoundedConstraint(ColourState& state,
                                     std::vector<int64_t> values, RelOp op,
                                     int64_t t)
    : state_(&state), values_(std::move(values)), op_(op), t_(t) {
  CheckValues(state, values_);
  Reset();
}

void BoundedConstraint::Reset() {
  sums_ = ColourSums(*state_, values_);
  violation_ = 0;
  for (Colour c = 1; c <= state_->num_colours(); ++c) {
    violation_ += BoundExcess(sums_[c], op_, t_);
  }
}

int64_t BoundedConstraint::IntProbeAssign(Vertex v, Colour c) const {
  const Colour d = state_->colour(v);
  if (c == d) return 0;
  const int64_t val = values_[v];
  return BoundExcess(sums_[c] + val, op_, t_) - BoundExcess(sums_[c], op_, t_) +
         BoundExcess(sums_[d] - val, op_, t_) - BoundExcess(sums_[d], op_, t_);
}

void BoundedConstraint::CommitAssign(Vertex v, Colour c) {
  const Colour d = state_->colour(v);
  if (c == d) return;
  violation_ += IntProbeAssign(v, c);
  sums_[c] += values_[v];
  sums_[d] -= values_[v];
}

double BoundedConstraint::ScratchViolation() const {
  const std::vector<int64_t> sums = ColourSums(*state_, values_);
  int64_t total = 0;
  for (Colour c = 1; c <= state_->num_colours(); ++c) {
    total += BoundExcess(sums[c], op_, t_);
  }
  return static_cast<double>(total);
}

bool BoundedConstraint::Check() const {
  const std::vector<int64_t> sums = ColourSums(*state_, values_);
  for (Colour c = 1; c <= state_->num_colours(); ++c) {
    if (!Holds(sums[c], op_, t_)) return false;
  }
  return true;
}

}  // namespace sectorise
