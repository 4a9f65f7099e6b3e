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

#ifndef SECTORISE_SYSTEMATIC_H_
#define SECTORISE_SYSTEMATIC_H_

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "sectorise/colour_state.h"
#include "sectorise/constraint.h"
#include "sectorise/geometry.h"
#include "sectorise/types.h"

namespace sectorise {

// Finite domains over colours 1..n (n <= 31) for a fixed number of
// variables, plus the domain of a counter variable.
class DomainStore {
 public:
  using Mask = uint32_t;
  static constexpr int kMaxColours = 31;

  DomainStore() = default;
  // Full colour domains; the counter ranges over 0..n.
  DomainStore(int num_vars, int num_colours);
  static DomainStore FromSets(int num_colours,
                              const std::vector<std::vector<Colour>>& sets);

  int size() const { return static_cast<int>(dom_.size()); }
  int num_colours() const { return num_colours_; }
  bool failed() const { return failed_; }
  void Fail() { failed_ = true; }

  Mask mask(int i) const { return dom_[i]; }
  bool Contains(int i, Colour c) const { return (dom_[i] >> c) & 1u; }
  int DomainSize(int i) const;
  bool IsSingleton(int i) const { return DomainSize(i) == 1; }
  // The value of a singleton domain.
  Colour Value(int i) const;
  std::vector<Colour> Values(int i) const;

  // Each returns true when the domain changed; an emptied domain fails the
  // store.
  bool Remove(int i, Colour c);
  bool Restrict(int i, Mask keep);
  bool Fix(int i, Colour c) { return Restrict(i, Mask{1} << c); }

  const std::vector<int64_t>& counter() const { return counter_; }
  void SetCounter(std::vector<int64_t> values);
  bool RestrictCounter(const std::function<bool(int64_t)>& keep);

  bool operator==(const DomainStore& o) const {
    return failed_ == o.failed_ &&
           (failed_ || (dom_ == o.dom_ && counter_ == o.counter_));
  }

 private:
  int num_colours_ = 0;
  std::vector<Mask> dom_;
  std::vector<int64_t> counter_;  // sorted, distinct
  bool failed_ = false;
};

struct Pruning {
  int var;
  Colour colour;
  bool operator==(const Pruning&) const = default;
};

struct PropagationResult {
  bool failed = false;
  std::vector<Pruning> pruned;
};

// The five pruning rules for contiguity of the colours along `path`,
// triggered by the singleton domain of `trigger` and iterated to a fixpoint
// over every singleton. Store indices are vertex ids. The rules alone can
// leave unsupported values behind.
PropagationResult PropagateConnected1dRules(DomainStore& store,
                                            const OrderedPath& path,
                                            Vertex trigger);

// The rules followed by a support pass that removes every value, and every
// counter value, not taking part in some colouring where each colour forms
// one stretch and the number of used colours k satisfies k op N for N in
// the counter domain. The result is domain consistent.
PropagationResult PropagateConnected1d(DomainStore& store,
                                       const OrderedPath& path,
                                       Vertex trigger, RelOp op);

// Edges whose end points have intersecting domains.
std::vector<std::pair<Vertex, Vertex>> ColourGraphCp(const DomainStore& store,
                                                     const Geometry& g);

enum class Feasibility { kFeasible, kFailed, kSubsumed };

// Necessary-condition test for Connected(op, N) over a partially decided
// store; never prunes.
Feasibility ConnectedFeasibility(const DomainStore& store, const Geometry& g,
                                 RelOp op);

// Col(v) = Col(Pred(v)) for every vertex but the first.
std::vector<int> SignatureVars(std::span<const Colour> colours);

// Single-state automaton with a counter k holding the running stretch sum.
class SignatureDfa {
 public:
  SignatureDfa(RelOp op, int64_t t) : op_(op), t_(t) {}
  void Start(int64_t first_value) {
    k_ = first_value;
    failed_ = false;
    started_ = true;
  }
  // Signature 1 extends the stretch; 0 closes it, which requires k op t.
  void Step(int sig, int64_t value);
  bool failed() const { return failed_; }
  int64_t counter() const { return k_; }
  bool Accepting() const { return !started_ || (!failed_ && Holds(k_, op_, t_)); }

 private:
  RelOp op_;
  int64_t t_;
  int64_t k_ = 0;
  bool failed_ = false;
  bool started_ = false;
};

bool StretchSumDfaCheck(std::span<const Colour> colours,
                        std::span<const int64_t> values, RelOp op, int64_t t);

using ColouringCheck =
    std::function<bool(std::span<const Colour> colours, int64_t counter)>;

// Keeps a value iff some colouring in the store, with some counter value,
// passes `check`. Unsatisfiable stores come back failed.
DomainStore BruteForceFilter(const ColouringCheck& check,
                             const DomainStore& store);

// Every colouring of `state`'s geometry with 1..n accepted by all
// constraints' Check(). The state is restored afterwards and the
// constraints Reset(). Throws InputError when |V| > limit or n > 4.
std::vector<std::vector<Colour>> BruteForceSolve(
    ColourState& state, const std::vector<Constraint*>& constraints,
    int limit = 10);

}  // namespace sectorise

#endif  // SECTORISE_SYSTEMATIC_H_
