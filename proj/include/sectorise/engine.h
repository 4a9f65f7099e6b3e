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

#ifndef SECTORISE_ENGINE_H_
#define SECTORISE_ENGINE_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "sectorise/colour_state.h"
#include "sectorise/connected.h"
#include "sectorise/constraint.h"
#include "sectorise/types.h"

namespace sectorise {

enum class MoveKind { kAssign, kSwap, kCounter };

enum class MoveSource { kBorder, kUnusedColour, kFull, kSwap, kCounter, kUser };

struct Move {
  MoveKind kind = MoveKind::kAssign;
  Vertex v = kBottom;
  Vertex w = kBottom;     // swaps only
  Colour colour = 0;      // assignments only
  int counter = -1;       // counter moves only
  int64_t value = 0;      // counter moves only
  MoveSource source = MoveSource::kUser;

  static Move Assign(Vertex v, Colour c) {
    return {MoveKind::kAssign, v, kBottom, c, -1, 0, MoveSource::kUser};
  }
  static Move Swap(Vertex v, Vertex w) {
    return {MoveKind::kSwap, v, w, 0, -1, 0, MoveSource::kUser};
  }
  static Move Counter(int counter, int64_t value) {
    return {MoveKind::kCounter, kBottom, kBottom, 0, counter, value,
            MoveSource::kUser};
  }
};

enum class NeighbourhoodKind {
  // Recolour a vertex to the colour of a differently coloured neighbour, or
  // any vertex to a currently unused colour.
  kBorder,
  // Every vertex to every other colour.
  kFull,
};

// Integer variable N of a Connected constraint.
struct CounterVar {
  std::string id;
  ConnectedConstraint* constraint = nullptr;
  int64_t lo = 0;
  int64_t hi = 0;
  bool searchable = false;
  int constraint_index = -1;  // position of `constraint` in the model
};

class Model {
 public:
  explicit Model(ColourState state);
  Model(const Model&) = delete;
  Model& operator=(const Model&) = delete;

  ColourState& state() { return *state_; }
  const ColourState& state() const { return *state_; }

  // Constraints must observe state(). Weights are positive.
  int AddConstraint(std::string id, std::unique_ptr<Constraint> c,
                    int64_t weight = 1);
  template <typename T, typename... Args>
  T& Emplace(std::string id, int64_t weight, Args&&... args) {
    auto c = std::make_unique<T>(*state_, std::forward<Args>(args)...);
    T& ref = *c;
    AddConstraint(std::move(id), std::move(c), weight);
    return ref;
  }
  int AddCounter(std::string id, ConnectedConstraint& c, int64_t lo,
                 int64_t hi, bool searchable);

  int num_constraints() const { return static_cast<int>(entries_.size()); }
  Constraint& constraint(int i) { return *entries_[i].constraint; }
  const Constraint& constraint(int i) const { return *entries_[i].constraint; }
  const std::string& constraint_id(int i) const { return entries_[i].id; }
  int64_t weight(int i) const { return entries_[i].weight; }
  void set_weight(int i, int64_t w);
  int FindConstraint(const std::string& id) const;

  bool hard(int i) const { return entries_[i].hard; }
  void SetHard(int i, bool hard) { entries_[i].hard = hard; }

  int num_counters() const { return static_cast<int>(counters_.size()); }
  const CounterVar& counter(int i) const { return counters_[i]; }
  int64_t counter_value(int i) const { return counters_[i].constraint->counter(); }

  void Freeze(Vertex v);
  bool frozen(Vertex v) const { return frozen_[v] != 0; }

  // Σ weight · violation over the cached violations.
  double TotalViolation() const;
  double ScratchTotal() const;
  std::vector<double> Violations() const;

  // Weighted change of the total violation. Swaps are probed by committing
  // the first assignment, probing the second and undoing the first.
  double Probe(const Move& m);
  // Unweighted per-constraint deltas, written to `deltas`.
  void ProbeEach(const Move& m, std::vector<double>& deltas);
  // Throws InputError on frozen vertices and fixed counters.
  void Commit(const Move& m);

  // Moves of the requested neighbourhood, excluding frozen vertices, plus
  // counter moves for searchable counters.
  std::vector<Move> Neighbourhood(NeighbourhoodKind kind,
                                  bool with_swaps = false) const;

  // Replaces the colouring and resets every constraint.
  void SetColours(std::vector<Colour> colours);
  void SetCounter(int i, int64_t value);
  void ResetAll();

 private:
  struct Entry {
    std::string id;
    std::unique_ptr<Constraint> constraint;
    int64_t weight;
    bool hard = false;
  };

  void AssignEach(Vertex v, Colour c, std::vector<double>& deltas) const;
  void CommitAssign(Vertex v, Colour c);

  std::unique_ptr<ColourState> state_;
  std::vector<Entry> entries_;
  std::vector<CounterVar> counters_;
  std::vector<char> frozen_;
  std::vector<double> scratch_;
};

enum class InitKind {
  kKeep,           // start from the model's current colouring
  kRandom,         // uniform colours
  kRegionGrowing,  // as many connected regions as colours
};

struct SearchConfig {
  int64_t max_iterations = 50000;
  uint64_t seed = 1;
  int tabu_tenure = 10;
  // Reinitialise after this many iterations without a new best; 0 disables.
  int64_t restart_after = 5000;
  NeighbourhoodKind neighbourhood = NeighbourhoodKind::kBorder;
  bool swap_moves = false;
  InitKind init = InitKind::kRegionGrowing;
  // Ids of constraints kept satisfied from the start state on.
  std::vector<std::string> hard;
  // Record every k-th iteration in the trace; 0 records nothing.
  int64_t trace_every = 1;
};

struct TraceRow {
  int64_t iteration;
  double total;
  std::vector<double> violations;
};

struct SearchResult {
  uint64_t seed = 0;
  std::vector<Colour> best;
  std::vector<int64_t> best_counters;
  double best_total = 0;
  int64_t iterations = 0;  // iterations run
  int64_t best_iteration = 0;
  int restarts = 0;
  std::vector<TraceRow> trace;
  bool solved() const { return best_total <= 1e-9; }
};

// Runs tabu search from the configured start; the model is left in its best
// state. Throws InitError when a hard constraint cannot be initialised.
SearchResult Search(Model& model, const SearchConfig& cfg);

// Runs `runs` searches with seeds cfg.seed, cfg.seed+1, ... on models made
// by `factory`, one per thread. Results come back in seed order.
std::vector<SearchResult> ParallelSearch(
    const std::function<std::unique_ptr<Model>()>& factory,
    const SearchConfig& cfg, int runs);

// The result with the least violation; ties go to the lower seed.
const SearchResult& BestOf(const std::vector<SearchResult>& results);

// CSV: iteration, total, one column per constraint id.
std::string TraceCsv(const Model& model, const std::vector<TraceRow>& trace);

}  // namespace sectorise

#endif  // SECTORISE_ENGINE_H_
