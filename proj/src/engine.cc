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

#include "sectorise/engine.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "sectorise/stretch_sum.h"

namespace sectorise {
namespace {

constexpr double kEps = 1e-9;

}  // namespace

Model::Model(ColourState state)
    : state_(std::make_unique<ColourState>(std::move(state))),
      frozen_(state_->num_vertices(), 0) {}

int Model::AddConstraint(std::string id, std::unique_ptr<Constraint> c,
                         int64_t weight) {
  if (weight <= 0) throw InputError("constraint weight must be positive");
  if (FindConstraint(id) >= 0) throw InputError("duplicate constraint id " + id);
  entries_.push_back({std::move(id), std::move(c), weight, false});
  return num_constraints() - 1;
}

int Model::AddCounter(std::string id, ConnectedConstraint& c, int64_t lo,
                      int64_t hi, bool searchable) {
  if (lo > hi) throw InputError("empty counter range for " + id);
  int index = -1;
  for (int i = 0; i < num_constraints(); ++i) {
    if (entries_[i].constraint.get() == &c) index = i;
  }
  if (index < 0) throw InputError("counter " + id + " has no constraint");
  counters_.push_back({std::move(id), &c, lo, hi, searchable, index});
  return num_counters() - 1;
}

void Model::set_weight(int i, int64_t w) {
  if (w <= 0) throw InputError("constraint weight must be positive");
  entries_[i].weight = w;
}

int Model::FindConstraint(const std::string& id) const {
  for (int i = 0; i < num_constraints(); ++i) {
    if (entries_[i].id == id) return i;
  }
  return -1;
}

void Model::Freeze(Vertex v) { frozen_[state_->geometry().CheckVertex(v)] = 1; }

double Model::TotalViolation() const {
  double total = 0;
  for (const Entry& e : entries_) {
    total += static_cast<double>(e.weight) * e.constraint->Violation();
  }
  return total;
}

double Model::ScratchTotal() const {
  double total = 0;
  for (const Entry& e : entries_) {
    total += static_cast<double>(e.weight) * e.constraint->ScratchViolation();
  }
  return total;
}

std::vector<double> Model::Violations() const {
  std::vector<double> out;
  for (const Entry& e : entries_) out.push_back(e.constraint->Violation());
  return out;
}

void Model::AssignEach(Vertex v, Colour c, std::vector<double>& deltas) const {
  for (size_t i = 0; i < entries_.size(); ++i) {
    deltas[i] += entries_[i].constraint->ProbeAssign(v, c);
  }
}

void Model::ProbeEach(const Move& m, std::vector<double>& deltas) {
  deltas.assign(entries_.size(), 0.0);
  switch (m.kind) {
    case MoveKind::kAssign:
      if (state_->colour(m.v) != m.colour) AssignEach(m.v, m.colour, deltas);
      return;
    case MoveKind::kSwap: {
      const Colour cv = state_->colour(m.v);
      const Colour cw = state_->colour(m.w);
      if (cv == cw) return;
      AssignEach(m.v, cw, deltas);
      CommitAssign(m.v, cw);
      AssignEach(m.w, cv, deltas);
      CommitAssign(m.v, cv);
      return;
    }
    case MoveKind::kCounter: {
      const CounterVar& cv = counters_[m.counter];
      deltas[cv.constraint_index] =
          static_cast<double>(cv.constraint->ProbeCounter(m.value));
      return;
    }
  }
}

double Model::Probe(const Move& m) {
  ProbeEach(m, scratch_);
  double total = 0;
  for (size_t i = 0; i < entries_.size(); ++i) {
    total += static_cast<double>(entries_[i].weight) * scratch_[i];
  }
  return total;
}

void Model::CommitAssign(Vertex v, Colour c) {
  if (state_->colour(v) == c) return;
  for (Entry& e : entries_) e.constraint->CommitAssign(v, c);
  state_->Assign(v, c);
}

void Model::Commit(const Move& m) {
  switch (m.kind) {
    case MoveKind::kAssign:
      state_->geometry().CheckVertex(m.v);
      if (frozen_[m.v]) throw InputError("vertex " + std::to_string(m.v) +
                                         " is frozen");
      if (m.colour < 1 || m.colour > state_->num_colours()) {
        throw InputError("colour out of range");
      }
      CommitAssign(m.v, m.colour);
      return;
    case MoveKind::kSwap: {
      state_->geometry().CheckVertex(m.v);
      state_->geometry().CheckVertex(m.w);
      if (frozen_[m.v] || frozen_[m.w]) throw InputError("swap on a frozen vertex");
      const Colour cv = state_->colour(m.v);
      const Colour cw = state_->colour(m.w);
      CommitAssign(m.v, cw);
      CommitAssign(m.w, cv);
      return;
    }
    case MoveKind::kCounter: {
      if (m.counter < 0 || m.counter >= num_counters()) {
        throw InputError("unknown counter");
      }
      const CounterVar& cv = counters_[m.counter];
      if (!cv.searchable) throw InputError("counter " + cv.id + " is fixed");
      if (m.value < cv.lo || m.value > cv.hi) {
        throw InputError("counter value outside its domain");
      }
      cv.constraint->CommitCounter(m.value);
      return;
    }
  }
}

std::vector<Move> Model::Neighbourhood(NeighbourhoodKind kind,
                                       bool with_swaps) const {
  const Geometry& g = state_->geometry();
  const int n = state_->num_colours();
  std::vector<Move> moves;
  std::vector<Colour> unused;
  for (Colour c = 1; c <= n; ++c) {
    if (state_->ColourSize(c) == 0) unused.push_back(c);
  }
  std::vector<Colour> seen;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (frozen_[v]) continue;
    const Colour cv = state_->colour(v);
    if (kind == NeighbourhoodKind::kFull) {
      for (Colour c = 1; c <= n; ++c) {
        if (c == cv) continue;
        Move m = Move::Assign(v, c);
        m.source = MoveSource::kFull;
        moves.push_back(m);
      }
      continue;
    }
    seen.clear();
    for (const Vertex w : g.Adjacent(v)) {
      const Colour cw = state_->colour(w);
      if (cw == cv || std::find(seen.begin(), seen.end(), cw) != seen.end()) {
        continue;
      }
      seen.push_back(cw);
      Move m = Move::Assign(v, cw);
      m.source = MoveSource::kBorder;
      moves.push_back(m);
    }
    for (const Colour c : unused) {
      Move m = Move::Assign(v, c);
      m.source = MoveSource::kUnusedColour;
      moves.push_back(m);
    }
  }
  if (with_swaps) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (frozen_[v]) continue;
      for (const Vertex w : g.Adjacent(v)) {
        if (w < v || frozen_[w] || state_->colour(v) == state_->colour(w)) {
          continue;
        }
        Move m = Move::Swap(v, w);
        m.source = MoveSource::kSwap;
        moves.push_back(m);
      }
    }
  }
  for (int i = 0; i < num_counters(); ++i) {
    const CounterVar& cv = counters_[i];
    if (!cv.searchable) continue;
    for (int64_t k = cv.lo; k <= cv.hi; ++k) {
      if (k == cv.constraint->counter()) continue;
      Move m = Move::Counter(i, k);
      m.source = MoveSource::kCounter;
      moves.push_back(m);
    }
  }
  return moves;
}

void Model::SetColours(std::vector<Colour> colours) {
  state_->SetAll(std::move(colours));
  ResetAll();
}

void Model::SetCounter(int i, int64_t value) {
  counters_[i].constraint->CommitCounter(value);
}

void Model::ResetAll() {
  for (Entry& e : entries_) e.constraint->Reset();
}

namespace {

// Splits the path into s stretches of distinct colours, then grows the
// remaining regions around them.
void JointHardInit(ColourState& s, const ConnectedConstraint& cc,
                   const StretchSumConstraint& ss, std::mt19937_64& rng) {
  const int nv = s.num_vertices();
  const OrderedPath& path = ss.path();
  const int k = ConnectedTargetCount(cc.op(), cc.counter(), s.num_colours(), nv);
  const int free_vertices = nv - path.size();
  for (int count = std::max(1, k - free_vertices); count <= k; ++count) {
    const auto segments = ss.Segmentation(count);
    if (!segments) continue;
    std::vector<std::vector<Vertex>> fixed;
    for (const auto& [first, last] : *segments) {
      fixed.emplace_back();
      for (int i = first; i <= last; ++i) fixed.back().push_back(path.at(i));
    }
    GrowRegionsAround(s, fixed, k, rng);
    return;
  }
  throw InitError("no start state satisfies both " + std::string(cc.kind()) +
                  " and " + std::string(ss.kind()));
}

void Initialise(Model& model, const SearchConfig& cfg, std::mt19937_64& rng) {
  ColourState& s = model.state();
  const int n = s.num_colours();
  const int nv = s.num_vertices();
  switch (cfg.init) {
    case InitKind::kKeep:
      break;
    case InitKind::kRandom: {
      std::vector<Colour> colours(nv);
      std::uniform_int_distribution<Colour> pick(1, n);
      for (Vertex v = 0; v < nv; ++v) {
        colours[v] = model.frozen(v) ? s.colour(v) : pick(rng);
      }
      s.SetAll(std::move(colours));
      break;
    }
    case InitKind::kRegionGrowing:
      if (nv > 0) GrowRegions(s, std::min(n, nv), rng);
      break;
  }
  std::vector<ConnectedConstraint*> connected;
  std::vector<StretchSumConstraint*> stretch;
  for (int i = 0; i < model.num_constraints(); ++i) {
    if (!model.hard(i)) continue;
    Constraint& c = model.constraint(i);
    if (auto* cc = dynamic_cast<ConnectedConstraint*>(&c)) {
      connected.push_back(cc);
    } else if (auto* ss = dynamic_cast<StretchSumConstraint*>(&c)) {
      stretch.push_back(ss);
    }
  }
  if (connected.size() == 1 && stretch.size() == 1) {
    JointHardInit(s, *connected[0], *stretch[0], rng);
  } else {
    for (ConnectedConstraint* cc : connected) {
      HardInitConnected(s, cc->op(), cc->counter(), rng);
    }
    for (StretchSumConstraint* ss : stretch) ss->HardInit(s);
  }
  model.ResetAll();
  for (int i = 0; i < model.num_constraints(); ++i) {
    if (model.hard(i) && model.constraint(i).Violation() > kEps) {
      throw InitError("hard constraint " + model.constraint_id(i) +
                      " is violated by the start state");
    }
  }
}

void MarkHard(Model& model, const std::vector<std::string>& hard) {
  for (int i = 0; i < model.num_constraints(); ++i) model.SetHard(i, false);
  for (const std::string& name : hard) {
    bool found = false;
    for (int i = 0; i < model.num_constraints(); ++i) {
      if (model.constraint_id(i) == name ||
          model.constraint(i).kind() == name ||
          (name == "stretchsum" && model.constraint(i).kind() == "stretch_sum")) {
        model.SetHard(i, true);
        found = true;
      }
    }
    if (!found) throw InputError("no constraint matches hard entry " + name);
  }
}

std::vector<int64_t> CounterValues(const Model& m) {
  std::vector<int64_t> out;
  for (int i = 0; i < m.num_counters(); ++i) out.push_back(m.counter_value(i));
  return out;
}

}  // namespace

SearchResult Search(Model& model, const SearchConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  MarkHard(model, cfg.hard);
  Initialise(model, cfg, rng);

  const int n = model.state().num_colours();
  const int nv = model.state().num_vertices();
  SearchResult result;
  result.seed = cfg.seed;
  double current = model.TotalViolation();
  result.best_total = current;
  result.best.assign(model.state().colours().begin(),
                     model.state().colours().end());
  result.best_counters = CounterValues(model);
  auto record = [&](int64_t it) {
    if (cfg.trace_every > 0 && it % cfg.trace_every == 0) {
      result.trace.push_back({it, current, model.Violations()});
    }
  };
  record(0);

  std::vector<int64_t> tabu(static_cast<size_t>(nv) * (n + 1), 0);
  auto is_tabu = [&](Vertex v, Colour c, int64_t it) {
    return tabu[static_cast<size_t>(v) * (n + 1) + c] > it;
  };
  std::uniform_int_distribution<int> jitter(0, std::max(cfg.tabu_tenure / 2, 0));
  std::vector<double> deltas;
  int64_t since_best = 0;
  int64_t it = 0;
  while (it < cfg.max_iterations && result.best_total > kEps) {
    ++it;
    const std::vector<Move> moves =
        model.Neighbourhood(cfg.neighbourhood, cfg.swap_moves);
    const Move* chosen = nullptr;
    double chosen_delta = 0;
    int ties = 0;
    for (const Move& m : moves) {
      model.ProbeEach(m, deltas);
      double delta = 0;
      bool hard_ok = true;
      for (int i = 0; i < model.num_constraints(); ++i) {
        if (model.hard(i) && deltas[i] > kEps) hard_ok = false;
        delta += static_cast<double>(model.weight(i)) * deltas[i];
      }
      if (!hard_ok) continue;
      bool tabu_move = false;
      if (m.kind == MoveKind::kAssign) {
        tabu_move = is_tabu(m.v, m.colour, it);
      } else if (m.kind == MoveKind::kSwap) {
        tabu_move = is_tabu(m.v, model.state().colour(m.w), it) ||
                    is_tabu(m.w, model.state().colour(m.v), it);
      }
      if (tabu_move && current + delta >= result.best_total - kEps) continue;
      if (chosen == nullptr || delta < chosen_delta - kEps) {
        chosen = &m;
        chosen_delta = delta;
        ties = 1;
      } else if (delta <= chosen_delta + kEps) {
        // Uniform choice among equally good moves.
        if (std::uniform_int_distribution<int>(0, ties)(rng) == 0) chosen = &m;
        ++ties;
      }
    }
    if (chosen != nullptr) {
      const Move m = *chosen;
      const int64_t until = it + cfg.tabu_tenure + jitter(rng);
      if (m.kind == MoveKind::kAssign) {
        tabu[static_cast<size_t>(m.v) * (n + 1) + model.state().colour(m.v)] =
            until;
      } else if (m.kind == MoveKind::kSwap) {
        tabu[static_cast<size_t>(m.v) * (n + 1) + model.state().colour(m.v)] =
            until;
        tabu[static_cast<size_t>(m.w) * (n + 1) + model.state().colour(m.w)] =
            until;
      }
      model.Commit(m);
      current = model.TotalViolation();
    }
    if (current < result.best_total - kEps) {
      result.best_total = current;
      result.best.assign(model.state().colours().begin(),
                         model.state().colours().end());
      result.best_counters = CounterValues(model);
      result.best_iteration = it;
      since_best = 0;
    } else {
      ++since_best;
    }
    if (chosen == nullptr ||
        (cfg.restart_after > 0 && since_best >= cfg.restart_after)) {
      SearchConfig again = cfg;
      if (again.init == InitKind::kKeep) again.init = InitKind::kRandom;
      Initialise(model, again, rng);
      std::fill(tabu.begin(), tabu.end(), 0);
      current = model.TotalViolation();
      since_best = 0;
      ++result.restarts;
    }
    record(it);
  }
  result.iterations = it;
  model.SetColours(result.best);
  for (int i = 0; i < model.num_counters(); ++i) {
    model.SetCounter(i, result.best_counters[i]);
  }
  result.best_total = model.TotalViolation();
  return result;
}

std::vector<SearchResult> ParallelSearch(
    const std::function<std::unique_ptr<Model>()>& factory,
    const SearchConfig& cfg, int runs) {
  if (runs < 1) throw InputError("need at least one run");
  std::vector<SearchResult> results(runs);
  std::vector<std::exception_ptr> errors(runs);
  std::vector<std::thread> threads;
  for (int k = 0; k < runs; ++k) {
    threads.emplace_back([&, k] {
      try {
        std::unique_ptr<Model> model = factory();
        SearchConfig mine = cfg;
        mine.seed = cfg.seed + static_cast<uint64_t>(k);
        results[k] = Search(*model, mine);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    });
  }
  for (std::thread& t : threads) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

const SearchResult& BestOf(const std::vector<SearchResult>& results) {
  const SearchResult* best = &results.front();
  for (const SearchResult& r : results) {
    if (r.best_total < best->best_total - kEps ||
        (std::abs(r.best_total - best->best_total) <= kEps &&
         r.seed < best->seed)) {
      best = &r;
    }
  }
  return *best;
}

std::string TraceCsv(const Model& model, const std::vector<TraceRow>& trace) {
  std::ostringstream out;
  out << "iteration,total";
  for (int i = 0; i < model.num_constraints(); ++i) {
    out << ',' << model.constraint_id(i);
  }
  out << '\n';
  out.precision(12);
  for (const TraceRow& row : trace) {
    out << row.iteration << ',' << row.total;
    for (const double v : row.violations) out << ',' << v;
    out << '\n';
  }
  return out.str();
}

}  // namespace sectorise
