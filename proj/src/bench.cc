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

#include "sectorise/bench.h"

#include <chrono>
#include <memory>
#include <random>

#include "sectorise/connected.h"
#include "sectorise/engine.h"
#include "sectorise/non_border.h"
#include "sectorise/workload.h"

namespace sectorise {

std::vector<ProbeBenchRow> ProbeBench(const ProbeBenchOptions& opt) {
  using Clock = std::chrono::steady_clock;
  std::vector<ProbeBenchRow> rows;
  for (const auto& [w, h] : opt.grids) {
    std::mt19937_64 rng(opt.seed);
    auto g = std::make_shared<const Geometry>(Geometry::Grid(w, h, 1, 1, 1, 2));
    Model model{ColourState(g, opt.num_colours)};
    GrowRegions(model.state(), std::min(opt.num_colours, g->num_vertices()), rng);
    std::vector<int64_t> load(g->num_vertices());
    std::uniform_int_distribution<int64_t> pick_load(1, 10);
    for (int64_t& x : load) x = pick_load(rng);
    // A flight along the middle row.
    std::vector<Vertex> row;
    for (int x = 0; x < w; ++x) row.push_back(x + w * (h / 2));

    auto& exact = model.Emplace<ConnectedConstraint>("connected", 1, RelOp::kEq,
                                                     opt.num_colours);
    auto& fast = model.Emplace<ConnectedConstraint>(
        "connected_fast", 1, RelOp::kEq, opt.num_colours,
        ConnectedMode::kPaperFast);
    auto& balanced = model.Emplace<BalancedConstraint>("balanced", 1, load, 0);
    auto& non_border =
        model.Emplace<NonBorderConstraint>("non_border", 1, OrderedPath(row, g.get()));

    std::vector<Move> border;
    for (const Move& m : model.Neighbourhood(NeighbourhoodKind::kBorder)) {
      if (m.source == MoveSource::kBorder) border.push_back(m);
    }
    std::vector<Move> sample(opt.probes);
    double degree = 0;
    std::uniform_int_distribution<size_t> pick(0, border.size() - 1);
    for (Move& m : sample) {
      m = border[pick(rng)];
      degree += static_cast<double>(g->Adjacent(m.v).size());
    }
    degree /= static_cast<double>(sample.size());

    auto time = [&](const Constraint& c) {
      double best = 0;
      for (int r = 0; r < opt.repeats; ++r) {
        volatile double sink = 0;
        const auto start = Clock::now();
        for (const Move& m : sample) sink = sink + c.ProbeAssign(m.v, m.colour);
        const double ns =
            std::chrono::duration<double, std::nano>(Clock::now() - start).count() /
            static_cast<double>(sample.size());
        if (r == 0 || ns < best) best = ns;
      }
      return best;
    };
    const int nv = g->num_vertices();
    rows.push_back({nv, "connected", time(exact), degree});
    rows.push_back({nv, "connected_fast", time(fast), degree});
    rows.push_back({nv, "balanced", time(balanced), degree});
    rows.push_back({nv, "non_border", time(non_border), degree});
  }
  return rows;
}

}  // namespace sectorise
