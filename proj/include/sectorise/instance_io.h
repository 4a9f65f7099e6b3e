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

#ifndef SECTORISE_INSTANCE_IO_H_
#define SECTORISE_INSTANCE_IO_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sectorise/compact.h"
#include "sectorise/connected.h"
#include "sectorise/engine.h"
#include "sectorise/geometry.h"
#include "sectorise/traffic.h"
#include "sectorise/types.h"
#include "sectorise/workload.h"

namespace sectorise {

struct ConstraintConfig {
  std::string id;
  // connected | compact | stretch_sum | balanced | balanced_size | bounded |
  // non_border
  std::string kind;
  int64_t weight = 1;

  RelOp op = RelOp::kGe;
  // Threshold t, or the value of N for connected.
  int64_t t = 0;

  // connected
  ConnectedMode connected_mode = ConnectedMode::kExact;
  bool searchable = false;
  int64_t n_min = 0;
  int64_t n_max = 0;

  // compact
  CompactMode compact_mode = CompactMode::kBorderTotal;
  WeightFn weight_fn = WeightFn::kIdentity;
  bool exact_probe = false;

  // stretch_sum and non_border: either a flight id or an explicit path
  // (with values for stretch_sum).
  std::string flight;
  std::vector<Vertex> path;
  std::vector<int64_t> values;

  // balanced and balanced_size
  int64_t delta_scaled = 0;
  std::optional<Rational> mu;

  bool operator==(const ConstraintConfig&) const = default;
};

struct Instance {
  std::shared_ptr<const Geometry> geometry;
  int num_colours = 1;
  std::vector<int64_t> workloads;
  std::vector<FlightPlan> flights;
  std::vector<ConstraintConfig> constraints;
  SearchConfig search;

  int64_t TotalWorkload() const;
  const FlightPlan& Flight(const std::string& id) const;
};

struct Solution {
  int num_colours = 0;
  std::vector<Colour> colours;
  std::map<std::string, int64_t> counters;
  bool operator==(const Solution&) const = default;
};

// Canonical text: JSON with sorted keys and two-space indentation. Errors
// name the offending field, e.g. "constraints[1].relop: ...".
Instance ParseInstance(const std::string& text);
std::string SerializeInstance(const Instance& inst);
Instance LoadInstance(const std::string& path);
void SaveInstance(const Instance& inst, const std::string& path);

Solution ParseSolution(const std::string& text);
std::string SerializeSolution(const Solution& sol);
Solution LoadSolution(const std::string& path);
void SaveSolution(const Solution& sol, const std::string& path);

struct GenerateOptions {
  uint64_t seed = 1;
  int w = 10;
  int h = 10;
  int d = 1;
  int dim = 2;
  int num_colours = 4;
  int num_flights = 1;
  int64_t dwell_min = 30;
  int64_t dwell_max = 90;
  int64_t workload_min = 1;
  int64_t workload_max = 10;
  // Adds Connected(=, n), Balanced with Δ at balance_percent of the total
  // workload, and one StretchSum(>=, stretch_t) per flight.
  bool default_constraints = true;
  int64_t balance_percent = 10;
  int64_t stretch_t = 120;
};

// Deterministic per seed. Flights walk monotonically (+x or +y, and +z in
// 3D) from a cell on the low faces until they leave the grid.
Instance Generate(const GenerateOptions& opt);

// Scaled Δ for a Balanced bound of `percent` of the total workload:
// n · floor(W · percent / 100).
int64_t ScaledDelta(int64_t total, int n, int64_t percent);

struct BuildOptions {
  std::optional<ConnectedMode> connected_mode;
  std::map<std::string, int64_t> weights;
};

std::unique_ptr<Model> BuildModel(const Instance& inst,
                                  const BuildOptions& opt = {});

struct CheckEntry {
  std::string id;
  std::string kind;
  double violation;  // from scratch
  bool holds;        // declarative check
};

struct CheckReport {
  std::vector<CheckEntry> entries;
  double total = 0;  // Σ weight · violation
  bool satisfied() const;
};

CheckReport CheckSolution(const Instance& inst, const Solution& sol);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& text);

}  // namespace sectorise

#endif  // SECTORISE_INSTANCE_IO_H_
