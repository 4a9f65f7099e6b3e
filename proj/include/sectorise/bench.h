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

#ifndef SECTORISE_BENCH_H_
#define SECTORISE_BENCH_H_

#include <cstdint>
#include <string>
#include <vector>

namespace sectorise {

struct ProbeBenchOptions {
  // Grid sizes as (width, height) pairs.
  std::vector<std::pair<int, int>> grids = {{10, 10}, {40, 25}, {100, 100}};
  int num_colours = 4;
  int probes = 20000;  // per constraint and grid
  int repeats = 3;     // the fastest repeat is kept
  uint64_t seed = 1;
};

struct ProbeBenchRow {
  int vertices;
  std::string constraint;  // connected | connected_fast | balanced | non_border
  double mean_ns;
  double mean_degree;      // of the probed vertices
};

// Mean probe time of border moves on region-grown grid colourings.
std::vector<ProbeBenchRow> ProbeBench(const ProbeBenchOptions& opt);

}  // namespace sectorise

#endif  // SECTORISE_BENCH_H_
