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

#ifndef SECTORISE_TRAFFIC_H_
#define SECTORISE_TRAFFIC_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sectorise/geometry.h"
#include "sectorise/types.h"

namespace sectorise {

struct Leg {
  Vertex region = 0;
  int64_t entry = 0;  // seconds
  int64_t exit = 0;
  bool operator==(const Leg&) const = default;
};

struct FlightPlan {
  std::string id;
  std::vector<Leg> legs;
  bool operator==(const FlightPlan&) const = default;
};

struct PlanError {
  int leg;  // index of the offending leg
  std::string message;
};

// Checks strictly positive dwell, time continuity between legs, adjacency
// of consecutive regions and that no region is visited twice. Returns the
// first violation found, scanning legs in order.
std::optional<PlanError> Validate(const FlightPlan& plan, const Geometry& g);
// Throws InputError naming the flight and leg.
void ValidateOrThrow(const FlightPlan& plan, const Geometry& g);

// Time spent in each visited region, in visiting order.
std::vector<int64_t> DwellValues(const FlightPlan& plan);

// The visited regions as an ordered path; the ⊥ ends are implicit in
// OrderedPath and materialised by WithSentinels().
OrderedPath VisitedPath(const FlightPlan& plan);

}  // namespace sectorise

#endif  // SECTORISE_TRAFFIC_H_
