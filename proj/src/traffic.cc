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

#include "sectorise/traffic.h"

#include <algorithm>
#include <string>

namespace sectorise {

std::optional<PlanError> Validate(const FlightPlan& plan, const Geometry& g) {
  std::vector<Vertex> seen;
  for (int i = 0; i < static_cast<int>(plan.legs.size()); ++i) {
    const Leg& leg = plan.legs[i];
    if (leg.region < 0 || leg.region >= g.num_vertices()) {
      return PlanError{i, "unknown region " + std::to_string(leg.region)};
    }
    if (leg.entry >= leg.exit) {
      return PlanError{i, "entry time must be strictly before exit time"};
    }
    if (i > 0) {
      const Leg& prev = plan.legs[i - 1];
      if (prev.exit != leg.entry) {
        return PlanError{i, "entry time does not match previous exit time"};
      }
      if (!g.AreAdjacent(prev.region, leg.region)) {
        return PlanError{i, "region is not adjacent to the previous region"};
      }
    }
    if (std::find(seen.begin(), seen.end(), leg.region) != seen.end()) {
      return PlanError{i, "region " + std::to_string(leg.region) +
                              " is visited twice"};
    }
    seen.push_back(leg.region);
  }
  return std::nullopt;
}

void ValidateOrThrow(const FlightPlan& plan, const Geometry& g) {
  if (const auto err = Validate(plan, g)) {
    throw InputError("flight '" + plan.id + "' leg " +
                     std::to_string(err->leg) + ": " + err->message);
  }
}

std::vector<int64_t> DwellValues(const FlightPlan& plan) {
  std::vector<int64_t> out;
  out.reserve(plan.legs.size());
  for (const Leg& leg : plan.legs) out.push_back(leg.exit - leg.entry);
  return out;
}

OrderedPath VisitedPath(const FlightPlan& plan) {
  std::vector<Vertex> seq;
  seq.reserve(plan.legs.size());
  for (const Leg& leg : plan.legs) seq.push_back(leg.region);
  return OrderedPath(std::move(seq));
}

}  // namespace sectorise
