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

#ifndef SECTORISE_CONSTRAINT_H_
#define SECTORISE_CONSTRAINT_H_

#include <string_view>

#include "sectorise/colour_state.h"
#include "sectorise/types.h"

namespace sectorise {

// Common surface of the local-search constraints. A constraint observes a
// ColourState owned by someone else (normally a Model) and keeps its own
// incremental structures in step with it.
//
// Protocol: ProbeAssign() never changes anything observable. CommitAssign()
// must be called while the state still holds the old colour, immediately
// before the state itself is updated.
//
// Violations are returned as double so that the real-valued compactness
// measure can be aggregated with the integer ones; integer constraints
// return exact integers.
class Constraint {
 public:
  virtual ~Constraint() = default;

  virtual std::string_view kind() const = 0;

  // Cached constraint violation; zero iff the constraint holds.
  virtual double Violation() const = 0;
  virtual double VarViolation(Vertex v) const = 0;
  // Change in Violation() if v took colour c.
  virtual double ProbeAssign(Vertex v, Colour c) const = 0;
  virtual void CommitAssign(Vertex v, Colour c) = 0;
  // Discards incremental structures and rebuilds them from the state.
  virtual void Reset() = 0;

  // Recomputes the violation without touching any cache.
  virtual double ScratchViolation() const = 0;
  // Evaluates the constraint's declarative semantics directly.
  virtual bool Check() const = 0;
};

}  // namespace sectorise

#endif  // SECTORISE_CONSTRAINT_H_
