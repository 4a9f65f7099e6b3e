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

#ifndef SECTORISE_TYPES_H_
#define SECTORISE_TYPES_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sectorise {

// Vertices are dense indices 0..num_vertices-1 of the base geometry. The
// outside vertex of an enveloped geometry is kBottom.
using Vertex = int32_t;
using Facet = int32_t;
using Colour = int32_t;

inline constexpr Vertex kBottom = -1;
inline constexpr Facet kNoFacet = -1;
// Colour carried by the outside vertex; never available to real vertices.
inline constexpr Colour kBottomColour = 0;

// Malformed input: bad ids, schema violations, broken preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An initialisation procedure could not construct the requested state.
class InitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RelOp { kLe, kLt, kEq, kNe, kGt, kGe };

constexpr bool Holds(int64_t lhs, RelOp op, int64_t rhs) {
  switch (op) {
    case RelOp::kLe:
      return lhs <= rhs;
    case RelOp::kLt:
      return lhs < rhs;
    case RelOp::kEq:
      return lhs == rhs;
    case RelOp::kNe:
      return lhs != rhs;
    case RelOp::kGt:
      return lhs > rhs;
    case RelOp::kGe:
      return lhs >= rhs;
  }
  return false;
}

// Iverson bracket.
constexpr int Iverson(bool b) { return b ? 1 : 0; }

// Accepts "<=", "<", "=", "==", "!=", ">", ">=" and the ASCII words
// "le", "lt", "eq", "ne", "gt", "ge".
RelOp ParseRelOp(std::string_view text);
std::string_view RelOpName(RelOp op);

}  // namespace sectorise

#endif  // SECTORISE_TYPES_H_
