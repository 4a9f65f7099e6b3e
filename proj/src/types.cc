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

#include "sectorise/types.h"

#include <string>

namespace sectorise {

RelOp ParseRelOp(std::string_view text) {
  if (text == "<=" || text == "le") return RelOp::kLe;
  if (text == "<" || text == "lt") return RelOp::kLt;
  if (text == "=" || text == "==" || text == "eq") return RelOp::kEq;
  if (text == "!=" || text == "ne") return RelOp::kNe;
  if (text == ">" || text == "gt") return RelOp::kGt;
  if (text == ">=" || text == "ge") return RelOp::kGe;
  throw InputError("unknown relational operator '" + std::string(text) + "'");
}

std::string_view RelOpName(RelOp op) {
  switch (op) {
    case RelOp::kLe:
      return "<=";
    case RelOp::kLt:
      return "<";
    case RelOp::kEq:
      return "=";
    case RelOp::kNe:
      return "!=";
    case RelOp::kGt:
      return ">";
    case RelOp::kGe:
      return ">=";
  }
  return "?";
}

}  // namespace sectorise
