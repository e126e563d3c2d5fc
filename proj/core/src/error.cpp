// Copyright 2026 The opeq Authors. All rights reserved.
//
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

#include "opeq/error.hpp"

namespace opeq {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kDivisionByZero: return "division by zero";
    case Errc::kParse: return "parse error";
    case Errc::kNotATree: return "game is not a tree";
    case Errc::kChanceSum: return "chance probabilities";
    case Errc::kInfosetLabels: return "infoset label mismatch";
    case Errc::kInfosetPlayer: return "infoset player mismatch";
    case Errc::kPerfectRecall: return "perfect recall violated";
    case Errc::kMalformedGame: return "malformed game";
    case Errc::kInvalidArgument: return "invalid argument";
    case Errc::kDimensionMismatch: return "dimension mismatch";
    case Errc::kPlayerMismatch: return "player mismatch";
    case Errc::kInfeasible: return "infeasible";
    case Errc::kUnbounded: return "unbounded";
    case Errc::kNoStabilization: return "no stabilization";
    case Errc::kBudgetExceeded: return "budget exceeded";
    case Errc::kInternal: return "internal error";
  }
  return "unknown error";
}

}  // namespace opeq
