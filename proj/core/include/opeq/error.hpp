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

#ifndef OPEQ_ERROR_HPP_
#define OPEQ_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace opeq {

// Every failure raised by the library carries one of these codes so callers
// (and the CLI's exit-code mapping) can distinguish them without parsing text.
enum class Errc {
  kDivisionByZero,
  kParse,
  kNotATree,
  kChanceSum,
  kInfosetLabels,
  kInfosetPlayer,
  kPerfectRecall,
  kMalformedGame,
  kInvalidArgument,
  kDimensionMismatch,
  kPlayerMismatch,
  kInfeasible,
  kUnbounded,
  kNoStabilization,
  kBudgetExceeded,
  kInternal,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace opeq

#endif  // OPEQ_ERROR_HPP_
