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

#ifndef OPEQ_SEQFORM_STRATEGY_IO_HPP_
#define OPEQ_SEQFORM_STRATEGY_IO_HPP_

#include <span>
#include <string>
#include <string_view>

#include "opeq/seqform/strategy.hpp"

namespace opeq::seqform {

struct StrategyProfile {
  BehavioralStrategy player1;
  BehavioralStrategy player2;
};

// Strategy file format:
//
//   strategy v1
//   <player> <infoset-name> <label>=<p/q> <label>=<p/q> ...
//
// A listed infoset must give every action exactly once; unlisted infosets
// are uniform.
std::string write_strategies(std::span<const BehavioralStrategy> strategies);

// Throws Error{kParse} on syntax errors and Error{kInvalidArgument} when the
// strategy does not fit the game.
StrategyProfile parse_strategies(const SequenceForm& sf, std::string_view text);

}  // namespace opeq::seqform

#endif  // OPEQ_SEQFORM_STRATEGY_IO_HPP_
