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

#ifndef OPEQ_VERIFY_BEST_RESPONSE_HPP_
#define OPEQ_VERIFY_BEST_RESPONSE_HPP_

#include "opeq/seqform/strategy.hpp"

namespace opeq::verify {

using efg::Player;
using seqform::RealizationPlan;
using seqform::SequenceForm;

struct BestResponse {
  RealizationPlan plan;  // pure; ties go to the first action
  Rat value;             // responder's expected payoff
};

// Exact best response by walking the game tree and maximizing bottom-up over
// the responder's infosets. Uses no linear programming, so it can certify
// solver output. Throws Error{kPlayerMismatch} when `opponent` belongs to
// the responder.
BestResponse best_response(const SequenceForm& sf, const RealizationPlan& opponent,
                           Player responder);

// Expected payoff to player 1, summed leaf by leaf over the tree.
Rat tree_value(const SequenceForm& sf, const RealizationPlan& x1, const RealizationPlan& x2);

struct ExploitabilityReport {
  Rat value_1;     // payoff to player 1 under (x1, x2)
  Rat br_value_1;  // best player-1 payoff against x2
  Rat br_value_2;  // best player-2 payoff against x1
  Rat gap;         // (br_value_1 - value_1) + (br_value_2 + value_1); zero iff Nash
};

ExploitabilityReport certify_nash(const SequenceForm& sf, const RealizationPlan& x1,
                                  const RealizationPlan& x2);

}  // namespace opeq::verify

#endif  // OPEQ_VERIFY_BEST_RESPONSE_HPP_
