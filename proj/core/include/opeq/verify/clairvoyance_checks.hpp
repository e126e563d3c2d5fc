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

#ifndef OPEQ_VERIFY_CLAIRVOYANCE_CHECKS_HPP_
#define OPEQ_VERIFY_CLAIRVOYANCE_CHECKS_HPP_

#include <vector>

#include "opeq/seqform/strategy.hpp"

namespace opeq::verify {

struct IntervalEntry {
  int bet = 0;
  Rat alpha;  // call probability against this bet
  Rat lower;  // 1/(1+x)
  Rat upper;  // min{n/(x(1+n)), 1}
  bool pass = false;
};

struct IntervalReport {
  int n = 0;
  std::vector<IntervalEntry> entries;  // bets 1..n
  bool pass() const;
};

// Checks that every call probability of a player-2 strategy for
// clairvoyance(n) lies in the range that keeps the profile an equilibrium.
// Throws Error{kInvalidArgument} if the strategy does not have exactly the
// n facing-bet infosets of clairvoyance(n).
IntervalReport clairvoyance_interval_check(const seqform::BehavioralStrategy& b, int n);

struct MistakeCost {
  Rat loss_winning;  // n/(1+n) - αx: betting x instead of n with W
  Rat loss_losing;   // α(1+x) - 1:  betting x instead of checking with L
};

// Expected payoff player 1 gives up in clairvoyance(n) by betting x when
// player 2 calls that bet with probability alpha and otherwise plays the
// equilibrium. Requires 1 <= x <= n and 0 <= alpha <= 1.
MistakeCost mistake_cost(const Rat& alpha, int x, int n);

}  // namespace opeq::verify

#endif  // OPEQ_VERIFY_CLAIRVOYANCE_CHECKS_HPP_
