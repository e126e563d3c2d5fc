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

#ifndef OPEQ_EFG_GENERATORS_HPP_
#define OPEQ_EFG_GENERATORS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "opeq/efg/game.hpp"

namespace opeq::efg {

// No-limit clairvoyance game with integral bets 0..n. Chance deals player 1 a
// winning (W) or losing (L) hand with probability 1/2 each. Player 1 checks
// or bets x in 1..n; player 2 sees the bet but not the hand and calls or
// folds. Payoffs to player 1 are net chips: called bets win or lose 1/2 + x,
// a fold gives +1/2, a check gives +1/2 with W and -1/2 with L.
//
// Naming: player-1 infosets "W" and "L" with actions "check", "bet1".."betn";
// player-2 infosets "facing_bet<x>" with actions "call_bet<x>", "fold_bet<x>".
// Throws Error{kInvalidArgument} when n < 1.
Game make_clairvoyance(int n);

std::string clairvoyance_bet_label(int x);
std::string clairvoyance_facing_infoset(int x);
std::string clairvoyance_call_label(int x);
std::string clairvoyance_fold_label(int x);

// Three-card Kuhn poker: ante 1, bet 1, six equally likely deals.
// Actions are "p"/"b" (pass/bet) and "f"/"c" (fold/call).
Game make_kuhn();

// Player 1 picks a row ("r<i>"), player 2 picks a column ("c<j>") without
// observing the row; the payoff to player 1 is matrix[i][j].
// Throws Error{kInvalidArgument} for an empty or ragged matrix.
Game make_matrix_game(const std::vector<std::vector<Rat>>& matrix);

struct RandomOsefgLimits {
  int max_types = 3;
  int max_p1_actions = 3;
  int max_p2_actions = 3;
  int payoff_range = 6;  // numerators drawn from [-range, range]
};

// A random one-step game: uniform private type t<k>, public player-1 action
// a<i>, player-2 response r<j> in infoset "obs_a<i>". Payoffs are small
// rationals with denominators in {1, 2, 4}. Deterministic in `seed`.
Game make_random_osefg(std::uint64_t seed, const RandomOsefgLimits& limits = {});

}  // namespace opeq::efg

#endif  // OPEQ_EFG_GENERATORS_HPP_
