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

#ifndef OPEQ_TESTS_SUPPORT_ORACLES_HPP_
#define OPEQ_TESTS_SUPPORT_ORACLES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "opeq/efg/game.hpp"
#include "opeq/refine/observation.hpp"
#include "opeq/seqform/strategy.hpp"

namespace opeq::testing {

using efg::Player;
using seqform::BehavioralStrategy;
using seqform::RealizationPlan;
using seqform::SequenceForm;

// Matching pennies as a matrix game.
efg::Game matching_pennies();

struct Fixture {
  std::string name;
  efg::Game game;
  std::vector<std::string> observed;  // player-1 labels for OPE
};

// Kuhn plus 20 seeded random one-step games.
std::vector<Fixture> random_and_kuhn_fixtures();
// clairvoyance(1..5), observing a bet of 1.
std::vector<Fixture> clairvoyance_fixtures();

// Expected payoff to player 1 by walking the tree with behavioral
// strategies. Never touches the sequence form.
Rat tree_walk_value(const efg::Game& game, const BehavioralStrategy& b1,
                    const BehavioralStrategy& b2);

// Every pure behavioral strategy of `p`, in odometer order over infosets.
std::vector<BehavioralStrategy> pure_strategies(const efg::Game& game, Player p);

// Best payoff to `responder` against `opponent`, by enumerating pure
// strategies and walking the tree.
Rat brute_force_best_response(const efg::Game& game, const BehavioralStrategy& opponent,
                              Player responder);

// Realization weights of a behavioral strategy as products of action
// probabilities along each sequence.
RealizationPlan product_realization(const SequenceForm& sf, const BehavioralStrategy& b);

// min over { x1 : F1 x1 = f1, x1 >= 0, cᵀx1 >= eps } of x2ᵀA2x1, set up
// directly as a primal LP.
Rat inner_minimum(const SequenceForm& sf, const refine::ObservationVector& c, const Rat& eps,
                  const RealizationPlan& x2);

struct CfrResult {
  double value;           // to player 1 under the average strategies
  double exploitability;  // sum of both players' best-response gains
};

// Vanilla counterfactual regret minimization in doubles.
CfrResult cfr(const efg::Game& game, int iterations);

}  // namespace opeq::testing

#endif  // OPEQ_TESTS_SUPPORT_ORACLES_HPP_
