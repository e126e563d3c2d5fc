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

#ifndef OPEQ_SEQFORM_STRATEGY_HPP_
#define OPEQ_SEQFORM_STRATEGY_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "opeq/seqform/sequence_form.hpp"

namespace opeq::seqform {

// Realization weights over one player's sequences: x >= 0, x[0] = 1, F x = f.
struct RealizationPlan {
  Player player = Player::kOne;
  std::vector<Rat> x;

  friend bool operator==(const RealizationPlan&, const RealizationPlan&) = default;
};

struct InfosetDistribution {
  std::string infoset;
  std::vector<std::string> labels;
  std::vector<Rat> probs;

  // Throws Error{kInvalidArgument} for an unknown label.
  const Rat& prob(std::string_view label) const;

  friend bool operator==(const InfosetDistribution&, const InfosetDistribution&) = default;
};

// One distribution per infoset of the player, in the sequence form's infoset
// order when produced by this library.
struct BehavioralStrategy {
  Player player = Player::kOne;
  std::vector<InfosetDistribution> infosets;

  const InfosetDistribution* find(std::string_view infoset) const;
  // Throws Error{kInvalidArgument} when the infoset or label is unknown.
  const Rat& probability(std::string_view infoset, std::string_view label) const;

  friend bool operator==(const BehavioralStrategy&, const BehavioralStrategy&) = default;
};

// Empty string when `plan` satisfies every realization-plan invariant,
// otherwise a description of the first violation.
std::string plan_violation(const SequenceForm& sf, const RealizationPlan& plan);
// Throws Error{kPlayerMismatch | kDimensionMismatch | kInvalidArgument}.
void require_valid_plan(const SequenceForm& sf, const RealizationPlan& plan);

BehavioralStrategy uniform_strategy(const SequenceForm& sf, Player player);

// sigma(I, a) = x[I.a] / x[parent(I)]; infosets whose parent sequence has zero
// realization get the uniform distribution.
BehavioralStrategy realization_to_behavioral(const SequenceForm& sf,
                                             const RealizationPlan& plan);

// x[s] = product of behavioral probabilities along s. Infosets missing from
// `b` are treated as uniform. Throws Error{kInvalidArgument} for unknown
// infosets or labels, negative probabilities, or distributions not summing
// to 1.
RealizationPlan behavioral_to_realization(const SequenceForm& sf,
                                          const BehavioralStrategy& b);

// x2ᵀ A2 x1: the expected payoff to player 2. Throws Error{kPlayerMismatch}
// when the plans are passed for the wrong players.
Rat expected_value(const SequenceForm& sf, const RealizationPlan& x1,
                   const RealizationPlan& x2);

}  // namespace opeq::seqform

#endif  // OPEQ_SEQFORM_STRATEGY_HPP_
