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

#ifndef OPEQ_REFINE_OBSERVATION_HPP_
#define OPEQ_REFINE_OBSERVATION_HPP_

#include <span>
#include <string>
#include <vector>

#include "opeq/seqform/sequence_form.hpp"

namespace opeq::refine {

using efg::Player;
using seqform::SequenceForm;

// 0/1 weights over the observed player's sequences marking the sequences
// that produce the observed public actions.
struct ObservationVector {
  Player player = Player::kOne;
  std::vector<Rat> c;
};

// Marks every sequence of `observed_player` whose own action labels from the
// root are exactly `observed_actions` (one per private-information branch
// that can produce the observation). Throws Error{kInvalidArgument} for an
// empty list or when no sequence matches.
ObservationVector build_observation_vector(const SequenceForm& sf, Player observed_player,
                                           std::span<const std::string> observed_actions);

}  // namespace opeq::refine

#endif  // OPEQ_REFINE_OBSERVATION_HPP_
