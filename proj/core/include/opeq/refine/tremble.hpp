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

#ifndef OPEQ_REFINE_TREMBLE_HPP_
#define OPEQ_REFINE_TREMBLE_HPP_

#include <vector>

#include "opeq/seqform/sequence_form.hpp"

namespace opeq::refine {

using efg::Player;
using seqform::SequenceForm;

// Strictly decreasing positive tremble magnitudes.
class TrembleSchedule {
 public:
  // Throws Error{kInvalidArgument} unless every value is positive and the
  // list is strictly decreasing.
  explicit TrembleSchedule(std::vector<Rat> eps_values);

  // 1/10, 1/100, ..., 1/10^8.
  static TrembleSchedule standard();

  const std::vector<Rat>& values() const { return eps_; }

 private:
  std::vector<Rat> eps_;
};

// Per-sequence lower bounds on a realization plan. Entry 0 (the empty
// sequence) is ignored: the empty sequence always has weight exactly 1.
struct LowerBoundVector {
  Player player = Player::kOne;
  std::vector<Rat> bound;
};

LowerBoundVector zero_bounds(const SequenceForm& sf, Player player);

// bound[s] = eps^depth(s), the realization of trembling with probability
// eps at every own decision along s.
LowerBoundVector tremble_bounds(const SequenceForm& sf, Player player, const Rat& eps);

}  // namespace opeq::refine

#endif  // OPEQ_REFINE_TREMBLE_HPP_
