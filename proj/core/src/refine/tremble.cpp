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

#include "opeq/refine/tremble.hpp"

#include "opeq/error.hpp"

namespace opeq::refine {

TrembleSchedule::TrembleSchedule(std::vector<Rat> eps_values) : eps_(std::move(eps_values)) {
  for (std::size_t i = 0; i < eps_.size(); ++i) {
    if (eps_[i].sign() <= 0) {
      throw Error(Errc::kInvalidArgument, "tremble magnitude " + eps_[i].str() + " is not positive");
    }
    if (i > 0 && !(eps_[i] < eps_[i - 1])) {
      throw Error(Errc::kInvalidArgument, "tremble schedule must be strictly decreasing");
    }
  }
}

TrembleSchedule TrembleSchedule::standard() {
  std::vector<Rat> eps;
  Rat e(1);
  for (int k = 1; k <= 8; ++k) {
    e /= Rat(10);
    eps.push_back(e);
  }
  return TrembleSchedule(std::move(eps));
}

LowerBoundVector zero_bounds(const SequenceForm& sf, Player player) {
  return {player, std::vector<Rat>(sf.num_sequences(player))};
}

LowerBoundVector tremble_bounds(const SequenceForm& sf, Player player, const Rat& eps) {
  if (eps.sign() < 0) throw Error(Errc::kInvalidArgument, "negative tremble magnitude");
  LowerBoundVector l{.player = player};
  for (const auto& s : sf.sequences(player)) {
    l.bound.push_back(pow(eps, static_cast<unsigned>(s.depth)));
  }
  return l;
}

}  // namespace opeq::refine
