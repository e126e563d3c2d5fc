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

#include "opeq/refine/observation.hpp"

#include "opeq/error.hpp"

namespace opeq::refine {

ObservationVector build_observation_vector(const SequenceForm& sf, Player observed_player,
                                           std::span<const std::string> observed_actions) {
  if (observed_actions.empty()) {
    throw Error(Errc::kInvalidArgument, "observation needs at least one action");
  }
  ObservationVector obs{.player = observed_player};
  const int count = sf.num_sequences(observed_player);
  obs.c.assign(count, Rat());
  bool any = false;
  const auto depth = static_cast<int>(observed_actions.size());
  for (int s = 1; s < count; ++s) {
    if (sf.sequences(observed_player)[s].depth != depth) continue;
    const auto path = sf.label_path(observed_player, s);
    if (std::equal(path.begin(), path.end(), observed_actions.begin())) {
      obs.c[s] = Rat(1);
      any = true;
    }
  }
  if (!any) {
    std::string joined;
    for (const auto& a : observed_actions) joined += (joined.empty() ? "" : ",") + a;
    throw Error(Errc::kInvalidArgument,
                "no sequence of player " + std::to_string(player_number(observed_player)) +
                    " produces the actions [" + joined + "]");
  }
  return obs;
}

}  // namespace opeq::refine
