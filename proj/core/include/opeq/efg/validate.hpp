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

#ifndef OPEQ_EFG_VALIDATE_HPP_
#define OPEQ_EFG_VALIDATE_HPP_

#include <array>
#include <optional>
#include <vector>

#include "opeq/efg/game.hpp"

namespace opeq::efg {

// A player's own (infoset, action) choice on a root path.
struct OwnMove {
  InfosetIndex infoset = kNone;
  int action = kNone;
  friend bool operator==(const OwnMove&, const OwnMove&) = default;
};

// A game that passed validate_game(). Immutable.
class ValidatedGame {
 public:
  const Game& game() const { return game_; }

  // Infosets of `p` in first-visit depth-first order from the root; every
  // infoset appears after the infoset of its parent move.
  const std::vector<InfosetIndex>& infoset_order(Player p) const {
    return order_[player_number(p) - 1];
  }

  // The player's last own move before reaching `infoset`; nullopt when the
  // infoset is reached without any earlier move of that player.
  const std::optional<OwnMove>& parent_move(InfosetIndex infoset) const {
    return parent_move_.at(infoset);
  }

  // Nodes in depth-first preorder (children visited in declaration order).
  const std::vector<NodeIndex>& preorder() const { return preorder_; }
  NodeIndex parent(NodeIndex n) const { return parent_.at(n); }

 private:
  friend ValidatedGame validate_game(Game game);

  Game game_;
  std::array<std::vector<InfosetIndex>, 2> order_;
  std::vector<std::optional<OwnMove>> parent_move_;
  std::vector<NodeIndex> preorder_;
  std::vector<NodeIndex> parent_;
};

// Checks tree shape (Errc::kNotATree), chance distributions (kChanceSum),
// infoset player and label consistency (kInfosetPlayer, kInfosetLabels) and
// perfect recall (kPerfectRecall).
ValidatedGame validate_game(Game game);

}  // namespace opeq::efg

#endif  // OPEQ_EFG_VALIDATE_HPP_
