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

#ifndef OPEQ_EFG_GAME_HPP_
#define OPEQ_EFG_GAME_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "opeq/numeric/rational.hpp"

namespace opeq::efg {

enum class Player : int { kOne = 1, kTwo = 2 };

inline int player_number(Player p) { return static_cast<int>(p); }
inline Player opponent(Player p) {
  return p == Player::kOne ? Player::kTwo : Player::kOne;
}
// Throws Error{kInvalidArgument} for anything but 1 or 2.
Player player_from_int(int p);

using NodeIndex = int;
using InfosetIndex = int;
inline constexpr int kNone = -1;

enum class NodeKind { kChance, kDecision, kTerminal };

struct ChanceOutcome {
  Rat probability;
  NodeIndex child = kNone;
};

struct Action {
  std::string label;
  NodeIndex child = kNone;
};

struct Node {
  std::string id;
  NodeKind kind = NodeKind::kTerminal;
  std::vector<ChanceOutcome> outcomes;  // chance nodes
  Player player = Player::kOne;         // decision nodes
  InfosetIndex infoset = kNone;         // decision nodes
  std::vector<Action> actions;          // decision nodes
  Rat payoff;                           // terminal nodes, to player 1
};

// The action labels come from the first member node added; mismatching
// members are kept so validation can report them.
struct InfoSet {
  std::string name;
  Player player = Player::kOne;
  std::vector<std::string> action_labels;
  std::vector<NodeIndex> members;

  int action_index(std::string_view label) const;  // kNone when absent
};

// Two-player zero-sum extensive-form game. Only player 1's payoff is stored.
// Built through GameBuilder; structural checks live in validate_game().
class Game {
 public:
  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(NodeIndex i) const { return nodes_.at(i); }
  NodeIndex root() const { return root_; }
  const std::vector<InfoSet>& infosets() const { return infosets_; }
  const InfoSet& infoset(InfosetIndex i) const { return infosets_.at(i); }

  std::optional<NodeIndex> find_node(std::string_view id) const;
  std::optional<InfosetIndex> find_infoset(std::string_view name) const;

 private:
  friend class GameBuilder;

  std::vector<Node> nodes_;
  NodeIndex root_ = kNone;
  std::vector<InfoSet> infosets_;
  std::unordered_map<std::string, NodeIndex> node_by_id_;
  std::unordered_map<std::string, InfosetIndex> infoset_by_name_;
};

// Collects node records with string ids; children may be referenced before
// they are declared. build() resolves ids.
//
// Ids, infoset names and action labels must match [A-Za-z0-9_.-]+ so every
// game can round-trip through the text format.
class GameBuilder {
 public:
  GameBuilder& chance(std::string id,
                      std::vector<std::pair<Rat, std::string>> outcomes);
  GameBuilder& decision(std::string id, Player player, std::string infoset,
                        std::vector<std::pair<std::string, std::string>> actions);
  GameBuilder& terminal(std::string id, Rat payoff_p1);
  GameBuilder& root(std::string id);

  // Throws Error{kMalformedGame} on duplicate or unknown ids, a missing root,
  // empty chance/decision nodes, or invalid identifiers.
  Game build() const;

 private:
  struct Record {
    std::string id;
    NodeKind kind;
    std::vector<std::pair<Rat, std::string>> outcomes;
    Player player = Player::kOne;
    std::string infoset;
    std::vector<std::pair<std::string, std::string>> actions;
    Rat payoff;
  };

  std::vector<Record> records_;
  std::optional<std::string> root_;
};

bool is_valid_identifier(std::string_view s);

}  // namespace opeq::efg

#endif  // OPEQ_EFG_GAME_HPP_
