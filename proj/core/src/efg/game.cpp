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

#include "opeq/efg/game.hpp"

#include <cctype>

#include "opeq/error.hpp"

namespace opeq::efg {

Player player_from_int(int p) {
  if (p == 1) return Player::kOne;
  if (p == 2) return Player::kTwo;
  throw Error(Errc::kInvalidArgument,
              "player must be 1 or 2, got " + std::to_string(p));
}

bool is_valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    const auto c = static_cast<unsigned char>(ch);
    if (!std::isalnum(c) && ch != '_' && ch != '.' && ch != '-') return false;
  }
  return true;
}

int InfoSet::action_index(std::string_view label) const {
  for (std::size_t i = 0; i < action_labels.size(); ++i) {
    if (action_labels[i] == label) return static_cast<int>(i);
  }
  return kNone;
}

std::optional<NodeIndex> Game::find_node(std::string_view id) const {
  const auto it = node_by_id_.find(std::string(id));
  if (it == node_by_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<InfosetIndex> Game::find_infoset(std::string_view name) const {
  const auto it = infoset_by_name_.find(std::string(name));
  if (it == infoset_by_name_.end()) return std::nullopt;
  return it->second;
}

GameBuilder& GameBuilder::chance(
    std::string id, std::vector<std::pair<Rat, std::string>> outcomes) {
  Record r{.id = std::move(id), .kind = NodeKind::kChance};
  r.outcomes = std::move(outcomes);
  records_.push_back(std::move(r));
  return *this;
}

GameBuilder& GameBuilder::decision(
    std::string id, Player player, std::string infoset,
    std::vector<std::pair<std::string, std::string>> actions) {
  Record r{.id = std::move(id), .kind = NodeKind::kDecision};
  r.player = player;
  r.infoset = std::move(infoset);
  r.actions = std::move(actions);
  records_.push_back(std::move(r));
  return *this;
}

GameBuilder& GameBuilder::terminal(std::string id, Rat payoff_p1) {
  Record r{.id = std::move(id), .kind = NodeKind::kTerminal};
  r.payoff = std::move(payoff_p1);
  records_.push_back(std::move(r));
  return *this;
}

GameBuilder& GameBuilder::root(std::string id) {
  root_ = std::move(id);
  return *this;
}

Game GameBuilder::build() const {
  Game g;
  auto malformed = [](const std::string& msg) {
    return Error(Errc::kMalformedGame, msg);
  };

  for (const Record& r : records_) {
    if (!is_valid_identifier(r.id)) throw malformed("invalid node id '" + r.id + "'");
    const auto index = static_cast<NodeIndex>(g.nodes_.size());
    if (!g.node_by_id_.emplace(r.id, index).second) {
      throw malformed("duplicate node id '" + r.id + "'");
    }
    Node n;
    n.id = r.id;
    n.kind = r.kind;
    g.nodes_.push_back(std::move(n));
  }

  auto resolve = [&](const std::string& parent, const std::string& child) {
    const auto it = g.node_by_id_.find(child);
    if (it == g.node_by_id_.end()) {
      throw malformed("node '" + parent + "' references unknown child '" + child + "'");
    }
    return it->second;
  };

  for (std::size_t i = 0; i < records_.size(); ++i) {
    const Record& r = records_[i];
    Node& n = g.nodes_[i];
    switch (r.kind) {
      case NodeKind::kChance:
        if (r.outcomes.empty()) throw malformed("chance node '" + r.id + "' has no outcomes");
        for (const auto& [p, child] : r.outcomes) {
          n.outcomes.push_back({p, resolve(r.id, child)});
        }
        break;
      case NodeKind::kDecision: {
        if (r.actions.empty()) throw malformed("decision node '" + r.id + "' has no actions");
        if (!is_valid_identifier(r.infoset)) {
          throw malformed("invalid infoset name '" + r.infoset + "'");
        }
        n.player = r.player;
        for (const auto& [label, child] : r.actions) {
          if (!is_valid_identifier(label)) {
            throw malformed("invalid action label '" + label + "'");
          }
          n.actions.push_back({label, resolve(r.id, child)});
        }
        auto [it, inserted] = g.infoset_by_name_.emplace(
            r.infoset, static_cast<InfosetIndex>(g.infosets_.size()));
        if (inserted) {
          InfoSet info{.name = r.infoset, .player = r.player};
          for (const auto& a : n.actions) info.action_labels.push_back(a.label);
          g.infosets_.push_back(std::move(info));
        }
        n.infoset = it->second;
        g.infosets_[it->second].members.push_back(static_cast<NodeIndex>(i));
        break;
      }
      case NodeKind::kTerminal:
        n.payoff = r.payoff;
        break;
    }
  }

  if (!root_) throw malformed("no root declared");
  const auto root = g.node_by_id_.find(*root_);
  if (root == g.node_by_id_.end()) throw malformed("unknown root '" + *root_ + "'");
  g.root_ = root->second;
  return g;
}

}  // namespace opeq::efg
