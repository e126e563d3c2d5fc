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

#include "opeq/efg/validate.hpp"

#include <set>
#include <string>
#include <utility>

#include "opeq/error.hpp"

namespace opeq::efg {
namespace {

std::vector<NodeIndex> children_of(const Node& n) {
  std::vector<NodeIndex> out;
  for (const auto& o : n.outcomes) out.push_back(o.child);
  for (const auto& a : n.actions) out.push_back(a.child);
  return out;
}

void check_tree(const Game& g, std::vector<NodeIndex>& parent,
                std::vector<NodeIndex>& preorder) {
  const auto count = static_cast<int>(g.nodes().size());
  parent.assign(count, kNone);
  for (NodeIndex i = 0; i < count; ++i) {
    for (NodeIndex c : children_of(g.node(i))) {
      if (parent[c] != kNone || c == i) {
        throw Error(Errc::kNotATree,
                    "node '" + g.node(c).id + "' has more than one parent");
      }
      parent[c] = i;
    }
  }
  if (parent[g.root()] != kNone) {
    throw Error(Errc::kNotATree, "root '" + g.node(g.root()).id + "' has a parent");
  }

  std::vector<bool> seen(count, false);
  std::vector<NodeIndex> stack{g.root()};
  while (!stack.empty()) {
    const NodeIndex n = stack.back();
    stack.pop_back();
    if (seen[n]) throw Error(Errc::kNotATree, "cycle through '" + g.node(n).id + "'");
    seen[n] = true;
    preorder.push_back(n);
    const auto kids = children_of(g.node(n));
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  for (NodeIndex i = 0; i < count; ++i) {
    if (!seen[i]) {
      throw Error(Errc::kNotATree,
                  "node '" + g.node(i).id + "' is unreachable from the root");
    }
  }
}

void check_chance(const Game& g) {
  for (const Node& n : g.nodes()) {
    if (n.kind != NodeKind::kChance) continue;
    Rat total;
    for (const auto& o : n.outcomes) {
      if (o.probability.sign() <= 0) {
        throw Error(Errc::kChanceSum, "chance node '" + n.id +
                                          "' has non-positive probability " +
                                          o.probability.str());
      }
      total += o.probability;
    }
    if (total != Rat(1)) {
      throw Error(Errc::kChanceSum,
                  "chance node '" + n.id + "' sums to " + total.str());
    }
  }
}

void check_infosets(const Game& g) {
  for (const Node& n : g.nodes()) {
    if (n.kind != NodeKind::kDecision) continue;
    const InfoSet& info = g.infoset(n.infoset);
    if (info.player != n.player) {
      throw Error(Errc::kInfosetPlayer, "node '" + n.id + "' in infoset '" +
                                            info.name + "' belongs to the other player");
    }
    bool same = n.actions.size() == info.action_labels.size();
    for (std::size_t a = 0; same && a < n.actions.size(); ++a) {
      same = n.actions[a].label == info.action_labels[a];
    }
    if (!same) {
      throw Error(Errc::kInfosetLabels, "node '" + n.id +
                                            "' does not match the actions of infoset '" +
                                            info.name + "'");
    }
    std::set<std::string> unique(info.action_labels.begin(), info.action_labels.end());
    if (unique.size() != info.action_labels.size()) {
      throw Error(Errc::kInfosetLabels,
                  "infoset '" + info.name + "' repeats an action label");
    }
  }
}

}  // namespace

ValidatedGame validate_game(Game game) {
  ValidatedGame vg;
  check_tree(game, vg.parent_, vg.preorder_);
  check_chance(game);
  check_infosets(game);

  // Perfect recall: every member of an infoset must carry the same history of
  // its owner's (infoset, action) moves.
  const auto infoset_count = game.infosets().size();
  std::vector<std::optional<std::vector<OwnMove>>> history_at(infoset_count);
  vg.parent_move_.assign(infoset_count, std::nullopt);

  struct Frame {
    NodeIndex node;
    std::array<std::vector<OwnMove>, 2> history;
  };
  std::vector<Frame> stack{{game.root(), {}}};
  while (!stack.empty()) {
    Frame frame = std::move(stack.back());
    stack.pop_back();
    const Node& n = game.node(frame.node);
    if (n.kind == NodeKind::kChance) {
      for (auto it = n.outcomes.rbegin(); it != n.outcomes.rend(); ++it) {
        stack.push_back({it->child, frame.history});
      }
    } else if (n.kind == NodeKind::kDecision) {
      const int who = player_number(n.player) - 1;
      auto& seen = history_at[n.infoset];
      if (!seen) {
        seen = frame.history[who];
        vg.order_[who].push_back(n.infoset);
        if (!seen->empty()) vg.parent_move_[n.infoset] = seen->back();
      } else if (*seen != frame.history[who]) {
        throw Error(Errc::kPerfectRecall,
                    "infoset '" + game.infoset(n.infoset).name +
                        "' merges nodes with different own histories");
      }
      for (int a = static_cast<int>(n.actions.size()) - 1; a >= 0; --a) {
        Frame child{n.actions[a].child, frame.history};
        child.history[who].push_back({n.infoset, a});
        stack.push_back(std::move(child));
      }
    }
  }

  vg.game_ = std::move(game);
  return vg;
}

}  // namespace opeq::efg
