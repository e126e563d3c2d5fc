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

#include "opeq/seqform/sequence_form.hpp"

#include <algorithm>

namespace opeq::seqform {

using efg::InfosetIndex;
using efg::kNone;
using efg::Node;
using efg::NodeIndex;
using efg::NodeKind;

SequenceForm to_sequence_form(efg::ValidatedGame game) {
  SequenceForm sf;
  sf.game_ = std::make_shared<const efg::ValidatedGame>(std::move(game));
  const efg::Game& g = sf.game_->game();
  const auto infoset_count = g.infosets().size();
  sf.first_child_.assign(infoset_count, kNone);
  sf.parent_seq_.assign(infoset_count, kNone);

  for (Player p : {Player::kOne, Player::kTwo}) {
    auto& pp = sf.by_player_[SequenceForm::index(p)];
    pp.seqs.push_back(Sequence{});
    const auto& order = sf.game_->infoset_order(p);
    for (InfosetIndex info : order) {
      const auto& parent = sf.game_->parent_move(info);
      const int parent_seq =
          parent ? sf.first_child_.at(parent->infoset) + parent->action : 0;
      sf.parent_seq_[info] = parent_seq;
      sf.first_child_[info] = static_cast<int>(pp.seqs.size());
      const int actions = static_cast<int>(g.infoset(info).action_labels.size());
      for (int a = 0; a < actions; ++a) {
        pp.seqs.push_back({info, a, parent_seq, pp.seqs[parent_seq].depth + 1});
      }
    }

    const int n = static_cast<int>(pp.seqs.size());
    pp.F = SparseMatrix(1 + static_cast<int>(order.size()), n);
    pp.F.add(0, 0, Rat(1));
    for (std::size_t row = 0; row < order.size(); ++row) {
      const InfosetIndex info = order[row];
      const int r = static_cast<int>(row) + 1;
      pp.F.add(r, sf.parent_seq_[info], Rat(1));
      const int actions = static_cast<int>(g.infoset(info).action_labels.size());
      for (int a = 0; a < actions; ++a) pp.F.add(r, sf.first_child_[info] + a, Rat(-1));
    }
    pp.f.assign(1 + order.size(), Rat());
    pp.f[0] = Rat(1);
    pp.node_seq.assign(g.nodes().size(), kNone);
  }

  sf.chance_reach_.assign(g.nodes().size(), Rat());
  sf.a2_ = SparseMatrix(sf.num_sequences(Player::kTwo), sf.num_sequences(Player::kOne));
  auto& s1 = sf.by_player_[0].node_seq;
  auto& s2 = sf.by_player_[1].node_seq;
  s1[g.root()] = 0;
  s2[g.root()] = 0;
  sf.chance_reach_[g.root()] = Rat(1);
  // Preorder guarantees parents are filled before children.
  for (NodeIndex i : sf.game_->preorder()) {
    const Node& n = g.node(i);
    switch (n.kind) {
      case NodeKind::kChance:
        for (const auto& o : n.outcomes) {
          s1[o.child] = s1[i];
          s2[o.child] = s2[i];
          sf.chance_reach_[o.child] = sf.chance_reach_[i] * o.probability;
        }
        break;
      case NodeKind::kDecision:
        for (std::size_t a = 0; a < n.actions.size(); ++a) {
          const NodeIndex c = n.actions[a].child;
          s1[c] = s1[i];
          s2[c] = s2[i];
          auto& own = n.player == Player::kOne ? s1 : s2;
          own[c] = sf.child_sequence(n.infoset, static_cast<int>(a));
          sf.chance_reach_[c] = sf.chance_reach_[i];
        }
        break;
      case NodeKind::kTerminal:
        sf.a2_.add(s2[i], s1[i], -(sf.chance_reach_[i] * n.payoff));
        break;
    }
  }
  return sf;
}

int SequenceForm::max_depth(Player p) const {
  int depth = 0;
  for (const Sequence& s : seqs(p)) depth = std::max(depth, s.depth);
  return depth;
}

std::string SequenceForm::sequence_name(Player p, int seq) const {
  const Sequence& s = seqs(p).at(seq);
  if (s.infoset == kNone) return "<empty>";
  const auto& info = game().infoset(s.infoset);
  return info.name + ":" + info.action_labels.at(s.action);
}

std::vector<std::string> SequenceForm::label_path(Player p, int seq) const {
  std::vector<std::string> labels;
  for (int s = seq; s > 0; s = seqs(p).at(s).parent) {
    const Sequence& q = seqs(p)[s];
    labels.push_back(game().infoset(q.infoset).action_labels.at(q.action));
  }
  std::reverse(labels.begin(), labels.end());
  return labels;
}

std::optional<int> SequenceForm::find_sequence(Player p, std::string_view infoset,
                                               std::string_view label) const {
  const auto info = game().find_infoset(infoset);
  if (!info || game().infoset(*info).player != p) return std::nullopt;
  const int a = game().infoset(*info).action_index(label);
  if (a == kNone) return std::nullopt;
  return child_sequence(*info, a);
}

}  // namespace opeq::seqform
