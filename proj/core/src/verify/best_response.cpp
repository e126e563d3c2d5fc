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

#include "opeq/verify/best_response.hpp"

#include "opeq/error.hpp"

namespace opeq::verify {

using efg::InfosetIndex;
using efg::NodeKind;

BestResponse best_response(const SequenceForm& sf, const RealizationPlan& opponent,
                           Player responder) {
  if (opponent.player != efg::opponent(responder)) {
    throw Error(Errc::kPlayerMismatch, "best response needs the other player's plan");
  }
  seqform::require_valid_plan(sf, opponent);
  const efg::Game& g = sf.game();
  const int count = sf.num_sequences(responder);

  // Payoff collected directly at each responder sequence.
  std::vector<Rat> leaf_sum(count);
  for (efg::NodeIndex i = 0; i < static_cast<efg::NodeIndex>(g.nodes().size()); ++i) {
    const efg::Node& n = g.node(i);
    if (n.kind != NodeKind::kTerminal) continue;
    const Rat& reach = opponent.x[sf.node_sequence(opponent.player, i)];
    if (reach.is_zero()) continue;
    const Rat payoff = responder == Player::kOne ? n.payoff : -n.payoff;
    leaf_sum[sf.node_sequence(responder, i)] += sf.chance_reach(i) * reach * payoff;
  }

  const auto& order = sf.infosets(responder);
  std::vector<std::vector<InfosetIndex>> below(count);
  for (InfosetIndex info : order) below[sf.parent_sequence(info)].push_back(info);

  std::vector<Rat> seq_value(count);
  std::vector<Rat> info_value(g.infosets().size());
  std::vector<int> choice(g.infosets().size(), 0);
  auto value_of = [&](int seq) {
    Rat v = leaf_sum[seq];
    for (InfosetIndex child : below[seq]) v += info_value[child];
    return v;
  };
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int actions = static_cast<int>(g.infoset(*it).action_labels.size());
    for (int a = 0; a < actions; ++a) {
      Rat v = value_of(sf.child_sequence(*it, a));
      if (a == 0 || v > info_value[*it]) {
        info_value[*it] = std::move(v);
        choice[*it] = a;
      }
    }
  }

  BestResponse br;
  br.value = value_of(0);
  br.plan.player = responder;
  br.plan.x.assign(count, Rat());
  br.plan.x[0] = Rat(1);
  for (InfosetIndex info : order) {
    br.plan.x[sf.child_sequence(info, choice[info])] = br.plan.x[sf.parent_sequence(info)];
  }
  return br;
}

Rat tree_value(const SequenceForm& sf, const RealizationPlan& x1, const RealizationPlan& x2) {
  if (x1.player != Player::kOne || x2.player != Player::kTwo) {
    throw Error(Errc::kPlayerMismatch, "tree_value takes (player-1 plan, player-2 plan)");
  }
  seqform::require_valid_plan(sf, x1);
  seqform::require_valid_plan(sf, x2);
  const efg::Game& g = sf.game();
  Rat total;
  for (efg::NodeIndex i = 0; i < static_cast<efg::NodeIndex>(g.nodes().size()); ++i) {
    const efg::Node& n = g.node(i);
    if (n.kind != NodeKind::kTerminal || n.payoff.is_zero()) continue;
    const Rat& r1 = x1.x[sf.node_sequence(Player::kOne, i)];
    const Rat& r2 = x2.x[sf.node_sequence(Player::kTwo, i)];
    if (r1.is_zero() || r2.is_zero()) continue;
    total += sf.chance_reach(i) * r1 * r2 * n.payoff;
  }
  return total;
}

ExploitabilityReport certify_nash(const SequenceForm& sf, const RealizationPlan& x1,
                                  const RealizationPlan& x2) {
  ExploitabilityReport report;
  report.value_1 = tree_value(sf, x1, x2);
  report.br_value_1 = best_response(sf, x2, Player::kOne).value;
  report.br_value_2 = best_response(sf, x1, Player::kTwo).value;
  report.gap = (report.br_value_1 - report.value_1) + (report.br_value_2 + report.value_1);
  return report;
}

}  // namespace opeq::verify
