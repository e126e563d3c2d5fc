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

#include "opeq/seqform/strategy.hpp"

#include "opeq/error.hpp"

namespace opeq::seqform {

const Rat& InfosetDistribution::prob(std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return probs.at(i);
  }
  throw Error(Errc::kInvalidArgument,
              "infoset '" + infoset + "' has no action '" + std::string(label) + "'");
}

const InfosetDistribution* BehavioralStrategy::find(std::string_view infoset) const {
  for (const auto& d : infosets) {
    if (d.infoset == infoset) return &d;
  }
  return nullptr;
}

const Rat& BehavioralStrategy::probability(std::string_view infoset,
                                           std::string_view label) const {
  const InfosetDistribution* d = find(infoset);
  if (d == nullptr) {
    throw Error(Errc::kInvalidArgument, "no infoset '" + std::string(infoset) + "'");
  }
  return d->prob(label);
}

std::string plan_violation(const SequenceForm& sf, const RealizationPlan& plan) {
  if (plan.x.size() != static_cast<std::size_t>(sf.num_sequences(plan.player))) {
    return "plan has " + std::to_string(plan.x.size()) + " entries, expected " +
           std::to_string(sf.num_sequences(plan.player));
  }
  for (std::size_t i = 0; i < plan.x.size(); ++i) {
    if (plan.x[i].sign() < 0) {
      return "negative weight on " + sf.sequence_name(plan.player, static_cast<int>(i));
    }
  }
  const auto lhs = sf.constraint_matrix(plan.player).multiply(plan.x);
  const auto& rhs = sf.constraint_rhs(plan.player);
  for (std::size_t r = 0; r < lhs.size(); ++r) {
    if (lhs[r] != rhs[r]) {
      return "flow constraint " + std::to_string(r) + " violated (" + lhs[r].str() +
             " != " + rhs[r].str() + ")";
    }
  }
  return {};
}

void require_valid_plan(const SequenceForm& sf, const RealizationPlan& plan) {
  if (plan.x.size() != static_cast<std::size_t>(sf.num_sequences(plan.player))) {
    throw Error(Errc::kDimensionMismatch, plan_violation(sf, plan));
  }
  if (auto why = plan_violation(sf, plan); !why.empty()) {
    throw Error(Errc::kInvalidArgument, "invalid realization plan for player " +
                                            std::to_string(player_number(plan.player)) +
                                            ": " + why);
  }
}

BehavioralStrategy uniform_strategy(const SequenceForm& sf, Player player) {
  BehavioralStrategy b{.player = player};
  for (efg::InfosetIndex info : sf.infosets(player)) {
    const auto& labels = sf.game().infoset(info).action_labels;
    const Rat share(1, static_cast<std::int64_t>(labels.size()));
    b.infosets.push_back({sf.game().infoset(info).name, labels,
                          std::vector<Rat>(labels.size(), share)});
  }
  return b;
}

BehavioralStrategy realization_to_behavioral(const SequenceForm& sf,
                                             const RealizationPlan& plan) {
  require_valid_plan(sf, plan);
  BehavioralStrategy b = uniform_strategy(sf, plan.player);
  const auto& order = sf.infosets(plan.player);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Rat& parent = plan.x[sf.parent_sequence(order[k])];
    if (parent.is_zero()) continue;
    auto& dist = b.infosets[k];
    for (std::size_t a = 0; a < dist.probs.size(); ++a) {
      dist.probs[a] = plan.x[sf.child_sequence(order[k], static_cast<int>(a))] / parent;
    }
  }
  return b;
}

RealizationPlan behavioral_to_realization(const SequenceForm& sf,
                                          const BehavioralStrategy& b) {
  const efg::Game& g = sf.game();
  std::vector<const InfosetDistribution*> chosen(g.infosets().size(), nullptr);
  for (const auto& d : b.infosets) {
    const auto info = g.find_infoset(d.infoset);
    if (!info || g.infoset(*info).player != b.player) {
      throw Error(Errc::kInvalidArgument, "player " +
                                              std::to_string(player_number(b.player)) +
                                              " has no infoset '" + d.infoset + "'");
    }
    if (d.labels != g.infoset(*info).action_labels || d.probs.size() != d.labels.size()) {
      throw Error(Errc::kInvalidArgument,
                  "labels of infoset '" + d.infoset + "' do not match the game");
    }
    Rat total;
    for (const Rat& p : d.probs) {
      if (p.sign() < 0) {
        throw Error(Errc::kInvalidArgument, "negative probability at '" + d.infoset + "'");
      }
      total += p;
    }
    if (total != Rat(1)) {
      throw Error(Errc::kInvalidArgument,
                  "distribution at '" + d.infoset + "' sums to " + total.str());
    }
    chosen[*info] = &d;
  }

  RealizationPlan plan{.player = b.player};
  plan.x.assign(sf.num_sequences(b.player), Rat());
  plan.x[0] = Rat(1);
  // Parent sequences always precede their children in infoset order.
  for (efg::InfosetIndex info : sf.infosets(b.player)) {
    const Rat& parent = plan.x[sf.parent_sequence(info)];
    const int actions = static_cast<int>(g.infoset(info).action_labels.size());
    for (int a = 0; a < actions; ++a) {
      const Rat p = chosen[info] ? chosen[info]->probs[a] : Rat(1, actions);
      plan.x[sf.child_sequence(info, a)] = parent * p;
    }
  }
  return plan;
}

Rat expected_value(const SequenceForm& sf, const RealizationPlan& x1,
                   const RealizationPlan& x2) {
  if (x1.player != Player::kOne || x2.player != Player::kTwo) {
    throw Error(Errc::kPlayerMismatch, "expected_value takes (player-1 plan, player-2 plan)");
  }
  const auto a2x1 = sf.payoff_matrix().multiply(x1.x);
  return dot(x2.x, a2x1);
}

}  // namespace opeq::seqform
