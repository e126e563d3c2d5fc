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

#ifndef OPEQ_SEQFORM_SEQUENCE_FORM_HPP_
#define OPEQ_SEQFORM_SEQUENCE_FORM_HPP_

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opeq/efg/validate.hpp"
#include "opeq/numeric/sparse.hpp"

namespace opeq::seqform {

using efg::Player;

// A player's sequence: the last own (infoset, action) and the sequence it
// extends. Index 0 is always the empty sequence (infoset == efg::kNone).
struct Sequence {
  efg::InfosetIndex infoset = efg::kNone;
  int action = efg::kNone;
  int parent = efg::kNone;
  int depth = 0;  // number of own actions
};

// Sequence-form view of a validated game.
//
// Per player i: F_i has one row for the empty sequence (x[0] = 1) and one row
// per infoset I, reading x[parent(I)] - sum_a x[I.a] = 0; f_i = (1, 0, ..., 0).
// The payoff matrix A2 has rows indexed by player-2 sequences, columns by
// player-1 sequences, and holds chance-weighted payoffs to player 2. Pairs
// that reach no terminal together have no entry.
//
// Sequences are numbered infoset by infoset in the depth-first infoset order
// of the validated game, actions in declaration order.
class SequenceForm {
 public:
  const efg::ValidatedGame& validated() const { return *game_; }
  const efg::Game& game() const { return game_->game(); }

  int num_sequences(Player p) const { return static_cast<int>(seqs(p).size()); }
  const std::vector<Sequence>& sequences(Player p) const { return seqs(p); }

  // Infosets of `p`; infoset k of this list owns row k + 1 of F_p.
  const std::vector<efg::InfosetIndex>& infosets(Player p) const {
    return game_->infoset_order(p);
  }
  int child_sequence(efg::InfosetIndex infoset, int action) const {
    return first_child_.at(infoset) + action;
  }
  int parent_sequence(efg::InfosetIndex infoset) const {
    return parent_seq_.at(infoset);
  }

  const SparseMatrix& constraint_matrix(Player p) const { return by_player_[index(p)].F; }
  const std::vector<Rat>& constraint_rhs(Player p) const { return by_player_[index(p)].f; }
  const SparseMatrix& payoff_matrix() const { return a2_; }

  // Sequence of `p` in effect at `node` (before the node's own action).
  int node_sequence(Player p, efg::NodeIndex node) const {
    return by_player_[index(p)].node_seq.at(node);
  }
  const Rat& chance_reach(efg::NodeIndex node) const { return chance_reach_.at(node); }

  int max_depth(Player p) const;

  // "<infoset>:<label>" for non-empty sequences, "<empty>" otherwise.
  std::string sequence_name(Player p, int seq) const;
  // Action labels from the root down to `seq`.
  std::vector<std::string> label_path(Player p, int seq) const;
  std::optional<int> find_sequence(Player p, std::string_view infoset,
                                   std::string_view label) const;

 private:
  friend SequenceForm to_sequence_form(efg::ValidatedGame game);

  struct PerPlayer {
    std::vector<Sequence> seqs;
    SparseMatrix F;
    std::vector<Rat> f;
    std::vector<int> node_seq;
  };

  static int index(Player p) { return efg::player_number(p) - 1; }
  const std::vector<Sequence>& seqs(Player p) const { return by_player_[index(p)].seqs; }

  std::shared_ptr<const efg::ValidatedGame> game_;
  std::array<PerPlayer, 2> by_player_;
  std::vector<int> first_child_;
  std::vector<int> parent_seq_;
  std::vector<Rat> chance_reach_;
  SparseMatrix a2_;
};

SequenceForm to_sequence_form(efg::ValidatedGame game);

}  // namespace opeq::seqform

#endif  // OPEQ_SEQFORM_SEQUENCE_FORM_HPP_
