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

#ifndef OPEQ_SRC_REFINE_MAXIMIN_HPP_
#define OPEQ_SRC_REFINE_MAXIMIN_HPP_

#include <span>
#include <vector>

#include "opeq/lp/lexicographic.hpp"
#include "opeq/seqform/strategy.hpp"

namespace opeq::refine::detail {

using efg::Player;
using seqform::RealizationPlan;
using seqform::SequenceForm;

// max over the maximizer's plans of the dualized inner minimum:
//
//   max  (objective set by the caller)
//   s.t. F_minᵀ v + w c - A_mᵀ x <= 0     one row per minimizer sequence
//        F_m x = f_m,  x >= lower
//
// A_m holds payoffs to the maximizer, rows maximizer sequences. The duals of
// the first block are the minimizer's realization weights.
struct Maximin {
  lp::LinearProgram program{lp::Sense::kMaximize};
  Player maximizer = Player::kTwo;
  SparseMatrix payoff;
  std::vector<int> x;
  std::vector<int> v;
  int w = -1;  // only with an observation vector
  int num_response_rows = 0;
};

// Payoffs to `maximizer`, rows its sequences, columns the opponent's.
SparseMatrix payoff_for(const SequenceForm& sf, Player maximizer);

Maximin build_maximin(const SequenceForm& sf, Player maximizer,
                      std::span<const Rat> lower = {}, std::span<const Rat> c = {});

RealizationPlan maximizer_plan(const Maximin& m, const lp::Solution& sol);
// Duals of the response rows plus `shift` (empty for none).
RealizationPlan minimizer_plan(const Maximin& m, const lp::Solution& sol,
                               std::span<const Rat> shift = {});
std::vector<Rat> values_of(const lp::Solution& sol, std::span<const int> cols);

// True when every column in `cols` is constant over the feasible set of
// `pinned`.
bool face_is_point(const lp::LinearProgram& pinned, std::span<const int> cols);

struct CanonicalPoint {
  lp::Solution solution;  // primal holds the chosen point
  bool nonunique = false;
};

// Lexicographically smallest point of `cols` over the feasible set of
// `pinned`: minimize each column in order and fix it. `nonunique` records
// whether any column could move, i.e. whether the set has more than one
// point in those coordinates.
CanonicalPoint canonical_point(lp::LinearProgram pinned, std::span<const int> cols);

// Throws Error{kInfeasible} when no plan of `p` satisfies x >= lower.
void require_feasible_bounds(const SequenceForm& sf, Player p, std::span<const Rat> lower);

// max of objᵀx over the plans of `p`.
Rat max_over_plans(const SequenceForm& sf, Player p, std::span<const Rat> obj);

}  // namespace opeq::refine::detail

#endif  // OPEQ_SRC_REFINE_MAXIMIN_HPP_
