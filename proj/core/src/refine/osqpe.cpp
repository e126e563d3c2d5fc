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

#include <map>

#include "maximin.hpp"
#include "opeq/error.hpp"
#include "opeq/refine/concepts.hpp"

namespace opeq::refine {

ConceptResult solve_osqpe(const SequenceForm& sf, Player machine, int max_depth) {
  const Player human = opponent(machine);
  if (max_depth < 1) throw Error(Errc::kInvalidArgument, "max_depth must be positive");
  if (max_depth < sf.max_depth(human)) {
    throw Error(Errc::kDimensionMismatch,
                "max_depth " + std::to_string(max_depth) + " is below the human's deepest sequence (" +
                    std::to_string(sf.max_depth(human)) + ")");
  }
  auto m = detail::build_maximin(sf, machine);

  // Coefficient of eps^d: sum over human sequences of length d of
  // (A_m[:,σ]ᵀ x - F_h[:,σ]ᵀ v).
  lp::LexObjective obj;
  obj.stages.assign(max_depth + 1, {});
  obj.stages[0].emplace_back(m.v[0], Rat(1));
  std::vector<std::map<int, Rat>> acc(max_depth + 1);
  const auto& seqs = sf.sequences(human);
  for (const auto& [rc, value] : m.payoff.entries()) {
    const int d = seqs[rc.second].depth;
    if (d >= 1) acc[d][m.x[rc.first]] += value;
  }
  for (const auto& [rc, value] : sf.constraint_matrix(human).entries()) {
    const int d = seqs[rc.second].depth;
    if (d >= 1) acc[d][m.v[rc.first]] -= value;
  }
  for (int d = 1; d <= max_depth; ++d) {
    for (const auto& [col, value] : acc[d]) {
      if (!value.is_zero()) obj.stages[d].emplace_back(col, value);
    }
  }
  const auto lex = lp::solve_lex(m.program, obj);
  const auto canon =
      detail::canonical_point(lp::pin_stages(m.program, obj, lex.stage_values), m.x);
  const auto& sol = canon.solution;

  const auto nash = solve_nash(sf);
  ConceptResult r;
  r.concept_tag = Concept::kOsqpe;
  r.strategy = detail::maximizer_plan(m, sol);
  r.opponent_witness = machine == Player::kTwo ? *nash.opponent_witness : nash.strategy;
  r.game_value = machine == Player::kTwo ? -lex.stage_values[0] : lex.stage_values[0];
  r.v = detail::values_of(sol, m.v);
  r.nonunique = canon.nonunique;
  return r;
}

}  // namespace opeq::refine
