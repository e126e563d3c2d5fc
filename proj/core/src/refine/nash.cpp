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

#include "maximin.hpp"
#include "opeq/error.hpp"
#include "opeq/refine/concepts.hpp"

namespace opeq::refine {

ConceptResult solve_nash(const SequenceForm& sf) {
  auto m = detail::build_maximin(sf, Player::kTwo);
  m.program.set_objective({{m.v[0], Rat(1)}});
  const auto sol = lp::solve_lp(m.program);
  if (sol.status != lp::Status::kOptimal) {
    throw Error(Errc::kInternal, "Nash LP: " + std::string(lp::status_name(sol.status)));
  }
  ConceptResult r;
  r.concept_tag = Concept::kNash;
  r.strategy = detail::maximizer_plan(m, sol);
  r.opponent_witness = detail::minimizer_plan(m, sol);
  r.game_value = -sol.objective_value;
  r.v = detail::values_of(sol, m.v);

  auto pinned = m.program;
  pinned.add_constraint({{m.v[0], Rat(1)}}, lp::Relation::kEqual, sol.objective_value);
  r.nonunique = !detail::face_is_point(pinned, m.x);
  return r;
}

}  // namespace opeq::refine
