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
#include "opeq/verify/best_response.hpp"

namespace opeq::refine {

namespace {

void check_observation(const SequenceForm& sf, const ObservationVector& c) {
  if (static_cast<int>(c.c.size()) != sf.num_sequences(c.player)) {
    throw Error(Errc::kDimensionMismatch,
                "observation vector has " + std::to_string(c.c.size()) + " entries, player " +
                    std::to_string(player_number(c.player)) + " has " +
                    std::to_string(sf.num_sequences(c.player)) + " sequences");
  }
  bool any = false;
  for (const auto& e : c.c) {
    if (!e.is_zero() && e != Rat(1)) {
      throw Error(Errc::kInvalidArgument, "observation entries must be 0 or 1");
    }
    any = any || !e.is_zero();
  }
  if (!any) throw Error(Errc::kInvalidArgument, "observation vector marks no sequence");
}

}  // namespace

ConceptResult solve_ope(const SequenceForm& sf, const ObservationVector& c) {
  check_observation(sf, c);
  const Player responder = opponent(c.player);
  auto m = detail::build_maximin(sf, responder, {}, c.c);
  lp::LexObjective obj{{{{m.v[0], Rat(1)}}, {{m.w, Rat(1)}}}};
  const auto lex = lp::solve_lex(m.program, obj);
  const auto canon =
      detail::canonical_point(lp::pin_stages(m.program, obj, lex.stage_values), m.x);
  const auto& sol = canon.solution;

  const auto nash = solve_nash(sf);
  ConceptResult r;
  r.concept_tag = Concept::kOpe;
  r.strategy = detail::maximizer_plan(m, sol);
  r.opponent_witness = responder == Player::kTwo
                           ? *nash.opponent_witness
                           : nash.strategy;
  r.game_value = responder == Player::kTwo ? -lex.stage_values[0] : lex.stage_values[0];
  r.v = detail::values_of(sol, m.v);
  r.w = sol.primal.at(m.w);
  r.nonunique = canon.nonunique;
  return r;
}

OpeEpsSolution solve_ope_at_eps(const SequenceForm& sf, const ObservationVector& c,
                                const Rat& eps) {
  check_observation(sf, c);
  if (eps.sign() <= 0) throw Error(Errc::kInvalidArgument, "eps must be positive");
  const Rat reach = detail::max_over_plans(sf, c.player, c.c);
  if (eps > reach) {
    throw Error(Errc::kInfeasible, "eps " + eps.str() + " exceeds the largest observable mass " +
                                       reach.str());
  }
  const Player responder = opponent(c.player);
  auto m = detail::build_maximin(sf, responder, {}, c.c);
  m.program.set_objective({{m.v[0], Rat(1)}, {m.w, eps}});
  const auto sol = lp::solve_lp(m.program);
  if (sol.status != lp::Status::kOptimal) {
    throw Error(Errc::kInternal, "OPE LP: " + std::string(lp::status_name(sol.status)));
  }

  // Any optimal primal pairs with any optimal dual, so the observed player's
  // plan comes from this solve and the responder's from the canonical point.
  auto pinned = m.program;
  pinned.add_constraint({{m.v[0], Rat(1)}, {m.w, eps}}, lp::Relation::kEqual, sol.objective_value);
  const auto canon = detail::canonical_point(std::move(pinned), m.x);

  OpeEpsSolution out;
  auto resp = detail::maximizer_plan(m, canon.solution);
  auto obs = detail::minimizer_plan(m, sol);
  seqform::require_valid_plan(sf, resp);
  seqform::require_valid_plan(sf, obs);
  if (dot(c.c, obs.x) < eps) throw Error(Errc::kInternal, "recovered plan violates cᵀx >= eps");
  // The responder may deviate freely in the perturbed game.
  const auto br = verify::best_response(sf, obs, responder);
  if (br.value != sol.objective_value ||
      seqform::expected_value(sf, responder == Player::kTwo ? obs : resp,
                              responder == Player::kTwo ? resp : obs) !=
          (responder == Player::kTwo ? sol.objective_value : -sol.objective_value)) {
    throw Error(Errc::kInternal, "responder has a profitable deviation at eps " + eps.str());
  }
  out.objective = sol.objective_value;
  out.v = detail::values_of(canon.solution, m.v);
  out.w = canon.solution.primal.at(m.w);
  if (responder == Player::kTwo) {
    out.x1 = std::move(obs);
    out.x2 = std::move(resp);
  } else {
    out.x1 = std::move(resp);
    out.x2 = std::move(obs);
  }
  return out;
}

}  // namespace opeq::refine
