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

#include <algorithm>

#include "maximin.hpp"
#include "opeq/error.hpp"
#include "opeq/refine/concepts.hpp"
#include "opeq/verify/best_response.hpp"

namespace opeq::refine {

namespace {

std::vector<bool> support(const RealizationPlan& plan) {
  std::vector<bool> s;
  for (const auto& x : plan.x) s.push_back(x.sign() > 0);
  return s;
}

// Value at eps = 0 of the interpolating polynomial through the points.
std::vector<Rat> extrapolate_to_zero(std::span<const TraceEntry> pts) {
  std::vector<Rat> out(pts.front().x2.x.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Rat weight(1);
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j != i) weight *= -pts[j].eps / (pts[i].eps - pts[j].eps);
    }
    for (std::size_t s = 0; s < out.size(); ++s) out[s] += weight * pts[i].x2.x[s];
  }
  return out;
}

}  // namespace

PerturbedSolution solve_perturbed(const SequenceForm& sf, const LowerBoundVector& l1,
                                  const LowerBoundVector& l2) {
  if (l1.player != Player::kOne || l2.player != Player::kTwo) {
    throw Error(Errc::kPlayerMismatch, "bound vectors must be for players 1 and 2, in order");
  }
  detail::require_feasible_bounds(sf, Player::kOne, l1.bound);
  detail::require_feasible_bounds(sf, Player::kTwo, l2.bound);

  std::vector<Rat> shift = l1.bound;
  shift[0] = Rat(0);
  auto m = detail::build_maximin(sf, Player::kTwo, l2.bound);
  const auto a_shift = m.payoff.multiply(shift);
  const auto f_shift = sf.constraint_matrix(Player::kOne).multiply(shift);
  const auto& f1 = sf.constraint_rhs(Player::kOne);
  SparseVector obj;
  for (std::size_t r = 0; r < a_shift.size(); ++r) {
    if (!a_shift[r].is_zero()) obj.emplace_back(m.x[r], a_shift[r]);
  }
  for (std::size_t k = 0; k < f_shift.size(); ++k) {
    const Rat coef = f1[k] - f_shift[k];
    if (!coef.is_zero()) obj.emplace_back(m.v[k], coef);
  }
  m.program.set_objective(std::move(obj));
  const auto sol = lp::solve_lp(m.program);
  if (sol.status != lp::Status::kOptimal) {
    throw Error(Errc::kInternal, "perturbed LP: " + std::string(lp::status_name(sol.status)));
  }
  PerturbedSolution out{detail::minimizer_plan(m, sol, shift), detail::maximizer_plan(m, sol),
                        -sol.objective_value};
  seqform::require_valid_plan(sf, out.x1);
  seqform::require_valid_plan(sf, out.x2);
  return out;
}

ConceptResult efthpe_limit(const SequenceForm& sf, const TrembleSchedule& schedule) {
  const auto& eps = schedule.values();
  if (eps.size() < 2) {
    throw Error(Errc::kInvalidArgument, "schedule needs at least two values to confirm a limit");
  }
  const auto nash = solve_nash(sf);
  const auto& witness = *nash.opponent_witness;
  // With a fixed optimal basis x2 is a polynomial in eps of this degree.
  const std::size_t degree = std::max(1, sf.max_depth(Player::kTwo));

  ConceptResult r;
  r.concept_tag = Concept::kEfthpe;
  for (std::size_t k = 0; k < eps.size(); ++k) {
    const auto p = solve_perturbed(sf, tremble_bounds(sf, Player::kOne, eps[k]),
                                   tremble_bounds(sf, Player::kTwo, eps[k]));
    r.trace.push_back({eps[k], p.value, p.x1, p.x2});

    std::optional<RealizationPlan> candidate;
    if (k >= 1 && r.trace[k].x2 == r.trace[k - 1].x2) {
      candidate = r.trace[k].x2;
    } else if (k >= degree + 1) {
      std::span<const TraceEntry> window(r.trace.data() + (k - degree - 1), degree + 2);
      const auto supp = support(window.front().x2);
      const bool same = std::all_of(window.begin(), window.end(),
                                    [&](const TraceEntry& t) { return support(t.x2) == supp; });
      if (same) {
        auto e1 = extrapolate_to_zero(window.first(degree + 1));
        auto e2 = extrapolate_to_zero(window.last(degree + 1));
        if (e1 == e2) candidate = RealizationPlan{Player::kTwo, std::move(e2)};
      }
    }
    if (!candidate || !seqform::plan_violation(sf, *candidate).empty()) continue;
    if (!verify::certify_nash(sf, witness, *candidate).gap.is_zero()) continue;

    r.strategy = std::move(*candidate);
    r.opponent_witness = witness;
    r.game_value = nash.game_value;
    r.converged_at = eps[k];
    return r;
  }
  throw Error(Errc::kNoStabilization,
              "no certified limit within the schedule; trace:\n" + format_trace(sf, r.trace));
}

}  // namespace opeq::refine
