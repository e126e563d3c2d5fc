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

#ifndef OPEQ_REFINE_CONCEPTS_HPP_
#define OPEQ_REFINE_CONCEPTS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opeq/refine/observation.hpp"
#include "opeq/refine/tremble.hpp"
#include "opeq/seqform/strategy.hpp"

namespace opeq::refine {

using seqform::RealizationPlan;

enum class Concept { kNash, kOpe, kOsqpe, kEfthpe, kPerturbed };

std::string_view concept_name(Concept c);
// Accepts the names produced by concept_name. Throws Error{kInvalidArgument}.
Concept parse_concept(std::string_view name);

// One schedule step of a perturbed-game solve.
struct TraceEntry {
  Rat eps;
  Rat game_value;  // to player 1, in the perturbed game
  RealizationPlan x1;
  RealizationPlan x2;
};

struct ConceptResult {
  Concept concept_tag = Concept::kNash;
  RealizationPlan strategy;                        // the solved-for player
  std::optional<RealizationPlan> opponent_witness;  // a Nash strategy of the other player
  Rat game_value;                                   // to player 1
  std::vector<Rat> v;                               // one per opponent constraint row
  Rat w;                                            // tremble multiplier; 0 unless OPE
  std::vector<TraceEntry> trace;
  // The optimal face of the final stage contains more than one strategy.
  bool nonunique = false;
  std::optional<Rat> converged_at;  // schedule solves only
};

// Sequence-form maximin LP for player 2; x1 is read off the duals.
ConceptResult solve_nash(const SequenceForm& sf);

// Lexicographic limit of the observation-perturbed LP: first the game value,
// then the largest tremble multiplier w. The strategy belongs to the
// opponent of c.player and is the lexicographically smallest plan on the
// final optimal face.
ConceptResult solve_ope(const SequenceForm& sf, const ObservationVector& c);

struct OpeEpsSolution {
  RealizationPlan x1;
  RealizationPlan x2;
  Rat objective;  // v[0] + eps * w, payoff to the responder
  std::vector<Rat> v;
  Rat w;
};

// The same LP at a fixed eps > 0. The responder's plan is chosen on the
// optimal face as in solve_ope; the observed player's plan is the dual of
// the per-sequence rows and satisfies cᵀx >= eps. Throws
// Error{kInvalidArgument} for eps <= 0 and Error{kInfeasible} when eps
// exceeds the largest achievable cᵀx.
OpeEpsSolution solve_ope_at_eps(const SequenceForm& sf, const ObservationVector& c,
                                const Rat& eps);

// Lexicographic limit with the human's sequences bounded by eps^|σ|. The
// strategy belongs to `machine` and is the lexicographically smallest plan on
// the final optimal face. `max_depth` must cover the human's deepest sequence.
ConceptResult solve_osqpe(const SequenceForm& sf, Player machine, int max_depth);

struct PerturbedSolution {
  RealizationPlan x1;
  RealizationPlan x2;
  Rat value;  // to player 1
};

// Exact equilibrium of the game where each player's plan is bounded below.
// Throws Error{kInfeasible} when a bound vector admits no plan.
PerturbedSolution solve_perturbed(const SequenceForm& sf, const LowerBoundVector& l1,
                                  const LowerBoundVector& l2);

// Perturbed solves along the schedule with eps^|σ| bounds for both players,
// stopping once player 2's plan stabilizes or its polynomial extrapolation
// to eps = 0 repeats. The limit must certify as Nash against a solve_nash
// witness. Throws Error{kNoStabilization} with the trace otherwise.
ConceptResult efthpe_limit(const SequenceForm& sf, const TrembleSchedule& schedule);

std::string format_trace(const SequenceForm& sf, const std::vector<TraceEntry>& trace);

}  // namespace opeq::refine

#endif  // OPEQ_REFINE_CONCEPTS_HPP_
