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

#include "opeq/lp/lexicographic.hpp"

#include "opeq/error.hpp"

namespace opeq::lp {

LinearProgram pin_stages(const LinearProgram& program, const LexObjective& objective,
                         std::span<const Rat> values) {
  if (values.size() > objective.stages.size()) {
    throw Error(Errc::kDimensionMismatch, "more pinned values than stages");
  }
  LinearProgram pinned = program;
  for (std::size_t k = 0; k < values.size(); ++k) {
    pinned.add_constraint(objective.stages[k], Relation::kEqual, values[k],
                          "stage" + std::to_string(k));
  }
  return pinned;
}

Solution solve_lex(const LinearProgram& program, const LexObjective& objective) {
  if (objective.stages.empty()) {
    throw Error(Errc::kInvalidArgument, "lexicographic objective needs a stage");
  }
  std::vector<Rat> values;
  Solution solution;
  for (std::size_t k = 0; k < objective.stages.size(); ++k) {
    LinearProgram stage = pin_stages(program, objective, values);
    stage.set_objective(objective.stages[k]);
    solution = solve_lp(stage);
    if (solution.status != Status::kOptimal) {
      if (k > 0 && solution.status == Status::kInfeasible) {
        throw Error(Errc::kInternal, "pinned lexicographic stage became infeasible");
      }
      return solution;
    }
    values.push_back(solution.objective_value);
  }
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (dot(objective.stages[k], solution.primal) != values[k]) {
      throw Error(Errc::kInternal,
                  "lexicographic stage " + std::to_string(k) + " degraded by a later stage");
    }
  }
  solution.stage_values = std::move(values);
  return solution;
}

}  // namespace opeq::lp
