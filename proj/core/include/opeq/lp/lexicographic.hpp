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

#ifndef OPEQ_LP_LEXICOGRAPHIC_HPP_
#define OPEQ_LP_LEXICOGRAPHIC_HPP_

#include <span>
#include <vector>

#include "opeq/lp/linear_program.hpp"

namespace opeq::lp {

// Objectives c_0, c_1, ..., c_k read as the coefficients of ε^0, ε^1, ...,
// ε^k in a perturbed objective c_0 + ε c_1 + ... + ε^k c_k.
struct LexObjective {
  std::vector<SparseVector> stages;
};

// Optimizes the stages in order (in the program's sense), pinning each
// stage's optimum as an equality before moving to the next. Because the
// feasible region does not depend on ε, the result is an exact limit point of
// the optimal solutions of the perturbed objective as ε -> 0+.
//
// The returned duals belong to the final augmented program: the original
// constraints followed by one pin per earlier stage. `stage_values` holds the
// optimum of every stage; `objective_value` is the last stage's.
Solution solve_lex(const LinearProgram& program, const LexObjective& objective);

// `program` with `c_k x = values[k]` appended for every k < values.size().
LinearProgram pin_stages(const LinearProgram& program, const LexObjective& objective,
                         std::span<const Rat> values);

}  // namespace opeq::lp

#endif  // OPEQ_LP_LEXICOGRAPHIC_HPP_
