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

#ifndef OPEQ_LP_LINEAR_PROGRAM_HPP_
#define OPEQ_LP_LINEAR_PROGRAM_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "opeq/numeric/sparse.hpp"

namespace opeq::lp {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };
enum class Sense { kMaximize, kMinimize };

struct Variable {
  std::string name;
  std::optional<Rat> lower;  // nullopt: free
};

struct Constraint {
  SparseVector row;
  Relation relation = Relation::kLessEqual;
  Rat rhs;
  std::string name;
};

// A linear program over named variables with a lower bound or none.
// Constraint and objective coefficients are sparse over variable indices.
class LinearProgram {
 public:
  explicit LinearProgram(Sense sense = Sense::kMaximize) : sense_(sense) {}

  int add_variable(std::string name, std::optional<Rat> lower = Rat(0));
  int add_free_variable(std::string name) { return add_variable(std::move(name), std::nullopt); }

  // Throws Error{kDimensionMismatch} if a column index is not a variable.
  int add_constraint(SparseVector row, Relation relation, Rat rhs, std::string name = {});
  void set_objective(SparseVector objective);
  void set_sense(Sense sense) { sense_ = sense; }

  Sense sense() const { return sense_; }
  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const SparseVector& objective() const { return objective_; }
  int num_variables() const { return static_cast<int>(variables_.size()); }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }

 private:
  void check_columns(const SparseVector& row) const;

  Sense sense_;
  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
  SparseVector objective_;
};

enum class Status { kOptimal, kInfeasible, kUnbounded };
std::string_view status_name(Status status);

// `dual[i]` is the rate of change of the optimal value with respect to the
// right-hand side of constraint i: nonnegative on <= rows of a maximization,
// nonpositive on >= rows, and the reverse for minimization.
struct Solution {
  Status status = Status::kInfeasible;
  std::vector<Rat> primal;
  std::vector<Rat> dual;
  Rat objective_value;
  std::vector<int> basis;  // basic structural variables, by tableau row
  std::vector<Rat> stage_values;  // per stage, filled by solve_lex
};

// Two-phase primal simplex in exact rationals with Bland's rule. Variables
// with a finite lower bound are shifted to zero; free variables are split
// into a difference of two nonnegative columns. Infeasible and unbounded are
// statuses; an optimal solution that fails the exact KKT check raises
// Error{kInternal}.
Solution solve_lp(const LinearProgram& program);

// Empty string when `solution` satisfies primal feasibility, dual
// feasibility and complementary slackness exactly; otherwise the first
// violation found.
std::string kkt_violation(const LinearProgram& program, const Solution& solution);

}  // namespace opeq::lp

#endif  // OPEQ_LP_LINEAR_PROGRAM_HPP_
