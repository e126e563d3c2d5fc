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

#include "opeq/lp/linear_program.hpp"

#include "opeq/error.hpp"

namespace opeq::lp {

std::string_view status_name(Status status) {
  switch (status) {
    case Status::kOptimal: return "optimal";
    case Status::kInfeasible: return "infeasible";
    case Status::kUnbounded: return "unbounded";
  }
  return "unknown";
}

int LinearProgram::add_variable(std::string name, std::optional<Rat> lower) {
  variables_.push_back({std::move(name), std::move(lower)});
  return num_variables() - 1;
}

void LinearProgram::check_columns(const SparseVector& row) const {
  for (const auto& [col, value] : row) {
    if (col < 0 || col >= num_variables()) {
      throw Error(Errc::kDimensionMismatch,
                  "coefficient on undeclared variable " + std::to_string(col));
    }
  }
}

int LinearProgram::add_constraint(SparseVector row, Relation relation, Rat rhs,
                                  std::string name) {
  check_columns(row);
  constraints_.push_back({std::move(row), relation, std::move(rhs), std::move(name)});
  return num_constraints() - 1;
}

void LinearProgram::set_objective(SparseVector objective) {
  check_columns(objective);
  objective_ = std::move(objective);
}

std::string kkt_violation(const LinearProgram& program, const Solution& solution) {
  if (solution.status != Status::kOptimal) return "solution is not optimal";
  const int n = program.num_variables();
  const int m = program.num_constraints();
  if (static_cast<int>(solution.primal.size()) != n ||
      static_cast<int>(solution.dual.size()) != m) {
    return "solution dimensions do not match the program";
  }
  const std::vector<Rat>& x = solution.primal;
  const std::vector<Rat>& y = solution.dual;
  const bool maximize = program.sense() == Sense::kMaximize;

  std::vector<Rat> reduced = densify(program.objective(), n);
  for (int i = 0; i < m; ++i) {
    const Constraint& c = program.constraints()[i];
    const Rat activity = dot(c.row, x);
    const Rat slack = c.rhs - activity;
    const std::string label = "constraint " + std::to_string(i);
    switch (c.relation) {
      case Relation::kLessEqual:
        if (slack.sign() < 0) return label + " violated";
        break;
      case Relation::kGreaterEqual:
        if (slack.sign() > 0) return label + " violated";
        break;
      case Relation::kEqual:
        if (!slack.is_zero()) return label + " violated";
        break;
    }
    // Oriented so that a valid multiplier is >= 0 on <= rows of a max.
    const int oriented = maximize ? y[i].sign() : -y[i].sign();
    if (c.relation == Relation::kLessEqual && oriented < 0) return label + " dual sign";
    if (c.relation == Relation::kGreaterEqual && oriented > 0) return label + " dual sign";
    if (!(y[i] * slack).is_zero()) return label + " complementary slackness";
    for (const auto& [col, value] : c.row) reduced[col] -= y[i] * value;
  }

  Rat objective = dot(program.objective(), x);
  if (objective != solution.objective_value) return "objective value mismatch";
  Rat dual_objective;
  for (int i = 0; i < m; ++i) dual_objective += y[i] * program.constraints()[i].rhs;
  for (int j = 0; j < n; ++j) {
    const Variable& v = program.variables()[j];
    const std::string label = "variable " + std::to_string(j) + " (" + v.name + ")";
    if (!v.lower) {
      if (!reduced[j].is_zero()) return label + " nonzero reduced cost on free variable";
      continue;
    }
    if (x[j] < *v.lower) return label + " below its lower bound";
    const int oriented = maximize ? reduced[j].sign() : -reduced[j].sign();
    if (oriented > 0) return label + " reduced cost sign";
    if (!(reduced[j] * (x[j] - *v.lower)).is_zero()) {
      return label + " complementary slackness";
    }
    dual_objective += reduced[j] * *v.lower;
  }
  if (dual_objective != objective) return "duality gap";
  return {};
}

}  // namespace opeq::lp
