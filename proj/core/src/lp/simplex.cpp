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
#include <optional>

#include "opeq/error.hpp"
#include "opeq/lp/linear_program.hpp"

namespace opeq::lp {
namespace {

enum class ColumnKind { kStructural, kSlack, kArtificial };

struct Column {
  ColumnKind kind;
  int variable = -1;   // structural: originating variable
  int sign = 1;        // structural: +1, or -1 for the negative half of a free variable
};

// Dense tableau for: maximize cᵀz subject to A z = b, z >= 0, b >= 0.
// `reduced[j]` is c_B B⁻¹ A_j - c_j; the basis is optimal when no enterable
// column has a negative reduced cost.
class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows), cols_(cols), a_(rows, std::vector<Rat>(cols)), rhs_(rows),
        basis_(rows, -1), reduced_(cols), blocked_(cols, false) {}

  Rat& at(int r, int c) { return a_[r][c]; }
  Rat& rhs(int r) { return rhs_[r]; }
  const Rat& rhs(int r) const { return rhs_[r]; }
  int& basic(int r) { return basis_[r]; }
  int basic(int r) const { return basis_[r]; }
  void block(int c) { blocked_[c] = true; }
  const Rat& reduced(int c) const { return reduced_[c]; }
  const Rat& value() const { return value_; }

  void price(const std::vector<Rat>& cost) {
    for (int j = 0; j < cols_; ++j) reduced_[j] = -cost[j];
    value_ = Rat();
    for (int r = 0; r < rows_; ++r) {
      const Rat& cb = cost[basis_[r]];
      if (cb.is_zero()) continue;
      for (int j = 0; j < cols_; ++j) {
        if (!a_[r][j].is_zero()) reduced_[j] += cb * a_[r][j];
      }
      value_ += cb * rhs_[r];
    }
  }

  void pivot(int row, int col) {
    const Rat inverse = Rat(1) / a_[row][col];
    for (int j = 0; j < cols_; ++j) {
      if (!a_[row][j].is_zero()) a_[row][j] *= inverse;
    }
    rhs_[row] *= inverse;
    for (int r = 0; r < rows_; ++r) {
      if (r == row || a_[r][col].is_zero()) continue;
      eliminate(a_[r], rhs_[r], a_[r][col], row);
    }
    if (!reduced_[col].is_zero()) eliminate(reduced_, value_, reduced_[col], row);
    basis_[row] = col;
  }

  enum class Outcome { kOptimal, kUnbounded };

  // Bland's rule: lowest-index improving column enters; ties in the ratio
  // test go to the lowest-index basic column.
  Outcome run() {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols_; ++j) {
        if (!blocked_[j] && reduced_[j].sign() < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return Outcome::kOptimal;
      int leave = -1;
      Rat best;
      for (int r = 0; r < rows_; ++r) {
        if (a_[r][enter].sign() <= 0) continue;
        Rat ratio = rhs_[r] / a_[r][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave < 0) return Outcome::kUnbounded;
      pivot(leave, enter);
    }
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

 private:
  // target -= factor * (pivot row); `factor` is copied first because it
  // usually aliases an element of `target`.
  void eliminate(std::vector<Rat>& target, Rat& target_rhs, const Rat& factor_ref, int row) {
    const Rat factor = factor_ref;
    const auto& source = a_[row];
    for (int j = 0; j < cols_; ++j) {
      if (!source[j].is_zero()) target[j] -= factor * source[j];
    }
    target_rhs -= factor * rhs_[row];
  }

  int rows_;
  int cols_;
  std::vector<std::vector<Rat>> a_;
  std::vector<Rat> rhs_;
  std::vector<int> basis_;
  std::vector<Rat> reduced_;
  Rat value_;
  std::vector<bool> blocked_;
};

}  // namespace

Solution solve_lp(const LinearProgram& program) {
  const int n = program.num_variables();
  const int m = program.num_constraints();
  if (n == 0) throw Error(Errc::kInvalidArgument, "linear program has no variables");
  const bool maximize = program.sense() == Sense::kMaximize;

  // Structural columns.
  std::vector<Column> columns;
  std::vector<int> positive_col(n), negative_col(n, -1);
  for (int j = 0; j < n; ++j) {
    positive_col[j] = static_cast<int>(columns.size());
    columns.push_back({ColumnKind::kStructural, j, 1});
    if (!program.variables()[j].lower) {
      negative_col[j] = static_cast<int>(columns.size());
      columns.push_back({ColumnKind::kStructural, j, -1});
    }
  }
  const int structural = static_cast<int>(columns.size());

  // Rows in shifted coordinates, flipped to a nonnegative right-hand side.
  std::vector<std::vector<Rat>> rows(m, std::vector<Rat>(structural));
  std::vector<Rat> rhs(m);
  std::vector<int> flip(m, 1);
  std::vector<int> slack_sign(m, 0);  // coefficient of the row's slack after flipping
  for (int i = 0; i < m; ++i) {
    const Constraint& c = program.constraints()[i];
    rhs[i] = c.rhs;
    for (const auto& [var, value] : c.row) {
      if (value.is_zero()) continue;
      rows[i][positive_col[var]] += value;
      if (negative_col[var] >= 0) rows[i][negative_col[var]] -= value;
      if (const auto& lb = program.variables()[var].lower; lb && !lb->is_zero()) {
        rhs[i] -= value * *lb;
      }
    }
    if (c.relation == Relation::kLessEqual) slack_sign[i] = 1;
    if (c.relation == Relation::kGreaterEqual) slack_sign[i] = -1;
    if (rhs[i].sign() < 0) {
      flip[i] = -1;
      rhs[i] = -rhs[i];
      for (Rat& v : rows[i]) v = -v;
      slack_sign[i] = -slack_sign[i];
    }
  }

  std::vector<int> slack_col(m, -1);
  for (int i = 0; i < m; ++i) {
    if (slack_sign[i] != 0) {
      slack_col[i] = static_cast<int>(columns.size());
      columns.push_back({ColumnKind::kSlack});
    }
  }
  // Identity column per row: the slack when it enters with +1, otherwise an
  // artificial.
  std::vector<int> identity_col(m, -1);
  for (int i = 0; i < m; ++i) {
    if (slack_sign[i] == 1) {
      identity_col[i] = slack_col[i];
    } else {
      identity_col[i] = static_cast<int>(columns.size());
      columns.push_back({ColumnKind::kArtificial});
    }
  }

  const int total = static_cast<int>(columns.size());
  Tableau t(m, total);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < structural; ++j) t.at(i, j) = rows[i][j];
    if (slack_col[i] >= 0) t.at(i, slack_col[i]) = Rat(slack_sign[i]);
    t.at(i, identity_col[i]) = Rat(1);
    t.rhs(i) = rhs[i];
    t.basic(i) = identity_col[i];
  }

  Solution solution;

  // Phase 1: drive the artificials to zero.
  std::vector<Rat> cost(total);
  bool any_artificial = false;
  for (int j = 0; j < total; ++j) {
    if (columns[j].kind == ColumnKind::kArtificial) {
      cost[j] = Rat(-1);
      any_artificial = true;
    }
  }
  if (any_artificial) {
    t.price(cost);
    t.run();  // bounded above by zero
    if (t.value().sign() < 0) {
      solution.status = Status::kInfeasible;
      return solution;
    }
    for (int r = 0; r < m; ++r) {
      if (columns[t.basic(r)].kind != ColumnKind::kArtificial) continue;
      for (int j = 0; j < total; ++j) {
        if (columns[j].kind != ColumnKind::kArtificial && !t.at(r, j).is_zero()) {
          t.pivot(r, j);
          break;
        }
      }
      // Otherwise the row is redundant and its artificial stays basic at 0.
    }
    for (int j = 0; j < total; ++j) {
      if (columns[j].kind == ColumnKind::kArtificial) t.block(j);
    }
  }

  // Phase 2.
  std::fill(cost.begin(), cost.end(), Rat());
  Rat constant;
  for (const auto& [var, value] : program.objective()) {
    const Rat c = maximize ? value : -value;
    cost[positive_col[var]] += c;
    if (negative_col[var] >= 0) cost[negative_col[var]] -= c;
    if (const auto& lb = program.variables()[var].lower) constant += c * *lb;
  }
  t.price(cost);
  if (t.run() == Tableau::Outcome::kUnbounded) {
    solution.status = Status::kUnbounded;
    return solution;
  }

  solution.status = Status::kOptimal;
  std::vector<Rat> z(total);
  for (int r = 0; r < m; ++r) {
    z[t.basic(r)] = t.rhs(r);
    if (columns[t.basic(r)].kind == ColumnKind::kStructural) {
      const int var = columns[t.basic(r)].variable;
      if (solution.basis.empty() || solution.basis.back() != var) solution.basis.push_back(var);
    }
  }
  solution.primal.assign(n, Rat());
  for (int j = 0; j < n; ++j) {
    Rat value = z[positive_col[j]];
    if (negative_col[j] >= 0) value -= z[negative_col[j]];
    if (const auto& lb = program.variables()[j].lower) value += *lb;
    solution.primal[j] = std::move(value);
  }
  solution.dual.assign(m, Rat());
  for (int i = 0; i < m; ++i) {
    Rat y = t.reduced(identity_col[i]);
    if (flip[i] < 0) y = -y;
    solution.dual[i] = maximize ? y : -y;
  }
  const Rat value = t.value() + constant;
  solution.objective_value = maximize ? value : -value;

  if (auto why = kkt_violation(program, solution); !why.empty()) {
    throw Error(Errc::kInternal, "simplex optimality certificate failed: " + why);
  }
  return solution;
}

}  // namespace opeq::lp
