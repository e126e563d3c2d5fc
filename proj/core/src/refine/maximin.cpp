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

#include <map>
#include <string>

#include "opeq/error.hpp"

namespace opeq::refine::detail {

namespace {

std::vector<SparseVector> columns_of(const SparseMatrix& m) {
  std::vector<SparseVector> cols(m.cols());
  for (const auto& [rc, value] : m.entries()) {
    if (!value.is_zero()) cols[rc.second].emplace_back(rc.first, value);
  }
  return cols;
}

// Plan polytope of `p` as an LP over x >= lower.
lp::LinearProgram plan_program(const SequenceForm& sf, Player p, std::span<const Rat> lower) {
  lp::LinearProgram program(lp::Sense::kMaximize);
  const int n = sf.num_sequences(p);
  for (int s = 0; s < n; ++s) {
    program.add_variable("x" + std::to_string(s),
                         lower.empty() || s == 0 ? Rat(0) : lower[s]);
  }
  const auto& F = sf.constraint_matrix(p);
  std::vector<SparseVector> rows(F.rows());
  for (const auto& [rc, value] : F.entries()) rows[rc.first].emplace_back(rc.second, value);
  for (int r = 0; r < F.rows(); ++r) {
    program.add_constraint(rows[r], lp::Relation::kEqual, sf.constraint_rhs(p)[r]);
  }
  return program;
}

}  // namespace

SparseMatrix payoff_for(const SequenceForm& sf, Player maximizer) {
  if (maximizer == Player::kTwo) return sf.payoff_matrix();
  const auto t = sf.payoff_matrix().transposed();
  SparseMatrix neg(t.rows(), t.cols());
  for (const auto& [rc, value] : t.entries()) neg.add(rc.first, rc.second, -value);
  return neg;
}

Maximin build_maximin(const SequenceForm& sf, Player maximizer, std::span<const Rat> lower,
                      std::span<const Rat> c) {
  const Player minimizer = opponent(maximizer);
  const int nm = sf.num_sequences(maximizer);
  const int nh = sf.num_sequences(minimizer);
  if (!lower.empty() && static_cast<int>(lower.size()) != nm) {
    throw Error(Errc::kDimensionMismatch, "lower bound vector has the wrong length");
  }
  if (!c.empty() && static_cast<int>(c.size()) != nh) {
    throw Error(Errc::kDimensionMismatch, "observation vector has the wrong length");
  }

  Maximin m;
  m.maximizer = maximizer;
  m.payoff = payoff_for(sf, maximizer);
  for (int s = 0; s < nm; ++s) {
    m.x.push_back(m.program.add_variable("x" + std::to_string(s),
                                         lower.empty() || s == 0 ? Rat(0) : lower[s]));
  }
  const auto& Fh = sf.constraint_matrix(minimizer);
  for (int k = 0; k < Fh.rows(); ++k) {
    m.v.push_back(m.program.add_free_variable("v" + std::to_string(k)));
  }
  if (!c.empty()) m.w = m.program.add_variable("w");

  const auto fh_cols = columns_of(Fh);
  const auto a_cols = columns_of(m.payoff);
  for (int j = 0; j < nh; ++j) {
    SparseVector row;
    for (const auto& [k, value] : fh_cols[j]) row.emplace_back(m.v[k], value);
    if (!c.empty() && !c[j].is_zero()) row.emplace_back(m.w, c[j]);
    for (const auto& [r, value] : a_cols[j]) row.emplace_back(m.x[r], -value);
    m.program.add_constraint(std::move(row), lp::Relation::kLessEqual, Rat(0),
                             "resp" + std::to_string(j));
  }
  m.num_response_rows = nh;

  const auto& Fm = sf.constraint_matrix(maximizer);
  std::vector<SparseVector> fm_rows(Fm.rows());
  for (const auto& [rc, value] : Fm.entries()) fm_rows[rc.first].emplace_back(m.x[rc.second], value);
  for (int r = 0; r < Fm.rows(); ++r) {
    m.program.add_constraint(std::move(fm_rows[r]), lp::Relation::kEqual,
                             sf.constraint_rhs(maximizer)[r], "plan" + std::to_string(r));
  }
  return m;
}

std::vector<Rat> values_of(const lp::Solution& sol, std::span<const int> cols) {
  std::vector<Rat> out;
  out.reserve(cols.size());
  for (int c : cols) out.push_back(sol.primal.at(c));
  return out;
}

RealizationPlan maximizer_plan(const Maximin& m, const lp::Solution& sol) {
  return {m.maximizer, values_of(sol, m.x)};
}

RealizationPlan minimizer_plan(const Maximin& m, const lp::Solution& sol,
                               std::span<const Rat> shift) {
  RealizationPlan plan{opponent(m.maximizer), {}};
  for (int j = 0; j < m.num_response_rows; ++j) {
    Rat value = sol.dual.at(j);
    if (!shift.empty() && j > 0) value += shift[j];
    plan.x.push_back(value);
  }
  return plan;
}

bool face_is_point(const lp::LinearProgram& pinned, std::span<const int> cols) {
  lp::LinearProgram probe = pinned;
  for (int col : cols) {
    probe.set_objective({{col, Rat(1)}});
    probe.set_sense(lp::Sense::kMaximize);
    const auto hi = lp::solve_lp(probe);
    probe.set_sense(lp::Sense::kMinimize);
    const auto lo = lp::solve_lp(probe);
    if (hi.status != lp::Status::kOptimal || lo.status != lp::Status::kOptimal) {
      throw Error(Errc::kInternal, "optimal face probe did not solve");
    }
    if (hi.objective_value != lo.objective_value) return false;
  }
  return true;
}

CanonicalPoint canonical_point(lp::LinearProgram pinned, std::span<const int> cols) {
  CanonicalPoint out;
  for (int col : cols) {
    pinned.set_objective({{col, Rat(1)}});
    pinned.set_sense(lp::Sense::kMaximize);
    const auto hi = lp::solve_lp(pinned);
    pinned.set_sense(lp::Sense::kMinimize);
    auto lo = lp::solve_lp(pinned);
    if (hi.status != lp::Status::kOptimal || lo.status != lp::Status::kOptimal) {
      throw Error(Errc::kInternal, "optimal face probe did not solve");
    }
    if (hi.objective_value != lo.objective_value) out.nonunique = true;
    pinned.add_constraint({{col, Rat(1)}}, lp::Relation::kEqual, lo.objective_value);
    out.solution = std::move(lo);
  }
  return out;
}

void require_feasible_bounds(const SequenceForm& sf, Player p, std::span<const Rat> lower) {
  if (static_cast<int>(lower.size()) != sf.num_sequences(p)) {
    throw Error(Errc::kDimensionMismatch, "lower bound vector has the wrong length");
  }
  for (const auto& b : lower) {
    if (b.sign() < 0) throw Error(Errc::kInvalidArgument, "negative lower bound");
  }
  auto program = plan_program(sf, p, lower);
  if (lp::solve_lp(program).status != lp::Status::kOptimal) {
    throw Error(Errc::kInfeasible, "lower bounds of player " + std::to_string(player_number(p)) +
                                       " admit no realization plan");
  }
}

Rat max_over_plans(const SequenceForm& sf, Player p, std::span<const Rat> obj) {
  auto program = plan_program(sf, p, {});
  SparseVector o;
  for (std::size_t s = 0; s < obj.size(); ++s) {
    if (!obj[s].is_zero()) o.emplace_back(static_cast<int>(s), obj[s]);
  }
  program.set_objective(std::move(o));
  const auto sol = lp::solve_lp(program);
  if (sol.status != lp::Status::kOptimal) throw Error(Errc::kInternal, "plan LP did not solve");
  return sol.objective_value;
}

}  // namespace opeq::refine::detail
