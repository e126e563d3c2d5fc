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

#ifndef OPEQ_VERIFY_GRID_ORACLE_HPP_
#define OPEQ_VERIFY_GRID_ORACLE_HPP_

#include <cstddef>
#include <vector>

#include "opeq/seqform/strategy.hpp"

namespace opeq::verify {

using seqform::RealizationPlan;
using seqform::SequenceForm;

struct GridProfile {
  seqform::BehavioralStrategy b1;
  seqform::BehavioralStrategy b2;
  RealizationPlan x1;
  RealizationPlan x2;
  Rat gap;
};

struct GridOracleResult {
  // Every grid profile with gap exactly 0 (in grid order), or the single
  // minimum-gap profile when none is exact.
  std::vector<GridProfile> profiles;
  bool exact = false;
  std::size_t grid_size_1 = 0;  // behavioral grid points per player
  std::size_t grid_size_2 = 0;
};

// Enumerates every behavioral profile whose probabilities are multiples of
// 1/denominator and returns the exact equilibria among them.
//
// The gap of (x1, x2) splits as br_value_1(x2) + br_value_2(x1), so the two
// players' grids are scanned separately and the equilibrium set is the
// product of the two minimizer sets. Throws Error{kBudgetExceeded} when the
// scan (grid_size_1 + grid_size_2) or the returned product exceeds `budget`.
GridOracleResult grid_oracle(const SequenceForm& sf, int denominator,
                             std::size_t budget = 2'000'000);

}  // namespace opeq::verify

#endif  // OPEQ_VERIFY_GRID_ORACLE_HPP_
