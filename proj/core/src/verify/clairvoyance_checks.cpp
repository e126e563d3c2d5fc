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

#include "opeq/verify/clairvoyance_checks.hpp"

#include <algorithm>

#include "opeq/efg/generators.hpp"
#include "opeq/error.hpp"

namespace opeq::verify {

bool IntervalReport::pass() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const IntervalEntry& e) { return e.pass; });
}

IntervalReport clairvoyance_interval_check(const seqform::BehavioralStrategy& b, int n) {
  if (n < 1) throw Error(Errc::kInvalidArgument, "n must be positive");
  if (b.player != efg::Player::kTwo || b.infosets.size() != static_cast<std::size_t>(n)) {
    throw Error(Errc::kInvalidArgument,
                "strategy is not a player-2 strategy of clairvoyance(" + std::to_string(n) + ")");
  }
  IntervalReport report{.n = n};
  for (int x = 1; x <= n; ++x) {
    const auto* dist = b.find(efg::clairvoyance_facing_infoset(x));
    if (dist == nullptr) {
      throw Error(Errc::kInvalidArgument,
                  "missing infoset " + efg::clairvoyance_facing_infoset(x));
    }
    IntervalEntry e{.bet = x};
    e.alpha = dist->prob(efg::clairvoyance_call_label(x));
    e.lower = Rat(1, 1 + x);
    e.upper = min(Rat(n, static_cast<std::int64_t>(x) * (1 + n)), Rat(1));
    e.pass = e.lower <= e.alpha && e.alpha <= e.upper;
    report.entries.push_back(std::move(e));
  }
  return report;
}

MistakeCost mistake_cost(const Rat& alpha, int x, int n) {
  if (x < 1 || x > n) {
    throw Error(Errc::kInvalidArgument, "bet size must lie in 1..n");
  }
  if (alpha.sign() < 0 || alpha > Rat(1)) {
    throw Error(Errc::kInvalidArgument, "call probability must lie in [0, 1]");
  }
  return {Rat(n, n + 1) - alpha * Rat(x), alpha * Rat(1 + x) - Rat(1)};
}

}  // namespace opeq::verify
