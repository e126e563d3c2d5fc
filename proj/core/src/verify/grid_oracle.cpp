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

#include "opeq/verify/grid_oracle.hpp"

#include <limits>

#include "opeq/error.hpp"
#include "opeq/verify/best_response.hpp"

namespace opeq::verify {
namespace {

// C(n, k) with saturation at SIZE_MAX.
std::size_t choose(std::size_t n, std::size_t k) {
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::size_t factor = n - k + i;
    if (result > kMax / factor) return kMax;
    result = result * factor / i;
  }
  return result;
}

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  if (a != 0 && b > kMax / a) return kMax;
  return a * b;
}

// Odometer over per-infoset compositions of `denominator`, in lexicographic
// order with the first infoset most significant.
class GridWalker {
 public:
  GridWalker(const SequenceForm& sf, Player player, int denominator)
      : sf_(sf), player_(player), denominator_(denominator) {
    for (efg::InfosetIndex info : sf.infosets(player)) {
      const int k = static_cast<int>(sf.game().infoset(info).action_labels.size());
      std::vector<int> parts(k, 0);
      parts.back() = denominator;  // lexicographically smallest composition
      counts_.push_back(std::move(parts));
    }
  }

  std::size_t size() const {
    std::size_t total = 1;
    for (const auto& parts : counts_) {
      total = saturating_mul(total, choose(denominator_ + parts.size() - 1, parts.size() - 1));
    }
    return total;
  }

  const std::vector<std::vector<int>>& counts() const { return counts_; }
  void set_counts(std::vector<std::vector<int>> counts) { counts_ = std::move(counts); }

  RealizationPlan plan() const {
    RealizationPlan p{.player = player_};
    p.x.assign(sf_.num_sequences(player_), Rat());
    p.x[0] = Rat(1);
    const auto& order = sf_.infosets(player_);
    for (std::size_t k = 0; k < order.size(); ++k) {
      const Rat& parent = p.x[sf_.parent_sequence(order[k])];
      for (std::size_t a = 0; a < counts_[k].size(); ++a) {
        p.x[sf_.child_sequence(order[k], static_cast<int>(a))] =
            parent * Rat(counts_[k][a], denominator_);
      }
    }
    return p;
  }

  seqform::BehavioralStrategy behavioral() const {
    seqform::BehavioralStrategy b = seqform::uniform_strategy(sf_, player_);
    for (std::size_t k = 0; k < counts_.size(); ++k) {
      for (std::size_t a = 0; a < counts_[k].size(); ++a) {
        b.infosets[k].probs[a] = Rat(counts_[k][a], denominator_);
      }
    }
    return b;
  }

  bool advance() {
    for (auto k = static_cast<int>(counts_.size()) - 1; k >= 0; --k) {
      if (next_composition(counts_[k])) return true;
      std::fill(counts_[k].begin(), counts_[k].end(), 0);
      counts_[k].back() = denominator_;
    }
    return false;
  }

 private:
  // Next composition in lexicographic order of the count vector.
  static bool next_composition(std::vector<int>& parts) {
    const int k = static_cast<int>(parts.size());
    // Rightmost position i < k-1 that can grow by taking from the tail.
    for (int i = k - 2; i >= 0; --i) {
      int tail = 0;
      for (int j = i + 1; j < k; ++j) tail += parts[j];
      if (tail > 0) {
        ++parts[i];
        for (int j = i + 1; j < k; ++j) parts[j] = 0;
        parts[k - 1] = tail - 1;
        return true;
      }
    }
    return false;
  }

  const SequenceForm& sf_;
  Player player_;
  int denominator_;
  std::vector<std::vector<int>> counts_;
};

struct Minimizers {
  Rat best;
  std::vector<std::vector<std::vector<int>>> points;
};

// Scans one player's grid, keeping the points that minimize the opponent's
// best-response value.
Minimizers scan(const SequenceForm& sf, Player player, int denominator) {
  GridWalker walker(sf, player, denominator);
  Minimizers m;
  bool first = true;
  do {
    const Rat v = best_response(sf, walker.plan(), efg::opponent(player)).value;
    if (first || v < m.best) {
      m.best = v;
      m.points.clear();
      first = false;
    }
    if (v == m.best) m.points.push_back(walker.counts());
  } while (walker.advance());
  return m;
}

}  // namespace

GridOracleResult grid_oracle(const SequenceForm& sf, int denominator, std::size_t budget) {
  if (denominator < 1) throw Error(Errc::kInvalidArgument, "grid denominator must be positive");
  GridOracleResult result;
  result.grid_size_1 = GridWalker(sf, Player::kOne, denominator).size();
  result.grid_size_2 = GridWalker(sf, Player::kTwo, denominator).size();
  if (result.grid_size_1 > budget || result.grid_size_2 > budget - result.grid_size_1) {
    throw Error(Errc::kBudgetExceeded,
                "grid has " + std::to_string(result.grid_size_1) + " + " +
                    std::to_string(result.grid_size_2) + " points, budget " +
                    std::to_string(budget));
  }

  const Minimizers m1 = scan(sf, Player::kOne, denominator);
  const Minimizers m2 = scan(sf, Player::kTwo, denominator);
  const Rat min_gap = m1.best + m2.best;
  result.exact = min_gap.is_zero();
  const std::size_t keep1 = result.exact ? m1.points.size() : 1;
  const std::size_t keep2 = result.exact ? m2.points.size() : 1;
  if (saturating_mul(keep1, keep2) > budget) {
    throw Error(Errc::kBudgetExceeded, "equilibrium set too large to list");
  }

  auto rebuild = [&](Player p, const std::vector<std::vector<int>>& counts) {
    GridWalker w(sf, p, denominator);
    w.set_counts(counts);
    return std::pair{w.behavioral(), w.plan()};
  };
  for (std::size_t i = 0; i < keep1; ++i) {
    auto [b1, x1] = rebuild(Player::kOne, m1.points[i]);
    for (std::size_t j = 0; j < keep2; ++j) {
      auto [b2, x2] = rebuild(Player::kTwo, m2.points[j]);
      result.profiles.push_back({b1, std::move(b2), x1, std::move(x2), min_gap});
    }
  }
  return result;
}

}  // namespace opeq::verify
