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

#include "opeq/efg/generators.hpp"

#include <array>
#include <random>

#include "opeq/error.hpp"

namespace opeq::efg {

std::string clairvoyance_bet_label(int x) { return "bet" + std::to_string(x); }
std::string clairvoyance_facing_infoset(int x) { return "facing_bet" + std::to_string(x); }
std::string clairvoyance_call_label(int x) { return "call_bet" + std::to_string(x); }
std::string clairvoyance_fold_label(int x) { return "fold_bet" + std::to_string(x); }

Game make_clairvoyance(int n) {
  if (n < 1) {
    throw Error(Errc::kInvalidArgument,
                "clairvoyance needs n >= 1, got " + std::to_string(n));
  }
  const Rat half(1, 2);
  GameBuilder b;
  b.chance("deal", {{half, "W"}, {half, "L"}});
  for (const std::string hand : {"W", "L"}) {
    const bool winning = hand == "W";
    std::vector<std::pair<std::string, std::string>> actions{{"check", hand + ".check"}};
    b.terminal(hand + ".check", winning ? half : -half);
    for (int x = 1; x <= n; ++x) {
      const std::string node = hand + "." + clairvoyance_bet_label(x);
      actions.emplace_back(clairvoyance_bet_label(x), node);
      b.decision(node, Player::kTwo, clairvoyance_facing_infoset(x),
                 {{clairvoyance_call_label(x), node + ".call"},
                  {clairvoyance_fold_label(x), node + ".fold"}});
      const Rat called = half + Rat(x);
      b.terminal(node + ".call", winning ? called : -called);
      b.terminal(node + ".fold", half);
    }
    b.decision(hand, Player::kOne, hand, std::move(actions));
  }
  b.root("deal");
  return b.build();
}

Game make_kuhn() {
  constexpr std::array<char, 3> kCards{'J', 'Q', 'K'};
  GameBuilder b;
  std::vector<std::pair<Rat, std::string>> deals;
  for (int c1 = 0; c1 < 3; ++c1) {
    for (int c2 = 0; c2 < 3; ++c2) {
      if (c1 == c2) continue;
      const std::string h1(1, kCards[c1]);
      const std::string h2(1, kCards[c2]);
      const std::string deal = h1 + h2;
      deals.emplace_back(Rat(1, 6), deal);
      const int showdown = c1 > c2 ? 1 : -1;

      b.decision(deal, Player::kOne, h1, {{"p", deal + ".p"}, {"b", deal + ".b"}});
      b.decision(deal + ".p", Player::kTwo, h2 + ".p",
                 {{"p", deal + ".pp"}, {"b", deal + ".pb"}});
      b.decision(deal + ".b", Player::kTwo, h2 + ".b",
                 {{"f", deal + ".bf"}, {"c", deal + ".bc"}});
      b.decision(deal + ".pb", Player::kOne, h1 + ".pb",
                 {{"f", deal + ".pbf"}, {"c", deal + ".pbc"}});
      b.terminal(deal + ".pp", Rat(showdown));
      b.terminal(deal + ".bf", Rat(1));
      b.terminal(deal + ".bc", Rat(2 * showdown));
      b.terminal(deal + ".pbf", Rat(-1));
      b.terminal(deal + ".pbc", Rat(2 * showdown));
    }
  }
  b.chance("deal", std::move(deals));
  b.root("deal");
  return b.build();
}

Game make_matrix_game(const std::vector<std::vector<Rat>>& matrix) {
  if (matrix.empty() || matrix.front().empty()) {
    throw Error(Errc::kInvalidArgument, "matrix game needs a non-empty matrix");
  }
  const std::size_t cols = matrix.front().size();
  for (const auto& row : matrix) {
    if (row.size() != cols) throw Error(Errc::kInvalidArgument, "ragged matrix");
  }
  GameBuilder b;
  std::vector<std::pair<std::string, std::string>> rows;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    const std::string r = "r" + std::to_string(i);
    rows.emplace_back(r, r);
    std::vector<std::pair<std::string, std::string>> columns;
    for (std::size_t j = 0; j < cols; ++j) {
      const std::string c = "c" + std::to_string(j);
      columns.emplace_back(c, r + "." + c);
      b.terminal(r + "." + c, matrix[i][j]);
    }
    b.decision(r, Player::kTwo, "cols", std::move(columns));
  }
  b.decision("root", Player::kOne, "rows", std::move(rows));
  b.root("root");
  return b.build();
}

Game make_random_osefg(std::uint64_t seed, const RandomOsefgLimits& limits) {
  if (limits.max_types < 1 || limits.max_p1_actions < 1 ||
      limits.max_p2_actions < 1 || limits.payoff_range < 0) {
    throw Error(Errc::kInvalidArgument, "random game limits must be positive");
  }
  std::mt19937_64 rng(seed);
  auto draw = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  const int types = draw(1, limits.max_types);
  const int a1 = draw(std::min(2, limits.max_p1_actions), limits.max_p1_actions);
  const int a2 = draw(std::min(2, limits.max_p2_actions), limits.max_p2_actions);
  constexpr std::array<int, 3> kDenominators{1, 2, 4};

  GameBuilder b;
  std::vector<std::pair<Rat, std::string>> deal;
  for (int t = 0; t < types; ++t) {
    const std::string type = "t" + std::to_string(t);
    deal.emplace_back(Rat(1, types), type);
    std::vector<std::pair<std::string, std::string>> moves;
    for (int i = 0; i < a1; ++i) {
      const std::string action = "a" + std::to_string(i);
      const std::string node = type + "." + action;
      moves.emplace_back(action, node);
      std::vector<std::pair<std::string, std::string>> responses;
      for (int j = 0; j < a2; ++j) {
        const std::string response = "r" + std::to_string(j);
        responses.emplace_back(response, node + "." + response);
        const Rat payoff(draw(-limits.payoff_range, limits.payoff_range),
                         kDenominators[draw(0, 2)]);
        b.terminal(node + "." + response, payoff);
      }
      b.decision(node, Player::kTwo, "obs_" + action, std::move(responses));
    }
    b.decision(type, Player::kOne, type, std::move(moves));
  }
  b.chance("deal", std::move(deal));
  b.root("deal");
  return b.build();
}

}  // namespace opeq::efg
