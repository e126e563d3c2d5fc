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

#include "opeq/seqform/strategy_io.hpp"

#include <sstream>

#include "opeq/error.hpp"

namespace opeq::seqform {

std::string write_strategies(std::span<const BehavioralStrategy> strategies) {
  std::ostringstream out;
  out << "strategy v1\n";
  for (const auto& b : strategies) {
    for (const auto& d : b.infosets) {
      out << player_number(b.player) << ' ' << d.infoset;
      for (std::size_t a = 0; a < d.labels.size(); ++a) {
        out << ' ' << d.labels[a] << '=' << d.probs[a];
      }
      out << '\n';
    }
  }
  return out.str();
}

StrategyProfile parse_strategies(const SequenceForm& sf, std::string_view text) {
  StrategyProfile profile{uniform_strategy(sf, Player::kOne),
                          uniform_strategy(sf, Player::kTwo)};
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool header = false;
  auto fail = [&line_no](Errc code, const std::string& msg) {
    return Error(code, "strategy line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    std::string first;
    if (!(words >> first) || first.starts_with("#")) continue;
    if (!header) {
      std::string version;
      if (first != "strategy" || !(words >> version) || version != "v1") {
        throw fail(Errc::kParse, "expected 'strategy v1' header");
      }
      header = true;
      continue;
    }
    Player player;
    if (first == "1") {
      player = Player::kOne;
    } else if (first == "2") {
      player = Player::kTwo;
    } else {
      throw fail(Errc::kParse, "player must be 1 or 2");
    }
    std::string infoset;
    if (!(words >> infoset)) throw fail(Errc::kParse, "missing infoset name");
    BehavioralStrategy& b = player == Player::kOne ? profile.player1 : profile.player2;
    InfosetDistribution* dist = nullptr;
    for (auto& d : b.infosets) {
      if (d.infoset == infoset) dist = &d;
    }
    if (dist == nullptr) {
      throw fail(Errc::kInvalidArgument, "player " + first + " has no infoset '" + infoset + "'");
    }
    std::vector<bool> seen(dist->labels.size(), false);
    std::string item;
    while (words >> item) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw fail(Errc::kParse, "expected <label>=<p/q>");
      const std::string label = item.substr(0, eq);
      std::size_t a = 0;
      while (a < dist->labels.size() && dist->labels[a] != label) ++a;
      if (a == dist->labels.size()) {
        throw fail(Errc::kInvalidArgument, "unknown action '" + label + "'");
      }
      if (seen[a]) throw fail(Errc::kInvalidArgument, "action '" + label + "' repeated");
      seen[a] = true;
      try {
        dist->probs[a] = Rat::parse(item.substr(eq + 1));
      } catch (const Error& e) {
        throw fail(Errc::kParse, e.what());
      }
    }
    for (std::size_t a = 0; a < seen.size(); ++a) {
      if (!seen[a]) throw fail(Errc::kInvalidArgument, "missing action '" + dist->labels[a] + "'");
    }
  }
  if (!header) throw Error(Errc::kParse, "missing 'strategy v1' header");
  // Validates sums and signs.
  behavioral_to_realization(sf, profile.player1);
  behavioral_to_realization(sf, profile.player2);
  return profile;
}

}  // namespace opeq::seqform
