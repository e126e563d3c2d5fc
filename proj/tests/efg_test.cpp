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

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "opeq/efg/game_io.hpp"
#include "opeq/efg/generators.hpp"
#include "opeq/efg/validate.hpp"
#include "opeq/error.hpp"

namespace opeq::efg {
namespace {

Errc validation_error(const Game& g) {
  try {
    validate_game(g);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "game validated";
  return Errc::kInternal;
}

Rat leaf_chance_mass(const Game& g, NodeIndex n) {
  const auto& node = g.node(n);
  switch (node.kind) {
    case NodeKind::kTerminal:
      return Rat(1);
    case NodeKind::kChance: {
      Rat m;
      for (const auto& o : node.outcomes) m += o.probability * leaf_chance_mass(g, o.child);
      return m;
    }
    case NodeKind::kDecision: {
      // Strategies ignored: every action branch is followed with weight 1,
      // so normalize by the branch count to count each leaf set once.
      Rat m;
      for (const auto& a : node.actions) m += leaf_chance_mass(g, a.child);
      return m / Rat(static_cast<std::int64_t>(node.actions.size()));
    }
  }
  return Rat();
}

std::vector<Rat> terminal_payoffs_under(const Game& g, std::string_view prefix) {
  std::vector<Rat> out;
  for (const auto& n : g.nodes()) {
    if (n.kind != NodeKind::kTerminal) continue;
    const auto dot = n.id.find('.');
    if (dot == std::string::npos) continue;
    if (n.id.substr(dot + 1).starts_with(prefix)) out.push_back(n.payoff);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(ClairvoyanceTest, StructureForTwo) {
  const auto vg = validate_game(make_clairvoyance(2));
  EXPECT_EQ(vg.infoset_order(Player::kOne).size(), 2u);
  EXPECT_EQ(vg.infoset_order(Player::kTwo).size(), 2u);
  const auto& g = vg.game();
  ASSERT_TRUE(g.find_infoset("W"));
  ASSERT_TRUE(g.find_infoset("L"));
  EXPECT_TRUE(g.find_infoset("facing_bet1"));
  EXPECT_TRUE(g.find_infoset("facing_bet2"));
  const auto& root = g.node(g.root());
  ASSERT_EQ(root.kind, NodeKind::kChance);
  ASSERT_EQ(root.outcomes.size(), 2u);
  EXPECT_EQ(root.outcomes[0].probability, Rat(1, 2));
  EXPECT_EQ(root.outcomes[1].probability, Rat(1, 2));
}

TEST(ClairvoyanceTest, BetTwoPayoffs) {
  const auto g = make_clairvoyance(2);
  EXPECT_EQ(terminal_payoffs_under(g, "bet2."),
            (std::vector<Rat>{Rat(-5, 2), Rat(1, 2), Rat(1, 2), Rat(5, 2)}));
  EXPECT_EQ(terminal_payoffs_under(g, "check"), (std::vector<Rat>{Rat(-1, 2), Rat(1, 2)}));
  const auto w_call = g.find_node("W.bet1.call");
  ASSERT_TRUE(w_call);
  EXPECT_EQ(g.node(*w_call).payoff, Rat(3, 2));
}

TEST(ClairvoyanceTest, ActionSetForOne) {
  const auto g = make_clairvoyance(1);
  const auto& w = g.infoset(*g.find_infoset("W"));
  std::vector<std::string> labels = w.action_labels;
  std::sort(labels.begin(), labels.end());
  EXPECT_EQ(labels, (std::vector<std::string>{"bet1", "check"}));
}

TEST(ClairvoyanceTest, RejectsZero) {
  try {
    make_clairvoyance(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kInvalidArgument);
  }
}

TEST(ClairvoyanceTest, ValidatesUpToTwenty) {
  for (int n = 1; n <= 20; ++n) {
    const auto vg = validate_game(make_clairvoyance(n));
    EXPECT_EQ(static_cast<int>(vg.infoset_order(Player::kTwo).size()), n);
  }
}

TEST(KuhnTest, Structure) {
  const auto vg = validate_game(make_kuhn());
  const auto& root = vg.game().node(vg.game().root());
  ASSERT_EQ(root.outcomes.size(), 6u);
  for (const auto& o : root.outcomes) EXPECT_EQ(o.probability, Rat(1, 6));
  EXPECT_EQ(vg.infoset_order(Player::kOne).size(), 6u);
  EXPECT_EQ(vg.infoset_order(Player::kTwo).size(), 6u);
}

TEST(MatrixGameTest, BuildsAndRejects) {
  const auto g = make_matrix_game({{Rat(1), Rat(-1)}, {Rat(-1), Rat(1)}});
  EXPECT_NO_THROW(validate_game(g));
  EXPECT_THROW(make_matrix_game({}), Error);
  EXPECT_THROW(make_matrix_game({{Rat(1), Rat(2)}, {Rat(3)}}), Error);
  EXPECT_THROW(make_matrix_game({{}}), Error);
}

TEST(ValidateTest, ChanceMassIsOne) {
  std::vector<Game> games{make_clairvoyance(3), make_kuhn(), make_random_osefg(7)};
  for (const auto& g : games) {
    const auto vg = validate_game(g);
    EXPECT_EQ(leaf_chance_mass(vg.game(), vg.game().root()), Rat(1));
  }
}

TEST(ValidateTest, ChanceSum) {
  GameBuilder b;
  b.chance("r", {{Rat(1, 2), "a"}, {Rat(1, 3), "b"}}).terminal("a", 1).terminal("b", 0).root("r");
  EXPECT_EQ(validation_error(b.build()), Errc::kChanceSum);

  GameBuilder z;
  z.chance("r", {{Rat(1), "a"}, {Rat(0), "b"}}).terminal("a", 1).terminal("b", 0).root("r");
  EXPECT_EQ(validation_error(z.build()), Errc::kChanceSum);
}

TEST(ValidateTest, InfosetLabelMismatch) {
  GameBuilder b;
  b.chance("r", {{Rat(1, 2), "x"}, {Rat(1, 2), "y"}})
      .decision("x", Player::kOne, "I", {{"a", "t1"}, {"b", "t2"}})
      .decision("y", Player::kOne, "I", {{"a", "t3"}, {"b", "t4"}, {"c", "t5"}})
      .terminal("t1", 0).terminal("t2", 0).terminal("t3", 0).terminal("t4", 0).terminal("t5", 0)
      .root("r");
  EXPECT_EQ(validation_error(b.build()), Errc::kInfosetLabels);
}

TEST(ValidateTest, InfosetPlayerMismatch) {
  GameBuilder b;
  b.chance("r", {{Rat(1, 2), "x"}, {Rat(1, 2), "y"}})
      .decision("x", Player::kOne, "I", {{"a", "t1"}})
      .decision("y", Player::kTwo, "I", {{"a", "t2"}})
      .terminal("t1", 0).terminal("t2", 0)
      .root("r");
  EXPECT_EQ(validation_error(b.build()), Errc::kInfosetPlayer);
}

TEST(ValidateTest, PerfectRecall) {
  // Player 2 forgets its own first move.
  GameBuilder b;
  b.decision("r", Player::kTwo, "A", {{"l", "x"}, {"r", "y"}})
      .decision("x", Player::kTwo, "B", {{"u", "t1"}, {"d", "t2"}})
      .decision("y", Player::kTwo, "B", {{"u", "t3"}, {"d", "t4"}})
      .terminal("t1", 1).terminal("t2", 0).terminal("t3", 0).terminal("t4", 1)
      .root("r");
  EXPECT_EQ(validation_error(b.build()), Errc::kPerfectRecall);
}

TEST(ValidateTest, NotATree) {
  GameBuilder shared;
  shared.decision("r", Player::kOne, "I", {{"a", "t"}, {"b", "t"}}).terminal("t", 0).root("r");
  EXPECT_EQ(validation_error(shared.build()), Errc::kNotATree);

  GameBuilder cycle;
  cycle.decision("r", Player::kOne, "I", {{"a", "s"}})
      .decision("s", Player::kTwo, "J", {{"b", "r"}})
      .root("r");
  EXPECT_EQ(validation_error(cycle.build()), Errc::kNotATree);

  GameBuilder orphan;
  orphan.decision("r", Player::kOne, "I", {{"a", "t"}}).terminal("t", 0).terminal("u", 0).root("r");
  EXPECT_EQ(validation_error(orphan.build()), Errc::kNotATree);
}

TEST(BuilderTest, Malformed) {
  auto code = [](const std::function<void()>& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::kInternal;
  };
  EXPECT_EQ(code([] { GameBuilder().terminal("t", 0).terminal("t", 1).root("t").build(); }),
            Errc::kMalformedGame);
  EXPECT_EQ(code([] { GameBuilder().terminal("t", 0).build(); }), Errc::kMalformedGame);
  EXPECT_EQ(code([] { GameBuilder().terminal("t", 0).root("u").build(); }), Errc::kMalformedGame);
  EXPECT_EQ(code([] {
              GameBuilder().decision("r", Player::kOne, "I", {{"a", "zz"}}).root("r").build();
            }),
            Errc::kMalformedGame);
  EXPECT_EQ(code([] { GameBuilder().terminal("bad id", 0).root("bad id").build(); }),
            Errc::kMalformedGame);
  EXPECT_TRUE(is_valid_identifier("W.bet1.call"));
  EXPECT_FALSE(is_valid_identifier("a b"));
  EXPECT_FALSE(is_valid_identifier(""));
}

TEST(GameIoTest, RoundTrip) {
  for (const auto& g : {make_clairvoyance(2), make_kuhn(), make_random_osefg(3)}) {
    const std::string text = write_game(g);
    const Game back = parse_game(text);
    EXPECT_EQ(write_game(back), text);
    EXPECT_NO_THROW(validate_game(back));
  }
}

TEST(GameIoTest, ParsesHandWritten) {
  const char* text = R"(
# matching pennies
game efg-v1
decision root player=1 infoset=rows { h -> h ; t -> t }
decision h player=2 infoset=cols { h -> hh ; t -> ht }
decision t player=2 infoset=cols{h->th;t->tt}
terminal hh payoff=1
terminal ht   payoff = -1
terminal th payoff=-1/1
terminal tt payoff=2/2
root root
)";
  const auto g = parse_game(text);
  const auto vg = validate_game(g);
  EXPECT_EQ(g.nodes().size(), 7u);
  EXPECT_EQ(g.node(*g.find_node("tt")).payoff, Rat(1));
}

TEST(GameIoTest, Errors) {
  auto code = [](std::string_view text) {
    try {
      parse_game(text);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::kInternal;
  };
  EXPECT_EQ(code("terminal t payoff=1\nroot t\n"), Errc::kParse);
  EXPECT_EQ(code("game efg-v2\n"), Errc::kParse);
  EXPECT_EQ(code("game efg-v1\nterminal t payoff=x\nroot t\n"), Errc::kParse);
  EXPECT_EQ(code("game efg-v1\nfoo t\n"), Errc::kParse);
  EXPECT_EQ(code("game efg-v1\nchance c { 1/2 -> a ; 1/2 }\n"), Errc::kParse);
  EXPECT_EQ(code("game efg-v1\ndecision d player=3 infoset=I { a -> t }\n"), Errc::kParse);
  EXPECT_EQ(code("game efg-v1\nterminal t payoff=1\nterminal t payoff=2\nroot t\n"),
            Errc::kMalformedGame);
  try {
    parse_game("game efg-v1\n\nterminal t payoff=1 extra\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(RandomOsefgTest, WithinLimitsAndDeterministic) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = make_random_osefg(seed);
    EXPECT_EQ(write_game(g), write_game(make_random_osefg(seed)));
    const auto vg = validate_game(g);
    const auto types = vg.infoset_order(Player::kOne).size();
    EXPECT_GE(types, 1u);
    EXPECT_LE(types, 3u);
    for (const auto& info : g.infosets()) {
      EXPECT_GE(info.action_labels.size(), 2u);
      EXPECT_LE(info.action_labels.size(), 3u);
    }
  }
}

}  // namespace
}  // namespace opeq::efg
