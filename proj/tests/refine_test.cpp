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

#include <cmath>

#include "opeq/efg/generators.hpp"
#include "opeq/error.hpp"
#include "opeq/refine/concepts.hpp"
#include "opeq/verify/best_response.hpp"
#include "opeq/verify/clairvoyance_checks.hpp"
#include "support/oracles.hpp"

namespace opeq::refine {
namespace {

using seqform::realization_to_behavioral;

SequenceForm form(const efg::Game& g) { return seqform::to_sequence_form(efg::validate_game(g)); }

ObservationVector observe(const SequenceForm& sf, std::vector<std::string> labels) {
  return build_observation_vector(sf, Player::kOne, labels);
}

Rat call(const SequenceForm& sf, const RealizationPlan& x2, int bet) {
  return realization_to_behavioral(sf, x2)
      .probability("facing_bet" + std::to_string(bet), "call_bet" + std::to_string(bet));
}

Errc error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::kInternal;
}

TEST(ObservationTest, ClairvoyanceBets) {
  const auto sf = form(efg::make_clairvoyance(2));
  for (const char* bet : {"bet1", "bet2"}) {
    const auto c = observe(sf, {bet});
    for (int s = 0; s < sf.num_sequences(Player::kOne); ++s) {
      const bool hit = s == *sf.find_sequence(Player::kOne, "W", bet) ||
                       s == *sf.find_sequence(Player::kOne, "L", bet);
      EXPECT_EQ(c.c[s], Rat(hit ? 1 : 0)) << bet << " " << s;
    }
  }
  EXPECT_EQ(error_of([&] { observe(sf, {}); }), Errc::kInvalidArgument);
  EXPECT_EQ(error_of([&] { observe(sf, {"raise"}); }), Errc::kInvalidArgument);
  EXPECT_EQ(error_of([&] { observe(sf, {"bet1", "bet2"}); }), Errc::kInvalidArgument);
}

TEST(ObservationTest, KuhnPath) {
  const auto sf = form(efg::make_kuhn());
  const auto c = observe(sf, {"p", "c"});
  int ones = 0;
  for (int s = 0; s < sf.num_sequences(Player::kOne); ++s) {
    if (c.c[s] == Rat(1)) {
      ++ones;
      EXPECT_EQ(sf.label_path(Player::kOne, s), (std::vector<std::string>{"p", "c"}));
    }
  }
  EXPECT_EQ(ones, 3);
}

TEST(NashTest, Clairvoyance) {
  const auto sf = form(efg::make_clairvoyance(2));
  const auto r = solve_nash(sf);
  EXPECT_EQ(r.game_value, Rat(1, 3));
  const auto b1 = realization_to_behavioral(sf, *r.opponent_witness);
  EXPECT_EQ(b1.probability("W", "bet2"), Rat(1));
  EXPECT_EQ(b1.probability("L", "bet2"), Rat(2, 3));
  EXPECT_EQ(b1.probability("L", "check"), Rat(1, 3));
  EXPECT_EQ(call(sf, r.strategy, 2), Rat(1, 3));
  EXPECT_TRUE(r.nonunique);  // call-vs-1 may be anything in [1/2, 2/3]
}

TEST(NashTest, MatrixGames) {
  const auto mp = form(testing::matching_pennies());
  const auto r = solve_nash(mp);
  EXPECT_EQ(r.game_value, Rat(0));
  EXPECT_EQ(realization_to_behavioral(mp, r.strategy).probability("cols", "c0"), Rat(1, 2));
  EXPECT_EQ(realization_to_behavioral(mp, *r.opponent_witness).probability("rows", "r0"),
            Rat(1, 2));
  EXPECT_FALSE(r.nonunique);
  EXPECT_EQ(solve_nash(form(efg::make_matrix_game({{Rat(-7, 3)}}))).game_value, Rat(-7, 3));
}

TEST(NashTest, KuhnAgainstCfr) {
  const auto g = efg::make_kuhn();
  const auto r = solve_nash(form(g));
  EXPECT_EQ(r.game_value, Rat(-1, 18));
  const auto oracle = testing::cfr(g, 4000);
  EXPECT_LT(oracle.exploitability, 1e-2);
  EXPECT_NEAR(oracle.value, -1.0 / 18.0, oracle.exploitability + 1e-9);
}

TEST(NashTest, MonotoneClairvoyanceValue) {
  Rat previous(-1);
  for (int n = 1; n <= 10; ++n) {
    const auto v = solve_nash(form(efg::make_clairvoyance(n))).game_value;
    EXPECT_EQ(v, Rat(n, 2 * (1 + n))) << n;
    EXPECT_GT(v, previous);
    previous = v;
  }
}

TEST(OpeTest, ClairvoyanceBetOne) {
  const auto sf = form(efg::make_clairvoyance(2));
  const auto r = solve_ope(sf, observe(sf, {"bet1"}));
  EXPECT_EQ(r.concept_tag, Concept::kOpe);
  EXPECT_EQ(call(sf, r.strategy, 1), Rat(5, 9));
  EXPECT_EQ(call(sf, r.strategy, 2), Rat(1, 3));
  EXPECT_EQ(r.game_value, Rat(1, 3));
  EXPECT_EQ(r.w, Rat(1, 18));
  EXPECT_FALSE(r.nonunique);
}

TEST(OpeTest, ClairvoyanceBetTwoIsSlack) {
  const auto sf = form(efg::make_clairvoyance(2));
  const auto r = solve_ope(sf, observe(sf, {"bet2"}));
  EXPECT_EQ(r.w, Rat(0));
  EXPECT_EQ(call(sf, r.strategy, 2), Rat(1, 3));
  EXPECT_EQ(verify::certify_nash(sf, *r.opponent_witness, r.strategy).gap, Rat(0));
  EXPECT_TRUE(r.nonunique);
}

TEST(OpeTest, ClairvoyanceThreeMatchesEqualizer) {
  // Grid oracle on the 1/36 grid: the bet-1 call probability where the two
  // mistakes cost the same.
  std::vector<Rat> equalizers;
  for (int k = 0; k <= 36; ++k) {
    const auto m = verify::mistake_cost(Rat(k, 36), 1, 3);
    if (m.loss_winning == m.loss_losing) equalizers.push_back(Rat(k, 36));
  }
  ASSERT_EQ(equalizers, (std::vector<Rat>{Rat(7, 12)}));

  const auto sf = form(efg::make_clairvoyance(3));
  const auto r = solve_ope(sf, observe(sf, {"bet1"}));
  EXPECT_EQ(call(sf, r.strategy, 1), equalizers.front());
}

TEST(OpeTest, DimensionMismatch) {
  const auto sf = form(efg::make_clairvoyance(2));
  ObservationVector c{Player::kOne, {Rat(0), Rat(1)}};
  EXPECT_EQ(error_of([&] { solve_ope(sf, c); }), Errc::kDimensionMismatch);
  ObservationVector zero{Player::kOne, std::vector<Rat>(7)};
  EXPECT_EQ(error_of([&] { solve_ope(sf, zero); }), Errc::kInvalidArgument);
}

TEST(OpeAtEpsTest, ClairvoyanceTenth) {
  const auto sf = form(efg::make_clairvoyance(2));
  const auto c = observe(sf, {"bet1"});
  const auto e = solve_ope_at_eps(sf, c, Rat(1, 10));
  EXPECT_EQ(dot(c.c, e.x1.x), Rat(1, 10));
  EXPECT_EQ(call(sf, e.x2, 1), Rat(5, 9));
  EXPECT_EQ(seqform::plan_violation(sf, e.x1), "");
  EXPECT_EQ(e.objective, e.v[0] + Rat(1, 10) * e.w);
}

TEST(OpeAtEpsTest, Errors) {
  const auto sf = form(efg::make_clairvoyance(2));
  const auto c = observe(sf, {"bet1"});
  // c marks one sequence per hand, so cᵀx1 reaches 2 when both hands bet 1.
  EXPECT_EQ(error_of([&] { solve_ope_at_eps(sf, c, Rat(5, 2)); }), Errc::kInfeasible);
  EXPECT_EQ(dot(c.c, solve_ope_at_eps(sf, c, Rat(2)).x1.x), Rat(2));
  EXPECT_EQ(error_of([&] { solve_ope_at_eps(sf, c, Rat(0)); }), Errc::kInvalidArgument);
  EXPECT_EQ(error_of([&] { solve_ope_at_eps(sf, c, Rat(-1, 2)); }), Errc::kInvalidArgument);
  EXPECT_NO_THROW(solve_ope_at_eps(sf, c, Rat(1)));
}

TEST(OpeAtEpsTest, TrembleBinds) {
  const auto sf = form(efg::make_clairvoyance(2));
  const auto c = observe(sf, {"bet1"});
  for (const Rat eps : {Rat(1, 100), Rat(1, 10'000), Rat(1, 1'000'000)}) {
    EXPECT_EQ(dot(c.c, solve_ope_at_eps(sf, c, eps).x1.x), eps);
  }
}

TEST(OpeAtEpsTest, ObservedPlayerIsOptimalInPerturbedGame) {
  const auto sf = form(efg::make_clairvoyance(2));
  const auto c = observe(sf, {"bet1"});
  const Rat eps(1, 50);
  const auto e = solve_ope_at_eps(sf, c, eps);
  // x1 attains the inner minimum of x2ᵀA2x1 over the eps-constrained plans.
  EXPECT_EQ(seqform::expected_value(sf, e.x1, e.x2), testing::inner_minimum(sf, c, eps, e.x2));
}

std::vector<testing::Fixture> all_fixtures() {
  auto f = testing::random_and_kuhn_fixtures();
  for (auto& g : testing::clairvoyance_fixtures()) f.push_back(std::move(g));
  return f;
}

TEST(PropertyTest, RefinementsAreNash) {
  for (const auto& f : all_fixtures()) {
    const auto sf = form(f.game);
    const auto c = observe(sf, f.observed);
    const auto ope = solve_ope(sf, c);
    const auto osqpe = solve_osqpe(sf, Player::kTwo, sf.max_depth(Player::kOne));
    const auto ef = efthpe_limit(sf, TrembleSchedule::standard());
    for (const auto* r : {&ope, &osqpe, &ef}) {
      EXPECT_EQ(seqform::plan_violation(sf, r->strategy), "") << f.name;
      const auto nash = solve_nash(sf);
      EXPECT_EQ(verify::certify_nash(sf, *nash.opponent_witness, r->strategy).gap, Rat(0))
          << f.name << " " << concept_name(r->concept_tag);
      EXPECT_EQ(r->game_value, nash.game_value) << f.name;
    }
  }
}

TEST(PropertyTest, Duality) {
  for (const auto& f : all_fixtures()) {
    const auto sf = form(f.game);
    const auto c = observe(sf, f.observed);
    const Rat eps(1, 100);
    const auto e = solve_ope_at_eps(sf, c, eps);
    EXPECT_EQ(e.objective, testing::inner_minimum(sf, c, eps, e.x2)) << f.name;
  }
}

TEST(PropertyTest, LexicographicMatchesSmallEps) {
  int compared = 0;
  for (const auto& f : all_fixtures()) {
    const auto sf = form(f.game);
    const auto c = observe(sf, f.observed);
    const auto a = solve_ope_at_eps(sf, c, Rat(1, 1'000'000));
    const auto b = solve_ope_at_eps(sf, c, Rat(1, 100'000'000));
    if (a.x2 != b.x2) continue;
    ++compared;
    const auto lex = solve_ope(sf, c);
    EXPECT_EQ(lex.strategy, b.x2) << f.name;
  }
  EXPECT_GT(compared, 0);
}

TEST(OsqpeTest, Clairvoyance) {
  const auto sf = form(efg::make_clairvoyance(2));
  const auto r = solve_osqpe(sf, Player::kTwo, 1);
  EXPECT_EQ(call(sf, r.strategy, 1), Rat(2, 3));
  EXPECT_EQ(call(sf, r.strategy, 2), Rat(1, 3));
  EXPECT_EQ(r.game_value, Rat(1, 3));
  EXPECT_FALSE(r.nonunique);
  EXPECT_EQ(solve_osqpe(sf, Player::kTwo, 4).strategy, r.strategy);
}

TEST(OsqpeTest, KuhnBothSides) {
  const auto sf = form(efg::make_kuhn());
  const auto nash = solve_nash(sf);
  const auto two = solve_osqpe(sf, Player::kTwo, 2);
  EXPECT_EQ(two.game_value, Rat(-1, 18));
  EXPECT_EQ(verify::certify_nash(sf, *nash.opponent_witness, two.strategy).gap, Rat(0));
  const auto one = solve_osqpe(sf, Player::kOne, 1);
  EXPECT_EQ(one.strategy.player, Player::kOne);
  EXPECT_EQ(one.game_value, Rat(-1, 18));
  EXPECT_EQ(verify::certify_nash(sf, one.strategy, nash.strategy).gap, Rat(0));
}

TEST(OsqpeTest, DepthErrors) {
  const auto sf = form(efg::make_kuhn());
  EXPECT_EQ(error_of([&] { solve_osqpe(sf, Player::kTwo, 1); }), Errc::kDimensionMismatch);
  EXPECT_EQ(error_of([&] { solve_osqpe(sf, Player::kTwo, 0); }), Errc::kInvalidArgument);
}

TEST(PerturbedTest, ClairvoyanceHundredth) {
  const auto sf = form(efg::make_clairvoyance(2));
  const Rat eps(1, 100);
  const auto p = solve_perturbed(sf, tremble_bounds(sf, Player::kOne, eps),
                                 tremble_bounds(sf, Player::kTwo, eps));
  EXPECT_EQ(call(sf, p.x2, 1), Rat(2, 3));
  for (std::size_t s = 1; s < p.x1.x.size(); ++s) EXPECT_GE(p.x1.x[s], eps);
  for (std::size_t s = 1; s < p.x2.x.size(); ++s) EXPECT_GE(p.x2.x[s], eps);
}

TEST(PerturbedTest, ZeroBoundsIsNash) {
  for (const auto& g : {efg::make_clairvoyance(2), efg::make_kuhn(), efg::make_random_osefg(8)}) {
    const auto sf = form(g);
    const auto p = solve_perturbed(sf, zero_bounds(sf, Player::kOne), zero_bounds(sf, Player::kTwo));
    const auto n = solve_nash(sf);
    EXPECT_EQ(p.x2, n.strategy);
    EXPECT_EQ(p.x1, *n.opponent_witness);
    EXPECT_EQ(p.value, n.game_value);
  }
}

TEST(PerturbedTest, InfeasibleBounds) {
  const auto sf = form(efg::make_clairvoyance(2));
  auto l1 = tremble_bounds(sf, Player::kOne, Rat(2, 5));  // three actions at 2/5 each
  EXPECT_EQ(error_of([&] { solve_perturbed(sf, l1, zero_bounds(sf, Player::kTwo)); }),
            Errc::kInfeasible);
  EXPECT_EQ(error_of([&] {
              solve_perturbed(sf, zero_bounds(sf, Player::kTwo), zero_bounds(sf, Player::kOne));
            }),
            Errc::kPlayerMismatch);
}

TEST(TrembleTest, ScheduleAndBounds) {
  const auto s = TrembleSchedule::standard();
  ASSERT_EQ(s.values().size(), 8u);
  EXPECT_EQ(s.values().front(), Rat(1, 10));
  EXPECT_EQ(s.values().back(), Rat(1, 100'000'000));
  EXPECT_THROW(TrembleSchedule({Rat(1, 10), Rat(1, 10)}), Error);
  EXPECT_THROW(TrembleSchedule({Rat(1, 10), Rat(0)}), Error);
  EXPECT_THROW(TrembleSchedule({Rat(1, 100), Rat(1, 10)}), Error);

  const auto sf = form(efg::make_kuhn());
  const auto l = tremble_bounds(sf, Player::kOne, Rat(1, 10));
  for (int q = 0; q < sf.num_sequences(Player::kOne); ++q) {
    EXPECT_EQ(l.bound[q], pow(Rat(1, 10), sf.sequences(Player::kOne)[q].depth));
  }
}

TEST(EfthpeTest, Clairvoyance) {
  const auto sf = form(efg::make_clairvoyance(2));
  const auto r = efthpe_limit(sf, TrembleSchedule::standard());
  EXPECT_EQ(call(sf, r.strategy, 1), Rat(2, 3));
  ASSERT_TRUE(r.converged_at);
  EXPECT_GE(*r.converged_at, Rat(1, 10'000));
  EXPECT_EQ(r.trace.front().eps, Rat(1, 10));
}

TEST(EfthpeTest, MatchingPenniesConvergesAtSecondStep) {
  const auto sf = form(testing::matching_pennies());
  const auto r = efthpe_limit(sf, TrembleSchedule::standard());
  EXPECT_EQ(r.trace.size(), 2u);
  EXPECT_EQ(*r.converged_at, Rat(1, 100));
  for (const auto& t : r.trace) {
    EXPECT_EQ(realization_to_behavioral(sf, t.x2).probability("cols", "c0"), Rat(1, 2));
  }
}

TEST(EfthpeTest, Errors) {
  const auto sf = form(efg::make_clairvoyance(2));
  EXPECT_EQ(error_of([&] { efthpe_limit(sf, TrembleSchedule({Rat(1, 10)})); }),
            Errc::kInvalidArgument);
}

TEST(ConceptNameTest, RoundTrip) {
  for (auto c : {Concept::kNash, Concept::kOpe, Concept::kOsqpe, Concept::kEfthpe,
                 Concept::kPerturbed}) {
    EXPECT_EQ(parse_concept(concept_name(c)), c);
  }
  EXPECT_THROW(parse_concept("qpe"), Error);
}

TEST(IntervalSweepTest, AllConceptsInsideInterval) {
  for (int n = 1; n <= 5; ++n) {
    const auto sf = form(efg::make_clairvoyance(n));
    std::vector<RealizationPlan> plans{
        solve_nash(sf).strategy, solve_ope(sf, observe(sf, {"bet1"})).strategy,
        solve_osqpe(sf, Player::kTwo, 1).strategy,
        efthpe_limit(sf, TrembleSchedule::standard()).strategy};
    for (const auto& x2 : plans) {
      EXPECT_TRUE(verify::clairvoyance_interval_check(realization_to_behavioral(sf, x2), n).pass())
          << n;
    }
  }
}

}  // namespace
}  // namespace opeq::refine
