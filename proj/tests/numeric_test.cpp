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

#include <random>
#include <string>

#include "opeq/error.hpp"
#include "opeq/numeric/rational.hpp"
#include "opeq/numeric/sparse.hpp"

namespace opeq {
namespace {

std::string random_digits(std::mt19937_64& rng, int max_len) {
  const int len = 1 + static_cast<int>(rng() % max_len);
  std::string s(1, static_cast<char>('1' + rng() % 9));
  for (int i = 1; i < len; ++i) s += static_cast<char>('0' + rng() % 10);
  return s;
}

Rat random_rat(std::mt19937_64& rng) {
  std::string t = (rng() % 2 ? "-" : "") + random_digits(rng, 30) + "/" + random_digits(rng, 30);
  return Rat::parse(t);
}

TEST(RatTest, Arithmetic) {
  EXPECT_EQ(Rat(1, 2) + Rat(1, 3), Rat(5, 6));
  EXPECT_EQ(Rat(2, 3) * Rat(3, 2), Rat(1));
  EXPECT_EQ((Rat(2, 3) * Rat(3, 2)).str(), "1");
  EXPECT_EQ(Rat(1, 2) - Rat(3, 4), Rat(-1, 4));
  EXPECT_EQ(-Rat(5, 9), Rat(-5, 9));
  EXPECT_EQ(Rat(5, 9) / Rat(5, 3), Rat(1, 3));
}

TEST(RatTest, DivisionByZero) {
  try {
    (void)(Rat(1) / Rat(0));
    FAIL() << "no throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kDivisionByZero);
  }
  EXPECT_THROW(Rat(1, 0), Error);
}

TEST(RatTest, CanonicalForm) {
  EXPECT_EQ(Rat(2, 4).str(), "1/2");
  EXPECT_EQ(Rat(3, -6).str(), "-1/2");
  EXPECT_EQ(Rat(0, 7).str(), "0");
  EXPECT_EQ(Rat(0, 7).denominator_str(), "1");
  EXPECT_EQ(Rat(-10, -4).numerator_str(), "5");
  EXPECT_EQ(Rat(-10, -4).denominator_str(), "2");
}

TEST(RatTest, Parse) {
  EXPECT_EQ(Rat::parse("5/9"), Rat(5, 9));
  EXPECT_EQ(Rat::parse("2/4").str(), "1/2");
  EXPECT_EQ(Rat::parse("-7"), Rat(-7));
  EXPECT_EQ(Rat::parse("+3/6"), Rat(1, 2));
  EXPECT_EQ(Rat::parse("0/5").str(), "0");
  for (const char* bad : {"1/0", "", "abc", "1/", "/2", "1/-2", "1.5", "1/2/3", " 1", "--1"}) {
    EXPECT_THROW(Rat::parse(bad), Error) << bad;
  }
}

TEST(RatTest, OrderingMatchesReals) {
  EXPECT_LT(Rat(1, 3), Rat(1, 2));
  EXPECT_LT(Rat(-1, 2), Rat(-1, 3));
  EXPECT_GT(Rat(5, 9), Rat(1, 2));
  EXPECT_EQ(min(Rat(2, 3), Rat(5, 9)), Rat(5, 9));
  EXPECT_EQ(max(Rat(2, 3), Rat(5, 9)), Rat(2, 3));
  EXPECT_EQ(abs(Rat(-2, 3)), Rat(2, 3));
  EXPECT_EQ(pow(Rat(1, 10), 3), Rat(1, 1000));
  EXPECT_EQ(pow(Rat(7, 3), 0), Rat(1));
}

TEST(RatTest, HugeOperandProperties) {
  std::mt19937_64 rng(20260101);
  for (int i = 0; i < 500; ++i) {
    const Rat a = random_rat(rng);
    const Rat b = random_rat(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * (Rat(1) / a), Rat(1));
    EXPECT_EQ(Rat::parse(a.str()), a);
    EXPECT_EQ((a - b) + b, a);
    EXPECT_EQ((a <=> b) == std::strong_ordering::less, (a - b).sign() < 0);
  }
}

TEST(SparseTest, MultiplyAndTranspose) {
  SparseMatrix m(2, 3);
  m.add(0, 0, Rat(1));
  m.add(0, 2, Rat(1, 2));
  m.add(1, 1, Rat(-2));
  m.add(1, 1, Rat(1));
  EXPECT_EQ(m.at(1, 1), Rat(-1));
  EXPECT_EQ(m.at(1, 2), Rat(0));
  EXPECT_FALSE(m.contains(1, 2));

  const std::vector<Rat> x{Rat(2), Rat(3), Rat(4)};
  EXPECT_EQ(m.multiply(x), (std::vector<Rat>{Rat(4), Rat(-3)}));
  const std::vector<Rat> y{Rat(1), Rat(1)};
  EXPECT_EQ(m.multiply_transposed(y), (std::vector<Rat>{Rat(1), Rat(-1), Rat(1, 2)}));
  EXPECT_EQ(m.transposed().to_dense(), (std::vector<std::vector<Rat>>{
                                           {Rat(1), Rat(0)}, {Rat(0), Rat(-1)}, {Rat(1, 2), Rat(0)}}));
  EXPECT_EQ(dot(SparseVector{{0, Rat(2)}, {2, Rat(1, 4)}}, x), Rat(5));
  EXPECT_EQ(densify({{1, Rat(3)}}, 3), (std::vector<Rat>{Rat(0), Rat(3), Rat(0)}));
}

}  // namespace
}  // namespace opeq
