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

#include "opeq/numeric/rational.hpp"

#include <cctype>

#include "opeq/error.hpp"

namespace opeq {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rat::Rat(std::int64_t value) {
  // mpz_class has no int64 constructor on every platform; go through text.
  value_ = mpq_class(mpz_class(std::to_string(value)));
}

Rat::Rat(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(Errc::kDivisionByZero, "zero denominator");
  value_ = mpq_class(mpz_class(std::to_string(num)),
                     mpz_class(std::to_string(den)));
  value_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_part = body.substr(0, slash);
  const std::string_view den_part =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!all_digits(num_part) || !all_digits(den_part)) {
    throw Error(Errc::kParse, "malformed rational '" + std::string(text) + "'");
  }
  mpz_class num(std::string(num_part), 10);
  mpz_class den(std::string(den_part), 10);
  if (den == 0) {
    throw Error(Errc::kDivisionByZero,
                "zero denominator in '" + std::string(text) + "'");
  }
  if (negative) num = -num;
  mpq_class q(num, den);
  q.canonicalize();
  return Rat(std::move(q));
}

std::string Rat::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rat::numerator_str() const { return value_.get_num().get_str(); }
std::string Rat::denominator_str() const { return value_.get_den().get_str(); }

Rat& Rat::operator+=(const Rat& other) {
  value_ += other.value_;
  return *this;
}

Rat& Rat::operator-=(const Rat& other) {
  value_ -= other.value_;
  return *this;
}

Rat& Rat::operator*=(const Rat& other) {
  value_ *= other.value_;
  return *this;
}

Rat& Rat::operator/=(const Rat& other) {
  if (other.is_zero()) throw Error(Errc::kDivisionByZero, "division by zero");
  value_ /= other.value_;
  return *this;
}

Rat Rat::operator-() const { return Rat(mpq_class(-value_)); }

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

Rat pow(const Rat& base, unsigned exponent) {
  Rat result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }
Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace opeq
