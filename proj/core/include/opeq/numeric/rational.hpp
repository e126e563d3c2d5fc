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

#ifndef OPEQ_NUMERIC_RATIONAL_HPP_
#define OPEQ_NUMERIC_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace opeq {

// Exact rational number, always held in lowest terms with a positive
// denominator. Zero is 0/1. The textual form is "num/den", or just "num" when
// the denominator is 1.
class Rat {
 public:
  Rat() = default;
  Rat(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rat(std::int64_t num, std::int64_t den);

  // Accepts an optional sign, decimal digits, and an optional "/" followed by
  // a positive decimal integer. Throws Error{kParse} on malformed text and
  // Error{kDivisionByZero} on a zero denominator.
  static Rat parse(std::string_view text);

  std::string str() const;
  std::string numerator_str() const;
  std::string denominator_str() const;

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  // Lossy; for diagnostics and extrapolation heuristics only.
  double to_double() const { return value_.get_d(); }

  Rat& operator+=(const Rat& other);
  Rat& operator-=(const Rat& other);
  Rat& operator*=(const Rat& other);
  Rat& operator/=(const Rat& other);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const;

  friend bool operator==(const Rat& a, const Rat& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rat(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_{0};
};

Rat abs(const Rat& r);
Rat pow(const Rat& base, unsigned exponent);
Rat min(const Rat& a, const Rat& b);
Rat max(const Rat& a, const Rat& b);

}  // namespace opeq

#endif  // OPEQ_NUMERIC_RATIONAL_HPP_
