// Copyright 2026 The Authors.
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

#pragma once

/**
 * @file trop_num.h
 * @brief Exact tropical numbers over the min-plus semiring.
 *
 * A TropNum is either an exact rational (always kept in reduced form) or
 * the distinguished element INF. Tropical addition is min, tropical
 * multiplication is ordinary addition with INF absorbing:
 *
 *   oplus(a, b)  = min(a, b)     identity INF
 *   otimes(a, b) = a + b         identity 0, INF absorbing
 *
 * "Minimum achieved at least twice" is an exact equality test, so nothing
 * in this library ever touches floating point.
 */

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tropsp {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Thrown for malformed value tokens; carries the offending token.
class ValueParseError : public std::invalid_argument {
 public:
  explicit ValueParseError(std::string token);
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

class TropNum {
 public:
  /// Default-constructed value is INF (the tropical zero).
  TropNum() = default;
  TropNum(const Rational& value);  // NOLINT(google-explicit-constructor)
  TropNum(long value);             // NOLINT(google-explicit-constructor)
  TropNum(int value) : TropNum(static_cast<long>(value)) {}  // NOLINT

  static TropNum inf() { return TropNum(); }

  /// Accepts an optional sign followed by an integer ("-3"), a decimal
  /// ("1.25"), a fraction ("7/4"), or the token "inf".
  static TropNum parse(std::string_view token);

  bool is_inf() const { return !finite_; }
  bool is_finite() const { return finite_; }

  /// Throws std::domain_error on INF.
  const Rational& value() const;

  /// Canonical text: "inf", "3", "-1/2".
  std::string str() const;

  friend bool operator==(const TropNum& a, const TropNum& b);
  friend std::strong_ordering operator<=>(const TropNum& a, const TropNum& b);

 private:
  bool finite_ = false;
  Rational value_;
};

/// Tropical sum: min under the total order (INF is the identity).
TropNum oplus(const TropNum& a, const TropNum& b);
/// Tropical product: ordinary sum, INF absorbing.
TropNum otimes(const TropNum& a, const TropNum& b);

/// Same as otimes; reads naturally in formulas such as mu(T - i) + x(i).
inline TropNum operator+(const TropNum& a, const TropNum& b) {
  return otimes(a, b);
}
TropNum& operator+=(TropNum& a, const TropNum& b);

std::ostream& operator<<(std::ostream& os, const TropNum& x);

struct MinTwice {
  bool verdict = true;
  TropNum min;
  std::size_t multiplicity = 0;
};

/// True iff the minimum is INF (the empty sequence included) or at least two
/// terms attain the finite minimum. The multiplicity counts terms equal to
/// the minimum, INF terms included when the minimum is INF.
MinTwice min_achieved_twice(std::span<const TropNum> terms);

}  // namespace tropsp
