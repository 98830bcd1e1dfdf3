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

#include "tropsp/trop_num.h"

#include <cctype>
#include <ostream>

namespace tropsp {

ValueParseError::ValueParseError(std::string token)
    : std::invalid_argument("malformed value token '" + token + "'"),
      token_(std::move(token)) {}

TropNum::TropNum(const Rational& value) : finite_(true), value_(value) {
  value_.canonicalize();
}

TropNum::TropNum(long value) : finite_(true), value_(value) {}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_digits(std::string_view s) {
  return BigInt(std::string(s), 10);
}

}  // namespace

TropNum TropNum::parse(std::string_view token) {
  std::string_view s = token;
  if (s == "inf" || s == "+inf") return TropNum::inf();

  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ValueParseError(std::string(token));
    }
    BigInt d = parse_digits(den);
    if (d == 0) throw ValueParseError(std::string(token));
    value = Rational(parse_digits(num), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) {
      throw ValueParseError(std::string(token));
    }
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    value = Rational(parse_digits(whole) * scale + parse_digits(frac), scale);
  } else {
    if (!all_digits(s)) throw ValueParseError(std::string(token));
    value = Rational(parse_digits(s));
  }
  value.canonicalize();
  if (negative) value = -value;
  return TropNum(value);
}

const Rational& TropNum::value() const {
  if (!finite_) throw std::domain_error("TropNum::value() on INF");
  return value_;
}

std::string TropNum::str() const {
  if (!finite_) return "inf";
  return value_.get_str();
}

bool operator==(const TropNum& a, const TropNum& b) {
  if (a.finite_ != b.finite_) return false;
  return !a.finite_ || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const TropNum& a, const TropNum& b) {
  if (!a.finite_ || !b.finite_) {
    return static_cast<int>(!a.finite_) <=> static_cast<int>(!b.finite_);
  }
  int c = cmp(a.value_, b.value_);
  return c <=> 0;
}

TropNum oplus(const TropNum& a, const TropNum& b) { return b < a ? b : a; }

TropNum otimes(const TropNum& a, const TropNum& b) {
  if (a.is_inf() || b.is_inf()) return TropNum::inf();
  return TropNum(Rational(a.value() + b.value()));
}

TropNum& operator+=(TropNum& a, const TropNum& b) {
  a = otimes(a, b);
  return a;
}

std::ostream& operator<<(std::ostream& os, const TropNum& x) {
  return os << x.str();
}

MinTwice min_achieved_twice(std::span<const TropNum> terms) {
  MinTwice out;
  for (const TropNum& t : terms) {
    if (t < out.min) {
      out.min = t;
      out.multiplicity = 1;
    } else if (t == out.min) {
      ++out.multiplicity;
    }
  }
  out.verdict = out.min.is_inf() || out.multiplicity >= 2;
  return out;
}

}  // namespace tropsp
