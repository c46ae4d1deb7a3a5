// Copyright 2026 The tropgal Authors
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

#include "tropgal/rational.hpp"

#include <cctype>

namespace tropgal {

std::string to_string(const Rational& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

BigInt parse_bigint(std::string_view s) {
  if (!is_integer_token(s)) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  return BigInt(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const BigInt num = parse_bigint(text.substr(0, slash));
    const BigInt den = parse_bigint(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  const auto dot = text.find('.');
  if (dot != std::string_view::npos) {
    std::string_view head = text.substr(0, dot);
    std::string_view tail = text.substr(dot + 1);
    if (tail.empty() || !is_integer_token(tail) || tail[0] == '-' || tail[0] == '+') {
      throw std::invalid_argument("malformed decimal: '" + std::string(text) + "'");
    }
    bool negative = !head.empty() && head[0] == '-';
    BigInt whole = 0;
    if (!head.empty() && head != "-" && head != "+") whole = parse_bigint(head);
    if (whole < 0) whole = -whole;
    BigInt scale = 1;
    for (std::size_t i = 0; i < tail.size(); ++i) scale *= 10;
    const BigInt frac = parse_bigint(tail);
    BigInt num = whole * scale + frac;
    if (negative) num = -num;
    return Rational(num, scale);
  }
  return Rational(parse_bigint(text));
}

ExtRat operator+(const ExtRat& a, const ExtRat& b) {
  if (a.is_finite() && b.is_finite()) return ExtRat(a.value_ + b.value_);
  if (a.is_pos_inf() || b.is_pos_inf()) {
    if (a.is_neg_inf() || b.is_neg_inf()) {
      throw std::domain_error("ExtRat: (+inf) + (-inf)");
    }
    return ExtRat::pos_inf();
  }
  return ExtRat::neg_inf();
}

ExtRat operator-(const ExtRat& a, const ExtRat& b) { return a + (-b); }

ExtRat ExtRat::operator-() const {
  switch (kind_) {
    case Kind::PosInf: return neg_inf();
    case Kind::NegInf: return pos_inf();
    default: return ExtRat(-value_);
  }
}

ExtRat operator*(const Rational& c, const ExtRat& a) {
  if (a.is_finite()) return ExtRat(c * a.value_);
  if (c == 0) throw std::domain_error("ExtRat: 0 * inf");
  const bool flip = c < 0;
  if (a.is_pos_inf()) return flip ? ExtRat::neg_inf() : ExtRat::pos_inf();
  return flip ? ExtRat::pos_inf() : ExtRat::neg_inf();
}

ExtRat abs(const ExtRat& a) { return a < ExtRat(0) ? -a : a; }

std::string ExtRat::str() const {
  switch (kind_) {
    case Kind::PosInf: return "inf";
    case Kind::NegInf: return "-inf";
    default: return to_string(value_);
  }
}

ExtRat ExtRat::parse(std::string_view text) {
  if (text == "inf") return pos_inf();
  if (text == "-inf") return neg_inf();
  return ExtRat(parse_rational(text));
}

}  // namespace tropgal
