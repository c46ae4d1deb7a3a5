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

#ifndef TROPGAL_RATIONAL_HPP_
#define TROPGAL_RATIONAL_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tropgal {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Canonical text form: "n" for integers, "p/q" otherwise (q > 0, gcd = 1).
std::string to_string(const Rational& r);

/// Parses "p/q", a plain integer, or a decimal literal ("-1.25"). Exact.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// An exact rational extended by +inf and -inf, totally ordered with
/// -inf < finite < +inf. Arithmetic is exact; (+inf) + (-inf) is a hard
/// error because no supported construction produces it.
class ExtRat {
 public:
  enum class Kind : std::uint8_t { NegInf = 0, Finite = 1, PosInf = 2 };

  ExtRat() : kind_(Kind::Finite), value_(0) {}
  ExtRat(long long n) : kind_(Kind::Finite), value_(n) {}  // NOLINT(runtime/explicit)
  ExtRat(Rational r) : kind_(Kind::Finite), value_(std::move(r)) {}  // NOLINT

  static ExtRat pos_inf() { return ExtRat(Kind::PosInf); }
  static ExtRat neg_inf() { return ExtRat(Kind::NegInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  bool is_infinite() const { return kind_ != Kind::Finite; }

  /// Finite value. Throws std::domain_error when infinite.
  const Rational& value() const {
    if (!is_finite()) throw std::domain_error("ExtRat: value() on infinite");
    return value_;
  }

  friend ExtRat operator+(const ExtRat& a, const ExtRat& b);
  friend ExtRat operator-(const ExtRat& a, const ExtRat& b);
  ExtRat operator-() const;

  /// Finite scalar times extended value. c must be nonzero when the value is
  /// infinite (0 * inf is undefined here).
  friend ExtRat operator*(const Rational& c, const ExtRat& a);

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    if (a.kind_ != b.kind_) return false;
    return !a.is_finite() || a.value_ == b.value_;
  }
  friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
  friend bool operator<(const ExtRat& a, const ExtRat& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
    return a.is_finite() && a.value_ < b.value_;
  }
  friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
  friend bool operator<=(const ExtRat& a, const ExtRat& b) { return !(b < a); }
  friend bool operator>=(const ExtRat& a, const ExtRat& b) { return !(a < b); }

  std::string str() const;

  /// Accepts the forms of parse_rational plus "inf" and "-inf".
  static ExtRat parse(std::string_view text);

 private:
  explicit ExtRat(Kind k) : kind_(k), value_(0) {}

  Kind kind_;
  Rational value_;
};

inline ExtRat min(const ExtRat& a, const ExtRat& b) { return a < b ? a : b; }
inline ExtRat max(const ExtRat& a, const ExtRat& b) { return a < b ? b : a; }
ExtRat abs(const ExtRat& a);

}  // namespace tropgal

#endif  // TROPGAL_RATIONAL_HPP_
