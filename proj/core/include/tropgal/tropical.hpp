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

#ifndef TROPGAL_TROPICAL_HPP_
#define TROPGAL_TROPICAL_HPP_

#include <string>

#include "tropgal/rational.hpp"

namespace tropgal {

/// Scalar of the tropical semifield (Q ∪ {-inf}, max, +). The additive
/// identity is -inf, the multiplicative identity is 0. +inf is excluded.
class TropScalar {
 public:
  TropScalar() : v_(0) {}
  TropScalar(long long n) : v_(n) {}           // NOLINT(runtime/explicit)
  TropScalar(Rational r) : v_(std::move(r)) {} // NOLINT(runtime/explicit)
  explicit TropScalar(const ExtRat& v) : v_(v) {
    if (v.is_pos_inf()) throw std::domain_error("TropScalar: +inf excluded");
  }

  static TropScalar zero() { return TropScalar(ExtRat::neg_inf()); }
  static TropScalar one() { return TropScalar(0); }

  const ExtRat& raw() const { return v_; }
  bool is_zero() const { return v_.is_neg_inf(); }
  bool is_finite() const { return v_.is_finite(); }

  friend bool operator==(const TropScalar& a, const TropScalar& b) { return a.v_ == b.v_; }
  friend bool operator!=(const TropScalar& a, const TropScalar& b) { return a.v_ != b.v_; }
  friend bool operator<(const TropScalar& a, const TropScalar& b) { return a.v_ < b.v_; }

  std::string str() const { return v_.str(); }

 private:
  ExtRat v_;
};

/// a ⊕ b = max(a, b)
inline TropScalar trop_add(const TropScalar& a, const TropScalar& b) {
  return a < b ? b : a;
}

/// a ⊙ b = a + b, with -inf absorbing.
inline TropScalar trop_mul(const TropScalar& a, const TropScalar& b) {
  if (a.is_zero() || b.is_zero()) return TropScalar::zero();
  return TropScalar(a.raw() + b.raw());
}

/// Multiplicative inverse (negation). Throws on the zero element.
inline TropScalar trop_inv(const TropScalar& a) {
  if (a.is_zero()) throw std::domain_error("trop_inv: zero element has no inverse");
  return TropScalar(-a.raw());
}

/// The natural order: a >= b iff a ⊕ b = a. Total on TropScalar.
inline bool trop_geq(const TropScalar& a, const TropScalar& b) {
  return trop_add(a, b) == a;
}

/// Collapse onto the boolean subsemifield B = {-inf, 0}: every nonzero
/// element maps to 0. A semiring homomorphism, and not injective.
inline TropScalar bool_collapse(const TropScalar& a) {
  return a.is_zero() ? TropScalar::zero() : TropScalar::one();
}

/// True iff the k iterates s, lambda*s, lambda^2*s, ... (classical
/// multiplication) are pairwise distinct. Requires lambda > 0 and s finite
/// and nonzero as a rational.
bool scaling_orbit_distinct(const Rational& lambda, const TropScalar& s, unsigned k);

}  // namespace tropgal

#endif  // TROPGAL_TROPICAL_HPP_
