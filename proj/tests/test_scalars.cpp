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

#include <doctest.h>

#include <set>
#include <vector>

#include "tropgal/random_fn.hpp"
#include "tropgal/tropical.hpp"

using namespace tropgal;

namespace {

std::vector<TropScalar> sample_scalars(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<TropScalar> out;
  out.push_back(TropScalar::zero());
  out.push_back(TropScalar::one());
  while (static_cast<int>(out.size()) < count) {
    if (rng.below(8) == 0) {
      out.push_back(TropScalar::zero());
    } else {
      out.push_back(TropScalar(Rational(rng.int_in(-24, 24), rng.int_in(1, 5))));
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("scalars") {

TEST_CASE("extended rationals order and arithmetic") {
  CHECK(ExtRat::neg_inf() < ExtRat(Rational(-1000000)));
  CHECK(ExtRat(Rational(1000000)) < ExtRat::pos_inf());
  CHECK(ExtRat(Rational(1, 3)) + ExtRat(Rational(1, 6)) == ExtRat(Rational(1, 2)));
  CHECK(ExtRat::pos_inf() + ExtRat(5) == ExtRat::pos_inf());
  CHECK(ExtRat::neg_inf() + ExtRat(5) == ExtRat::neg_inf());
  CHECK_THROWS_AS(ExtRat::pos_inf() + ExtRat::neg_inf(), std::domain_error);
  CHECK(Rational(3) * ExtRat::pos_inf() == ExtRat::pos_inf());
  CHECK(Rational(-2) * ExtRat::pos_inf() == ExtRat::neg_inf());
}

TEST_CASE("extended rational text round-trips exactly") {
  const char* cases[] = {"0", "7", "-3", "5/4", "-22/7", "inf", "-inf"};
  for (const char* c : cases) {
    CHECK(ExtRat::parse(c).str() == c);
  }
  CHECK(ExtRat::parse("1.25") == ExtRat(Rational(5, 4)));
  CHECK(ExtRat::parse("-0.5") == ExtRat(Rational(-1, 2)));
  CHECK(ExtRat::parse("4/8").str() == "1/2");  // canonical form
  CHECK_THROWS_AS(ExtRat::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(ExtRat::parse("abc"), std::invalid_argument);
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Rational r(rng.int_in(-5000, 5000), rng.int_in(1, 400));
    CHECK(parse_rational(to_string(r)) == r);
  }
}

TEST_CASE("tropical operations") {
  CHECK(trop_add(TropScalar(3), TropScalar(5)) == TropScalar(5));
  CHECK(trop_add(TropScalar(7), TropScalar::zero()) == TropScalar(7));
  CHECK(trop_add(TropScalar(4), TropScalar(4)) == TropScalar(4));
  CHECK(trop_mul(TropScalar(3), TropScalar(5)) == TropScalar(8));
  CHECK(trop_mul(TropScalar(9), TropScalar::zero()) == TropScalar::zero());
  CHECK(trop_mul(TropScalar(9), TropScalar::one()) == TropScalar(9));
  CHECK(trop_inv(TropScalar(Rational(2, 3))) == TropScalar(Rational(-2, 3)));
  CHECK_THROWS_AS(trop_inv(TropScalar::zero()), std::domain_error);
}

TEST_CASE("boolean collapse is a non-injective homomorphism") {
  CHECK(bool_collapse(TropScalar(7)) == TropScalar::one());
  CHECK(bool_collapse(TropScalar::zero()) == TropScalar::zero());
  CHECK(bool_collapse(TropScalar::one()) == TropScalar::one());
  // not injective
  CHECK(bool_collapse(TropScalar(1)) == bool_collapse(TropScalar(2)));
  const auto scalars = sample_scalars(21, 24);
  for (const auto& a : scalars) {
    for (const auto& b : scalars) {
      CHECK(bool_collapse(trop_add(a, b)) == trop_add(bool_collapse(a), bool_collapse(b)));
      CHECK(bool_collapse(trop_mul(a, b)) == trop_mul(bool_collapse(a), bool_collapse(b)));
    }
  }
}

TEST_CASE("semifield axioms on sampled triples") {
  const auto scalars = sample_scalars(42, 12);
  for (const auto& a : scalars) {
    for (const auto& b : scalars) {
      CHECK(trop_add(a, b) == trop_add(b, a));
      CHECK(trop_mul(a, b) == trop_mul(b, a));
      for (const auto& c : scalars) {
        CHECK(trop_add(trop_add(a, b), c) == trop_add(a, trop_add(b, c)));
        CHECK(trop_mul(trop_mul(a, b), c) == trop_mul(a, trop_mul(b, c)));
        CHECK(trop_mul(a, trop_add(b, c)) == trop_add(trop_mul(a, b), trop_mul(a, c)));
      }
    }
    CHECK(trop_add(a, TropScalar::zero()) == a);
    CHECK(trop_mul(a, TropScalar::one()) == a);
    CHECK(trop_mul(a, TropScalar::zero()) == TropScalar::zero());
    CHECK(trop_add(a, a) == a);  // idempotency
    if (!a.is_zero()) {
      CHECK(trop_mul(a, trop_inv(a)) == TropScalar::one());
    }
  }
}

TEST_CASE("the natural order is total") {
  const auto scalars = sample_scalars(99, 20);
  for (const auto& a : scalars) {
    for (const auto& b : scalars) {
      CHECK((trop_geq(a, b) || trop_geq(b, a)));
      if (trop_geq(a, b) && trop_geq(b, a)) CHECK(a == b);
    }
  }
}

TEST_CASE("scaling orbits") {
  CHECK(scaling_orbit_distinct(Rational(2), TropScalar(1), 5));
  CHECK_FALSE(scaling_orbit_distinct(Rational(1), TropScalar(1), 2));
  CHECK(scaling_orbit_distinct(Rational(1), TropScalar(5), 1));

  // iterate -2 under x -> x/3 and compare pairwise, then against the library
  {
    std::vector<Rational> iterates;
    Rational cur(-2);
    for (int i = 0; i < 4; ++i) {
      iterates.push_back(cur);
      cur /= 3;
    }
    bool distinct = true;
    for (std::size_t i = 0; i < iterates.size(); ++i) {
      for (std::size_t j = i + 1; j < iterates.size(); ++j) {
        distinct = distinct && iterates[i] != iterates[j];
      }
    }
    CHECK(distinct);
    CHECK(scaling_orbit_distinct(Rational(1, 3), TropScalar(-2), 4) == distinct);
  }

  CHECK_THROWS_AS(scaling_orbit_distinct(Rational(-1), TropScalar(1), 3), std::invalid_argument);
  CHECK_THROWS_AS(scaling_orbit_distinct(Rational(2), TropScalar(0), 3), std::invalid_argument);
  CHECK_THROWS_AS(scaling_orbit_distinct(Rational(2), TropScalar::zero(), 3),
                  std::invalid_argument);
}

TEST_CASE("non-unit scalings give strictly monotone orbits up to 64") {
  const Rational lambdas[] = {Rational(2), Rational(1, 2), Rational(3, 2), Rational(5, 7)};
  const Rational starts[] = {Rational(1), Rational(-2), Rational(3, 4)};
  for (const auto& l : lambdas) {
    for (const auto& s : starts) {
      CHECK(scaling_orbit_distinct(l, TropScalar(s), 64));
      Rational prev = s;
      bool monotone_up = true, monotone_down = true;
      Rational cur = s * l;
      for (int i = 1; i < 64; ++i) {
        monotone_up = monotone_up && cur > prev;
        monotone_down = monotone_down && cur < prev;
        prev = cur;
        cur *= l;
      }
      CHECK((monotone_up || monotone_down));
    }
  }
}

}  // TEST_SUITE
