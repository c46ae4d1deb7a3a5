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

#include <algorithm>

#include "tropgal/random_fn.hpp"
#include "tropgal/torus_sep.hpp"

using namespace tropgal;

namespace {

// the orbit of (1,2,3) under all coordinate permutations
PointSetAction s3_action() {
  std::vector<TorusPoint> pts;
  std::vector<Rational> base{Rational(1), Rational(2), Rational(3)};
  std::vector<Rational> coords = base;
  std::sort(coords.begin(), coords.end());
  do {
    pts.push_back({coords});
  } while (std::next_permutation(coords.begin(), coords.end()));
  return PointSetAction::from_coordinate_perms(pts, {{1, 0, 2}, {0, 2, 1}});
}

// tropical reading of the defining expression, term by term: per coordinate
// max(u_i - v_i, v_i - u_i), the coordinates combined multiplicatively
// (classical sum), then inverted
TropScalar separator_by_formula(const TorusPoint& v, const TorusPoint& u) {
  TropScalar acc = TropScalar::one();
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    const TropScalar diff(Rational(u.coords[i] - v.coords[i]));  // v_i^{-1} ⊙ u_i
    acc = trop_mul(acc, trop_add(diff, trop_inv(diff)));
  }
  return trop_inv(acc);
}

}  // namespace

TEST_SUITE("torus_sep") {

TEST_CASE("separator values vanish exactly at the base point") {
  TorusPoint v{{Rational(0), Rational(0)}};
  TorusPoint u{{Rational(1), Rational(-2)}};
  CHECK(separator_value(v, v) == TropScalar::one());
  CHECK(separator_value(v, u) == TropScalar(-3));
  CHECK(separator_value(TorusPoint{{Rational(5)}}, TorusPoint{{Rational(5)}}) ==
        TropScalar::one());
  CHECK_THROWS_AS(separator_value(v, TorusPoint{{Rational(1)}}), std::invalid_argument);
}

TEST_CASE("closed form matches the tropical expression on samples") {
  Rng rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(4);
    TorusPoint v, u;
    for (std::size_t i = 0; i < n; ++i) {
      v.coords.push_back(Rational(rng.int_in(-9, 9), rng.int_in(1, 4)));
      u.coords.push_back(Rational(rng.int_in(-9, 9), rng.int_in(1, 4)));
    }
    const TropScalar got = separator_value(v, u);
    CHECK(got == separator_by_formula(v, u));
    CHECK(got.raw() <= ExtRat(0));
    CHECK((got == TropScalar::one()) == (v == u));
  }
}

TEST_CASE("subgroup separators vanish exactly on orbits") {
  PointSetAction a = s3_action();
  REQUIRE(a.size() == 6);
  REQUIRE(a.points().size() == 6);
  const auto subs = all_subgroups(a.table());
  REQUIRE(subs.size() == 6);

  // locate the base point (1,2,3)
  int v = -1;
  for (std::size_t i = 0; i < a.points().size(); ++i) {
    if (a.points()[i].coords == std::vector<Rational>{Rational(1), Rational(2), Rational(3)}) {
      v = static_cast<int>(i);
    }
  }
  REQUIRE(v >= 0);

  for (const auto& h : subs) {
    const auto table = subgroup_separator(a, h, v);
    std::vector<int> zero_set;
    for (std::size_t u = 0; u < table.size(); ++u) {
      CHECK(table[u].raw() <= ExtRat(0));
      if (table[u] == TropScalar::one()) zero_set.push_back(static_cast<int>(u));
    }
    std::vector<int> orbit;
    for (int g : h) orbit.push_back(a.apply(g, v));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    CHECK(zero_set == orbit);
    CHECK(zero_set.size() == h.size());  // the base point stabilizer is trivial
  }

  // the swap subgroup's zero set is exactly {(1,2,3), (2,1,3)}
  for (const auto& h : subs) {
    if (h.size() != 2) continue;
    const auto table = subgroup_separator(a, h, v);
    int zeros = 0;
    for (const auto& t : table) zeros += t == TropScalar::one() ? 1 : 0;
    CHECK(zeros == 2);
  }
}

TEST_CASE("separator stabilizers recover every subgroup") {
  PointSetAction a = s3_action();
  int v = -1;
  for (std::size_t i = 0; i < a.points().size(); ++i) {
    if (a.points()[i].coords == std::vector<Rational>{Rational(1), Rational(2), Rational(3)}) {
      v = static_cast<int>(i);
    }
  }
  for (const auto& h : all_subgroups(a.table())) {
    CHECK(separator_stabilizer(a, h, v) == h);
  }
}

TEST_CASE("a base point with symmetry is refused") {
  std::vector<TorusPoint> pts{{{Rational(1), Rational(1), Rational(3)}},
                              {{Rational(1), Rational(3), Rational(1)}},
                              {{Rational(3), Rational(1), Rational(1)}}};
  PointSetAction a = PointSetAction::from_coordinate_perms(pts, {{1, 0, 2}, {0, 2, 1}});
  const auto subs = all_subgroups(a.table());
  CHECK_THROWS_AS(separator_stabilizer(a, subs.front(), 0), std::domain_error);
}

TEST_CASE("coordinate permutations must preserve the point set") {
  std::vector<TorusPoint> pts{{{Rational(1), Rational(2)}}};
  CHECK_THROWS_AS(PointSetAction::from_coordinate_perms(pts, {{1, 0}}), std::invalid_argument);
}

}  // TEST_SUITE
