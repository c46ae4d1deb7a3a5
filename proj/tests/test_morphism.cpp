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

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tropgal/random_fn.hpp"

using namespace tropgal;

namespace {

// the quotient of the figure curve by the parallel-edge swap, by hand
struct Ex1Cover {
  ModelPtr source = fixtures::ex1_curve();
  ModelPtr target = Model::make(
      "ex1q", {"q1", "q2", "q3"},
      {{"f1", "q1", "q2", ExtRat(1)}, {"f3", "q2", "q3", ExtRat(2)}});
  HarmonicMorphism pi{source, target, {0, 1, 2},
                      {{0, false, 1}, {0, false, 1}, {1, false, 2}}};
};

}  // namespace

TEST_SUITE("morphism") {

TEST_CASE("validation of the figure projection and of violations") {
  auto m = fixtures::ex1_curve();
  HarmonicMorphism id = HarmonicMorphism::identity(m);
  CHECK(id.is_valid());
  CHECK(id.degree() == 1);

  Ex1Cover cover;
  CHECK(cover.pi.is_valid());
  CHECK(cover.pi.degree() == 2);
  CHECK(cover.pi.vertex_degree(0) == 2);  // v1: 1 + 1 over f1
  CHECK(cover.pi.vertex_degree(2) == 2);  // v3: deg 2 on e3

  // stretching an edge without adjusting deg_e breaks the metric condition
  HarmonicMorphism bad(cover.source, cover.target, {0, 1, 2},
                       {{0, false, 1}, {0, false, 1}, {1, false, 1}});
  CHECK_FALSE(bad.is_valid());
  bool metric_violation = false;
  for (const auto& v : bad.validate().violations) metric_violation |= v.condition == 2;
  CHECK(metric_violation);
  CHECK_THROWS_AS(bad.degree(), std::invalid_argument);

  // harmonicity violation: unbalance the parallel edges
  ModelPtr fat = Model::make("fat", {"a", "b"},
                             {{"g1", "a", "b", ExtRat(1)}, {"g2", "a", "b", ExtRat(2)}});
  HarmonicMorphism unbalanced(cover.source, fat, {0, 1, 0},
                              {{0, false, 1}, {0, false, 1}, {1, false, 2}});
  CHECK_FALSE(unbalanced.is_valid());
}

TEST_CASE("degree of the triple cover of the segment") {
  auto theta = fixtures::theta_curve();
  ModelPtr seg2 = Model::make("seg2", {"p", "q"}, {{"f", "p", "q", ExtRat(2)}});
  HarmonicMorphism pi(theta, seg2, {0, 1},
                      {{0, false, 2}, {0, false, 2}, {0, false, 2}});
  REQUIRE(pi.is_valid());
  CHECK(pi.degree() == 6);
  // fiber sums of deg_v, directly
  long long over_p = 0;
  for (int v = 0; v < theta->vertex_count(); ++v) {
    if (pi.map_vertex(v) == 0) over_p += pi.vertex_degree(v);
  }
  CHECK(over_p == 6);
}

TEST_CASE("degree is indeterminate between singletons") {
  ModelPtr pt = Model::make("pt", {"o"}, {});
  HarmonicMorphism phi(pt, pt, {0}, {});
  CHECK(phi.is_valid());
  CHECK_FALSE(phi.degree().has_value());
  ModelPtr seg = fixtures::unit_edge();
  HarmonicMorphism degenerate(pt, seg, {0}, {});
  CHECK_FALSE(degenerate.is_valid());
}

TEST_CASE("points map with the edge scaling") {
  Ex1Cover cover;
  const int e3 = cover.source->edge_index("e3");
  CHECK(point_eq(*cover.target, cover.pi.map_point(Point::at_vertex(0)), Point::at_vertex(0)));
  const Point mid = Point::on_edge(e3, ExtRat(Rational(1, 2)));
  const Point image = cover.pi.map_point(mid);
  CHECK(point_eq(*cover.target, image,
                 Point::on_edge(cover.target->edge_index("f3"), ExtRat(1))));

  // points at infinity correspond
  auto spider = fixtures::spider();
  HarmonicMorphism id = HarmonicMorphism::identity(spider);
  const Point z = Point::at_vertex(spider->vertex_index("z1"));
  CHECK(point_eq(*spider, id.map_point(z), z));
}

TEST_CASE("pullback composes with the covering") {
  Ex1Cover cover;
  // constant functions pull back to themselves
  PLFunction c = PLFunction::constant(cover.target, Rational(7));
  CHECK(fn_equal(pullback(cover.pi, c), PLFunction::constant(cover.source, Rational(7))));
  // identity pullback is the identity
  PLFunction f = random_fn(cover.source, 4);
  CHECK(fn_equal(pullback(HarmonicMorphism::identity(cover.source), f), f));

  // slope-1 function on the long quotient edge pulls back with slope 2
  PLFunction ramp = PLFunction::from_data(
      cover.target, {ExtRat(0), ExtRat(0), ExtRat(2)},
      {{{Rational(0), 0}}, {{Rational(0), 1}}});
  PLFunction up = pullback(cover.pi, ramp);
  up.check_invariants();
  CHECK(up.edge_pieces(cover.source->edge_index("e3")).front().slope == 2);
  // f'(phi(x)) = pullback(f')(x) at sampled points
  Rng rng(23);
  for (int i = 0; i < 16; ++i) {
    const Point p = random_point(cover.source, rng);
    CHECK(evaluate(up, p) == evaluate(ramp, cover.pi.map_point(p)));
  }
}

TEST_CASE("pullback is a semifield homomorphism and injective on samples") {
  Ex1Cover cover;
  for (std::uint64_t k = 0; k < 6; ++k) {
    PLFunction a = random_fn(cover.target, 10 + k);
    PLFunction b = random_fn(cover.target, 40 + k);
    CHECK(fn_equal(pullback(cover.pi, trop_add_fn(a, b)),
                   trop_add_fn(pullback(cover.pi, a), pullback(cover.pi, b))));
    CHECK(fn_equal(pullback(cover.pi, trop_mul_fn(a, b)),
                   trop_mul_fn(pullback(cover.pi, a), pullback(cover.pi, b))));
    if (!fn_equal(a, b)) {
      CHECK_FALSE(fn_equal(pullback(cover.pi, a), pullback(cover.pi, b)));
    }
  }
}

TEST_CASE("pushforward sums over fibers") {
  Ex1Cover cover;
  PLFunction f = chip_firing(
      cover.source,
      Subgraph::of_points(cover.source, {Point::at_vertex(cover.source->vertex_index("v3"))}),
      ExtRat(1));
  PLFunction down = pushforward(cover.pi, f);
  down.check_invariants();
  CHECK(evaluate(down, Point::at_vertex(cover.target->vertex_index("q2"))) == ExtRat(-2));
  CHECK(evaluate(down, Point::at_vertex(cover.target->vertex_index("q3"))) == ExtRat(0));
  CHECK(evaluate(down, Point::at_vertex(cover.target->vertex_index("q1"))) == ExtRat(-2));
  // fiber-sum oracle at five sample offsets per target edge
  for (int te = 0; te < cover.target->edge_count(); ++te) {
    const Rational L = cover.target->edge(te).length.value();
    for (int k = 1; k <= 5; ++k) {
      const Point u = Point::on_edge(te, ExtRat(L * Rational(k, 6)));
      CHECK(evaluate(down, u) == oracle::pushforward_value(cover.pi, f, u));
    }
  }
  // identity pushforward is the identity; zero stays zero
  CHECK(fn_equal(pushforward(HarmonicMorphism::identity(cover.source), f), f));
  CHECK(fn_equal(pushforward(cover.pi, PLFunction::constant(cover.source, Rational(0))),
                 PLFunction::constant(cover.target, Rational(0))));
}

TEST_CASE("pushforward after pullback multiplies by the degree") {
  Ex1Cover cover;
  Rng rng(3);
  for (std::uint64_t k = 0; k < 5; ++k) {
    PLFunction f = random_fn(cover.target, 60 + k);
    PLFunction round = pushforward(cover.pi, pullback(cover.pi, f));
    for (int i = 0; i < 10; ++i) {
      const Point p = random_point(cover.target, rng);
      CHECK(evaluate(round, p) == Rational(2) * evaluate(f, p));
    }
  }
}

TEST_CASE("pushdown recovers pullbacks and rejects non-members") {
  Ex1Cover cover;
  for (std::uint64_t k = 0; k < 6; ++k) {
    PLFunction f = random_fn(cover.target, 80 + k);
    PushdownResult res = pushdown(cover.pi, pullback(cover.pi, f));
    REQUIRE(res.ok());
    CHECK(fn_equal(*res.fn, f));
  }

  // the invariant slope-1 function on e3 fails divisibility
  PLFunction ramp = PLFunction::from_data(
      cover.source, {ExtRat(0), ExtRat(0), ExtRat(1)},
      {{{Rational(0), 0}}, {{Rational(0), 0}}, {{Rational(0), 1}}});
  PushdownResult bad = pushdown(cover.pi, ramp);
  CHECK_FALSE(bad.ok());
  CHECK(bad.obstruction == PushdownResult::Obstruction::Divisibility);
  CHECK(bad.detail.find("e3") != std::string::npos);

  // a function separating the fiber over f1 is rejected with a fiber witness
  PLFunction lopsided = chip_firing(
      cover.source,
      Subgraph::of_points(cover.source,
                          {Point::on_edge(cover.source->edge_index("e1"), ExtRat(Rational(1, 2)))}),
      ExtRat(Rational(1, 4)));
  PushdownResult fiber = pushdown(cover.pi, lopsided);
  CHECK_FALSE(fiber.ok());
  CHECK(fiber.obstruction == PushdownResult::Obstruction::FiberMismatch);
}

TEST_CASE("degree-one factors") {
  Ex1Cover cover;
  // phi1 = phi2 factors through the identity
  FactorResult same = degree_one_factor(cover.pi, cover.pi);
  REQUIRE(same.morphism.has_value());
  CHECK(same.morphism->degree() == 1);
  for (int v = 0; v < cover.target->vertex_count(); ++v) {
    CHECK(same.morphism->map_vertex(v) == v);
  }

  // build psi: relabel the target, then check phi1 = psi ∘ phi2 is recovered
  ModelPtr relabeled = Model::make(
      "ex1q2", {"r1", "r2", "r3"},
      {{"g1", "r1", "r2", ExtRat(1)}, {"g3", "r2", "r3", ExtRat(2)}});
  HarmonicMorphism psi(cover.target, relabeled, {0, 1, 2}, {{0, false, 1}, {1, false, 1}});
  REQUIRE(psi.is_valid());
  HarmonicMorphism phi1 = compose(psi, cover.pi);
  FactorResult rec = degree_one_factor(phi1, cover.pi);
  REQUIRE(rec.morphism.has_value());
  CHECK(rec.morphism->degree() == 1);
  for (int e = 0; e < cover.target->edge_count(); ++e) {
    CHECK(rec.morphism->map_edge(e).edge == psi.map_edge(e).edge);
  }

  // different fiber partitions obstruct the factor
  FactorResult none = degree_one_factor(HarmonicMorphism::identity(cover.source), cover.pi);
  CHECK_FALSE(none.morphism.has_value());
  CHECK_FALSE(none.obstruction.empty());
}

TEST_CASE("membership agrees across a degree-one factor") {
  Ex1Cover cover;
  ModelPtr relabeled = Model::make(
      "ex1q2", {"r1", "r2", "r3"},
      {{"g1", "r1", "r2", ExtRat(1)}, {"g3", "r2", "r3", ExtRat(2)}});
  HarmonicMorphism psi(cover.target, relabeled, {0, 1, 2}, {{0, false, 1}, {1, false, 1}});
  HarmonicMorphism phi1 = compose(psi, cover.pi);
  REQUIRE(degree_one_factor(phi1, cover.pi).morphism.has_value());
  for (std::uint64_t k = 0; k < 8; ++k) {
    PLFunction f = random_fn(cover.source, 500 + k);
    CHECK(pushdown(cover.pi, f).ok() == pushdown(phi1, f).ok());
    PLFunction member = pullback(phi1, random_fn(relabeled, 600 + k));
    CHECK(pushdown(cover.pi, member).ok());
    CHECK(pushdown(phi1, member).ok());
  }
}

TEST_CASE("degree one means a distance-preserving bijection") {
  // degree-one morphisms preserve sampled distances and are bijective
  auto m = fixtures::theta_curve();
  HarmonicMorphism rot = fixtures::theta_rotation(m).as_morphism();
  REQUIRE(rot.is_valid());
  CHECK(rot.degree() == 1);
  Rng rng(15);
  for (int i = 0; i < 10; ++i) {
    const Point p = random_point(m, rng);
    const Point q = random_point(m, rng);
    CHECK(distance(*m, p, q) == distance(*m, rot.map_point(p), rot.map_point(q)));
  }
  // a degree-two covering contracts some pair of distinct points
  Ex1Cover cover;
  const Point a = Point::on_edge(cover.source->edge_index("e1"), ExtRat(Rational(1, 3)));
  const Point b = Point::on_edge(cover.source->edge_index("e2"), ExtRat(Rational(1, 3)));
  CHECK_FALSE(point_eq(*cover.source, a, b));
  CHECK(point_eq(*cover.target, cover.pi.map_point(a), cover.pi.map_point(b)));
}

TEST_CASE("transport across infinite edges") {
  // fold the two infinite legs onto one
  auto spider = fixtures::spider();
  ModelPtr ray = Model::make("ray", {"c", "z"}, {{"l", "c", "z", ExtRat::pos_inf()}});
  HarmonicMorphism fold(spider, ray, {0, 1, 1}, {{0, false, 1}, {0, false, 1}});
  REQUIRE(fold.is_valid());
  CHECK(fold.degree() == 2);

  // pull back a chip-firing move supported on the ray
  PLFunction down = chip_firing(ray, Subgraph::of_points(ray, {Point::on_edge(0, ExtRat(2))}),
                                ExtRat(Rational(1, 2)));
  PLFunction up = pullback(fold, down);
  up.check_invariants();
  CHECK(evaluate(up, Point::on_edge(0, ExtRat(2))) == ExtRat(0));
  CHECK(evaluate(up, Point::on_edge(1, ExtRat(2))) == ExtRat(0));
  CHECK(evaluate(up, Point::at_vertex(0)) == ExtRat(Rational(-1, 2)));

  // push a function with unequal tail slopes forward; fiber sums at samples
  PLFunction f = PLFunction::from_data(
      spider, {ExtRat(0), ExtRat::pos_inf(), ExtRat::neg_inf()},
      {{{Rational(0), 2}}, {{Rational(0), -3}}});
  PLFunction sum = pushforward(fold, f);
  sum.check_invariants();
  for (int k = 1; k <= 5; ++k) {
    const Point u = Point::on_edge(0, ExtRat(Rational(k, 2)));
    CHECK(evaluate(sum, u) == oracle::pushforward_value(fold, f, u));
  }
  // tail slopes add: 2 + (-3) = -1, so the value at infinity is -inf
  CHECK(sum.value_at_vertex(ray->vertex_index("z")) == ExtRat::neg_inf());
}

TEST_CASE("refining a morphism source carries the cuts across") {
  Ex1Cover cover;
  MorphismRefinement mr = refine_morphism(
      cover.pi, {Point::on_edge(cover.source->edge_index("e3"), ExtRat(Rational(1, 4)))});
  REQUIRE(mr.phi.is_valid());
  CHECK(mr.phi.degree() == 2);
  Rng rng(29);
  for (int i = 0; i < 12; ++i) {
    const Point p = random_point(cover.source, rng);
    const Point fine = mr.source_reloc.map_point(p);
    CHECK(point_eq(*mr.phi.target(), mr.phi.map_point(fine),
                   mr.target_reloc.map_point(cover.pi.map_point(p))));
  }
}

}  // TEST_SUITE
