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

// pointwise oracle for the binary operations
void check_pointwise(const PLFunction& out, const PLFunction& f, const PLFunction& g, bool is_max,
                     const std::vector<Point>& samples) {
  for (const auto& p : samples) {
    const ExtRat a = evaluate(f, p);
    const ExtRat b = evaluate(g, p);
    const ExtRat expect = is_max ? max(a, b) : a + b;
    CHECK(evaluate(out, p) == expect);
  }
}

std::vector<Point> sample_points(const ModelPtr& m, std::uint64_t seed, int n) {
  Rng rng(seed);
  std::vector<Point> pts;
  for (int v = 0; v < m->vertex_count(); ++v) {
    if (!m->vertex_at_infinity(v)) pts.push_back(Point::at_vertex(v));
  }
  while (static_cast<int>(pts.size()) < n) pts.push_back(random_point(m, rng));
  return pts;
}

}  // namespace

TEST_SUITE("ratfun") {

TEST_CASE("pointwise max on one edge, with the exact crossing") {
  auto m = Model::make("m", {"a", "b"}, {{"e", "a", "b", ExtRat(2)}});
  PLFunction f = PLFunction::from_data(m, {ExtRat(0), ExtRat(2)}, {{{Rational(0), 1}}});
  PLFunction g = PLFunction::constant(m, Rational(1));
  PLFunction h = trop_add_fn(f, g);
  h.check_invariants();
  // crossing at offset 1: constant 1 then slope 1
  REQUIRE(h.edge_pieces(0).size() == 2);
  CHECK(h.edge_pieces(0)[0].slope == 0);
  CHECK(h.edge_pieces(0)[1].start == Rational(1));
  CHECK(h.edge_pieces(0)[1].slope == 1);
  std::vector<Point> samples;
  for (int k = 0; k <= 4; ++k) samples.push_back(Point::on_edge(0, ExtRat(Rational(k, 2))));
  check_pointwise(h, f, g, true, samples);
}

TEST_CASE("identities and absorbing element") {
  auto m = fixtures::ex1_curve();
  PLFunction f = random_fn(m, 3);
  CHECK(fn_equal(trop_add_fn(f, PLFunction::neg_inf(m)), f));
  CHECK(fn_equal(trop_add_fn(f, f), f));
  CHECK(fn_equal(trop_mul_fn(f, PLFunction::constant(m, Rational(0))), f));
  CHECK(trop_mul_fn(f, PLFunction::neg_inf(m)).is_neg_inf());
  CHECK_THROWS_AS(trop_inv_fn(PLFunction::neg_inf(m)), std::domain_error);
}

TEST_CASE("opposite slopes cancel under multiplication") {
  auto m = Model::make("m", {"a", "b"}, {{"e", "a", "b", ExtRat(1)}});
  PLFunction f = PLFunction::from_data(m, {ExtRat(0), ExtRat(1)}, {{{Rational(0), 1}}});
  PLFunction g = PLFunction::from_data(m, {ExtRat(2), ExtRat(1)}, {{{Rational(0), -1}}});
  PLFunction h = trop_mul_fn(f, g);
  h.check_invariants();
  for (int k = 0; k <= 2; ++k) {
    CHECK(evaluate(h, Point::on_edge(0, ExtRat(Rational(k, 2)))) == ExtRat(2));
  }
  CHECK(h.edge_pieces(0).size() == 1);
  CHECK(h.edge_pieces(0)[0].slope == 0);
}

TEST_CASE("inversion negates values and slopes") {
  auto m = fixtures::ex1_curve();
  CHECK(fn_equal(trop_inv_fn(PLFunction::constant(m, Rational(5))),
                 PLFunction::constant(m, Rational(-5))));
  CHECK(fn_equal(trop_inv_fn(PLFunction::constant(m, Rational(0))),
                 PLFunction::constant(m, Rational(0))));
  Subgraph s = Subgraph::of_points(m, {Point::at_vertex(m->vertex_index("v3"))});
  PLFunction cf = chip_firing(m, s, ExtRat(Rational(1, 2)));
  PLFunction inv = trop_inv_fn(cf);
  Rng rng(8);
  for (int i = 0; i < 10; ++i) {
    const Point p = random_point(m, rng);
    CHECK(evaluate(inv, p) == -evaluate(cf, p));
    CHECK(evaluate(inv, p) >= ExtRat(0));
    CHECK(evaluate(inv, p) <= ExtRat(Rational(1, 2)));
  }
  CHECK(fn_equal(trop_mul_fn(cf, inv), PLFunction::constant(m, Rational(0))));
}

TEST_CASE("equality is representation-independent") {
  auto m = fixtures::ex1_curve();
  PLFunction f = random_fn(m, 5);
  auto rr = refine(m, {Point::on_edge(0, ExtRat(Rational(1, 7)))});
  PLFunction g = rebase(f, rr.reloc);
  g.check_invariants();
  Rng rng(9);
  for (int i = 0; i < 10; ++i) {
    const Point p = random_point(m, rng);
    CHECK(evaluate(f, p) == evaluate(g, rr.reloc.map_point(p)));
  }
  CHECK_FALSE(fn_equal(PLFunction::constant(m, Rational(0)), PLFunction::constant(m, Rational(1))));
  PLFunction h = random_fn(m, 6);
  CHECK(fn_equal(trop_add_fn(f, h), trop_add_fn(h, f)));
}

TEST_CASE("simplify produces the canonical form") {
  auto m = Model::make("m", {"a", "b"}, {{"e", "a", "b", ExtRat(2)}});
  // two collinear pieces written with a redundant breakpoint
  PLFunction f = PLFunction::from_data(
      m, {ExtRat(0), ExtRat(2)}, {{{Rational(0), 1}, {Rational(1), 1}}});
  CHECK(f.edge_pieces(0).size() == 1);  // from_data canonicalizes
  PLFunction g = simplify(f);
  CHECK(fn_equal(f, g));
  CHECK(g.edge_pieces(0).size() == 1);
  // f ⊕ f has the same canonical representation as f
  PLFunction ff = trop_add_fn(f, f);
  CHECK(ff.edge_pieces(0).size() == 1);
  CHECK(fn_equal(ff, f));
}

TEST_CASE("distance function of the far vertex") {
  auto m = fixtures::ex1_curve();
  Subgraph s = Subgraph::of_points(m, {Point::at_vertex(m->vertex_index("v3"))});
  PLFunction d = distance_to_subgraph(m, s);
  d.check_invariants();
  CHECK(evaluate(d, Point::at_vertex(m->vertex_index("v3"))) == ExtRat(0));
  CHECK(evaluate(d, Point::at_vertex(m->vertex_index("v2"))) == ExtRat(1));
  CHECK(evaluate(d, Point::at_vertex(m->vertex_index("v1"))) == ExtRat(2));
  Rng rng(31);
  for (int i = 0; i < 24; ++i) {
    const Point p = random_point(m, rng);
    CHECK(evaluate(d, p) == oracle::dist_to_subgraph(m, s, p));
  }
  for (int e = 0; e < m->edge_count(); ++e) {
    for (const auto& piece : d.edge_pieces(e)) {
      CHECK(piece.slope >= -1);
      CHECK(piece.slope <= 1);
    }
  }
}

TEST_CASE("distance function edge cases") {
  auto m = fixtures::ex1_curve();
  PLFunction whole = distance_to_subgraph(m, Subgraph::whole(m));
  CHECK(fn_equal(whole, PLFunction::constant(m, Rational(0))));

  auto seg = fixtures::unit_edge();
  PLFunction d = distance_to_subgraph(seg, Subgraph::of_points(seg, {Point::at_vertex(0)}));
  CHECK(evaluate(d, Point::at_vertex(0)) == ExtRat(0));
  CHECK(evaluate(d, Point::at_vertex(1)) == ExtRat(1));
  CHECK(d.edge_pieces(0).size() == 1);
  CHECK(d.edge_pieces(0)[0].slope == 1);

  CHECK_THROWS_AS(distance_to_subgraph(m, Subgraph(m)), std::invalid_argument);
  auto spider = fixtures::spider();
  Subgraph bad(spider);
  bad.add_vertex(spider->vertex_index("z1"));
  CHECK_THROWS_AS(distance_to_subgraph(spider, bad), std::invalid_argument);
  // an interval reaching infinity is a fine subgraph
  Subgraph tail(spider);
  tail.add_interval(0, ExtRat(2), ExtRat::pos_inf());
  PLFunction dt = distance_to_subgraph(spider, tail);
  dt.check_invariants();
  CHECK(evaluate(dt, Point::at_vertex(spider->vertex_index("c"))) == ExtRat(2));
  CHECK(evaluate(dt, Point::on_edge(0, ExtRat(3))) == ExtRat(0));
  CHECK(evaluate(dt, Point::on_edge(1, ExtRat(5))) == ExtRat(7));
  CHECK(evaluate(dt, Point::at_vertex(spider->vertex_index("z2"))) == ExtRat::pos_inf());
}

TEST_CASE("chip-firing moves") {
  auto seg = fixtures::unit_edge();
  Subgraph s0 = Subgraph::of_points(seg, {Point::at_vertex(0)});
  PLFunction cf = chip_firing(seg, s0, ExtRat(Rational(1, 2)));
  cf.check_invariants();
  CHECK(evaluate(cf, Point::at_vertex(0)) == ExtRat(0));
  CHECK(evaluate(cf, Point::on_edge(0, ExtRat(Rational(1, 4)))) == ExtRat(Rational(-1, 4)));
  CHECK(evaluate(cf, Point::on_edge(0, ExtRat(Rational(1, 2)))) == ExtRat(Rational(-1, 2)));
  CHECK(evaluate(cf, Point::at_vertex(1)) == ExtRat(Rational(-1, 2)));

  auto m = fixtures::ex1_curve();
  Subgraph s = Subgraph::of_points(m, {Point::at_vertex(m->vertex_index("v3"))});
  PLFunction far = chip_firing(m, s, ExtRat::pos_inf());
  CHECK(evaluate(far, Point::at_vertex(m->vertex_index("v3"))) == ExtRat(0));
  CHECK(evaluate(far, Point::at_vertex(m->vertex_index("v2"))) == ExtRat(-1));
  CHECK(evaluate(far, Point::at_vertex(m->vertex_index("v1"))) == ExtRat(-2));

  CHECK(fn_equal(chip_firing(m, Subgraph::whole(m), ExtRat(1)),
                 PLFunction::constant(m, Rational(0))));
  CHECK_THROWS_AS(chip_firing(m, s, ExtRat(0)), std::invalid_argument);
  CHECK_THROWS_AS(chip_firing(m, s, ExtRat(-1)), std::invalid_argument);
}

TEST_CASE("chip-firing agrees with the formula at random points") {
  auto m = fixtures::ex1_curve();
  Subgraph s(m);
  s.add_vertex(m->vertex_index("v3"));
  s.add_interval(m->edge_index("e1"), ExtRat(Rational(1, 4)), ExtRat(Rational(1, 2)));
  const ExtRat l(Rational(3, 4));
  PLFunction cf = chip_firing(m, s, l);
  cf.check_invariants();
  Rng rng(77);
  for (int i = 0; i < 100; ++i) {
    const Point p = random_point(m, rng);
    const ExtRat expect = -min(l, oracle::dist_to_subgraph(m, s, p));
    CHECK(evaluate(cf, p) == expect);
    CHECK((evaluate(cf, p) == ExtRat(0)) == s.contains(p));
  }
}

TEST_CASE("binary operations agree with pointwise evaluation under fuzzing") {
  std::vector<ModelPtr> curves{fixtures::ex1_curve(), fixtures::theta_curve(),
                               fixtures::spider(), fixtures::z2_cycle()};
  {
    std::vector<std::string> vs;
    std::vector<EdgeSpec> es;
    for (int i = 0; i < 6; ++i) vs.push_back("c" + std::to_string(i));
    for (int i = 0; i < 6; ++i) {
      es.push_back({"d" + std::to_string(i), vs[i], vs[(i + 1) % 6], ExtRat(Rational(i + 1, 3))});
    }
    curves.push_back(Model::make("hex", std::move(vs), std::move(es)));
  }
  for (const auto& curve : curves) {
    const auto samples = sample_points(curve, 71, 16);
    for (std::uint64_t k = 0; k < 12; ++k) {
      PLFunction f = random_fn(curve, 7000 + k);
      PLFunction g = random_fn(curve, 7300 + k);
      PLFunction fg_max = trop_add_fn(f, g);
      PLFunction fg_sum = trop_mul_fn(f, g);
      fg_max.check_invariants();
      fg_sum.check_invariants();
      check_pointwise(fg_max, f, g, true, samples);
      check_pointwise(fg_sum, f, g, false, samples);
      // values at every point at infinity follow the slopes as well
      for (int v = 0; v < curve->vertex_count(); ++v) {
        if (!curve->vertex_at_infinity(v)) continue;
        CHECK(fg_max.value_at_vertex(v) ==
              max(f.value_at_vertex(v), g.value_at_vertex(v)));
      }
    }
  }
}

TEST_CASE("semifield axioms hold for sampled functions") {
  for (const auto& curve : {fixtures::ex1_curve(), fixtures::spider()}) {
    const PLFunction zero = PLFunction::neg_inf(curve);
    const PLFunction one = PLFunction::constant(curve, Rational(0));
    const auto samples = sample_points(curve, 13, 10);
    for (std::uint64_t k = 0; k < 8; ++k) {
      PLFunction f = random_fn(curve, 100 + k);
      PLFunction g = random_fn(curve, 200 + k);
      PLFunction h = random_fn(curve, 300 + k);
      f.check_invariants();
      CHECK(fn_equal(trop_add_fn(f, g), trop_add_fn(g, f)));
      CHECK(fn_equal(trop_mul_fn(f, g), trop_mul_fn(g, f)));
      CHECK(fn_equal(trop_add_fn(trop_add_fn(f, g), h), trop_add_fn(f, trop_add_fn(g, h))));
      CHECK(fn_equal(trop_mul_fn(trop_mul_fn(f, g), h), trop_mul_fn(f, trop_mul_fn(g, h))));
      CHECK(fn_equal(trop_mul_fn(f, trop_add_fn(g, h)),
                     trop_add_fn(trop_mul_fn(f, g), trop_mul_fn(f, h))));
      CHECK(fn_equal(trop_add_fn(f, zero), f));
      CHECK(fn_equal(trop_mul_fn(f, one), f));
      CHECK(fn_equal(trop_add_fn(f, f), f));
      CHECK(fn_equal(trop_mul_fn(f, trop_inv_fn(f)), one));
      check_pointwise(trop_add_fn(f, g), f, g, true, samples);
      check_pointwise(trop_mul_fn(f, g), f, g, false, samples);
    }
  }
}

}  // TEST_SUITE
