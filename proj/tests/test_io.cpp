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

#include <sstream>

#include "fixtures.hpp"
#include "tropgal/corpus.hpp"
#include "tropgal/io.hpp"
#include "tropgal/random_fn.hpp"

using namespace tropgal;

namespace {

ModelPtr reload(const ModelPtr& m) {
  std::istringstream in(emit_curve(*m));
  return parse_curve(in, "reload.curve");
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("curve files round-trip structurally") {
  for (const auto& m :
       {fixtures::ex1_curve(), fixtures::theta_curve(), fixtures::spider(), fixtures::z2_cycle()}) {
    ModelPtr back = reload(m);
    REQUIRE(back->vertex_count() == m->vertex_count());
    REQUIRE(back->edge_count() == m->edge_count());
    for (int v = 0; v < m->vertex_count(); ++v) {
      CHECK(back->vertex_name(v) == m->vertex_name(v));
      CHECK(back->vertex_at_infinity(v) == m->vertex_at_infinity(v));
    }
    for (int e = 0; e < m->edge_count(); ++e) {
      CHECK(back->edge(e).name == m->edge(e).name);
      CHECK(back->edge(e).length == m->edge(e).length);
    }
    CHECK(emit_curve(*back) == emit_curve(*m));
  }
}

TEST_CASE("parser diagnostics carry line numbers") {
  {
    std::istringstream in("curve c\nvertex a\nvertex b\nedge e a b 0\n");
    try {
      parse_curve(in, "bad.curve");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 4);
      CHECK(std::string(e.what()).find("bad.curve:4") != std::string::npos);
    }
  }
  {
    // the point at infinity must be the second endpoint
    std::istringstream in("curve c\nvertex z\nvertex a\nvertex b\n"
                          "edge e1 z a inf\nedge e2 a b 1\n");
    try {
      parse_curve(in, "bad.curve");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 5);
    }
  }
  {
    std::istringstream in("curve c\nvertex a\nvertx b\n");
    CHECK_THROWS_AS(parse_curve(in, "bad.curve"), ParseError);
  }
}

TEST_CASE("loops are subdivided at load time") {
  std::istringstream in("curve c\nvertex a\nedge e a a 2\n");
  ModelPtr m = parse_curve(in, "loop.curve");
  REQUIRE(m->edge_count() == 2);
  CHECK(m->edge(0).length == ExtRat(1));
  CHECK(m->edge(1).length == ExtRat(1));
  CHECK(m->vertex_count() == 2);
  std::istringstream bad("curve c\nvertex a\nedge e a a inf\n");
  CHECK_THROWS_AS(parse_curve(bad, "loop.curve"), ParseError);
}

TEST_CASE("single infinite edge marks the second endpoint") {
  std::istringstream in("curve c\nvertex a\nvertex z\nedge e a z inf\n");
  ModelPtr m = parse_curve(in, "ray.curve");
  CHECK(m->vertex_at_infinity(m->vertex_index("z")));
  CHECK_FALSE(m->vertex_at_infinity(m->vertex_index("a")));
}

TEST_CASE("function files round-trip and validate continuity") {
  auto m = fixtures::ex1_curve();
  for (std::uint64_t k = 0; k < 6; ++k) {
    PLFunction f = random_fn(m, 4000 + k);
    const std::string text = emit_fn(f);
    std::istringstream in(text);
    PLFunction back = parse_fn(in, "fn.txt", m);
    CHECK(fn_equal(back, f));
    CHECK(emit_fn(back) == text);  // canonical text is stable
  }
  // the constant -inf round-trips through its dedicated form
  const std::string neg = emit_fn(PLFunction::neg_inf(m));
  std::istringstream in(neg);
  CHECK(parse_fn(in, "fn.txt", m).is_neg_inf());

  // continuity violations are rejected
  std::istringstream bad(
      "fn over ex1\nvalue v1 0\nvalue v2 5\nvalue v3 0\n"
      "slope e1 1\nslope e2 1\nslope e3 0\n");
  CHECK_THROWS_AS(parse_fn(bad, "fn.txt", m), ParseError);
  // a cut vertex whose value breaks continuity is rejected
  std::istringstream bad2(
      "fn over ex1\ncut x e1 1/2\nvalue v1 0\nvalue v2 1\nvalue v3 1\nvalue x 9\n"
      "slope e1:0 1\nslope e1:1 1\nslope e2 1\nslope e3 0\n");
  CHECK_THROWS_AS(parse_fn(bad2, "fn.txt", m), ParseError);
}

TEST_CASE("functions on infinite edges carry inf values") {
  auto spider = fixtures::spider();
  for (std::uint64_t k = 0; k < 4; ++k) {
    PLFunction f = random_fn(spider, 4400 + k);
    const std::string text = emit_fn(f);
    std::istringstream in(text);
    CHECK(fn_equal(parse_fn(in, "fn.txt", spider), f));
  }
}

TEST_CASE("action files round-trip") {
  auto theta = fixtures::theta_curve();
  ActionFile af;
  af.curve_name = theta->name();
  af.generators.push_back({"s12", fixtures::swap_edges(theta, "e1", "e2")});
  af.generators.push_back({"s23", fixtures::swap_edges(theta, "e2", "e3")});
  const std::string text = emit_action(af);
  std::istringstream in(text);
  ActionFile back = parse_action(in, "a.action", theta);
  REQUIRE(back.generators.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(back.generators[i].name == af.generators[i].name);
    CHECK(back.generators[i].map == af.generators[i].map);
  }
  std::istringstream bad("action over theta\ngen g\ne e1 -> nope +\n");
  try {
    parse_action(bad, "a.action", theta);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("morphism files round-trip") {
  auto src = fixtures::ex1_curve();
  ModelPtr tgt = Model::make("ex1q", {"q1", "q2", "q3"},
                             {{"f1", "q1", "q2", ExtRat(1)}, {"f3", "q2", "q3", ExtRat(2)}});
  HarmonicMorphism pi(src, tgt, {0, 1, 2}, {{0, false, 1}, {0, false, 1}, {1, false, 2}});
  const std::string text = emit_morphism(pi);
  std::istringstream in(text);
  HarmonicMorphism back = parse_morphism(in, "m.morphism", src, tgt);
  CHECK(back.is_valid());
  CHECK(back.vertex_map() == pi.vertex_map());
  for (int e = 0; e < src->edge_count(); ++e) {
    CHECK(back.map_edge(e).edge == pi.map_edge(e).edge);
    CHECK(back.map_edge(e).degree == pi.map_edge(e).degree);
    CHECK(back.map_edge(e).reversed == pi.map_edge(e).reversed);
  }
  std::istringstream missing("morphism ex1 ex1q\nvmap v1 q1\n");
  CHECK_THROWS_AS(parse_morphism(missing, "m.morphism", src, tgt), ParseError);
}

TEST_CASE("subgraph specs") {
  auto m = fixtures::ex1_curve();
  Subgraph all = parse_subgraph_spec(m, "all");
  CHECK(all.contains(Point::on_edge(0, ExtRat(Rational(1, 2)))));
  Subgraph s = parse_subgraph_spec(m, "v3,e1@1/4..1/2,e2@1/3");
  CHECK(s.contains(Point::at_vertex(m->vertex_index("v3"))));
  CHECK(s.contains(Point::on_edge(0, ExtRat(Rational(1, 3)))));
  CHECK_FALSE(s.contains(Point::on_edge(0, ExtRat(Rational(3, 4)))));
  CHECK(s.contains(Point::on_edge(1, ExtRat(Rational(1, 3)))));
  CHECK_THROWS_AS(parse_subgraph_spec(m, "nope"), std::invalid_argument);
}

TEST_CASE("torus point and permutation files") {
  std::istringstream pts("1,2,3\n2,1,3\n# comment\n1/2,0,-3\n");
  const auto points = parse_points(pts, "pts.txt");
  REQUIRE(points.size() == 3);
  CHECK(points[2].coords[0] == Rational(1, 2));
  std::istringstream mixed("1,2\n1,2,3\n");
  CHECK_THROWS_AS(parse_points(mixed, "pts.txt"), ParseError);
  std::istringstream perms("2 1 3\n1 3 2\n");
  const auto p = parse_perms(perms, "perm.txt", 3);
  REQUIRE(p.size() == 2);
  CHECK(p[0] == std::vector<int>{1, 0, 2});
  std::istringstream badperm("2 2 3\n");
  CHECK_THROWS_AS(parse_perms(badperm, "perm.txt", 3), ParseError);
}

TEST_CASE("corpus instances parse and are well-formed") {
  const auto corpus = build_corpus(7);
  REQUIRE(corpus.size() >= 6);
  int galois_count = 0, non_galois_count = 0;
  for (const auto& ci : corpus) {
    std::istringstream cin(ci.curve_text);
    ModelPtr curve = parse_curve(cin, ci.name + ".curve");
    std::istringstream ain(ci.action_text);
    ActionFile af = parse_action(ain, ci.name + ".action", curve);
    CHECK_FALSE(af.generators.empty());
    (ci.expected_galois ? galois_count : non_galois_count) += 1;
  }
  CHECK(galois_count >= 1);
  CHECK(non_galois_count >= 2);
}

}  // TEST_SUITE
