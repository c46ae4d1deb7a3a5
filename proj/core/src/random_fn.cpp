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

#include "tropgal/random_fn.hpp"

#include <algorithm>
#include <set>

namespace tropgal {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  Rng r(seed ^ (salt * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL));
  return r.next();
}

namespace {

// floor of a rational as an integer
long long rational_floor(const Rational& q) {
  BigInt num = numerator(q), den = denominator(q);
  BigInt quo = num / den;
  if (num < 0 && quo * den != num) --quo;
  return quo.convert_to<long long>();
}

}  // namespace

Point random_point(const ModelPtr& m, Rng& rng) {
  if (m->is_singleton() || rng.below(4) == 0) {
    // a finite vertex
    std::vector<int> finite;
    for (int v = 0; v < m->vertex_count(); ++v) {
      if (!m->vertex_at_infinity(v)) finite.push_back(v);
    }
    return Point::at_vertex(finite[rng.below(finite.size())]);
  }
  return random_interior_point(m, rng);
}

Point random_interior_point(const ModelPtr& m, Rng& rng) {
  if (m->is_singleton()) throw std::invalid_argument("random_interior_point: singleton curve");
  const int e = static_cast<int>(rng.below(m->edge_count()));
  const Edge& edge = m->edge(e);
  if (edge.length.is_finite()) {
    const long long k = rng.int_in(1, 7);
    return Point::on_edge(e, ExtRat(edge.length.value() * Rational(k, 8)));
  }
  return Point::on_edge(e, ExtRat(Rational(rng.int_in(1, 8), 2)));
}

PLFunction random_fn(const ModelPtr& m, std::uint64_t seed) {
  Rng rng(mix_seed(seed, 0x666e5f67656eULL));  // distinct stream per purpose
  std::vector<ExtRat> values(m->vertex_count());
  std::vector<Rational> vals(m->vertex_count());
  for (int v = 0; v < m->vertex_count(); ++v) {
    if (m->vertex_at_infinity(v)) continue;
    vals[v] = Rational(rng.int_in(-8, 8), 2);
  }

  std::vector<std::vector<Piece>> pieces(m->edge_count());
  for (int e = 0; e < m->edge_count(); ++e) {
    const Edge& edge = m->edge(e);
    if (!edge.length.is_finite()) {
      // free tail: a couple of random cuts, random slopes
      const int cut_count = static_cast<int>(rng.below(3));
      std::set<Rational> offs;
      while (static_cast<int>(offs.size()) < cut_count) offs.insert(Rational(rng.int_in(1, 8), 2));
      pieces[e].push_back({Rational(0), rng.int_in(-3, 3)});
      for (const auto& t : offs) pieces[e].push_back({t, rng.int_in(-3, 3)});
      continue;
    }
    // join val(v) to val(w) with at most two integer slopes
    const Rational L = edge.length.value();
    const Rational delta = vals[edge.w] - vals[edge.v];
    const long long lo_base = rational_floor(delta / L);
    const long long lo = lo_base - rng.below(2);
    long long hi = lo_base + 1 + rng.below(2);
    if (Rational(lo) * L == delta) {
      pieces[e].push_back({Rational(0), lo});
      continue;
    }
    const Rational t = (delta - Rational(lo) * L) / Rational(hi - lo);
    if (rng.below(2) == 0) {
      pieces[e].push_back({Rational(0), hi});
      pieces[e].push_back({t, lo});
    } else {
      pieces[e].push_back({Rational(0), lo});
      pieces[e].push_back({L - t, hi});
    }
  }
  for (int v = 0; v < m->vertex_count(); ++v) {
    if (m->vertex_at_infinity(v)) {
      const int e = m->incident(v).front();
      const long long s = pieces[e].back().slope;
      values[v] = s > 0 ? ExtRat::pos_inf() : (s < 0 ? ExtRat::neg_inf() : ExtRat(Rational(0)));
      // slope 0 at infinity: the finite limit is whatever integration gives;
      // recomputed below via from_data only if consistent, so patch the value
    } else {
      values[v] = ExtRat(vals[v]);
    }
  }
  // from_data validates the slope/infinity consistency; for slope-0 tails we
  // must supply the exact limit, so compute it the same way the checker does.
  PLFunction base = [&] {
    for (int v = 0; v < m->vertex_count(); ++v) {
      if (!m->vertex_at_infinity(v)) continue;
      const int e = m->incident(v).front();
      if (pieces[e].back().slope != 0) continue;
      Rational val = vals[m->edge(e).v];
      const auto& list = pieces[e];
      for (std::size_t i = 0; i + 1 < list.size(); ++i) {
        val += Rational(list[i].slope) * (list[i + 1].start - list[i].start);
      }
      values[v] = ExtRat(val);
    }
    return PLFunction::from_data(m, values, pieces);
  }();

  if (!m->is_singleton() && rng.below(2) == 0) {
    const Point p = random_point(m, rng);
    const ExtRat radius(Rational(rng.int_in(1, 4), 4));
    PLFunction bump = chip_firing(m, Subgraph::of_points(m, {p}), radius);
    PLFunction shift = PLFunction::constant(m, Rational(rng.int_in(-4, 4), 2));
    base = trop_add_fn(base, trop_mul_fn(bump, shift));
  }
  return base;
}

}  // namespace tropgal
