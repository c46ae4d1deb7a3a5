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

#include "tropgal/ratfun.hpp"

#include <algorithm>

namespace tropgal {

struct FnOps {
  static PLFunction raw(ModelPtr curve, std::vector<Rational> vertex_values,
                        std::vector<std::vector<Piece>> pieces) {
    PLFunction f;
    f.curve_ = std::move(curve);
    f.vertex_values_ = std::move(vertex_values);
    f.pieces_ = std::move(pieces);
    canonicalize(f);
    return f;
  }

  static PLFunction make_neg_inf(ModelPtr curve) {
    PLFunction f;
    f.curve_ = std::move(curve);
    f.neg_inf_ = true;
    return f;
  }

  static void canonicalize(PLFunction& f) {
    for (auto& list : f.pieces_) {
      std::vector<Piece> out;
      for (auto& p : list) {
        if (!out.empty() && out.back().slope == p.slope) continue;
        out.push_back(std::move(p));
      }
      list = std::move(out);
    }
  }
};

namespace {

void require_same_curve(const PLFunction& f, const PLFunction& g) {
  if (f.curve() != g.curve()) {
    throw std::invalid_argument("PLFunction: operands live on different curves");
  }
}

// Value of f at finite offset t on edge e.
Rational offset_value(const PLFunction& f, int e, const Rational& t) {
  const Edge& edge = f.curve()->edge(e);
  Rational val = f.finite_vertex_value(edge.v);
  const auto& pieces = f.edge_pieces(e);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Rational seg_end =
        i + 1 < pieces.size() ? pieces[i + 1].start
                              : (edge.length.is_finite() ? edge.length.value() : t);
    const Rational upto = std::min(t, seg_end);
    if (upto > pieces[i].start) {
      val += Rational(pieces[i].slope) * (upto - pieces[i].start);
    }
    if (t <= seg_end) break;
  }
  return val;
}

}  // namespace

PLFunction PLFunction::neg_inf(ModelPtr curve) { return FnOps::make_neg_inf(std::move(curve)); }

PLFunction PLFunction::constant(ModelPtr curve, const Rational& c) {
  std::vector<Rational> values(curve->vertex_count(), c);
  std::vector<std::vector<Piece>> pieces(curve->edge_count(), {Piece{Rational(0), 0}});
  return FnOps::raw(std::move(curve), std::move(values), std::move(pieces));
}

const Rational& PLFunction::finite_vertex_value(int v) const {
  if (neg_inf_) throw std::domain_error("PLFunction: constant -inf has no finite values");
  if (curve_->vertex_at_infinity(v)) {
    throw std::domain_error("PLFunction: vertex at infinity; use value_at_vertex");
  }
  return vertex_values_[v];
}

ExtRat PLFunction::value_at_vertex(int v) const {
  if (neg_inf_) return ExtRat::neg_inf();
  if (!curve_->vertex_at_infinity(v)) return ExtRat(vertex_values_[v]);
  const int e = curve_->incident(v).front();
  const auto& list = pieces_[e];
  const long long s = list.back().slope;
  if (s > 0) return ExtRat::pos_inf();
  if (s < 0) return ExtRat::neg_inf();
  return ExtRat(offset_value(*this, e, list.back().start));
}

void PLFunction::check_invariants() const {
  if (neg_inf_) return;
  const Model& m = *curve_;
  if (static_cast<int>(vertex_values_.size()) != m.vertex_count() ||
      static_cast<int>(pieces_.size()) != m.edge_count()) {
    throw std::logic_error("PLFunction: size mismatch");
  }
  for (int e = 0; e < m.edge_count(); ++e) {
    const Edge& edge = m.edge(e);
    const auto& list = pieces_[e];
    if (list.empty() || list.front().start != 0) {
      throw std::logic_error("PLFunction: pieces must start at offset 0");
    }
    for (std::size_t i = 0; i + 1 < list.size(); ++i) {
      if (!(list[i].start < list[i + 1].start)) {
        throw std::logic_error("PLFunction: piece starts must ascend");
      }
      if (list[i].slope == list[i + 1].slope) {
        throw std::logic_error("PLFunction: non-canonical pieces (equal adjacent slopes)");
      }
    }
    if (edge.length.is_finite() && list.back().start >= edge.length.value()) {
      throw std::logic_error("PLFunction: piece start beyond edge length");
    }
    if (edge.length.is_finite()) {
      // continuity: integrate from v and compare at w
      const Rational at_w = offset_value(*this, e, edge.length.value());
      if (at_w != vertex_values_[edge.w]) {
        throw std::logic_error("PLFunction: continuity violated on edge '" + edge.name + "'");
      }
    }
  }
}

PLFunction PLFunction::from_data(ModelPtr curve, const std::vector<ExtRat>& vertex_values,
                                 std::vector<std::vector<Piece>> pieces) {
  if (static_cast<int>(vertex_values.size()) != curve->vertex_count()) {
    throw std::invalid_argument("PLFunction: vertex value count mismatch");
  }
  if (static_cast<int>(pieces.size()) != curve->edge_count()) {
    throw std::invalid_argument("PLFunction: edge piece count mismatch");
  }
  std::vector<Rational> finite_values(curve->vertex_count(), Rational(0));
  for (int v = 0; v < curve->vertex_count(); ++v) {
    if (curve->vertex_at_infinity(v)) continue;
    if (!vertex_values[v].is_finite()) {
      throw std::invalid_argument("PLFunction: value at finite vertex '" + curve->vertex_name(v) +
                                  "' must be finite");
    }
    finite_values[v] = vertex_values[v].value();
  }
  PLFunction f = FnOps::raw(curve, std::move(finite_values), std::move(pieces));
  try {
    f.check_invariants();
  } catch (const std::logic_error& err) {
    throw std::invalid_argument(err.what());
  }
  for (int v = 0; v < curve->vertex_count(); ++v) {
    if (!curve->vertex_at_infinity(v)) continue;
    if (f.value_at_vertex(v) != vertex_values[v]) {
      throw std::invalid_argument("PLFunction: value at point at infinity '" +
                                  curve->vertex_name(v) + "' is inconsistent with its slope");
    }
  }
  return f;
}

ExtRat evaluate(const PLFunction& f, const Point& p) {
  if (f.is_neg_inf()) return ExtRat::neg_inf();
  Point c = canonical(*f.curve(), p);
  if (c.is_vertex()) return f.value_at_vertex(c.vertex);
  return ExtRat(offset_value(f, c.edge, c.offset.value()));
}

PLFunction simplify(const PLFunction& f) {
  if (f.is_neg_inf()) return f;
  PLFunction out = f;
  FnOps::canonicalize(out);
  return out;
}

bool fn_equal(const PLFunction& f, const PLFunction& g) {
  require_same_curve(f, g);
  if (f.is_neg_inf() || g.is_neg_inf()) return f.is_neg_inf() == g.is_neg_inf();
  for (int v = 0; v < f.curve()->vertex_count(); ++v) {
    if (f.curve()->vertex_at_infinity(v)) continue;
    if (f.finite_vertex_value(v) != g.finite_vertex_value(v)) return false;
  }
  for (int e = 0; e < f.curve()->edge_count(); ++e) {
    const auto& a = f.edge_pieces(e);
    const auto& b = g.edge_pieces(e);
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].start != b[i].start || a[i].slope != b[i].slope) return false;
    }
  }
  return true;
}

namespace {

// Shared merge loop for the pointwise binary operations. For each edge the
// piece starts of both operands are merged; `max_mode` additionally splits
// segments at exact crossing points.
PLFunction pointwise_binary(const PLFunction& f, const PLFunction& g, bool max_mode) {
  const ModelPtr& curve = f.curve();
  std::vector<Rational> values(curve->vertex_count(), Rational(0));
  for (int v = 0; v < curve->vertex_count(); ++v) {
    if (curve->vertex_at_infinity(v)) continue;
    const Rational& a = f.finite_vertex_value(v);
    const Rational& b = g.finite_vertex_value(v);
    values[v] = max_mode ? std::max(a, b) : a + b;
  }
  std::vector<std::vector<Piece>> pieces(curve->edge_count());
  for (int e = 0; e < curve->edge_count(); ++e) {
    const Edge& edge = curve->edge(e);
    const auto& pf = f.edge_pieces(e);
    const auto& pg = g.edge_pieces(e);
    std::vector<Rational> starts;
    for (const auto& p : pf) starts.push_back(p.start);
    for (const auto& p : pg) starts.push_back(p.start);
    std::sort(starts.begin(), starts.end());
    starts.erase(std::unique(starts.begin(), starts.end()), starts.end());

    std::size_t fi = 0, gi = 0;
    Rational fa = f.finite_vertex_value(edge.v);
    Rational ga = g.finite_vertex_value(edge.v);
    auto& out = pieces[e];
    for (std::size_t si = 0; si < starts.size(); ++si) {
      const Rational& a = starts[si];
      while (fi + 1 < pf.size() && pf[fi + 1].start <= a) ++fi;
      while (gi + 1 < pg.size() && pg[gi + 1].start <= a) ++gi;
      const long long sf = pf[fi].slope;
      const long long sg = pg[gi].slope;
      const bool bounded = si + 1 < starts.size() || edge.length.is_finite();
      const Rational b = si + 1 < starts.size()
                             ? starts[si + 1]
                             : (edge.length.is_finite() ? edge.length.value() : a);
      if (!max_mode) {
        out.push_back({a, sf + sg});
      } else if (fa == ga) {
        out.push_back({a, std::max(sf, sg)});
      } else {
        const bool f_leads = fa > ga;
        const long long lead_s = f_leads ? sf : sg;
        const long long trail_s = f_leads ? sg : sf;
        out.push_back({a, lead_s});
        if (trail_s > lead_s) {
          const Rational lead_v = f_leads ? fa : ga;
          const Rational trail_v = f_leads ? ga : fa;
          const Rational cross = a + (lead_v - trail_v) / Rational(trail_s - lead_s);
          if (!bounded || cross < b) out.push_back({cross, trail_s});
        }
      }
      if (bounded) {
        fa += Rational(sf) * (b - a);
        ga += Rational(sg) * (b - a);
      }
    }
  }
  return FnOps::raw(curve, std::move(values), std::move(pieces));
}

}  // namespace

PLFunction trop_add_fn(const PLFunction& f, const PLFunction& g) {
  require_same_curve(f, g);
  if (f.is_neg_inf()) return g;
  if (g.is_neg_inf()) return f;
  return pointwise_binary(f, g, /*max_mode=*/true);
}

PLFunction trop_mul_fn(const PLFunction& f, const PLFunction& g) {
  require_same_curve(f, g);
  if (f.is_neg_inf() || g.is_neg_inf()) return PLFunction::neg_inf(f.curve());
  return pointwise_binary(f, g, /*max_mode=*/false);
}

PLFunction trop_inv_fn(const PLFunction& f) {
  if (f.is_neg_inf()) {
    throw std::domain_error("trop_inv_fn: the zero element has no inverse");
  }
  std::vector<Rational> values(f.curve()->vertex_count(), Rational(0));
  for (int v = 0; v < f.curve()->vertex_count(); ++v) {
    if (!f.curve()->vertex_at_infinity(v)) values[v] = -f.finite_vertex_value(v);
  }
  std::vector<std::vector<Piece>> pieces = f.pieces();
  for (auto& list : pieces) {
    for (auto& p : list) p.slope = -p.slope;
  }
  return FnOps::raw(f.curve(), std::move(values), std::move(pieces));
}

PLFunction trop_min_fn(const PLFunction& f, const PLFunction& g) {
  require_same_curve(f, g);
  if (f.is_neg_inf() || g.is_neg_inf()) return PLFunction::neg_inf(f.curve());
  return trop_inv_fn(trop_add_fn(trop_inv_fn(f), trop_inv_fn(g)));
}

// ---------------------------------------------------------------------------
// Distance functions and chip-firing

PLFunction distance_to_subgraph(const ModelPtr& m, const Subgraph& s) {
  if (s.model() != m) throw std::invalid_argument("distance_to_subgraph: subgraph of another model");
  if (s.empty()) throw std::invalid_argument("distance_to_subgraph: empty subgraph");
  for (int v : s.vertices()) {
    if (!m->vertex_at_infinity(v)) continue;
    const int e = m->incident(v).front();
    bool reached = false;
    auto it = s.intervals().find(e);
    if (it != s.intervals().end()) {
      for (const auto& iv : it->second) reached = reached || iv.hi.is_pos_inf();
    }
    if (!reached) {
      throw std::invalid_argument(
          "distance_to_subgraph: component consisting of only a point at infinity");
    }
  }

  RefineResult rr = refine(m, s.boundary_interior_points());
  const Model& rm = *rr.model;

  std::vector<int> sources;
  for (int v = 0; v < rm.vertex_count(); ++v) {
    if (s.contains(rr.reloc.unmap_point(Point::at_vertex(v)))) sources.push_back(v);
  }
  auto dist = detail::shortest_from_sources(rm, sources);

  auto covered = [&](int parent, const ExtRat& lo, const ExtRat& hi) {
    auto it = s.intervals().find(parent);
    if (it == s.intervals().end()) return false;
    for (const auto& iv : it->second) {
      if (iv.lo <= lo && hi <= iv.hi) return true;
    }
    return false;
  };

  std::vector<std::vector<Piece>> pieces(m->edge_count());
  for (int e = 0; e < m->edge_count(); ++e) {
    for (const auto& sub : rr.reloc.pieces[e]) {
      const Rational base = sub.lo.value();
      if (covered(e, sub.lo, sub.hi)) {
        pieces[e].push_back({base, 0});
        continue;
      }
      const Edge& redge = rm.edge(sub.to_edge);
      if (redge.infinite()) {
        pieces[e].push_back({base, 1});
        continue;
      }
      const Rational dv = *dist[redge.v];
      const Rational dw = *dist[redge.w];
      const Rational len = redge.length.value();
      const Rational apex = (dw + len - dv) / 2;
      if (apex <= 0) {
        pieces[e].push_back({base, -1});
      } else if (apex >= len) {
        pieces[e].push_back({base, 1});
      } else {
        pieces[e].push_back({base, 1});
        pieces[e].push_back({base + apex, -1});
      }
    }
  }

  std::vector<ExtRat> values(m->vertex_count());
  for (int v = 0; v < m->vertex_count(); ++v) {
    if (m->vertex_at_infinity(v)) {
      values[v] = s.contains(Point::at_vertex(v)) ? ExtRat(0) : ExtRat::pos_inf();
    } else {
      values[v] = ExtRat(*dist[rr.reloc.vertex_map[v]]);
    }
  }
  return PLFunction::from_data(m, values, std::move(pieces));
}

PLFunction chip_firing(const ModelPtr& m, const Subgraph& s, const ExtRat& l) {
  if (l.is_neg_inf() || (l.is_finite() && l.value() <= 0)) {
    throw std::invalid_argument("chip_firing: l must be positive or +inf");
  }
  PLFunction dist = distance_to_subgraph(m, s);
  if (l.is_pos_inf()) return trop_inv_fn(dist);
  return trop_inv_fn(trop_min_fn(dist, PLFunction::constant(m, l.value())));
}

PLFunction rebase(const PLFunction& f, const Relocation& reloc) {
  if (f.curve() != reloc.from) throw std::invalid_argument("rebase: relocation from another model");
  if (f.is_neg_inf()) return PLFunction::neg_inf(reloc.to);
  const Model& to = *reloc.to;
  std::vector<Rational> values(to.vertex_count(), Rational(0));
  for (int v = 0; v < to.vertex_count(); ++v) {
    if (to.vertex_at_infinity(v)) continue;
    const ExtRat val = evaluate(f, reloc.unmap_point(Point::at_vertex(v)));
    values[v] = val.value();
  }
  std::vector<std::vector<Piece>> pieces(to.edge_count());
  for (int e = 0; e < f.curve()->edge_count(); ++e) {
    for (const auto& sub : reloc.pieces[e]) {
      auto& out = pieces[sub.to_edge];
      const auto& src = f.edge_pieces(e);
      for (std::size_t i = 0; i < src.size(); ++i) {
        const Rational& a = src[i].start;
        if (ExtRat(a) >= sub.hi) break;
        if (ExtRat(a) <= sub.lo) {
          const bool next_inside = i + 1 < src.size() && ExtRat(src[i + 1].start) > sub.lo;
          if (next_inside || i + 1 == src.size()) out.push_back({Rational(0), src[i].slope});
        } else {
          out.push_back({a - sub.lo.value(), src[i].slope});
        }
      }
    }
  }
  return FnOps::raw(reloc.to, std::move(values), std::move(pieces));
}

}  // namespace tropgal
