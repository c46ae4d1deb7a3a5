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

#include "tropgal/morphism.hpp"

#include <algorithm>
#include <map>

namespace tropgal {

namespace {

Rational integrate_pieces(Rational val0, const std::vector<Piece>& pieces, const Rational& t) {
  Rational val = std::move(val0);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Rational seg_end = i + 1 < pieces.size() ? pieces[i + 1].start : t;
    const Rational upto = std::min(t, seg_end);
    if (upto > pieces[i].start) val += Rational(pieces[i].slope) * (upto - pieces[i].start);
    if (t <= seg_end) break;
  }
  return val;
}

std::size_t piece_at(const std::vector<Piece>& pieces, const Rational& t) {
  std::size_t i = 0;
  while (i + 1 < pieces.size() && pieces[i + 1].start <= t) ++i;
  return i;
}

}  // namespace

HarmonicMorphism::HarmonicMorphism(ModelPtr source, ModelPtr target, std::vector<int> vertex_map,
                                   std::vector<EdgeImage> edge_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      vertex_map_(std::move(vertex_map)),
      edge_map_(std::move(edge_map)) {
  if (static_cast<int>(vertex_map_.size()) != source_->vertex_count() ||
      static_cast<int>(edge_map_.size()) != source_->edge_count()) {
    throw std::invalid_argument("morphism: map size mismatch");
  }
  for (int img : vertex_map_) {
    if (img < 0 || img >= target_->vertex_count()) {
      throw std::invalid_argument("morphism: vertex image out of range");
    }
  }
  for (const auto& img : edge_map_) {
    if (img.edge < 0 || img.edge >= target_->edge_count()) {
      throw std::invalid_argument("morphism: edge image out of range");
    }
    if (img.degree < 1) throw std::invalid_argument("morphism: edge degree must be positive");
  }

  auto& rep = report_;
  if (source_->is_singleton() != target_->is_singleton()) {
    rep.violations.push_back({5, source_->is_singleton()
                                     ? "source is a singleton but target is not"
                                     : "target is a singleton but source is not"});
    return;
  }
  if (source_->is_singleton()) {
    rep.degree_indeterminate = true;  // both singletons: any degree
    return;
  }

  // (1)+(2): vertex/edge images cohere with the orientation flags
  for (int e = 0; e < source_->edge_count(); ++e) {
    const Edge& se = source_->edge(e);
    const EdgeImage& img = edge_map_[e];
    const Edge& te = target_->edge(img.edge);
    const int head = img.reversed ? te.w : te.v;
    const int tail = img.reversed ? te.v : te.w;
    if (vertex_map_[se.v] != head || vertex_map_[se.w] != tail) {
      rep.violations.push_back(
          {1, "edge '" + se.name + "': endpoint images disagree with its image '" + te.name + "'"});
    }
  }

  // (3): metric scaling, infinity carried to infinity
  for (int e = 0; e < source_->edge_count(); ++e) {
    const Edge& se = source_->edge(e);
    const EdgeImage& img = edge_map_[e];
    const Edge& te = target_->edge(img.edge);
    if (se.infinite()) {
      if (!te.infinite()) {
        rep.violations.push_back({2, "infinite edge '" + se.name + "' maps to finite '" + te.name + "'"});
      } else if (img.reversed) {
        rep.violations.push_back(
            {2, "infinite edge '" + se.name + "': points at infinity do not correspond"});
      }
    } else if (te.infinite()) {
      rep.violations.push_back({2, "finite edge '" + se.name + "' maps to infinite '" + te.name + "'"});
    } else if (te.length.value() != Rational(img.degree) * se.length.value()) {
      rep.violations.push_back(
          {2, "edge '" + se.name + "': target length != deg_e * source length (deg_e = " +
                  std::to_string(img.degree) + ")"});
    }
  }

  // (4): harmonicity at every source vertex
  vertex_degrees_.assign(source_->vertex_count(), 0);
  for (int v = 0; v < source_->vertex_count(); ++v) {
    std::map<int, long long> per_target_edge;
    for (int te : target_->incident(vertex_map_[v])) per_target_edge[te] = 0;
    for (int ei : source_->incident(v)) per_target_edge[edge_map_[ei].edge] += edge_map_[ei].degree;
    long long common = -1;
    bool first = true;
    for (const auto& [te, sum] : per_target_edge) {
      (void)te;
      if (first) {
        common = sum;
        first = false;
      } else if (sum != common) {
        rep.violations.push_back(
            {3, "vertex '" + source_->vertex_name(v) + "': direction-dependent local degree"});
        common = std::max(common, sum);
      }
    }
    vertex_degrees_[v] = common;
  }

  // global degree: the fiber sums over target vertices must agree
  if (rep.ok()) {
    std::vector<long long> fiber_sum(target_->vertex_count(), 0);
    std::vector<bool> hit(target_->vertex_count(), false);
    for (int v = 0; v < source_->vertex_count(); ++v) {
      fiber_sum[vertex_map_[v]] += vertex_degrees_[v];
      hit[vertex_map_[v]] = true;
    }
    for (int tv = 0; tv < target_->vertex_count(); ++tv) {
      if (!hit[tv] || fiber_sum[tv] != fiber_sum[vertex_map_[0]]) {
        rep.violations.push_back(
            {4, "vertex '" + target_->vertex_name(tv) + "': fiber degree sum differs"});
      }
    }
    if (rep.ok()) {
      rep.degree = fiber_sum[vertex_map_[0]];
      if (rep.degree <= 0) {
        rep.degree.reset();
        rep.violations.push_back({4, "degree is not positive"});
      }
    }
  }
}

HarmonicMorphism HarmonicMorphism::identity(ModelPtr m) {
  std::vector<int> vmap(m->vertex_count());
  for (int v = 0; v < m->vertex_count(); ++v) vmap[v] = v;
  std::vector<EdgeImage> emap(m->edge_count());
  for (int e = 0; e < m->edge_count(); ++e) emap[e] = {e, false, 1};
  return HarmonicMorphism(m, m, std::move(vmap), std::move(emap));
}

std::optional<long long> HarmonicMorphism::degree() const {
  if (!is_valid()) throw std::invalid_argument("morphism: degree of an invalid morphism");
  if (report_.degree_indeterminate) return std::nullopt;
  return report_.degree;
}

long long HarmonicMorphism::vertex_degree(int v) const {
  if (!is_valid()) throw std::invalid_argument("morphism: invalid");
  return vertex_degrees_[v];
}

Point HarmonicMorphism::map_point(const Point& p) const {
  if (!is_valid()) throw std::invalid_argument("morphism: invalid");
  Point c = canonical(*source_, p);
  if (c.is_vertex()) return Point::at_vertex(vertex_map_[c.vertex]);
  const EdgeImage& img = edge_map_[c.edge];
  const Edge& te = target_->edge(img.edge);
  ExtRat u = Rational(img.degree) * c.offset;
  if (img.reversed) u = te.length - u;
  return canonical(*target_, Point::on_edge(img.edge, u));
}

HarmonicMorphism compose(const HarmonicMorphism& phi2, const HarmonicMorphism& phi1) {
  if (phi1.target() != phi2.source()) {
    throw std::invalid_argument("compose: inner target differs from outer source");
  }
  std::vector<int> vmap(phi1.source()->vertex_count());
  for (int v = 0; v < phi1.source()->vertex_count(); ++v) {
    vmap[v] = phi2.map_vertex(phi1.map_vertex(v));
  }
  std::vector<EdgeImage> emap(phi1.source()->edge_count());
  for (int e = 0; e < phi1.source()->edge_count(); ++e) {
    const EdgeImage& a = phi1.map_edge(e);
    const EdgeImage& b = phi2.map_edge(a.edge);
    emap[e] = {b.edge, a.reversed != b.reversed, a.degree * b.degree};
  }
  return HarmonicMorphism(phi1.source(), phi2.target(), std::move(vmap), std::move(emap));
}

PLFunction pullback(const HarmonicMorphism& phi, const PLFunction& target_fn) {
  if (target_fn.curve() != phi.target()) {
    throw std::invalid_argument("pullback: function lives on another curve");
  }
  if (!phi.is_valid()) throw std::invalid_argument("pullback: invalid morphism");
  if (target_fn.is_neg_inf()) return PLFunction::neg_inf(phi.source());

  const Model& src = *phi.source();
  std::vector<ExtRat> values(src.vertex_count());
  for (int v = 0; v < src.vertex_count(); ++v) {
    values[v] = target_fn.value_at_vertex(phi.map_vertex(v));
  }
  std::vector<std::vector<Piece>> pieces(src.edge_count());
  for (int e = 0; e < src.edge_count(); ++e) {
    const EdgeImage& img = phi.map_edge(e);
    const Edge& te = phi.target()->edge(img.edge);
    const auto& tp = target_fn.edge_pieces(img.edge);
    const Rational d(img.degree);
    if (!img.reversed) {
      for (const auto& p : tp) pieces[e].push_back({p.start / d, img.degree * p.slope});
    } else {
      const Rational L = te.length.value();
      for (std::size_t i = tp.size(); i-- > 0;) {
        const Rational seg_end = i + 1 < tp.size() ? tp[i + 1].start : L;
        pieces[e].push_back({(L - seg_end) / d, -img.degree * tp[i].slope});
      }
    }
  }
  return PLFunction::from_data(phi.source(), values, std::move(pieces));
}

PLFunction pushforward(const HarmonicMorphism& phi, const PLFunction& f) {
  if (f.curve() != phi.source()) throw std::invalid_argument("pushforward: function lives on another curve");
  if (!phi.is_valid()) throw std::invalid_argument("pushforward: invalid morphism");
  if (f.is_neg_inf()) return PLFunction::neg_inf(phi.target());

  const Model& src = *phi.source();
  const Model& tgt = *phi.target();

  std::vector<std::vector<int>> edge_fiber(tgt.edge_count());
  for (int e = 0; e < src.edge_count(); ++e) edge_fiber[phi.map_edge(e).edge].push_back(e);

  std::vector<std::vector<Piece>> pieces(tgt.edge_count());
  for (int te = 0; te < tgt.edge_count(); ++te) {
    const Edge& tedge = tgt.edge(te);
    if (edge_fiber[te].empty()) throw std::logic_error("pushforward: empty edge fiber");
    std::vector<Rational> breaks{Rational(0)};
    for (int e : edge_fiber[te]) {
      const EdgeImage& img = phi.map_edge(e);
      const Rational d(img.degree);
      for (const auto& p : f.edge_pieces(e)) {
        Rational u = d * p.start;
        if (img.reversed) u = tedge.length.value() - u;
        if (u > 0 && (!tedge.length.is_finite() || u < tedge.length.value())) breaks.push_back(u);
      }
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    for (std::size_t bi = 0; bi < breaks.size(); ++bi) {
      // sample the open segment to read off each fiber edge's slope
      Rational mid;
      if (bi + 1 < breaks.size()) {
        mid = (breaks[bi] + breaks[bi + 1]) / 2;
      } else if (tedge.length.is_finite()) {
        mid = (breaks[bi] + tedge.length.value()) / 2;
      } else {
        mid = breaks[bi] + 1;
      }
      long long slope_sum = 0;
      for (int e : edge_fiber[te]) {
        const EdgeImage& img = phi.map_edge(e);
        const Rational d(img.degree);
        const Rational t = (img.reversed ? tedge.length.value() - mid : mid) / d;
        const auto& fp = f.edge_pieces(e);
        const long long s = fp[piece_at(fp, t)].slope;
        slope_sum += img.reversed ? -s : s;
      }
      pieces[te].push_back({breaks[bi], slope_sum});
    }
  }

  std::vector<std::vector<int>> vertex_fiber(tgt.vertex_count());
  for (int v = 0; v < src.vertex_count(); ++v) vertex_fiber[phi.map_vertex(v)].push_back(v);
  std::vector<ExtRat> values(tgt.vertex_count());
  for (int tv = 0; tv < tgt.vertex_count(); ++tv) {
    if (!tgt.vertex_at_infinity(tv)) {
      Rational sum(0);
      for (int v : vertex_fiber[tv]) {
        sum += Rational(phi.vertex_degree(v)) * f.finite_vertex_value(v);
      }
      values[tv] = ExtRat(sum);
    }
  }
  // points at infinity: continuous extension along the incident edge
  for (int tv = 0; tv < tgt.vertex_count(); ++tv) {
    if (!tgt.vertex_at_infinity(tv)) continue;
    const int te = tgt.incident(tv).front();
    const auto& list = pieces[te];
    const long long s = list.back().slope;
    if (s > 0) {
      values[tv] = ExtRat::pos_inf();
    } else if (s < 0) {
      values[tv] = ExtRat::neg_inf();
    } else {
      values[tv] = ExtRat(
          integrate_pieces(values[tgt.edge(te).v].value(), list, list.back().start));
    }
  }
  return PLFunction::from_data(phi.target(), values, std::move(pieces));
}

PushdownResult pushdown(const HarmonicMorphism& phi, const PLFunction& f) {
  if (f.curve() != phi.source()) throw std::invalid_argument("pushdown: function lives on another curve");
  if (!phi.is_valid()) throw std::invalid_argument("pushdown: invalid morphism");
  PushdownResult out;
  if (f.is_neg_inf()) {
    out.fn = PLFunction::neg_inf(phi.target());
    return out;
  }
  const Model& src = *phi.source();
  const Model& tgt = *phi.target();

  // slope divisibility, scanned in edge order
  for (int e = 0; e < src.edge_count(); ++e) {
    const EdgeImage& img = phi.map_edge(e);
    for (const auto& p : f.edge_pieces(e)) {
      if (p.slope % img.degree != 0) {
        out.obstruction = PushdownResult::Obstruction::Divisibility;
        out.detail = "slope " + std::to_string(p.slope) + " on edge '" + src.edge(e).name +
                     "' is not divisible by deg_e = " + std::to_string(img.degree);
        return out;
      }
    }
  }

  // constant on vertex fibers
  std::vector<std::vector<int>> vertex_fiber(tgt.vertex_count());
  for (int v = 0; v < src.vertex_count(); ++v) vertex_fiber[phi.map_vertex(v)].push_back(v);
  for (int tv = 0; tv < tgt.vertex_count(); ++tv) {
    const auto& fiber = vertex_fiber[tv];
    for (std::size_t i = 1; i < fiber.size(); ++i) {
      if (f.value_at_vertex(fiber[i]) != f.value_at_vertex(fiber[0])) {
        out.obstruction = PushdownResult::Obstruction::FiberMismatch;
        out.detail = "vertices '" + src.vertex_name(fiber[0]) + "' and '" +
                     src.vertex_name(fiber[i]) + "' lie over '" + tgt.vertex_name(tv) +
                     "' but carry values " + f.value_at_vertex(fiber[0]).str() + " vs " +
                     f.value_at_vertex(fiber[i]).str();
        return out;
      }
    }
  }

  // transform each fiber edge to target coordinates and require agreement
  std::vector<std::vector<int>> edge_fiber(tgt.edge_count());
  for (int e = 0; e < src.edge_count(); ++e) edge_fiber[phi.map_edge(e).edge].push_back(e);

  std::vector<std::vector<Piece>> cand_pieces(tgt.edge_count());
  for (int te = 0; te < tgt.edge_count(); ++te) {
    const Edge& tedge = tgt.edge(te);
    auto lift = [&](int e) {
      const EdgeImage& img = phi.map_edge(e);
      const Rational d(img.degree);
      std::vector<Piece> tp;
      const auto& fp = f.edge_pieces(e);
      if (!img.reversed) {
        for (const auto& p : fp) tp.push_back({d * p.start, p.slope / img.degree});
      } else {
        const Rational L = tedge.length.value();
        for (std::size_t i = fp.size(); i-- > 0;) {
          const Rational seg_end = i + 1 < fp.size() ? fp[i + 1].start : L / d;
          tp.push_back({L - d * seg_end, -(fp[i].slope / img.degree)});
        }
      }
      return tp;
    };
    const auto& fiber = edge_fiber[te];
    if (fiber.empty()) throw std::logic_error("pushdown: empty edge fiber");
    cand_pieces[te] = lift(fiber[0]);
    for (std::size_t i = 1; i < fiber.size(); ++i) {
      const auto other = lift(fiber[i]);
      bool differ = other.size() != cand_pieces[te].size();
      for (std::size_t k = 0; !differ && k < other.size(); ++k) {
        differ = other[k].start != cand_pieces[te][k].start ||
                 other[k].slope != cand_pieces[te][k].slope;
      }
      // The vertex-fiber check already matched values at u = 0, so lifted
      // piece lists agreeing means the lifted functions agree on this edge.
      if (!differ) continue;

      auto value_of = [&](int e, const Rational& u) {
        const EdgeImage& img = phi.map_edge(e);
        const Rational t = (img.reversed ? tedge.length.value() - u : u) / Rational(img.degree);
        return evaluate(f, Point::on_edge(e, ExtRat(t)));
      };
      std::vector<Rational> starts;
      for (const auto& p : cand_pieces[te]) starts.push_back(p.start);
      for (const auto& p : other) starts.push_back(p.start);
      std::sort(starts.begin(), starts.end());
      starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
      Rational witness_u;
      bool found = false;
      for (std::size_t k = 0; k < starts.size() && !found; ++k) {
        if (starts[k] > 0 && value_of(fiber[0], starts[k]) != value_of(fiber[i], starts[k])) {
          witness_u = starts[k];
          found = true;
          break;
        }
        const Rational mid = k + 1 < starts.size()
                                 ? Rational((starts[k] + starts[k + 1]) / 2)
                                 : (tedge.length.is_finite()
                                        ? Rational((starts[k] + tedge.length.value()) / 2)
                                        : Rational(starts[k] + 1));
        if (value_of(fiber[0], mid) != value_of(fiber[i], mid)) {
          witness_u = mid;
          found = true;
        }
      }
      if (!found) throw std::logic_error("pushdown: lift mismatch without witness");
      const EdgeImage& img0 = phi.map_edge(fiber[0]);
      const EdgeImage& imgi = phi.map_edge(fiber[i]);
      const Rational t0 =
          (img0.reversed ? tedge.length.value() - witness_u : witness_u) / Rational(img0.degree);
      const Rational ti =
          (imgi.reversed ? tedge.length.value() - witness_u : witness_u) / Rational(imgi.degree);
      out.obstruction = PushdownResult::Obstruction::FiberMismatch;
      out.detail = "points " + point_str(src, Point::on_edge(fiber[0], ExtRat(t0))) + " and " +
                   point_str(src, Point::on_edge(fiber[i], ExtRat(ti))) + " lie over '" +
                   tedge.name + "'@" + to_string(witness_u) + " but carry values " +
                   value_of(fiber[0], witness_u).str() + " vs " +
                   value_of(fiber[i], witness_u).str();
      return out;
    }
  }

  std::vector<ExtRat> values(tgt.vertex_count());
  for (int tv = 0; tv < tgt.vertex_count(); ++tv) {
    values[tv] = f.value_at_vertex(vertex_fiber[tv].front());
  }
  PLFunction cand = PLFunction::from_data(phi.target(), values, std::move(cand_pieces));
  if (!fn_equal(pullback(phi, cand), f)) {
    throw std::logic_error("pushdown: candidate verification failed");
  }
  out.fn = std::move(cand);
  return out;
}

FactorResult degree_one_factor(const HarmonicMorphism& phi1, const HarmonicMorphism& phi2) {
  if (phi1.source() != phi2.source()) {
    throw std::invalid_argument("degree_one_factor: morphisms have different sources");
  }
  if (!phi1.is_valid() || !phi2.is_valid()) {
    throw std::invalid_argument("degree_one_factor: invalid morphism");
  }
  FactorResult out;
  const Model& src = *phi1.source();
  const Model& mid = *phi2.target();

  std::vector<int> vmap(mid.vertex_count(), -1);
  for (int v = 0; v < src.vertex_count(); ++v) {
    int& slot = vmap[phi2.map_vertex(v)];
    if (slot == -1) {
      slot = phi1.map_vertex(v);
    } else if (slot != phi1.map_vertex(v)) {
      out.obstruction = "phi2-fiber over '" + mid.vertex_name(phi2.map_vertex(v)) +
                        "' has phi1-images '" + phi1.target()->vertex_name(slot) + "' and '" +
                        phi1.target()->vertex_name(phi1.map_vertex(v)) + "'";
      return out;
    }
  }
  std::vector<EdgeImage> emap(mid.edge_count());
  std::vector<bool> set(mid.edge_count(), false);
  for (int e = 0; e < src.edge_count(); ++e) {
    const EdgeImage& a2 = phi2.map_edge(e);
    const EdgeImage& a1 = phi1.map_edge(e);
    if (a1.degree % a2.degree != 0) {
      out.obstruction = "edge '" + src.edge(e).name + "': deg under phi1 (" +
                        std::to_string(a1.degree) + ") is not a multiple of deg under phi2 (" +
                        std::to_string(a2.degree) + ")";
      return out;
    }
    EdgeImage cand{a1.edge, a1.reversed != a2.reversed, a1.degree / a2.degree};
    if (!set[a2.edge]) {
      emap[a2.edge] = cand;
      set[a2.edge] = true;
    } else if (emap[a2.edge].edge != cand.edge || emap[a2.edge].reversed != cand.reversed ||
               emap[a2.edge].degree != cand.degree) {
      out.obstruction = "phi2-fiber over edge '" + mid.edge(a2.edge).name +
                        "' has inconsistent phi1-images";
      return out;
    }
  }
  for (int te = 0; te < mid.edge_count(); ++te) {
    if (!set[te]) {
      out.obstruction = "edge '" + mid.edge(te).name + "' not covered by phi2";
      return out;
    }
  }
  HarmonicMorphism psi(phi2.target(), phi1.target(), std::move(vmap), std::move(emap));
  if (!psi.is_valid()) {
    out.obstruction = "candidate factor is not harmonic: " + psi.validate().violations.front().detail;
    return out;
  }
  const auto deg = psi.degree();
  if (deg && *deg != 1) {
    out.obstruction = "candidate factor has degree " + std::to_string(*deg);
    return out;
  }
  out.morphism = std::move(psi);
  return out;
}

MorphismRefinement refine_morphism(const HarmonicMorphism& phi, const std::vector<Point>& cuts) {
  if (!phi.is_valid()) throw std::invalid_argument("refine_morphism: invalid morphism");
  const Model& src = *phi.source();
  const Model& tgt = *phi.target();

  std::vector<Point> target_cuts;
  for (const auto& raw : cuts) {
    Point c = canonical(src, raw);
    if (c.is_vertex()) continue;
    target_cuts.push_back(phi.map_point(c));
  }
  RefineResult rt = refine(phi.target(), target_cuts);

  // close the source cuts under fibers: preimages of every target cut
  std::vector<Point> closed_cuts;
  for (int e = 0; e < src.edge_count(); ++e) {
    const EdgeImage& img = phi.map_edge(e);
    const Rational d(img.degree);
    for (const auto& sub : rt.reloc.pieces[img.edge]) {
      if (sub.lo == ExtRat(0)) continue;
      const Rational u = sub.lo.value();
      const Rational L_or_zero =
          img.reversed ? tgt.edge(img.edge).length.value() : Rational(0);
      const Rational t = img.reversed ? Rational((L_or_zero - u) / d) : Rational(u / d);
      closed_cuts.push_back(Point::on_edge(e, ExtRat(t)));
    }
  }
  RefineResult rs = refine(phi.source(), closed_cuts);

  std::vector<int> vmap(rs.model->vertex_count());
  for (int v = 0; v < rs.model->vertex_count(); ++v) {
    Point pre = rs.reloc.unmap_point(Point::at_vertex(v));
    Point img = rt.reloc.map_point(phi.map_point(pre));
    if (!img.is_vertex()) throw std::logic_error("refine_morphism: cut image is not a vertex");
    vmap[v] = img.vertex;
  }
  std::vector<EdgeImage> emap(rs.model->edge_count());
  for (int e = 0; e < src.edge_count(); ++e) {
    const EdgeImage& img = phi.map_edge(e);
    const Rational d(img.degree);
    for (const auto& sub : rs.reloc.pieces[e]) {
      ExtRat img_lo, img_hi;
      if (!img.reversed) {
        img_lo = d * sub.lo;
        img_hi = d * sub.hi;
      } else {
        img_lo = tgt.edge(img.edge).length - d * sub.hi;
        img_hi = tgt.edge(img.edge).length - d * sub.lo;
      }
      int found = -1;
      for (const auto& tsub : rt.reloc.pieces[img.edge]) {
        if (tsub.lo == img_lo && tsub.hi == img_hi) {
          found = tsub.to_edge;
          break;
        }
      }
      if (found < 0) throw std::logic_error("refine_morphism: image window is not a target edge");
      emap[sub.to_edge] = {found, img.reversed, img.degree};
    }
  }
  MorphismRefinement out{HarmonicMorphism(rs.model, rt.model, std::move(vmap), std::move(emap)),
                         rs.reloc, rt.reloc};
  if (!out.phi.is_valid()) throw std::logic_error("refine_morphism: refined morphism invalid");
  return out;
}

}  // namespace tropgal
