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

#include "tropgal/metric_graph.hpp"

#include <algorithm>
#include <queue>

namespace tropgal {

std::shared_ptr<const Model> Model::make(std::string name,
                                         std::vector<std::string> vertices,
                                         std::vector<EdgeSpec> edges) {
  auto model = std::shared_ptr<Model>(new Model());
  model->name_ = std::move(name);
  if (vertices.empty()) throw std::invalid_argument("model: no vertices");
  for (const auto& v : vertices) {
    if (v.empty()) throw std::invalid_argument("model: empty vertex name");
    if (!model->vertex_by_name_.emplace(v, static_cast<int>(model->vertex_names_.size())).second) {
      throw std::invalid_argument("model: duplicate vertex '" + v + "'");
    }
    model->vertex_names_.push_back(v);
  }
  model->at_infinity_.assign(model->vertex_names_.size(), false);
  model->incident_.assign(model->vertex_names_.size(), {});

  for (const auto& spec : edges) {
    Edge e;
    e.name = spec.name;
    if (e.name.empty()) throw std::invalid_argument("model: empty edge name");
    auto iv = model->vertex_by_name_.find(spec.v);
    auto iw = model->vertex_by_name_.find(spec.w);
    if (iv == model->vertex_by_name_.end() || iw == model->vertex_by_name_.end()) {
      throw std::invalid_argument("model: edge '" + e.name + "' references unknown vertex");
    }
    e.v = iv->second;
    e.w = iw->second;
    if (e.v == e.w) {
      throw std::invalid_argument("model: loop edge '" + e.name + "' (loopless models only)");
    }
    e.length = spec.length;
    if (e.length.is_neg_inf() || (e.length.is_finite() && e.length.value() <= 0)) {
      throw std::invalid_argument("model: edge '" + e.name + "' needs positive or infinite length");
    }
    const int idx = static_cast<int>(model->edges_.size());
    if (!model->edge_by_name_.emplace(e.name, idx).second) {
      throw std::invalid_argument("model: duplicate edge '" + e.name + "'");
    }
    model->incident_[e.v].push_back(idx);
    model->incident_[e.w].push_back(idx);
    model->edges_.push_back(e);
  }

  for (const auto& e : model->edges_) {
    if (!e.infinite()) continue;
    if (model->incident_[e.w].size() != 1) {
      throw std::invalid_argument("model: infinite edge '" + e.name +
                                  "' must end at a leaf (its point at infinity)");
    }
    model->at_infinity_[e.w] = true;
  }
  for (const auto& e : model->edges_) {
    if (model->at_infinity_[e.v]) {
      throw std::invalid_argument("model: vertex '" + model->vertex_names_[e.v] +
                                  "' at infinity cannot be a finite endpoint");
    }
    if (!e.infinite() && model->at_infinity_[e.w]) {
      throw std::invalid_argument("model: finite edge '" + e.name + "' touches a point at infinity");
    }
  }

  // connectivity
  std::vector<bool> seen(model->vertex_names_.size(), false);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = true;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int ei : model->incident_[v]) {
      const Edge& e = model->edges_[ei];
      int u = e.v == v ? e.w : e.v;
      if (!seen[u]) {
        seen[u] = true;
        bfs.push(u);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw std::invalid_argument("model: graph is not connected");
  }
  return model;
}

int Model::vertex_index(const std::string& name) const {
  auto it = vertex_by_name_.find(name);
  return it == vertex_by_name_.end() ? -1 : it->second;
}

int Model::edge_index(const std::string& name) const {
  auto it = edge_by_name_.find(name);
  return it == edge_by_name_.end() ? -1 : it->second;
}

std::optional<Rational> Model::min_finite_edge_length() const {
  std::optional<Rational> best;
  for (const auto& e : edges_) {
    if (!e.length.is_finite()) continue;
    if (!best || e.length.value() < *best) best = e.length.value();
  }
  return best;
}

Point canonical(const Model& m, Point p) {
  if (p.is_vertex()) {
    if (p.vertex >= m.vertex_count()) throw std::invalid_argument("point: bad vertex index");
    return p;
  }
  if (p.edge < 0 || p.edge >= m.edge_count()) throw std::invalid_argument("point: bad edge index");
  const Edge& e = m.edge(p.edge);
  if (p.offset < ExtRat(0) || p.offset > e.length) {
    throw std::invalid_argument("point: offset outside edge '" + e.name + "'");
  }
  if (p.offset == ExtRat(0)) return Point::at_vertex(e.v);
  if (p.offset == e.length) return Point::at_vertex(e.w);  // covers inf on infinite edges
  return p;
}

bool point_eq(const Model& m, const Point& a, const Point& b) {
  Point ca = canonical(m, a), cb = canonical(m, b);
  if (ca.is_vertex() != cb.is_vertex()) return false;
  if (ca.is_vertex()) return ca.vertex == cb.vertex;
  return ca.edge == cb.edge && ca.offset == cb.offset;
}

bool at_infinity(const Model& m, const Point& p) {
  Point c = canonical(m, p);
  return c.is_vertex() && m.vertex_at_infinity(c.vertex);
}

std::string point_str(const Model& m, const Point& p) {
  Point c = canonical(m, p);
  if (c.is_vertex()) return m.vertex_name(c.vertex);
  return m.edge(c.edge).name + "@" + c.offset.str();
}

int valence(const Model& m, const Point& p) {
  Point c = canonical(m, p);
  if (!c.is_vertex()) return 2;
  return m.degree(c.vertex);
}

// ---------------------------------------------------------------------------
// Subgraph

Subgraph Subgraph::whole(ModelPtr m) {
  Subgraph s(m);
  for (int v = 0; v < m->vertex_count(); ++v) s.add_vertex(v);
  for (int e = 0; e < m->edge_count(); ++e) s.add_interval(e, ExtRat(0), m->edge(e).length);
  return s;
}

Subgraph Subgraph::of_points(ModelPtr m, const std::vector<Point>& pts) {
  Subgraph s(std::move(m));
  for (const auto& p : pts) s.add_point(p);
  return s;
}

void Subgraph::add_vertex(int v) {
  if (v < 0 || v >= model_->vertex_count()) throw std::invalid_argument("subgraph: bad vertex");
  vertices_.insert(v);
}

void Subgraph::add_point(const Point& p) {
  Point c = canonical(*model_, p);
  if (c.is_vertex()) {
    add_vertex(c.vertex);
  } else {
    add_interval(c.edge, c.offset, c.offset);
  }
}

void Subgraph::add_interval(int e, const ExtRat& lo, const ExtRat& hi) {
  if (e < 0 || e >= model_->edge_count()) throw std::invalid_argument("subgraph: bad edge");
  const Edge& edge = model_->edge(e);
  if (lo < ExtRat(0) || hi < lo || hi > edge.length || lo.is_infinite()) {
    throw std::invalid_argument("subgraph: bad interval on '" + edge.name + "'");
  }
  if (lo == ExtRat(0)) vertices_.insert(edge.v);
  if (hi == edge.length) vertices_.insert(edge.w);
  if (lo == hi) {
    if (lo == ExtRat(0) || hi == edge.length) return;  // just a vertex
  }
  auto& list = intervals_[e];
  list.push_back({lo, hi});
  std::sort(list.begin(), list.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> merged;
  for (const auto& iv : list) {
    if (!merged.empty() && iv.lo <= merged.back().hi) {
      merged.back().hi = max(merged.back().hi, iv.hi);
    } else {
      merged.push_back(iv);
    }
  }
  list = std::move(merged);
}

bool Subgraph::contains(const Point& p) const {
  Point c = canonical(*model_, p);
  if (c.is_vertex()) return vertices_.count(c.vertex) > 0;
  auto it = intervals_.find(c.edge);
  if (it == intervals_.end()) return false;
  for (const auto& iv : it->second) {
    if (iv.lo <= c.offset && c.offset <= iv.hi) return true;
  }
  return false;
}

std::vector<Point> Subgraph::boundary_interior_points() const {
  std::vector<Point> out;
  for (const auto& [e, list] : intervals_) {
    const Edge& edge = model_->edge(e);
    for (const auto& iv : list) {
      if (iv.lo > ExtRat(0)) out.push_back(Point::on_edge(e, iv.lo));
      if (iv.hi < edge.length && iv.hi != iv.lo) out.push_back(Point::on_edge(e, iv.hi));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Refinement

Relocation Relocation::identity(ModelPtr m) {
  Relocation r;
  r.from = m;
  r.to = m;
  r.vertex_map.resize(m->vertex_count());
  for (int v = 0; v < m->vertex_count(); ++v) r.vertex_map[v] = v;
  r.pieces.resize(m->edge_count());
  for (int e = 0; e < m->edge_count(); ++e) {
    r.pieces[e].push_back({e, ExtRat(0), m->edge(e).length});
  }
  r.build_inverse();
  return r;
}

void Relocation::build_inverse() {
  to_parent_.assign(to->edge_count(), -1);
  to_lo_.assign(to->edge_count(), ExtRat(0));
  for (std::size_t e = 0; e < pieces.size(); ++e) {
    for (const auto& sub : pieces[e]) {
      to_parent_[sub.to_edge] = static_cast<int>(e);
      to_lo_[sub.to_edge] = sub.lo;
    }
  }
}

Point Relocation::map_point(const Point& p) const {
  Point c = canonical(*from, p);
  if (c.is_vertex()) return Point::at_vertex(vertex_map[c.vertex]);
  for (const auto& sub : pieces[c.edge]) {
    if (sub.lo <= c.offset && c.offset <= sub.hi) {
      return canonical(*to, Point::on_edge(sub.to_edge, c.offset - sub.lo));
    }
  }
  throw std::logic_error("relocation: point not covered");
}

Point Relocation::unmap_point(const Point& p) const {
  Point c = canonical(*to, p);
  if (!c.is_vertex()) {
    const int parent = to_parent_[c.edge];
    return canonical(*from, Point::on_edge(parent, to_lo_[c.edge] + c.offset));
  }
  for (int v = 0; v < from->vertex_count(); ++v) {
    if (vertex_map[v] == c.vertex) return Point::at_vertex(v);
  }
  // a cut vertex: locate it as the v end or w end of one of its sub-edges
  for (int e = 0; e < to->edge_count(); ++e) {
    const Edge& te = to->edge(e);
    if (te.v == c.vertex) {
      return canonical(*from, Point::on_edge(to_parent_[e], to_lo_[e]));
    }
    if (te.w == c.vertex && !te.infinite()) {
      return canonical(*from, Point::on_edge(to_parent_[e], to_lo_[e] + te.length));
    }
  }
  throw std::logic_error("relocation: vertex not covered");
}

RefineResult refine(const ModelPtr& m, const std::vector<Point>& cuts) {
  std::map<int, std::vector<ExtRat>> cut_offsets;
  for (const auto& raw : cuts) {
    Point c = canonical(*m, raw);
    if (c.is_vertex()) {
      if (m->vertex_at_infinity(c.vertex)) {
        throw std::invalid_argument("refine: cannot cut at a point at infinity");
      }
      continue;  // already a vertex
    }
    auto& list = cut_offsets[c.edge];
    if (std::find(list.begin(), list.end(), c.offset) == list.end()) list.push_back(c.offset);
  }
  for (auto& [e, list] : cut_offsets) {
    (void)e;
    std::sort(list.begin(), list.end());
  }

  std::vector<std::string> vertices;
  vertices.reserve(m->vertex_count());
  for (int v = 0; v < m->vertex_count(); ++v) vertices.push_back(m->vertex_name(v));

  Relocation reloc;
  reloc.from = m;
  reloc.vertex_map.resize(m->vertex_count());
  for (int v = 0; v < m->vertex_count(); ++v) reloc.vertex_map[v] = v;
  reloc.pieces.resize(m->edge_count());

  std::vector<EdgeSpec> edges;
  int next_edge = 0;
  for (int e = 0; e < m->edge_count(); ++e) {
    const Edge& edge = m->edge(e);
    auto it = cut_offsets.find(e);
    if (it == cut_offsets.end()) {
      edges.push_back({edge.name, m->vertex_name(edge.v), m->vertex_name(edge.w), edge.length});
      reloc.pieces[e].push_back({next_edge++, ExtRat(0), edge.length});
      continue;
    }
    const auto& offs = it->second;
    std::string prev = m->vertex_name(edge.v);
    ExtRat prev_off(0);
    for (std::size_t i = 0; i < offs.size(); ++i) {
      const std::string cut_name = edge.name + "@" + offs[i].str();
      vertices.push_back(cut_name);
      edges.push_back({edge.name + ":" + std::to_string(i), prev, cut_name, offs[i] - prev_off});
      reloc.pieces[e].push_back({next_edge++, prev_off, offs[i]});
      prev = cut_name;
      prev_off = offs[i];
    }
    edges.push_back({edge.name + ":" + std::to_string(offs.size()), prev, m->vertex_name(edge.w),
                     edge.length.is_finite() ? ExtRat(edge.length.value() - prev_off.value())
                                             : ExtRat::pos_inf()});
    reloc.pieces[e].push_back({next_edge++, prev_off, edge.length});
  }

  RefineResult result;
  result.model = Model::make(m->name(), std::move(vertices), std::move(edges));
  reloc.to = result.model;
  reloc.build_inverse();
  result.reloc = std::move(reloc);
  return result;
}

CommonRefinement common_refinement(const Relocation& r1, const Relocation& r2) {
  if (r1.from != r2.from) {
    throw std::invalid_argument("common_refinement: correspondence is not length-compatible "
                                "(different reference models)");
  }
  const ModelPtr ref = r1.from;
  std::vector<Point> cuts;
  auto collect = [&](const Relocation& r) {
    for (int e = 0; e < ref->edge_count(); ++e) {
      for (const auto& sub : r.pieces[e]) {
        if (sub.lo > ExtRat(0)) cuts.push_back(Point::on_edge(e, sub.lo));
      }
    }
  };
  collect(r1);
  collect(r2);
  RefineResult refined = refine(ref, cuts);

  auto lift = [&](const Relocation& r) {
    Relocation out;
    out.from = r.to;
    out.to = refined.model;
    out.vertex_map.resize(r.to->vertex_count());
    for (int v = 0; v < r.to->vertex_count(); ++v) {
      Point ref_pt = r.unmap_point(Point::at_vertex(v));
      Point img = refined.reloc.map_point(ref_pt);
      if (!img.is_vertex()) throw std::logic_error("common_refinement: vertex image not a vertex");
      out.vertex_map[v] = img.vertex;
    }
    out.pieces.resize(r.to->edge_count());
    for (int e = 0; e < ref->edge_count(); ++e) {
      for (const auto& sub : r.pieces[e]) {
        // sub covers [sub.lo, sub.hi] of ref edge e and is one edge of r.to;
        // emit the refined sub-edges falling inside that window.
        for (const auto& fine : refined.reloc.pieces[e]) {
          if (fine.lo >= sub.lo && fine.hi <= sub.hi) {
            out.pieces[sub.to_edge].push_back({fine.to_edge, fine.lo - sub.lo, fine.hi - sub.lo});
          }
        }
      }
    }
    out.build_inverse();
    return out;
  };

  CommonRefinement out;
  out.model = refined.model;
  out.from1 = lift(r1);
  out.from2 = lift(r2);
  return out;
}

// ---------------------------------------------------------------------------
// Distance

namespace detail {

// Multi-source shortest path over the vertex skeleton. Infinite edges are
// never traversed; sources at infinity stay at 0 for themselves only.
std::vector<std::optional<Rational>> shortest_from_sources(const Model& m,
                                                           const std::vector<int>& sources) {
  std::vector<std::optional<Rational>> dist(m.vertex_count());
  using Item = std::pair<Rational, int>;
  auto cmp = [](const Item& a, const Item& b) { return a.first > b.first; };
  std::priority_queue<Item, std::vector<Item>, decltype(cmp)> heap(cmp);
  for (int s : sources) {
    dist[s] = Rational(0);
    heap.push({Rational(0), s});
  }
  std::vector<bool> done(m.vertex_count(), false);
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (done[v]) continue;
    done[v] = true;
    for (int ei : m.incident(v)) {
      const Edge& e = m.edge(ei);
      if (!e.length.is_finite()) continue;
      int u = e.v == v ? e.w : e.v;
      Rational nd = d + e.length.value();
      if (!dist[u] || nd < *dist[u]) {
        dist[u] = nd;
        heap.push({nd, u});
      }
    }
  }
  return dist;
}

}  // namespace detail

ExtRat distance(const Model& m, const Point& p, const Point& q) {
  Point cp = canonical(m, p), cq = canonical(m, q);
  if (point_eq(m, cp, cq)) return ExtRat(0);
  if (at_infinity(m, cp) || at_infinity(m, cq)) return ExtRat::pos_inf();

  // promote interior endpoints to vertices, then run a two-point query
  auto self = std::shared_ptr<const Model>(&m, [](const Model*) {});
  std::vector<Point> cuts;
  if (!cp.is_vertex()) cuts.push_back(cp);
  if (!cq.is_vertex()) cuts.push_back(cq);
  RefineResult r = refine(self, cuts);
  Point rp = r.reloc.map_point(cp);
  Point rq = r.reloc.map_point(cq);
  if (!rp.is_vertex() || !rq.is_vertex()) throw std::logic_error("distance: refinement failed");
  auto dist = detail::shortest_from_sources(*r.model, {rp.vertex});
  if (!dist[rq.vertex]) return ExtRat::pos_inf();
  return ExtRat(*dist[rq.vertex]);
}

}  // namespace tropgal
