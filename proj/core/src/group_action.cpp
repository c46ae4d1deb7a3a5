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

#include "tropgal/group_action.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tropgal {

// ---------------------------------------------------------------------------
// GroupTable

Subgroup closure(const GroupTable& t, std::vector<int> seed) {
  std::set<int> have{t.id};
  std::vector<int> work{t.id};
  for (int g : seed) {
    if (have.insert(g).second) work.push_back(g);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> snapshot(have.begin(), have.end());
    for (int a : snapshot) {
      for (int b : snapshot) {
        if (have.insert(t.mul[a][b]).second) grew = true;
      }
      if (have.insert(t.inv[a]).second) grew = true;
    }
  }
  return Subgroup(have.begin(), have.end());
}

std::vector<Subgroup> all_subgroups(const GroupTable& t) {
  std::set<Subgroup> found;
  found.insert(closure(t, {}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Subgroup> snapshot(found.begin(), found.end());
    for (const auto& h : snapshot) {
      for (int g = 0; g < t.size(); ++g) {
        if (subgroup_contains(h, g)) continue;
        Subgroup ext = h;
        ext.push_back(g);
        if (found.insert(closure(t, std::move(ext))).second) grew = true;
      }
    }
  }
  std::vector<Subgroup> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool is_normal_subgroup(const GroupTable& t, const Subgroup& h) {
  for (int g = 0; g < t.size(); ++g) {
    for (int x : h) {
      const int conj = t.mul[t.mul[g][x]][t.inv[g]];
      if (!subgroup_contains(h, conj)) return false;
    }
  }
  return true;
}

bool subgroup_contains(const Subgroup& h, int g) {
  return std::binary_search(h.begin(), h.end(), g);
}

// ---------------------------------------------------------------------------
// ModelAutomorphism

ModelAutomorphism::ModelAutomorphism(ModelPtr model, std::vector<int> vertex_perm,
                                     std::vector<ModelAutomorphism::EdgeTarget> edge_perm)
    : model_(std::move(model)), vperm_(std::move(vertex_perm)), eperm_(std::move(edge_perm)) {
  const Model& m = *model_;
  if (static_cast<int>(vperm_.size()) != m.vertex_count() ||
      static_cast<int>(eperm_.size()) != m.edge_count()) {
    throw std::invalid_argument("automorphism: permutation size mismatch");
  }
  std::vector<bool> vhit(m.vertex_count(), false), ehit(m.edge_count(), false);
  for (int img : vperm_) {
    if (img < 0 || img >= m.vertex_count() || vhit[img]) {
      throw std::invalid_argument("automorphism: vertex map is not a permutation");
    }
    vhit[img] = true;
  }
  for (const auto& et : eperm_) {
    if (et.edge < 0 || et.edge >= m.edge_count() || ehit[et.edge]) {
      throw std::invalid_argument("automorphism: edge map is not a permutation");
    }
    ehit[et.edge] = true;
  }
  for (int e = 0; e < m.edge_count(); ++e) {
    const Edge& src = m.edge(e);
    const Edge& dst = m.edge(eperm_[e].edge);
    if (src.length != dst.length) {
      throw std::invalid_argument("automorphism: not length-preserving at edge '" + src.name + "'");
    }
    const int head = eperm_[e].reversed ? dst.w : dst.v;
    const int tail = eperm_[e].reversed ? dst.v : dst.w;
    if (vperm_[src.v] != head || vperm_[src.w] != tail) {
      throw std::invalid_argument("automorphism: incidence broken at edge '" + src.name + "'");
    }
    if (src.infinite() && eperm_[e].reversed) {
      throw std::invalid_argument("automorphism: infinite edge '" + src.name +
                                  "' cannot reverse (points at infinity must correspond)");
    }
  }
  ekey_.reserve(eperm_.size() * 2);
  for (const auto& et : eperm_) {
    ekey_.push_back(et.edge);
    ekey_.push_back(et.reversed ? 1 : 0);
  }
}

ModelAutomorphism ModelAutomorphism::identity(ModelPtr m) {
  std::vector<int> vperm(m->vertex_count());
  for (int v = 0; v < m->vertex_count(); ++v) vperm[v] = v;
  std::vector<EdgeTarget> eperm(m->edge_count());
  for (int e = 0; e < m->edge_count(); ++e) eperm[e] = {e, false};
  return ModelAutomorphism(std::move(m), std::move(vperm), std::move(eperm));
}

Point ModelAutomorphism::map_point(const Point& p) const {
  Point c = canonical(*model_, p);
  if (c.is_vertex()) return Point::at_vertex(vperm_[c.vertex]);
  const EdgeTarget& et = eperm_[c.edge];
  const Edge& dst = model_->edge(et.edge);
  ExtRat off = et.reversed ? dst.length - c.offset : c.offset;
  return canonical(*model_, Point::on_edge(et.edge, off));
}

ModelAutomorphism ModelAutomorphism::compose(const ModelAutomorphism& inner) const {
  if (model_ != inner.model_) throw std::invalid_argument("automorphism: different models");
  std::vector<int> vperm(vperm_.size());
  for (std::size_t v = 0; v < vperm.size(); ++v) vperm[v] = vperm_[inner.vperm_[v]];
  std::vector<EdgeTarget> eperm(eperm_.size());
  for (std::size_t e = 0; e < eperm.size(); ++e) {
    const EdgeTarget& first = inner.eperm_[e];
    const EdgeTarget& second = eperm_[first.edge];
    eperm[e] = {second.edge, first.reversed != second.reversed};
  }
  return ModelAutomorphism(model_, std::move(vperm), std::move(eperm));
}

ModelAutomorphism ModelAutomorphism::inverse() const {
  std::vector<int> vperm(vperm_.size());
  for (std::size_t v = 0; v < vperm.size(); ++v) vperm[vperm_[v]] = static_cast<int>(v);
  std::vector<EdgeTarget> eperm(eperm_.size());
  for (std::size_t e = 0; e < eperm.size(); ++e) {
    eperm[eperm_[e].edge] = {static_cast<int>(e), eperm_[e].reversed};
  }
  return ModelAutomorphism(model_, std::move(vperm), std::move(eperm));
}

bool ModelAutomorphism::is_identity() const {
  for (std::size_t v = 0; v < vperm_.size(); ++v) {
    if (vperm_[v] != static_cast<int>(v)) return false;
  }
  for (std::size_t e = 0; e < eperm_.size(); ++e) {
    if (eperm_[e].edge != static_cast<int>(e) || eperm_[e].reversed) return false;
  }
  return true;
}

std::vector<int> ModelAutomorphism::sort_key() const {
  std::vector<int> key = vperm_;
  key.insert(key.end(), ekey_.begin(), ekey_.end());
  return key;
}

HarmonicMorphism ModelAutomorphism::as_morphism() const {
  std::vector<EdgeImage> emap(eperm_.size());
  for (std::size_t e = 0; e < eperm_.size(); ++e) {
    emap[e] = {eperm_[e].edge, eperm_[e].reversed, 1};
  }
  return HarmonicMorphism(model_, model_, vperm_, std::move(emap));
}

// ---------------------------------------------------------------------------
// FiniteActionGroup

FiniteActionGroup FiniteActionGroup::generate(ModelPtr model,
                                              std::vector<ModelAutomorphism> generators,
                                              std::size_t bound) {
  for (const auto& g : generators) {
    if (g.model() != model) throw std::invalid_argument("group: generator on a different model");
  }
  std::map<std::vector<int>, int> index;
  std::vector<ModelAutomorphism> elements;
  auto add = [&](const ModelAutomorphism& g) {
    auto key = g.sort_key();
    if (index.count(key)) return false;
    index.emplace(std::move(key), static_cast<int>(elements.size()));
    elements.push_back(g);
    return true;
  };
  add(ModelAutomorphism::identity(model));
  for (const auto& g : generators) add(g);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      if (add(elements[i].compose(elements[j])) && elements.size() > bound) {
        throw std::invalid_argument("group: closure exceeds bound of " + std::to_string(bound));
      }
    }
  }

  std::sort(elements.begin(), elements.end(),
            [](const ModelAutomorphism& a, const ModelAutomorphism& b) {
              return a.sort_key() < b.sort_key();
            });
  FiniteActionGroup g;
  g.model_ = std::move(model);
  g.elements_ = std::move(elements);
  index.clear();
  for (int i = 0; i < g.size(); ++i) index.emplace(g.elements_[i].sort_key(), i);
  g.table_.mul.assign(g.size(), std::vector<int>(g.size(), -1));
  g.table_.inv.assign(g.size(), -1);
  for (int i = 0; i < g.size(); ++i) {
    if (g.elements_[i].is_identity()) g.table_.id = i;
    g.table_.inv[i] = index.at(g.elements_[i].inverse().sort_key());
    for (int j = 0; j < g.size(); ++j) {
      g.table_.mul[i][j] = index.at(g.elements_[i].compose(g.elements_[j]).sort_key());
    }
  }
  return g;
}

FiniteActionGroup FiniteActionGroup::transported(const Relocation& reloc) const {
  if (reloc.from != model_) throw std::invalid_argument("transport: relocation from another model");
  const Model& to = *reloc.to;
  FiniteActionGroup out;
  out.model_ = reloc.to;
  out.table_ = table_;
  for (const auto& g : elements_) {
    std::vector<int> vperm(to.vertex_count());
    for (int v = 0; v < to.vertex_count(); ++v) {
      Point img = reloc.map_point(g.map_point(reloc.unmap_point(Point::at_vertex(v))));
      if (!img.is_vertex()) throw std::logic_error("transport: cut set is not action-stable");
      vperm[v] = img.vertex;
    }
    std::vector<ModelAutomorphism::EdgeTarget> eperm(to.edge_count());
    for (int e = 0; e < model_->edge_count(); ++e) {
      const auto& et = g.map_edge(e);
      const auto& src_subs = reloc.pieces[e];
      const auto& dst_subs = reloc.pieces[et.edge];
      const ExtRat& parent_len = model_->edge(e).length;
      for (const auto& sub : src_subs) {
        ExtRat img_lo = et.reversed ? parent_len - sub.hi : sub.lo;
        ExtRat img_hi = et.reversed ? parent_len - sub.lo : sub.hi;
        int found = -1;
        for (const auto& dsub : dst_subs) {
          if (dsub.lo == img_lo && dsub.hi == img_hi) {
            found = dsub.to_edge;
            break;
          }
        }
        if (found < 0) throw std::logic_error("transport: cut set is not action-stable on edges");
        eperm[sub.to_edge] = {found, et.reversed};
      }
    }
    out.elements_.emplace_back(reloc.to, std::move(vperm), std::move(eperm));
  }
  return out;
}

std::vector<Subgroup> subgroups(const FiniteActionGroup& g) { return all_subgroups(g.table()); }

Subgroup stabilizer_of_vertex(const FiniteActionGroup& g, int v) {
  Subgroup out;
  for (int i = 0; i < g.size(); ++i) {
    if (g.element(i).map_vertex(v) == v) out.push_back(i);
  }
  return out;
}

Subgroup stabilizer_of_edge(const FiniteActionGroup& g, int e) {
  Subgroup out;
  for (int i = 0; i < g.size(); ++i) {
    if (g.element(i).map_edge(e).edge == e) out.push_back(i);
  }
  return out;
}

Subgroup stabilizer_of_point(const FiniteActionGroup& g, const Point& p) {
  Subgroup out;
  for (int i = 0; i < g.size(); ++i) {
    if (point_eq(*g.model(), g.element(i).map_point(p), p)) out.push_back(i);
  }
  return out;
}

namespace {

OrbitPartition orbits_impl(int n, const FiniteActionGroup& g, const Subgroup& h,
                           bool edges) {
  OrbitPartition out;
  out.class_of.assign(n, -1);
  for (int start = 0; start < n; ++start) {
    if (out.class_of[start] >= 0) continue;
    const int cls = static_cast<int>(out.classes.size());
    std::vector<int> orbit;
    std::vector<int> work{start};
    out.class_of[start] = cls;
    orbit.push_back(start);
    while (!work.empty()) {
      int x = work.back();
      work.pop_back();
      for (int gi : h) {
        const int y = edges ? g.element(gi).map_edge(x).edge : g.element(gi).map_vertex(x);
        if (out.class_of[y] < 0) {
          out.class_of[y] = cls;
          orbit.push_back(y);
          work.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.classes.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace

OrbitPartition vertex_orbits(const FiniteActionGroup& g, const Subgroup& h) {
  return orbits_impl(g.model()->vertex_count(), g, h, false);
}

OrbitPartition edge_orbits(const FiniteActionGroup& g, const Subgroup& h) {
  return orbits_impl(g.model()->edge_count(), g, h, true);
}

// ---------------------------------------------------------------------------
// Equivariant refinement

EquivariantRefinement equivariant_refinement(const FiniteActionGroup& g) {
  const Model& m = *g.model();
  Subgroup whole(g.size());
  for (int i = 0; i < g.size(); ++i) whole[i] = i;
  OrbitPartition vorb = vertex_orbits(g, whole);

  EquivariantRefinement out;
  for (int e = 0; e < m.edge_count(); ++e) {
    bool flip = false;
    for (int i = 0; i < g.size() && !flip; ++i) {
      const auto& et = g.element(i).map_edge(e);
      flip = et.edge == e && et.reversed;
    }
    if (flip) out.any_flip = true;
    const bool loop_risk = vorb.class_of[m.edge(e).v] == vorb.class_of[m.edge(e).w];
    if (flip || loop_risk) {
      if (!m.edge(e).length.is_finite()) {
        throw std::logic_error("equivariant_refinement: infinite edge cannot flip");
      }
      out.cuts.push_back(Point::on_edge(e, ExtRat(m.edge(e).length.value() / 2)));
    }
  }
  if (out.cuts.empty()) {
    out.model = g.model();
    out.group = g;
    out.reloc = Relocation::identity(g.model());
    return out;
  }
  RefineResult rr = refine(g.model(), out.cuts);
  out.model = rr.model;
  out.group = g.transported(rr.reloc);
  out.reloc = std::move(rr.reloc);
  return out;
}

// ---------------------------------------------------------------------------
// Quotient

QuotientResult quotient(const FiniteActionGroup& g, const Subgroup& h) {
  const Model& m = *g.model();
  for (int e = 0; e < m.edge_count(); ++e) {
    for (int gi : h) {
      const auto& et = g.element(gi).map_edge(e);
      if (et.edge == e && et.reversed) {
        throw std::logic_error("quotient: model is not equivariantly refined (edge flip)");
      }
    }
  }
  OrbitPartition vorb = vertex_orbits(g, h);
  OrbitPartition eorb = edge_orbits(g, h);

  std::vector<std::string> qvertices;
  qvertices.reserve(vorb.classes.size());
  for (const auto& cls : vorb.classes) qvertices.push_back("[" + m.vertex_name(cls.front()) + "]");

  std::vector<EdgeSpec> qedges;
  std::vector<long long> stab_order(eorb.classes.size(), 0);
  for (std::size_t c = 0; c < eorb.classes.size(); ++c) {
    const int rep = eorb.classes[c].front();
    long long stab = 0;
    for (int gi : h) {
      if (g.element(gi).map_edge(rep).edge == rep) ++stab;
    }
    stab_order[c] = stab;
    const Edge& edge = m.edge(rep);
    if (vorb.class_of[edge.v] == vorb.class_of[edge.w]) {
      throw std::logic_error("quotient: orbit edge would be a loop; refine equivariantly first");
    }
    const ExtRat qlen = edge.length.is_finite() ? ExtRat(Rational(stab) * edge.length.value())
                                                : ExtRat::pos_inf();
    qedges.push_back({"[" + edge.name + "]", qvertices[vorb.class_of[edge.v]],
                      qvertices[vorb.class_of[edge.w]], qlen});
  }
  ModelPtr qmodel = Model::make(m.name() + "/H", std::move(qvertices), std::move(qedges));

  std::vector<int> vmap(m.vertex_count());
  for (int v = 0; v < m.vertex_count(); ++v) vmap[v] = vorb.class_of[v];
  std::vector<EdgeImage> emap(m.edge_count());
  for (int e = 0; e < m.edge_count(); ++e) {
    const int cls = eorb.class_of[e];
    const Edge& qe = qmodel->edge(cls);
    const bool reversed = vorb.class_of[m.edge(e).v] != qe.v;
    emap[e] = {cls, reversed, stab_order[cls]};
  }
  HarmonicMorphism projection(g.model(), qmodel, std::move(vmap), std::move(emap));
  if (!projection.is_valid()) {
    throw std::logic_error("quotient: projection failed harmonic validation: " +
                           projection.validate().violations.front().detail);
  }
  QuotientResult out{qmodel, std::move(projection), std::move(vorb.class_of),
                     std::move(eorb.class_of)};
  return out;
}

QuotientResult quotient(const FiniteActionGroup& g) {
  Subgroup whole(g.size());
  for (int i = 0; i < g.size(); ++i) whole[i] = i;
  return quotient(g, whole);
}

// ---------------------------------------------------------------------------
// Galois checks

GaloisActionVerdict is_galois_action(const FiniteActionGroup& g) {
  GaloisActionVerdict out;
  out.galois = true;
  for (int e = 0; e < g.model()->edge_count(); ++e) {
    for (int i = 0; i < g.size(); ++i) {
      if (i == g.identity_index()) continue;
      const auto& et = g.element(i).map_edge(e);
      if (et.edge == e && !et.reversed) {
        out.galois = false;
        if (!out.witness_edge) out.witness_edge = e;
      }
    }
  }
  for (int v = 0; v < g.model()->vertex_count(); ++v) {
    if (stabilizer_of_vertex(g, v).size() > 1) out.stabilized_vertices.push_back(v);
  }
  return out;
}

GGaloisResult is_g_galois(const HarmonicMorphism& phi, const FiniteActionGroup& g) {
  if (phi.source() != g.model()) {
    throw std::invalid_argument("is_g_galois: morphism and action live on different models");
  }
  if (!phi.is_valid()) throw std::invalid_argument("is_g_galois: invalid morphism");
  GGaloisResult out;
  out.action = is_galois_action(g);
  if (!out.action.galois) {
    out.obstruction = "action is not Galois (edge '" +
                      g.model()->edge(*out.action.witness_edge).name + "' is fixed pointwise)";
    return out;
  }

  // phi must be constant on orbits, else no theta can satisfy phi∘g = theta∘pi
  for (int i = 0; i < g.size(); ++i) {
    const ModelAutomorphism& a = g.element(i);
    for (int v = 0; v < g.model()->vertex_count(); ++v) {
      if (phi.map_vertex(a.map_vertex(v)) != phi.map_vertex(v)) {
        out.obstruction = "phi ∘ g differs from phi at vertex '" + g.model()->vertex_name(v) + "'";
        return out;
      }
    }
    for (int e = 0; e < g.model()->edge_count(); ++e) {
      const auto& et = a.map_edge(e);
      const EdgeImage& lhs = phi.map_edge(et.edge);
      const EdgeImage& rhs = phi.map_edge(e);
      if (lhs.edge != rhs.edge || (lhs.reversed != et.reversed) != rhs.reversed ||
          lhs.degree != rhs.degree) {
        out.obstruction = "phi ∘ g differs from phi at edge '" + g.model()->edge(e).name + "'";
        return out;
      }
    }
  }

  QuotientResult q = quotient(g);
  const Model& qm = *q.quotient;
  std::vector<int> vmap(qm.vertex_count(), -1);
  for (int v = 0; v < g.model()->vertex_count(); ++v) vmap[q.vertex_orbit[v]] = phi.map_vertex(v);
  std::vector<EdgeImage> emap(qm.edge_count());
  for (int e = 0; e < g.model()->edge_count(); ++e) {
    const EdgeImage& down = q.projection.map_edge(e);    // e -> [e]
    const EdgeImage& across = phi.map_edge(e);           // e -> phi(e)
    if (across.degree % down.degree != 0) {
      out.obstruction = "deg of edge '" + g.model()->edge(e).name +
                        "' under phi is not a multiple of its stabilizer order";
      return out;
    }
    emap[down.edge] = {across.edge, across.reversed != down.reversed,
                       across.degree / down.degree};
  }
  HarmonicMorphism theta(q.quotient, phi.target(), std::move(vmap), std::move(emap));
  if (!theta.is_valid()) {
    out.obstruction =
        "induced map is not harmonic: " + theta.validate().violations.front().detail;
    return out;
  }
  const auto deg = theta.degree();
  if (deg && *deg != 1) {
    out.obstruction = "induced map has degree " + std::to_string(*deg) + ", not 1";
    return out;
  }
  // phi ∘ g = theta ∘ pi, verified elementwise
  HarmonicMorphism theta_pi = compose(theta, q.projection);
  for (int i = 0; i < g.size(); ++i) {
    HarmonicMorphism phi_g = compose(phi, g.element(i).as_morphism());
    if (phi_g.vertex_map() != theta_pi.vertex_map()) {
      throw std::logic_error("is_g_galois: phi∘g != theta∘pi on vertices");
    }
    for (int e = 0; e < g.model()->edge_count(); ++e) {
      const EdgeImage& a = phi_g.map_edge(e);
      const EdgeImage& b = theta_pi.map_edge(e);
      if (a.edge != b.edge || a.reversed != b.reversed || a.degree != b.degree) {
        throw std::logic_error("is_g_galois: phi∘g != theta∘pi on edges");
      }
    }
  }
  out.verdict = true;
  out.theta = std::move(theta);
  return out;
}

DescendResult descends(const FiniteActionGroup& g, int element, const QuotientResult& qh) {
  DescendResult out;
  const Model& m = *g.model();
  const Model& qm = *qh.quotient;
  const ModelAutomorphism& a = g.element(element);

  std::vector<int> vmap(qm.vertex_count(), -1);
  for (int v = 0; v < m.vertex_count(); ++v) {
    const int src_cls = qh.vertex_orbit[v];
    const int dst_cls = qh.vertex_orbit[a.map_vertex(v)];
    if (vmap[src_cls] == -1) {
      vmap[src_cls] = dst_cls;
    } else if (vmap[src_cls] != dst_cls) {
      out.obstruction = "vertex orbit [" + qm.vertex_name(src_cls) +
                        "] is torn: images fall into [" + qm.vertex_name(vmap[src_cls]) +
                        "] and [" + qm.vertex_name(dst_cls) + "]";
      return out;
    }
  }
  std::vector<int> emap_cls(qm.edge_count(), -1);
  for (int e = 0; e < m.edge_count(); ++e) {
    const int src_cls = qh.edge_orbit[e];
    const int dst_cls = qh.edge_orbit[a.map_edge(e).edge];
    if (emap_cls[src_cls] == -1) {
      emap_cls[src_cls] = dst_cls;
    } else if (emap_cls[src_cls] != dst_cls) {
      out.obstruction = "edge orbit " + qm.edge(src_cls).name + " is torn: images fall into " +
                        qm.edge(emap_cls[src_cls]).name + " and " + qm.edge(dst_cls).name;
      return out;
    }
  }
  std::vector<ModelAutomorphism::EdgeTarget> emap(qm.edge_count());
  for (int ce = 0; ce < qm.edge_count(); ++ce) {
    const Edge& src = qm.edge(ce);
    const Edge& dst = qm.edge(emap_cls[ce]);
    bool reversed;
    if (vmap[src.v] == dst.v && vmap[src.w] == dst.w) {
      reversed = false;
    } else if (vmap[src.v] == dst.w && vmap[src.w] == dst.v) {
      reversed = true;
    } else {
      out.obstruction = "edge orbit " + src.name + " maps across incompatible vertex orbits";
      return out;
    }
    emap[ce] = {emap_cls[ce], reversed};
  }
  out.induced = ModelAutomorphism(qh.quotient, std::move(vmap), std::move(emap));
  return out;
}

}  // namespace tropgal
