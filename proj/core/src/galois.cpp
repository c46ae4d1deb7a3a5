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

#include "tropgal/galois.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "tropgal/io.hpp"
#include "tropgal/random_fn.hpp"

namespace tropgal {

PLFunction act_on_fn(const ModelAutomorphism& g, const PLFunction& f) {
  if (g.model() != f.curve()) throw std::invalid_argument("act_on_fn: different models");
  if (f.is_neg_inf()) return f;
  const Model& m = *g.model();
  const ModelAutomorphism inv = g.inverse();
  std::vector<ExtRat> values(m.vertex_count());
  for (int v = 0; v < m.vertex_count(); ++v) {
    values[v] = f.value_at_vertex(inv.map_vertex(v));
  }
  std::vector<std::vector<Piece>> pieces(m.edge_count());
  for (int e = 0; e < m.edge_count(); ++e) {
    const auto& et = inv.map_edge(e);
    const auto& src = f.edge_pieces(et.edge);
    if (!et.reversed) {
      pieces[e] = src;
      continue;
    }
    const Rational L = m.edge(e).length.value();  // reversed edges are finite
    for (std::size_t i = src.size(); i-- > 0;) {
      const Rational seg_end = i + 1 < src.size() ? src[i + 1].start : L;
      pieces[e].push_back({L - seg_end, -src[i].slope});
    }
  }
  return PLFunction::from_data(f.curve(), values, std::move(pieces));
}

bool is_invariant(const PLFunction& f, const FiniteActionGroup& g, const Subgroup& h) {
  for (int i : h) {
    if (!fn_equal(act_on_fn(g.element(i), f), f)) return false;
  }
  return true;
}

Subgroup function_stabilizer(const PLFunction& f, const FiniteActionGroup& g) {
  Subgroup out;
  for (int i = 0; i < g.size(); ++i) {
    if (fn_equal(act_on_fn(g.element(i), f), f)) out.push_back(i);
  }
  return out;
}

PLFunction symmetrize(const PLFunction& f, const FiniteActionGroup& g, const Subgroup& h,
                      SymmetrizeMode mode) {
  PLFunction acc = act_on_fn(g.element(h.front()), f);
  for (std::size_t i = 1; i < h.size(); ++i) {
    PLFunction term = act_on_fn(g.element(h[i]), f);
    acc = mode == SymmetrizeMode::Max ? trop_add_fn(acc, term) : trop_mul_fn(acc, term);
  }
  return acc;
}

PLFunction witness_for_subgroup(const FiniteActionGroup& g, const Subgroup& h,
                                std::uint64_t seed) {
  if (g.model()->is_singleton()) {
    throw std::invalid_argument("witness_for_subgroup: singleton curve");
  }
  if (!is_galois_action(g).galois) {
    throw std::domain_error("witness_for_subgroup: the action is not Galois");
  }
  QuotientResult qh = quotient(g, h);
  const ModelPtr& q = qh.quotient;

  // candidate two-valent points: midpoints of finite quotient edges, or the
  // unit-offset point of an infinite edge when every edge is infinite
  std::vector<Point> candidates;
  for (int e = 0; e < q->edge_count(); ++e) {
    if (q->edge(e).length.is_finite()) {
      candidates.push_back(Point::on_edge(e, ExtRat(q->edge(e).length.value() / 2)));
    }
  }
  if (candidates.empty()) {
    for (int e = 0; e < q->edge_count(); ++e) candidates.push_back(Point::on_edge(e, ExtRat(1)));
  }
  if (candidates.empty()) {
    throw std::logic_error("witness_for_subgroup: no two-valent point candidate");
  }
  const Point x = candidates[seed % candidates.size()];

  // epsilon: half the distance to the nearest point of valence != 2
  ExtRat eps = ExtRat::pos_inf();
  for (int v = 0; v < q->vertex_count(); ++v) {
    if (valence(*q, Point::at_vertex(v)) == 2) continue;
    eps = min(eps, distance(*q, x, Point::at_vertex(v)));
  }
  if (eps.is_finite()) eps = ExtRat(eps.value() / 2);

  PLFunction cf = chip_firing(q, Subgraph::of_points(q, {x}), eps);
  PLFunction witness = pullback(qh.projection, cf);
  if (function_stabilizer(witness, g) != h) {
    throw std::logic_error("witness_for_subgroup: stabilizer is not H");
  }
  return witness;
}

namespace {

ExtRat default_radius(const Model& m) {
  const auto len = m.min_finite_edge_length();
  if (!len) return ExtRat(Rational(1, 2));
  return ExtRat(std::min(Rational(1), Rational(*len / 4)));
}

std::vector<Point> orbit_points(const FiniteActionGroup& g, const Subgroup& h, const Point& x) {
  std::vector<Point> out;
  for (int i : h) {
    Point y = g.element(i).map_point(x);
    bool seen = false;
    for (const auto& z : out) seen = seen || point_eq(*g.model(), y, z);
    if (!seen) out.push_back(y);
  }
  return out;
}

}  // namespace

SeparatorResult separating_function(const FiniteActionGroup& g, const Subgroup& h1,
                                    const Subgroup& h2) {
  if (h1 == h2) throw std::invalid_argument("separating_function: identical subgroups");
  SeparatorResult out;
  const ModelPtr& m = g.model();
  const OrbitPartition vo1 = vertex_orbits(g, h1), vo2 = vertex_orbits(g, h2);
  const OrbitPartition eo1 = edge_orbits(g, h1), eo2 = edge_orbits(g, h2);

  Point probe;
  bool found = false;
  for (int v = 0; v < m->vertex_count() && !found; ++v) {
    // a point at infinity cannot carry a chip-firing move; if only orbits of
    // infinity points differ, the orbits of their (infinite) edges differ too
    if (m->vertex_at_infinity(v)) continue;
    if (vo1.classes[vo1.class_of[v]] != vo2.classes[vo2.class_of[v]]) {
      probe = Point::at_vertex(v);
      found = true;
    }
  }
  for (int e = 0; e < m->edge_count() && !found; ++e) {
    if (eo1.classes[eo1.class_of[e]] != eo2.classes[eo2.class_of[e]]) {
      const Edge& edge = m->edge(e);
      probe = Point::on_edge(e, edge.length.is_finite() ? ExtRat(edge.length.value() / 3)
                                                        : ExtRat(1));
      found = true;
    }
  }
  if (!found) {
    // On an equivariantly refined model (no flips, no orbit-loops) equal
    // vertex and edge orbit partitions force equal point orbits, hence equal
    // invariant subsemifields; no separator exists.
    out.note = "vertex and edge orbit partitions coincide; the invariant subsemifields are equal";
    return out;
  }

  const ExtRat r = default_radius(*m);
  PLFunction f1 = chip_firing(m, Subgraph::of_points(m, orbit_points(g, h1, probe)), r);
  if (!is_invariant(f1, g, h1)) throw std::logic_error("separating_function: orbit CF not invariant");
  if (!is_invariant(f1, g, h2)) {
    out.separator = std::move(f1);
    out.invariant_under = 0;
    out.note = "chip-firing move on the H1-orbit of " + point_str(*m, probe);
    return out;
  }
  PLFunction f2 = chip_firing(m, Subgraph::of_points(m, orbit_points(g, h2, probe)), r);
  if (!is_invariant(f2, g, h2)) throw std::logic_error("separating_function: orbit CF not invariant");
  if (!is_invariant(f2, g, h1)) {
    out.separator = std::move(f2);
    out.invariant_under = 1;
    out.note = "chip-firing move on the H2-orbit of " + point_str(*m, probe);
    return out;
  }
  throw std::logic_error("separating_function: differing orbits without a separator");
}

NormalityReport normality_report(const FiniteActionGroup& g, const Subgroup& h) {
  NormalityReport r;
  r.table_normal = is_normal_subgroup(g.table(), h);
  QuotientResult qh = quotient(g, h);
  r.all_descend = true;
  std::set<std::vector<int>> induced;
  std::size_t kernel = 0;
  for (int i = 0; i < g.size(); ++i) {
    DescendResult d = descends(g, i, qh);
    if (!d.induced) {
      if (r.all_descend) r.first_obstruction = d.obstruction;
      r.all_descend = false;
    } else {
      induced.insert(d.induced->sort_key());
      if (d.induced->is_identity()) ++kernel;
    }
  }
  r.expected_quotient_order = static_cast<std::size_t>(g.size()) / h.size();
  if (r.all_descend) {
    r.induced_order = induced.size();
    r.order_matches = *r.induced_order == r.expected_quotient_order;
    r.orbit_kernel_order = kernel;
    r.kernel_identity_ok = *r.induced_order * kernel == static_cast<std::size_t>(g.size());
  }
  r.consistent = r.table_normal == r.all_descend;
  return r;
}

// ---------------------------------------------------------------------------
// Instance preparation

Instance prepare_instance(const ModelPtr& curve, const std::vector<ModelAutomorphism>& generators,
                          const std::optional<HarmonicMorphism>& phi, std::size_t bound) {
  FiniteActionGroup g0 = FiniteActionGroup::generate(curve, generators, bound);
  EquivariantRefinement er = equivariant_refinement(g0);

  Instance inst;
  inst.name = curve->name();
  if (!phi) {
    inst.group = er.group;
    inst.from_input = er.reloc;
    inst.full_quotient = quotient(inst.group);
    inst.phi = inst.full_quotient->projection;
    inst.phi_is_projection = true;
    return inst;
  }

  if (phi->source() != curve) {
    throw std::invalid_argument("prepare_instance: the morphism source is not the loaded curve");
  }
  if (!phi->is_valid()) {
    throw std::invalid_argument("prepare_instance: the morphism is not harmonic: " +
                                phi->validate().violations.front().detail);
  }
  // phi must commute with the action (phi ∘ g = phi); otherwise no refinement
  // can make it fiber-compatible and the covering cannot be G-Galois.
  std::string incompat;
  for (int i = 0; i < g0.size() && incompat.empty(); ++i) {
    const ModelAutomorphism& a = g0.element(i);
    for (int v = 0; v < curve->vertex_count() && incompat.empty(); ++v) {
      if (phi->map_vertex(a.map_vertex(v)) != phi->map_vertex(v)) {
        incompat = "phi ∘ g != phi at vertex '" + curve->vertex_name(v) + "' (images '" +
                   phi->target()->vertex_name(phi->map_vertex(a.map_vertex(v))) + "' vs '" +
                   phi->target()->vertex_name(phi->map_vertex(v)) + "')";
      }
    }
    for (int e = 0; e < curve->edge_count() && incompat.empty(); ++e) {
      const auto& et = a.map_edge(e);
      const EdgeImage& lhs = phi->map_edge(et.edge);
      const EdgeImage& rhs = phi->map_edge(e);
      if (lhs.edge != rhs.edge || (lhs.reversed != et.reversed) != rhs.reversed ||
          lhs.degree != rhs.degree) {
        incompat = "phi ∘ g != phi at edge '" + curve->edge(e).name + "'";
      }
    }
  }
  if (!incompat.empty()) {
    inst.group = er.group;
    inst.from_input = er.reloc;
    inst.full_quotient = quotient(inst.group);
    inst.phi.reset();
    inst.phi_is_projection = false;
    inst.phi_incompatibility = std::move(incompat);
    return inst;
  }

  MorphismRefinement mr = refine_morphism(*phi, er.cuts);
  inst.group = g0.transported(mr.source_reloc);
  inst.from_input = mr.source_reloc;
  inst.full_quotient = quotient(inst.group);
  inst.phi = mr.phi;
  inst.phi_is_projection = false;
  return inst;
}

// ---------------------------------------------------------------------------
// Certificate

namespace {

Subgroup whole_group(const FiniteActionGroup& g) {
  Subgroup all(g.size());
  for (int i = 0; i < g.size(); ++i) all[i] = i;
  return all;
}

// deterministic fiber/orbit probes for the pull-back equality evidence
struct ProbeOutcome {
  int probes = 0;
  std::optional<GaloisCertificate::Counterexample> counterexample;
};

ProbeOutcome run_probes(const Instance& inst) {
  ProbeOutcome out;
  const FiniteActionGroup& g = inst.group;
  const HarmonicMorphism& phi = *inst.phi;
  const ModelPtr& src = phi.source();
  const ModelPtr& tgt = phi.target();
  const Subgroup all = whole_group(g);
  const ExtRat r_src = default_radius(*src);
  const ExtRat r_tgt = default_radius(*tgt);

  auto fail = [&](std::string kind, std::string detail) {
    if (!out.counterexample) out.counterexample = {std::move(kind), std::move(detail)};
  };

  // (i) slope divisibility: a unit chip-firing move across any edge of
  // degree > 1, symmetrized to a G-invariant function, cannot push down
  for (int e = 0; e < src->edge_count() && !out.counterexample; ++e) {
    if (phi.map_edge(e).degree <= 1) continue;
    ++out.probes;
    const Edge& edge = src->edge(e);
    const Point x = Point::on_edge(e, edge.length.is_finite() ? ExtRat(edge.length.value() / 3)
                                                              : ExtRat(1));
    PLFunction f = symmetrize(chip_firing(src, Subgraph::of_points(src, {x}), r_src), g, all,
                              SymmetrizeMode::Max);
    PushdownResult pd = pushdown(phi, f);
    if (!pd.ok()) {
      fail(pd.obstruction == PushdownResult::Obstruction::Divisibility ? "divisibility" : "fiber",
           "invariant probe at " + point_str(*src, x) + ": " + pd.detail);
    }
  }

  // (ii) fibers versus orbits at one interior point per target edge, plus
  // every target vertex
  auto orbit_of = [&](const Point& x) { return orbit_points(g, all, x); };
  std::vector<std::vector<int>> edge_fiber(tgt->edge_count());
  for (int e = 0; e < src->edge_count(); ++e) edge_fiber[phi.map_edge(e).edge].push_back(e);
  for (int te = 0; te < tgt->edge_count() && !out.counterexample; ++te) {
    ++out.probes;
    const Edge& tedge = tgt->edge(te);
    const ExtRat u = tedge.length.is_finite() ? ExtRat(tedge.length.value() / 3) : ExtRat(1);
    std::vector<Point> fiber;
    for (int e : edge_fiber[te]) {
      const EdgeImage& img = phi.map_edge(e);
      const Rational d(img.degree);
      const Rational t = img.reversed ? Rational((tedge.length.value() - u.value()) / d)
                                      : Rational(u.value() / d);
      fiber.push_back(Point::on_edge(e, ExtRat(t)));
    }
    const std::vector<Point> orbit = orbit_of(fiber.front());
    auto in_set = [&](const Point& p, const std::vector<Point>& set) {
      for (const auto& q : set) {
        if (point_eq(*src, p, q)) return true;
      }
      return false;
    };
    bool fiber_in_orbit = true;
    for (const auto& p : fiber) fiber_in_orbit = fiber_in_orbit && in_set(p, orbit);
    if (!fiber_in_orbit) {
      PLFunction f = symmetrize(chip_firing(src, Subgraph::of_points(src, {fiber.front()}), r_src),
                                g, all, SymmetrizeMode::Max);
      PushdownResult pd = pushdown(phi, f);
      if (!pd.ok()) {
        fail("fiber", "fiber over " + tedge.name + "@" + u.str() +
                          " is larger than the orbit: " + pd.detail);
      } else {
        fail("fiber", "fiber over " + tedge.name + "@" + u.str() +
                          " exceeds the orbit, yet the orbit probe pushed down (engine bug?)");
      }
    }
    // pull-back invariance probe at the same target point
    if (!out.counterexample) {
      PLFunction down = chip_firing(tgt, Subgraph::of_points(tgt, {Point::on_edge(te, u)}), r_tgt);
      PLFunction up = pullback(phi, down);
      if (!is_invariant(up, g, all)) {
        fail("pullback-not-invariant",
             "pullback of a chip-firing move at " + tedge.name + "@" + u.str() +
                 " is not G-invariant");
      }
    }
  }
  for (int tv = 0; tv < tgt->vertex_count() && !out.counterexample; ++tv) {
    if (tgt->vertex_at_infinity(tv)) continue;
    ++out.probes;
    std::vector<Point> fiber;
    for (int v = 0; v < src->vertex_count(); ++v) {
      if (phi.map_vertex(v) == tv) fiber.push_back(Point::at_vertex(v));
    }
    const std::vector<Point> orbit = orbit_of(fiber.front());
    bool ok = fiber.size() == orbit.size();
    for (const auto& p : fiber) {
      bool hit = false;
      for (const auto& q : orbit) hit = hit || point_eq(*src, p, q);
      ok = ok && hit;
    }
    if (!ok) {
      PLFunction f = symmetrize(chip_firing(src, Subgraph::of_points(src, {fiber.front()}), r_src),
                                g, all, SymmetrizeMode::Max);
      PushdownResult pd = pushdown(phi, f);
      PLFunction down =
          chip_firing(tgt, Subgraph::of_points(tgt, {Point::at_vertex(tv)}), r_tgt);
      if (!pd.ok()) {
        fail("fiber", "fiber over vertex '" + tgt->vertex_name(tv) + "' differs from the orbit: " +
                          pd.detail);
      } else if (!is_invariant(pullback(phi, down), g, all)) {
        fail("pullback-not-invariant", "pullback of a chip-firing move at vertex '" +
                                           tgt->vertex_name(tv) + "' is not G-invariant");
      }
    }
  }
  return out;
}

}  // namespace

GaloisCertificate correspondence_certificate(const Instance& inst, std::uint64_t seed,
                                             int n_samples) {
  const FiniteActionGroup& g = inst.group;
  const ModelPtr& w = g.model();
  GaloisCertificate cert;
  cert.curve_name = inst.name;
  cert.seed = seed;
  cert.n_samples = n_samples;
  cert.group_order = g.size();

  const GaloisActionVerdict action = is_galois_action(g);
  cert.action_galois = action.galois;
  if (action.witness_edge) cert.action_witness_edge = w->edge(*action.witness_edge).name;
  for (int v : action.stabilized_vertices) {
    cert.exceptional_set.push_back(
        inst.full_quotient->quotient->vertex_name(inst.full_quotient->vertex_orbit[v]));
  }

  if (inst.phi) {
    GGaloisResult gg = is_g_galois(*inst.phi, g);
    cert.g_galois = gg.verdict;
    cert.g_galois_obstruction = gg.obstruction;
  } else {
    cert.g_galois = false;
    cert.g_galois_obstruction = inst.phi_incompatibility;
  }

  const std::vector<Subgroup> subs = subgroups(g);
  bool witnesses_ok = true;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    GaloisCertificate::SubgroupRecord rec;
    rec.name = "H" + std::to_string(i);
    rec.elements = subs[i];
    QuotientResult qh = quotient(g, subs[i]);
    for (int e = 0; e < qh.quotient->edge_count(); ++e) {
      rec.quotient_edge_lengths.push_back(
          {qh.quotient->edge(e).name, qh.quotient->edge(e).length.str()});
    }
    if (action.galois && !w->is_singleton()) {
      PLFunction witness = witness_for_subgroup(g, subs[i], mix_seed(seed, 7040 + i));
      rec.witness_built = true;
      rec.witness_fn_text = emit_fn(witness);
      rec.witness_stabilizer = function_stabilizer(witness, g);
      rec.round_trip_ok = rec.witness_stabilizer == subs[i];
    } else {
      rec.witness_built = false;
      rec.witness_note = w->is_singleton() ? "refused: singleton curve"
                                           : "refused: the action is not Galois";
    }
    witnesses_ok = witnesses_ok && rec.round_trip_ok;
    cert.subgroup_records.push_back(std::move(rec));
  }

  cert.all_separated = true;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t j = i + 1; j < subs.size(); ++j) {
      GaloisCertificate::SeparationRecord rec;
      rec.h1 = static_cast<int>(i);
      rec.h2 = static_cast<int>(j);
      SeparatorResult sep = separating_function(g, subs[i], subs[j]);
      rec.separated = sep.separator.has_value();
      rec.detail = sep.note;
      if (!rec.separated) {
        cert.all_separated = false;
        if (!cert.separation_failure) cert.separation_failure = {rec.h1, rec.h2};
      }
      cert.separations.push_back(std::move(rec));
    }
  }

  if (inst.phi) {
    ProbeOutcome probes = run_probes(inst);
    cert.membership_probes = probes.probes;
    cert.pullback_counterexample = probes.counterexample;
    const Subgroup all = whole_group(g);
    for (int k = 0; k < n_samples && !cert.pullback_counterexample; ++k) {
      PLFunction f =
          symmetrize(random_fn(w, mix_seed(seed, 1000 + k)), g, all, SymmetrizeMode::Max);
      ++cert.membership_samples;
      PushdownResult pd = pushdown(*inst.phi, f);
      if (!pd.ok()) {
        cert.pullback_counterexample = {"sample",
                                        "seeded invariant sample " + std::to_string(k) +
                                            " is not a pull-back: " + pd.detail};
      }
    }
    for (int k = 0; k < n_samples && !cert.pullback_counterexample; ++k) {
      PLFunction down = random_fn(inst.phi->target(), mix_seed(seed, 2000 + k));
      ++cert.invariance_samples;
      if (!is_invariant(pullback(*inst.phi, down), g, all)) {
        cert.pullback_counterexample = {"sample", "pullback of seeded sample " +
                                                      std::to_string(k) + " is not G-invariant"};
      }
    }
  } else {
    cert.pullback_counterexample = {"pullback-not-invariant", inst.phi_incompatibility};
  }

  cert.invariant_extension_galois = cert.all_separated;
  cert.overall = cert.g_galois && witnesses_ok && !cert.pullback_counterexample;
  return cert;
}

GaloisCertificate correspondence_certificate(const HarmonicMorphism& phi,
                                             const FiniteActionGroup& g, std::uint64_t seed,
                                             int n_samples) {
  if (phi.source() != g.model()) {
    throw std::invalid_argument("correspondence_certificate: phi and G live on different models");
  }
  Instance inst;
  inst.name = g.model()->name();
  inst.group = g;
  inst.phi = phi;
  inst.phi_is_projection = false;
  inst.full_quotient = quotient(g);
  inst.from_input = Relocation::identity(g.model());
  return correspondence_certificate(inst, seed, n_samples);
}

// ---------------------------------------------------------------------------
// JSON

std::string GaloisCertificate::to_json_string(int indent) const {
  using json = nlohmann::ordered_json;
  json j;
  j["schema"] = "tropgal-cert/1";
  j["curve"] = curve_name;
  j["seed"] = seed;
  j["samples"] = n_samples;
  j["group"] = json{{"order", group_order}};
  json action;
  action["galois"] = action_galois;
  action["witness_edge"] = action_witness_edge ? json(*action_witness_edge) : json(nullptr);
  action["exceptional_set"] = exceptional_set;
  j["action"] = std::move(action);
  json gg;
  gg["verdict"] = g_galois;
  gg["obstruction"] = g_galois_obstruction.empty() ? json(nullptr) : json(g_galois_obstruction);
  j["g_galois"] = std::move(gg);
  json subs = json::array();
  for (const auto& rec : subgroup_records) {
    json s;
    s["name"] = rec.name;
    s["order"] = rec.elements.size();
    s["elements"] = rec.elements;
    json lengths;
    for (const auto& [name, len] : rec.quotient_edge_lengths) lengths[name] = len;
    s["quotient_lengths"] = std::move(lengths);
    json wit;
    wit["built"] = rec.witness_built;
    if (rec.witness_built) {
      wit["stabilizer"] = rec.witness_stabilizer;
      wit["round_trip_ok"] = rec.round_trip_ok;
      wit["fn"] = rec.witness_fn_text;
    } else {
      wit["note"] = rec.witness_note;
    }
    s["witness"] = std::move(wit);
    subs.push_back(std::move(s));
  }
  j["subgroups"] = std::move(subs);
  json sep;
  sep["all_separated"] = all_separated;
  json pairs = json::array();
  for (const auto& rec : separations) {
    pairs.push_back(json{{"h1", "H" + std::to_string(rec.h1)},
                         {"h2", "H" + std::to_string(rec.h2)},
                         {"separated", rec.separated},
                         {"detail", rec.detail}});
  }
  sep["pairs"] = std::move(pairs);
  sep["failure"] = separation_failure
                       ? json{{"h1", "H" + std::to_string(separation_failure->first)},
                              {"h2", "H" + std::to_string(separation_failure->second)}}
                       : json(nullptr);
  j["separation"] = std::move(sep);
  json pe;
  pe["counterexample"] =
      pullback_counterexample
          ? json{{"kind", pullback_counterexample->kind}, {"detail", pullback_counterexample->detail}}
          : json(nullptr);
  pe["probes"] = membership_probes;
  pe["membership_samples"] = membership_samples;
  pe["invariance_samples"] = invariance_samples;
  j["pullback_equality"] = std::move(pe);
  j["verdicts"] = json{{"invariant_extension_galois", invariant_extension_galois},
                       {"overall", overall ? "galois" : "not galois"}};
  j["note"] =
      "witness, separation and probe data are exact; sampled membership evidence is corroborating";
  return j.dump(indent) + "\n";
}

}  // namespace tropgal
