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

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tropgal/corpus.hpp"
#include "tropgal/galois.hpp"
#include "tropgal/io.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace tropgal;

constexpr int kExitOk = 0;
constexpr int kExitVerdictFalse = 1;
constexpr int kExitInputError = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

struct LoadedAction {
  ModelPtr curve;
  std::vector<ModelAutomorphism> generators;
};

LoadedAction load(const std::string& curve_path, const std::string& action_path) {
  LoadedAction out;
  out.curve = load_curve_file(curve_path);
  ActionFile af = load_action_file(action_path, out.curve);
  for (const auto& g : af.generators) out.generators.push_back(g.map);
  return out;
}

json subgroup_json(const FiniteActionGroup& g, const std::vector<Subgroup>& subs) {
  json arr = json::array();
  for (std::size_t i = 0; i < subs.size(); ++i) {
    json s;
    s["name"] = "H" + std::to_string(i);
    s["order"] = subs[i].size();
    s["elements"] = subs[i];
    s["normal"] = is_normal_subgroup(g.table(), subs[i]);
    arr.push_back(std::move(s));
  }
  return arr;
}

json model_json(const Model& m) {
  json j;
  j["name"] = m.name();
  json vs = json::array();
  for (int v = 0; v < m.vertex_count(); ++v) vs.push_back(m.vertex_name(v));
  j["vertices"] = std::move(vs);
  json es = json::array();
  for (const auto& e : m.edges()) {
    es.push_back(json{{"name", e.name},
                      {"v", m.vertex_name(e.v)},
                      {"w", m.vertex_name(e.w)},
                      {"length", e.length.str()}});
  }
  j["edges"] = std::move(es);
  return j;
}

json morphism_json(const HarmonicMorphism& phi) {
  json j;
  json vmap;
  for (int v = 0; v < phi.source()->vertex_count(); ++v) {
    vmap[phi.source()->vertex_name(v)] = phi.target()->vertex_name(phi.map_vertex(v));
  }
  j["vmap"] = std::move(vmap);
  json emap;
  for (int e = 0; e < phi.source()->edge_count(); ++e) {
    const auto& img = phi.map_edge(e);
    emap[phi.source()->edge(e).name] = json{{"to", phi.target()->edge(img.edge).name},
                                            {"orientation", img.reversed ? "-" : "+"},
                                            {"degree", img.degree}};
  }
  j["emap"] = std::move(emap);
  const auto deg = phi.is_valid() ? phi.degree() : std::nullopt;
  j["degree"] = deg ? json(*deg) : json("indeterminate");
  return j;
}

json validation_json(const ValidationReport& rep) {
  json j;
  j["valid"] = rep.ok();
  if (rep.ok()) {
    j["degree"] = rep.degree_indeterminate ? json("indeterminate") : json(*rep.degree);
  }
  static const char* kConditions[] = {"endpoints", "metric", "harmonicity", "global_degree",
                                      "shape"};
  json conditions;
  for (int c = 1; c <= 5; ++c) {
    bool ok = true;
    for (const auto& violation : rep.violations) ok = ok && violation.condition != c;
    conditions[kConditions[c - 1]] = ok;
  }
  j["conditions"] = std::move(conditions);
  json v = json::array();
  for (const auto& violation : rep.violations) {
    v.push_back(json{{"condition", violation.condition}, {"detail", violation.detail}});
  }
  j["violations"] = std::move(v);
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"tropgal: exact tropical curves, harmonic morphisms and Galois certificates"};
  app.require_subcommand(1);

  std::string curve_path, action_path, morphism_path, fn_path, out_path;
  std::string subgraph_spec, l_text, subgroup_spec = "all", points_path, group_path;
  std::string emit_curve_path, dir_path, format = "json";
  std::uint64_t seed = 0;
  int samples = 32;
  int basepoint = 0;

  auto add_common = [&](CLI::App* cmd, bool needs_action) {
    cmd->add_option("--curve", curve_path, "curve file")->required();
    if (needs_action) cmd->add_option("--action", action_path, "action file")->required();
    cmd->add_option("--out", out_path, "write the result to a file instead of stdout");
    cmd->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  auto* c_validate = app.add_subcommand("validate", "validate curve / action / morphism files");
  c_validate->add_option("--curve", curve_path, "curve file")->required();
  c_validate->add_option("--action", action_path, "action file");
  c_validate->add_option("--morphism", morphism_path, "morphism file");
  c_validate->add_option("--out", out_path, "output file");

  auto* c_quotient = app.add_subcommand("quotient", "quotient curve of an action");
  add_common(c_quotient, true);
  c_quotient->add_option("--subgroup", subgroup_spec, "subgroup index from 'subgroups' (default: full group)");
  c_quotient->add_option("--emit-curve", emit_curve_path, "also write the quotient as a curve file");

  auto* c_check = app.add_subcommand("check-galois", "is the action Galois?");
  add_common(c_check, true);

  auto* c_certify = app.add_subcommand("certify", "emit the Galois correspondence certificate");
  add_common(c_certify, true);
  c_certify->add_option("--morphism", morphism_path, "covering to certify (default: the quotient projection)");
  c_certify->add_option("--seed", seed, "seed for witnesses and samples");
  c_certify->add_option("--samples", samples, "sampled functions per membership direction");

  auto* c_pushdown = app.add_subcommand("pushdown", "express a function as a pull-back, or refuse");
  add_common(c_pushdown, false);
  c_pushdown->add_option("--morphism", morphism_path, "morphism file")->required();
  c_pushdown->add_option("--fn", fn_path, "function file over the source curve")->required();

  auto* c_pullback = app.add_subcommand("pullback", "pull a target function back");
  add_common(c_pullback, false);
  c_pullback->add_option("--morphism", morphism_path, "morphism file")->required();
  c_pullback->add_option("--fn", fn_path, "function file over the target curve")->required();

  auto* c_pushforward = app.add_subcommand("pushforward", "push a source function forward");
  add_common(c_pushforward, false);
  c_pushforward->add_option("--morphism", morphism_path, "morphism file")->required();
  c_pushforward->add_option("--fn", fn_path, "function file over the source curve")->required();

  auto* c_cf = app.add_subcommand("cf", "chip-firing move CF(subgraph, l)");
  add_common(c_cf, false);
  c_cf->add_option("--subgraph", subgraph_spec,
                   "'all', or comma list of vertices, edge@off, edge@lo..hi")
      ->required();
  c_cf->add_option("--l", l_text, "positive rational or 'inf'")->required();

  auto* c_witness = app.add_subcommand("witness", "stabilizer-exact witness function for a subgroup");
  add_common(c_witness, true);
  c_witness->add_option("--subgroup", subgroup_spec, "subgroup index from 'subgroups'")->required();
  c_witness->add_option("--seed", seed, "seed for the candidate choice");

  auto* c_subgroups = app.add_subcommand("subgroups", "enumerate the subgroup lattice");
  add_common(c_subgroups, true);

  auto* c_separate = app.add_subcommand("separate", "torus separator tables and stabilizers");
  c_separate->add_option("--points", points_path, "points file (comma-separated rationals)")->required();
  c_separate->add_option("--group", group_path, "coordinate permutation file")->required();
  c_separate->add_option("--subgroup", subgroup_spec, "subgroup index (default: all)");
  c_separate->add_option("--basepoint", basepoint, "index of v in the points file");
  c_separate->add_option("--out", out_path, "output file");

  auto* c_corpus = app.add_subcommand("corpus", "certificate run over the built-in corpus");
  c_corpus->add_option("--seed", seed, "corpus seed");
  c_corpus->add_option("--samples", samples, "samples per certificate");
  c_corpus->add_option("--out", out_path, "output file");
  c_corpus->add_option("--dir", dir_path, "also write the instance files to a directory");

  CLI11_PARSE(app, argc, argv);

  if (c_validate->parsed()) {
    json j;
    ModelPtr curve = load_curve_file(curve_path);
    j["curve"] = json{{"name", curve->name()}, {"valid", true}};
    bool all_ok = true;
    if (!action_path.empty()) {
      ActionFile af = load_action_file(action_path, curve);
      j["action"] = json{{"generators", af.generators.size()}, {"valid", true}};
    }
    if (!morphism_path.empty()) {
      HarmonicMorphism phi = load_morphism_file(morphism_path, curve);
      j["morphism"] = validation_json(phi.validate());
      all_ok = phi.is_valid();
    }
    emit(j.dump(2) + "\n", out_path);
    return all_ok ? kExitOk : kExitVerdictFalse;
  }

  if (c_quotient->parsed() || c_check->parsed() || c_witness->parsed() || c_subgroups->parsed()) {
    LoadedAction la = load(curve_path, action_path);
    Instance inst = prepare_instance(la.curve, la.generators, std::nullopt);
    const FiniteActionGroup& g = inst.group;
    const std::vector<Subgroup> subs = subgroups(g);
    auto pick_subgroup = [&]() -> Subgroup {
      if (subgroup_spec == "all") return subs.back();
      const std::size_t k = std::stoul(subgroup_spec);
      if (k >= subs.size()) throw std::invalid_argument("subgroup index out of range");
      return subs[k];
    };

    if (c_subgroups->parsed()) {
      json j;
      j["curve"] = inst.name;
      j["group_order"] = g.size();
      j["subgroups"] = subgroup_json(g, subs);
      emit(j.dump(2) + "\n", out_path);
      return kExitOk;
    }
    if (c_quotient->parsed()) {
      QuotientResult q =
          subgroup_spec == "all" ? *inst.full_quotient : quotient(g, pick_subgroup());
      if (format == "text") {
        std::ostringstream text;
        for (const auto& e : q.quotient->edges()) {
          text << e.name << " " << q.quotient->vertex_name(e.v) << " "
               << q.quotient->vertex_name(e.w) << " " << e.length.str() << "\n";
        }
        const auto deg = q.projection.degree();
        text << "degree " << (deg ? std::to_string(*deg) : "indeterminate") << "\n";
        emit(text.str(), out_path);
      } else {
        json j;
        j["curve"] = inst.name;
        j["subgroup"] = subgroup_spec;
        j["quotient"] = model_json(*q.quotient);
        j["projection"] = morphism_json(q.projection);
        emit(j.dump(2) + "\n", out_path);
      }
      if (!emit_curve_path.empty()) write_text_file(emit_curve_path, emit_curve(*q.quotient));
      return kExitOk;
    }
    if (c_check->parsed()) {
      GaloisActionVerdict v = is_galois_action(g);
      json j;
      j["curve"] = inst.name;
      j["galois"] = v.galois;
      j["witness_edge"] =
          v.witness_edge ? json(g.model()->edge(*v.witness_edge).name) : json(nullptr);
      json exc = json::array();
      for (int sv : v.stabilized_vertices) {
        exc.push_back(inst.full_quotient->quotient->vertex_name(inst.full_quotient->vertex_orbit[sv]));
      }
      j["exceptional_set"] = std::move(exc);
      if (format == "text") {
        std::string text = v.galois ? "galois\n"
                                    : "not galois (edge '" +
                                          g.model()->edge(*v.witness_edge).name +
                                          "' is fixed pointwise)\n";
        emit(text, out_path);
      } else {
        emit(j.dump(2) + "\n", out_path);
      }
      return v.galois ? kExitOk : kExitVerdictFalse;
    }
    // witness
    const Subgroup h = pick_subgroup();
    json j;
    j["curve"] = inst.name;
    j["subgroup"] = subgroup_spec;
    try {
      PLFunction w = witness_for_subgroup(g, h, seed);
      const Subgroup stab = function_stabilizer(w, g);
      j["refused"] = false;
      j["stabilizer"] = stab;
      j["round_trip_ok"] = stab == h;
      j["fn"] = emit_fn(w);
      emit(j.dump(2) + "\n", out_path);
      return stab == h ? kExitOk : kExitVerdictFalse;
    } catch (const std::domain_error& e) {
      j["refused"] = true;
      j["reason"] = e.what();
      emit(j.dump(2) + "\n", out_path);
      return kExitVerdictFalse;
    }
  }

  if (c_certify->parsed()) {
    LoadedAction la = load(curve_path, action_path);
    std::optional<HarmonicMorphism> phi;
    if (!morphism_path.empty()) phi = load_morphism_file(morphism_path, la.curve);
    Instance inst = prepare_instance(la.curve, la.generators, phi);
    GaloisCertificate cert = correspondence_certificate(inst, seed, samples);
    if (format == "text") {
      std::ostringstream text;
      text << (cert.overall ? "galois" : "not galois") << "\n";
      if (!cert.g_galois) text << "covering: " << cert.g_galois_obstruction << "\n";
      if (cert.separation_failure) {
        text << "separation fails between H" << cert.separation_failure->first << " and H"
             << cert.separation_failure->second << "\n";
      }
      if (cert.pullback_counterexample) {
        text << "counterexample (" << cert.pullback_counterexample->kind
             << "): " << cert.pullback_counterexample->detail << "\n";
      }
      emit(text.str(), out_path);
    } else {
      emit(cert.to_json_string(), out_path);
    }
    return cert.overall ? kExitOk : kExitVerdictFalse;
  }

  if (c_pushdown->parsed() || c_pullback->parsed() || c_pushforward->parsed()) {
    ModelPtr curve = load_curve_file(curve_path);
    HarmonicMorphism phi = load_morphism_file(morphism_path, curve);
    if (!phi.is_valid()) {
      throw std::invalid_argument("morphism is not harmonic: " +
                                  phi.validate().violations.front().detail);
    }
    if (c_pullback->parsed()) {
      PLFunction f = load_fn_file(fn_path, phi.target());
      emit(emit_fn(pullback(phi, f)), out_path);
      return kExitOk;
    }
    if (c_pushforward->parsed()) {
      PLFunction f = load_fn_file(fn_path, phi.source());
      emit(emit_fn(pushforward(phi, f)), out_path);
      return kExitOk;
    }
    PLFunction f = load_fn_file(fn_path, phi.source());
    PushdownResult res = pushdown(phi, f);
    json j;
    j["ok"] = res.ok();
    if (res.ok()) {
      j["fn"] = emit_fn(*res.fn);
    } else {
      j["obstruction"] =
          res.obstruction == PushdownResult::Obstruction::Divisibility ? "divisibility" : "fiber";
      j["detail"] = res.detail;
    }
    emit(j.dump(2) + "\n", out_path);
    return res.ok() ? kExitOk : kExitVerdictFalse;
  }

  if (c_cf->parsed()) {
    ModelPtr curve = load_curve_file(curve_path);
    Subgraph s = parse_subgraph_spec(curve, subgraph_spec);
    emit(emit_fn(chip_firing(curve, s, ExtRat::parse(l_text))), out_path);
    return kExitOk;
  }

  if (c_separate->parsed()) {
    std::vector<TorusPoint> points = load_points_file(points_path);
    if (points.empty()) throw std::invalid_argument("no points given");
    std::vector<std::vector<int>> perms = load_perms_file(group_path, points[0].coords.size());
    PointSetAction a = PointSetAction::from_coordinate_perms(points, perms);
    const std::vector<Subgroup> subs = all_subgroups(a.table());
    std::vector<std::size_t> which;
    if (subgroup_spec == "all") {
      for (std::size_t i = 0; i < subs.size(); ++i) which.push_back(i);
    } else {
      const std::size_t k = std::stoul(subgroup_spec);
      if (k >= subs.size()) throw std::invalid_argument("subgroup index out of range");
      which.push_back(k);
    }
    json j;
    j["points"] = [&] {
      json arr = json::array();
      for (const auto& p : points) {
        json row = json::array();
        for (const auto& c : p.coords) row.push_back(to_string(c));
        arr.push_back(std::move(row));
      }
      return arr;
    }();
    j["group_order"] = a.size();
    j["basepoint"] = basepoint;
    json results = json::array();
    bool all_ok = true;
    for (std::size_t k : which) {
      json entry;
      entry["name"] = "H" + std::to_string(k);
      entry["order"] = subs[k].size();
      const auto table = subgroup_separator(a, subs[k], basepoint);
      json tbl = json::array();
      json zeros = json::array();
      for (std::size_t u = 0; u < table.size(); ++u) {
        tbl.push_back(table[u].str());
        if (!table[u].is_zero() && table[u].raw() == ExtRat(0)) zeros.push_back(u);
      }
      entry["table"] = std::move(tbl);
      entry["zero_set"] = std::move(zeros);
      const Subgroup stab = separator_stabilizer(a, subs[k], basepoint);
      entry["stabilizer"] = stab;
      entry["equals_subgroup"] = stab == subs[k];
      all_ok = all_ok && stab == subs[k];
      results.push_back(std::move(entry));
    }
    j["subgroups"] = std::move(results);
    emit(j.dump(2) + "\n", out_path);
    return all_ok ? kExitOk : kExitVerdictFalse;
  }

  if (c_corpus->parsed()) {
    if (!dir_path.empty()) {
      for (const auto& ci : build_corpus(seed)) {
        write_text_file(dir_path + "/" + ci.name + ".curve", ci.curve_text);
        write_text_file(dir_path + "/" + ci.name + ".action", ci.action_text);
      }
    }
    const std::string doc = run_corpus_json(seed, samples);
    emit(doc, out_path);
    const auto parsed = json::parse(doc);
    for (const auto& entry : parsed["instances"]) {
      if (!entry["matches_expected"].get<bool>()) return kExitVerdictFalse;
    }
    return kExitOk;
  }
  return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
