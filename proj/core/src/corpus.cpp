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

#include "tropgal/corpus.hpp"

#include <sstream>

#include <json.hpp>

#include "tropgal/galois.hpp"
#include "tropgal/io.hpp"
#include "tropgal/random_fn.hpp"

namespace tropgal {

namespace {

CorpusInstance fixed_instance(const std::string& name, const std::string& curve,
                              const std::string& action, bool galois) {
  return {name, curve, action, galois};
}

std::string rational_text(const Rational& r) { return to_string(r); }

// even cycle v0..v_{2m-1} with rotation-invariant lengths; optional tails
struct CycleSpec {
  int m = 2;
  std::vector<Rational> base;  // m lengths, repeated or mirrored
  Rational tail_len = 1;
};

std::string cycle_curve(const std::string& name, const CycleSpec& s, bool mirrored, int tails) {
  std::ostringstream out;
  out << "curve " << name << "\n";
  const int n = 2 * s.m;
  for (int i = 0; i < n; ++i) out << "vertex v" << i << "\n";
  if (tails >= 1) out << "vertex x0\n";
  if (tails >= 2) out << "vertex x1\n";
  for (int i = 0; i < n; ++i) {
    const Rational len = mirrored ? s.base[std::min(i, n - 1 - i) % s.m]
                                  : s.base[i % s.m];
    out << "edge e" << i << " v" << i << " v" << (i + 1) % n << " " << rational_text(len) << "\n";
  }
  if (tails >= 1) out << "edge t0 v0 x0 " << rational_text(s.tail_len) << "\n";
  if (tails >= 2) out << "edge t1 v" << s.m << " x1 " << rational_text(s.tail_len) << "\n";
  return out.str();
}

std::string rotation_action(const std::string& curve, const CycleSpec& s, int tails) {
  std::ostringstream out;
  const int n = 2 * s.m;
  out << "action over " << curve << "\n";
  out << "gen rot\n";
  for (int i = 0; i < n; ++i) out << "v v" << i << " -> v" << (i + s.m) % n << "\n";
  for (int i = 0; i < n; ++i) out << "e e" << i << " -> e" << (i + s.m) % n << " +\n";
  if (tails >= 2) {
    out << "v x0 -> x1\nv x1 -> x0\n";
    out << "e t0 -> t1 +\ne t1 -> t0 +\n";
  }
  return out.str();
}

std::string reflection_action(const std::string& curve, const CycleSpec& s, int tails) {
  std::ostringstream out;
  const int n = 2 * s.m;
  out << "action over " << curve << "\n";
  out << "gen refl\n";
  for (int i = 1; i < n; ++i) {
    if (i != n - i) out << "v v" << i << " -> v" << n - i << "\n";
  }
  // e_i = (v_i, v_{i+1}) maps onto e_{n-1-i} with reversed orientation
  for (int i = 0; i < n; ++i) {
    out << "e e" << i << " -> e" << n - 1 - i << " -\n";
  }
  if (tails >= 1) {
    // the tail at the fixed vertex v0 stays pointwise fixed
  }
  return out.str();
}

}  // namespace

std::vector<CorpusInstance> build_corpus(std::uint64_t seed) {
  std::vector<CorpusInstance> out;

  out.push_back(fixed_instance(
      "ex1",
      "curve ex1\n"
      "vertex v1\nvertex v2\nvertex v3\n"
      "edge e1 v1 v2 1\nedge e2 v1 v2 1\nedge e3 v2 v3 1\n",
      "action over ex1\n"
      "gen s\n"
      "e e1 -> e2 +\ne e2 -> e1 +\n",
      false));

  out.push_back(fixed_instance(
      "ex2-s3",
      "curve ex2-s3\n"
      "vertex u\nvertex w\n"
      "edge e1 u w 1\nedge e2 u w 1\nedge e3 u w 1\n",
      "action over ex2-s3\n"
      "gen s12\n"
      "e e1 -> e2 +\ne e2 -> e1 +\n"
      "gen s23\n"
      "e e2 -> e3 +\ne e3 -> e2 +\n",
      false));

  out.push_back(fixed_instance(
      "ex2-c3",
      "curve ex2-c3\n"
      "vertex u\nvertex w\n"
      "edge e1 u w 1\nedge e2 u w 1\nedge e3 u w 1\n",
      "action over ex2-c3\n"
      "gen r\n"
      "e e1 -> e2 +\ne e2 -> e3 +\ne e3 -> e1 +\n",
      true));

  out.push_back(fixed_instance(
      "z2-cycle",
      "curve z2-cycle\n"
      "vertex a\nvertex b\n"
      "edge e1 a b 1\nedge e2 b a 1\n",
      "action over z2-cycle\n"
      "gen rot\n"
      "v a -> b\nv b -> a\n"
      "e e1 -> e2 +\ne e2 -> e1 +\n",
      true));

  out.push_back(fixed_instance(
      "path-refl",
      "curve path-refl\n"
      "vertex a\nvertex b\nvertex c\n"
      "edge e1 a b 1\nedge e2 b c 1\n",
      "action over path-refl\n"
      "gen refl\n"
      "v a -> c\nv c -> a\n"
      "e e1 -> e2 -\ne e2 -> e1 -\n",
      true));

  out.push_back(fixed_instance(
      "spider-swap",
      "curve spider-swap\n"
      "vertex c\nvertex z1\nvertex z2\n"
      "edge l1 c z1 inf\nedge l2 c z2 inf\n",
      "action over spider-swap\n"
      "gen swap\n"
      "v z1 -> z2\nv z2 -> z1\n"
      "e l1 -> l2 +\ne l2 -> l1 +\n",
      true));

  out.push_back(fixed_instance(
      "ex1-inf",
      "curve ex1-inf\n"
      "vertex v1\nvertex v2\nvertex v3\nvertex z\n"
      "edge e1 v1 v2 1\nedge e2 v1 v2 1\nedge e3 v2 v3 1\nedge e4 v3 z inf\n",
      "action over ex1-inf\n"
      "gen s\n"
      "e e1 -> e2 +\ne e2 -> e1 +\n",
      false));

  // seeded families
  {
    Rng rng(mix_seed(seed, 0xC0DE));
    auto lengths = [&](int m) {
      std::vector<Rational> base;
      for (int i = 0; i < m; ++i) {
        base.push_back(Rational(rng.int_in(1, 6), rng.int_in(1, 3)));
      }
      return base;
    };
    CycleSpec a{2 + static_cast<int>(rng.below(3)), {}, Rational(1)};
    a.base = lengths(a.m);
    out.push_back(fixed_instance("rand-a", cycle_curve("rand-a", a, false, 0),
                                 rotation_action("rand-a", a, 0), true));

    CycleSpec b{2 + static_cast<int>(rng.below(3)), {}, Rational(rng.int_in(1, 4), 2)};
    b.base = lengths(b.m);
    out.push_back(fixed_instance("rand-b", cycle_curve("rand-b", b, true, 1),
                                 reflection_action("rand-b", b, 1), false));

    CycleSpec c{2 + static_cast<int>(rng.below(3)), {}, Rational(rng.int_in(1, 4), 2)};
    c.base = lengths(c.m);
    out.push_back(fixed_instance("rand-c", cycle_curve("rand-c", c, false, 2),
                                 rotation_action("rand-c", c, 2), true));
  }
  return out;
}

std::string run_corpus_json(std::uint64_t seed, int n_samples) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["schema"] = "tropgal-corpus/1";
  doc["seed"] = seed;
  doc["samples"] = n_samples;
  json instances = json::array();
  for (const auto& ci : build_corpus(seed)) {
    std::istringstream curve_in(ci.curve_text);
    ModelPtr curve = parse_curve(curve_in, ci.name + ".curve");
    std::istringstream action_in(ci.action_text);
    ActionFile action = parse_action(action_in, ci.name + ".action", curve);
    std::vector<ModelAutomorphism> gens;
    for (const auto& g : action.generators) gens.push_back(g.map);
    Instance inst = prepare_instance(curve, gens, std::nullopt);
    inst.name = ci.name;
    GaloisCertificate cert = correspondence_certificate(inst, seed, n_samples);
    json entry;
    entry["name"] = ci.name;
    entry["expected_galois"] = ci.expected_galois;
    entry["computed_overall"] = cert.overall;
    entry["matches_expected"] = cert.overall == ci.expected_galois;
    entry["certificate"] = json::parse(cert.to_json_string());
    instances.push_back(std::move(entry));
  }
  doc["instances"] = std::move(instances);
  return doc.dump(2) + "\n";
}

}  // namespace tropgal
