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

#include <benchmark/benchmark.h>

#include "tropgal/galois.hpp"
#include "tropgal/random_fn.hpp"

namespace {

using namespace tropgal;

ModelPtr theta() {
  return Model::make("theta", {"u", "w"},
                     {{"e1", "u", "w", ExtRat(1)},
                      {"e2", "u", "w", ExtRat(1)},
                      {"e3", "u", "w", ExtRat(1)}});
}

// an even cycle with n segments
ModelPtr cycle(int n) {
  std::vector<std::string> vs;
  std::vector<EdgeSpec> es;
  for (int i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
  for (int i = 0; i < n; ++i) {
    es.push_back({"e" + std::to_string(i), vs[i], vs[(i + 1) % n], ExtRat(1)});
  }
  return Model::make("cycle", std::move(vs), std::move(es));
}

ModelAutomorphism edge_swap(const ModelPtr& m, int a, int b) {
  std::vector<int> vperm(m->vertex_count());
  for (int v = 0; v < m->vertex_count(); ++v) vperm[v] = v;
  std::vector<ModelAutomorphism::EdgeTarget> eperm(m->edge_count());
  for (int e = 0; e < m->edge_count(); ++e) eperm[e] = {e, false};
  eperm[a] = {b, false};
  eperm[b] = {a, false};
  return ModelAutomorphism(m, std::move(vperm), std::move(eperm));
}

// the symmetric group on k unit legs of a star
FiniteActionGroup star_group(int k, ModelPtr* out_model) {
  std::vector<std::string> vs{"c"};
  std::vector<EdgeSpec> es;
  for (int i = 0; i < k; ++i) {
    vs.push_back("t" + std::to_string(i));
    es.push_back({"l" + std::to_string(i), "c", vs.back(), ExtRat(1)});
  }
  ModelPtr m = Model::make("star", std::move(vs), std::move(es));
  *out_model = m;
  std::vector<ModelAutomorphism> gens;
  for (int i = 0; i + 1 < k; ++i) {
    std::vector<int> vperm(m->vertex_count());
    for (int v = 0; v < m->vertex_count(); ++v) vperm[v] = v;
    std::vector<ModelAutomorphism::EdgeTarget> eperm(m->edge_count());
    for (int e = 0; e < m->edge_count(); ++e) eperm[e] = {e, false};
    std::swap(vperm[1 + i], vperm[2 + i]);
    eperm[i] = {i + 1, false};
    eperm[i + 1] = {i, false};
    gens.emplace_back(m, std::move(vperm), std::move(eperm));
  }
  return FiniteActionGroup::generate(m, std::move(gens));
}

void BM_TropAddFn(benchmark::State& state) {
  ModelPtr m = cycle(static_cast<int>(state.range(0)));
  PLFunction f = random_fn(m, 1);
  PLFunction g = random_fn(m, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(trop_add_fn(f, g));
  }
}
BENCHMARK(BM_TropAddFn)->Arg(4)->Arg(16)->Arg(64);

void BM_Distance(benchmark::State& state) {
  ModelPtr m = cycle(static_cast<int>(state.range(0)));
  const Point p = Point::on_edge(0, ExtRat(Rational(1, 3)));
  const Point q = Point::on_edge(m->edge_count() / 2, ExtRat(Rational(2, 5)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(distance(*m, p, q));
  }
}
BENCHMARK(BM_Distance)->Arg(8)->Arg(64)->Arg(256);

void BM_ChipFiring(benchmark::State& state) {
  ModelPtr m = cycle(static_cast<int>(state.range(0)));
  Subgraph s = Subgraph::of_points(m, {Point::at_vertex(0)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(chip_firing(m, s, ExtRat(Rational(5, 2))));
  }
}
BENCHMARK(BM_ChipFiring)->Arg(8)->Arg(64);

void BM_QuotientTheta(benchmark::State& state) {
  ModelPtr m = theta();
  FiniteActionGroup g =
      FiniteActionGroup::generate(m, {edge_swap(m, 0, 1), edge_swap(m, 1, 2)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(quotient(g));
  }
}
BENCHMARK(BM_QuotientTheta);

void BM_SubgroupLattice(benchmark::State& state) {
  ModelPtr m;
  FiniteActionGroup g = star_group(static_cast<int>(state.range(0)), &m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(subgroups(g));
  }
}
BENCHMARK(BM_SubgroupLattice)->Arg(3)->Arg(4);

void BM_Certificate(benchmark::State& state) {
  ModelPtr m = theta();
  std::vector<int> id{0, 1};
  std::vector<ModelAutomorphism::EdgeTarget> rot{{1, false}, {2, false}, {0, false}};
  Instance inst = prepare_instance(m, {ModelAutomorphism(m, id, rot)}, std::nullopt);
  for (auto _ : state) {
    benchmark::DoNotOptimize(correspondence_certificate(inst, 7, 4));
  }
}
BENCHMARK(BM_Certificate);

}  // namespace

BENCHMARK_MAIN();
