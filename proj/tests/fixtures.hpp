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

#ifndef TROPGAL_TESTS_FIXTURES_HPP_
#define TROPGAL_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "tropgal/group_action.hpp"

namespace fixtures {

using namespace tropgal;

// three vertices, parallel edges e1,e2 between v1,v2, bridge e3 to v3
inline ModelPtr ex1_curve() {
  return Model::make("ex1", {"v1", "v2", "v3"},
                     {{"e1", "v1", "v2", ExtRat(1)},
                      {"e2", "v1", "v2", ExtRat(1)},
                      {"e3", "v2", "v3", ExtRat(1)}});
}

// two vertices joined by three parallel unit edges
inline ModelPtr theta_curve() {
  return Model::make("theta", {"u", "w"},
                     {{"e1", "u", "w", ExtRat(1)},
                      {"e2", "u", "w", ExtRat(1)},
                      {"e3", "u", "w", ExtRat(1)}});
}

inline ModelPtr unit_edge() {
  return Model::make("seg", {"v1", "v2"}, {{"e", "v1", "v2", ExtRat(1)}});
}

inline ModelPtr z2_cycle() {
  return Model::make("cyc2", {"a", "b"},
                     {{"e1", "a", "b", ExtRat(1)}, {"e2", "b", "a", ExtRat(1)}});
}

inline ModelPtr path3() {
  return Model::make("path3", {"a", "b", "c"},
                     {{"e1", "a", "b", ExtRat(1)}, {"e2", "b", "c", ExtRat(1)}});
}

// center with two infinite legs
inline ModelPtr spider() {
  return Model::make("spider", {"c", "z1", "z2"},
                     {{"l1", "c", "z1", ExtRat::pos_inf()}, {"l2", "c", "z2", ExtRat::pos_inf()}});
}

inline ModelAutomorphism swap_edges(const ModelPtr& m, const std::string& a,
                                    const std::string& b) {
  std::vector<int> vperm(m->vertex_count());
  for (int v = 0; v < m->vertex_count(); ++v) vperm[v] = v;
  std::vector<ModelAutomorphism::EdgeTarget> eperm(m->edge_count());
  for (int e = 0; e < m->edge_count(); ++e) eperm[e] = {e, false};
  const int ea = m->edge_index(a);
  const int eb = m->edge_index(b);
  eperm[ea] = {eb, false};
  eperm[eb] = {ea, false};
  return ModelAutomorphism(m, std::move(vperm), std::move(eperm));
}

inline FiniteActionGroup ex1_group(const ModelPtr& m) {
  return FiniteActionGroup::generate(m, {swap_edges(m, "e1", "e2")});
}

inline FiniteActionGroup theta_s3(const ModelPtr& m) {
  return FiniteActionGroup::generate(m, {swap_edges(m, "e1", "e2"), swap_edges(m, "e2", "e3")});
}

inline ModelAutomorphism theta_rotation(const ModelPtr& m) {
  std::vector<int> vperm{0, 1};
  std::vector<ModelAutomorphism::EdgeTarget> eperm{{1, false}, {2, false}, {0, false}};
  return ModelAutomorphism(m, std::move(vperm), std::move(eperm));
}

inline FiniteActionGroup theta_c3(const ModelPtr& m) {
  return FiniteActionGroup::generate(m, {theta_rotation(m)});
}

inline FiniteActionGroup z2_rotation_group(const ModelPtr& m) {
  std::vector<int> vperm{1, 0};
  std::vector<ModelAutomorphism::EdgeTarget> eperm{{1, false}, {0, false}};
  return FiniteActionGroup::generate(m, {ModelAutomorphism(m, vperm, eperm)});
}

inline FiniteActionGroup path_reflection_group(const ModelPtr& m) {
  std::vector<int> vperm{2, 1, 0};
  std::vector<ModelAutomorphism::EdgeTarget> eperm{{1, true}, {0, true}};
  return FiniteActionGroup::generate(m, {ModelAutomorphism(m, vperm, eperm)});
}

inline FiniteActionGroup spider_swap_group(const ModelPtr& m) {
  std::vector<int> vperm{0, 2, 1};
  std::vector<ModelAutomorphism::EdgeTarget> eperm{{1, false}, {0, false}};
  return FiniteActionGroup::generate(m, {ModelAutomorphism(m, vperm, eperm)});
}

}  // namespace fixtures

#endif  // TROPGAL_TESTS_FIXTURES_HPP_
