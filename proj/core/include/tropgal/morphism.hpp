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

#ifndef TROPGAL_MORPHISM_HPP_
#define TROPGAL_MORPHISM_HPP_

#include <optional>
#include <string>
#include <vector>

#include "tropgal/ratfun.hpp"

namespace tropgal {

/// Image of a source edge: a target edge, an orientation flag (reversed means
/// the source v endpoint maps onto the target w endpoint), and the stretching
/// factor deg_e.
struct EdgeImage {
  int edge = -1;
  bool reversed = false;
  long long degree = 1;
};

struct ValidationReport {
  struct Violation {
    int condition = 0;  // 1 endpoints, 2 edge metric, 3 harmonicity, 4 global degree, 5 shape
    std::string detail;
  };
  std::vector<Violation> violations;
  std::optional<long long> degree;  // set when valid and not singleton/singleton
  bool degree_indeterminate = false;

  bool ok() const { return violations.empty(); }
};

/// A finite harmonic morphism between two loopless models, given on the
/// model level: vertices to vertices, edges onto edges with per-edge degrees.
/// Validation runs eagerly at construction; an invalid map is representable
/// and carries its report.
class HarmonicMorphism {
 public:
  HarmonicMorphism(ModelPtr source, ModelPtr target, std::vector<int> vertex_map,
                   std::vector<EdgeImage> edge_map);

  static HarmonicMorphism identity(ModelPtr m);

  const ModelPtr& source() const { return source_; }
  const ModelPtr& target() const { return target_; }
  int map_vertex(int v) const { return vertex_map_[v]; }
  const EdgeImage& map_edge(int e) const { return edge_map_[e]; }
  const std::vector<int>& vertex_map() const { return vertex_map_; }
  const std::vector<EdgeImage>& edge_map() const { return edge_map_; }

  const ValidationReport& validate() const { return report_; }
  bool is_valid() const { return report_.ok(); }

  /// Global degree; nullopt when both curves are singletons (indeterminate).
  /// Throws std::invalid_argument on an invalid morphism.
  std::optional<long long> degree() const;

  /// deg_v at a source vertex (requires validity).
  long long vertex_degree(int v) const;

  /// Image of a point of the metric realization (requires validity).
  Point map_point(const Point& p) const;

 private:
  ModelPtr source_;
  ModelPtr target_;
  std::vector<int> vertex_map_;
  std::vector<EdgeImage> edge_map_;
  ValidationReport report_;
  std::vector<long long> vertex_degrees_;
};

/// phi2 ∘ phi1 (apply phi1 first). Requires phi1.target == phi2.source.
HarmonicMorphism compose(const HarmonicMorphism& phi2, const HarmonicMorphism& phi1);

/// Pull-back f' ∘ phi. Slopes scale by deg_e along each source edge.
PLFunction pullback(const HarmonicMorphism& phi, const PLFunction& target_fn);

/// Push-forward: the deg-weighted fiber sum, extended continuously to points
/// at infinity.
PLFunction pushforward(const HarmonicMorphism& phi, const PLFunction& source_fn);

/// Decision procedure for membership in the pull-back semifield.
struct PushdownResult {
  enum class Obstruction { None, Divisibility, FiberMismatch };
  std::optional<PLFunction> fn;  // f' with pullback(phi, f') = f, when it exists
  Obstruction obstruction = Obstruction::None;
  std::string detail;
  bool ok() const { return fn.has_value(); }
};
PushdownResult pushdown(const HarmonicMorphism& phi, const PLFunction& f);

/// Constructs the degree-one factor phi12 with phi1 = phi12 ∘ phi2 when it
/// exists: the candidate phi2(y) ↦ phi1(y) must be well-defined on fibers and
/// validate as a degree-one finite harmonic morphism.
struct FactorResult {
  std::optional<HarmonicMorphism> morphism;
  std::string obstruction;
};
FactorResult degree_one_factor(const HarmonicMorphism& phi1, const HarmonicMorphism& phi2);

/// Refines the source at the given cuts (closed under fibers: images of cuts
/// are cut on the target, and their preimages on every source edge), and
/// rebuilds the morphism over the refined pair.
struct MorphismRefinement {
  HarmonicMorphism phi;
  Relocation source_reloc;
  Relocation target_reloc;
};
MorphismRefinement refine_morphism(const HarmonicMorphism& phi, const std::vector<Point>& cuts);

}  // namespace tropgal

#endif  // TROPGAL_MORPHISM_HPP_
