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

#ifndef TROPGAL_GROUP_ACTION_HPP_
#define TROPGAL_GROUP_ACTION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "tropgal/group_table.hpp"
#include "tropgal/morphism.hpp"

namespace tropgal {

/// A length-preserving automorphism of a model: a vertex permutation plus an
/// edge permutation with per-edge orientation flags. Points at infinity map
/// to points at infinity. Validated at construction.
class ModelAutomorphism {
 public:
  struct EdgeTarget {
    int edge = -1;
    bool reversed = false;
  };

  ModelAutomorphism(ModelPtr model, std::vector<int> vertex_perm,
                    std::vector<EdgeTarget> edge_perm);
  static ModelAutomorphism identity(ModelPtr m);

  const ModelPtr& model() const { return model_; }
  int map_vertex(int v) const { return vperm_[v]; }
  const EdgeTarget& map_edge(int e) const { return eperm_[e]; }
  Point map_point(const Point& p) const;

  ModelAutomorphism compose(const ModelAutomorphism& inner) const;  // this ∘ inner
  ModelAutomorphism inverse() const;
  bool is_identity() const;

  /// Deterministic total order (vertex images, then edge images with flags).
  std::vector<int> sort_key() const;
  friend bool operator==(const ModelAutomorphism& a, const ModelAutomorphism& b) {
    return a.model_ == b.model_ && a.vperm_ == b.vperm_ &&
           a.ekey_ == b.ekey_;
  }

  /// The same map as a degree-one finite harmonic morphism model -> model.
  HarmonicMorphism as_morphism() const;

 private:
  ModelPtr model_;
  std::vector<int> vperm_;
  std::vector<EdgeTarget> eperm_;
  std::vector<int> ekey_;  // flattened edge map for comparison
};

/// A finite group of model automorphisms over one model, closed under
/// composition, with a composition table. Elements are kept in a canonical
/// deterministic order.
class FiniteActionGroup {
 public:
  /// Closure of the generators; throws when the closure exceeds `bound`
  /// (default 720) or a generator acts on a different model.
  static FiniteActionGroup generate(ModelPtr model, std::vector<ModelAutomorphism> generators,
                                    std::size_t bound = 720);

  const ModelPtr& model() const { return model_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const ModelAutomorphism& element(int i) const { return elements_[i]; }
  const GroupTable& table() const { return table_; }
  int identity_index() const { return table_.id; }
  int compose(int i, int j) const { return table_.mul[i][j]; }
  int inverse(int i) const { return table_.inv[i]; }

  /// Rebuilds the same abstract group over a refined model. The cut set must
  /// be stable under the action (it is, for equivariant cuts). Preserves
  /// element order.
  FiniteActionGroup transported(const Relocation& reloc) const;

  FiniteActionGroup() = default;  // empty; populate via generate()

 private:
  ModelPtr model_;
  std::vector<ModelAutomorphism> elements_;
  GroupTable table_;
};

std::vector<Subgroup> subgroups(const FiniteActionGroup& g);

Subgroup stabilizer_of_vertex(const FiniteActionGroup& g, int v);
/// Setwise edge stabilizer; on an equivariantly refined model setwise equals
/// pointwise.
Subgroup stabilizer_of_edge(const FiniteActionGroup& g, int e);
Subgroup stabilizer_of_point(const FiniteActionGroup& g, const Point& p);

/// Orbit partition of the vertices (resp. edges) under a subgroup: the class
/// id of every vertex, classes numbered by smallest member, plus the sorted
/// orbit lists.
struct OrbitPartition {
  std::vector<int> class_of;               // item -> class index
  std::vector<std::vector<int>> classes;   // sorted members, classes ordered by min member
};
OrbitPartition vertex_orbits(const FiniteActionGroup& g, const Subgroup& h);
OrbitPartition edge_orbits(const FiniteActionGroup& g, const Subgroup& h);

/// Midpoint subdivision of every edge that is reversed by some element or
/// whose endpoints share a vertex orbit (which would make the quotient a
/// loop). In the result every setwise-fixed edge is fixed pointwise and all
/// quotients by subgroups are loopless.
struct EquivariantRefinement {
  ModelPtr model;
  FiniteActionGroup group;
  Relocation reloc;
  std::vector<Point> cuts;
  bool any_flip = false;
};
EquivariantRefinement equivariant_refinement(const FiniteActionGroup& g);

/// Quotient by a subgroup of an equivariantly refined action. Vertices and
/// edges become orbits, named "[<representative>]"; the quotient length is
/// |H_e| * l(e). The projection validates as a finite harmonic morphism of
/// degree |H| (a failure is a hard logic error).
struct QuotientResult {
  ModelPtr quotient;
  HarmonicMorphism projection;
  std::vector<int> vertex_orbit;  // source vertex -> quotient vertex
  std::vector<int> edge_orbit;    // source edge -> quotient edge
};
QuotientResult quotient(const FiniteActionGroup& g, const Subgroup& h);
QuotientResult quotient(const FiniteActionGroup& g);

/// Definition check for Galois actions: after equivariant refinement the
/// action is Galois iff no nonidentity element fixes an edge pointwise. The
/// exceptional set is carried as the source vertices with nontrivial
/// stabilizers (their projections are the deficient fibers).
struct GaloisActionVerdict {
  bool galois = false;
  std::optional<int> witness_edge;          // pointwise-fixed edge when not Galois
  std::vector<int> stabilized_vertices;     // vertices with nontrivial stabilizer
};
GaloisActionVerdict is_galois_action(const FiniteActionGroup& g);

/// Definition check for G-Galois coverings: the action is Galois and the
/// induced map theta : Gamma/G -> Gamma' (pi_G(y) -> phi(y)) is a degree-one
/// finite harmonic morphism with phi ∘ g = theta ∘ pi_G.
struct GGaloisResult {
  bool verdict = false;
  std::optional<HarmonicMorphism> theta;
  std::string obstruction;
  GaloisActionVerdict action;
};
GGaloisResult is_g_galois(const HarmonicMorphism& phi, const FiniteActionGroup& g);

/// The automorphism of Gamma/H induced by g, when g maps H-orbits to
/// H-orbits; otherwise nullopt plus a broken orbit pair description.
struct DescendResult {
  std::optional<ModelAutomorphism> induced;
  std::string obstruction;
};
DescendResult descends(const FiniteActionGroup& g, int element, const QuotientResult& qh);

}  // namespace tropgal

#endif  // TROPGAL_GROUP_ACTION_HPP_
