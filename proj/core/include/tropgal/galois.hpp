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

#ifndef TROPGAL_GALOIS_HPP_
#define TROPGAL_GALOIS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropgal/group_action.hpp"

namespace tropgal {

/// The action of g on Rat(Γ): f ↦ f ∘ g⁻¹ (left action). A semifield
/// automorphism fixing constants.
PLFunction act_on_fn(const ModelAutomorphism& g, const PLFunction& f);

/// True iff every element of h fixes f (fn_equal after acting).
bool is_invariant(const PLFunction& f, const FiniteActionGroup& g, const Subgroup& h);

/// {g : g·f = f}; always a subgroup.
Subgroup function_stabilizer(const PLFunction& f, const FiniteActionGroup& g);

/// ⊕ (mode Max) or ⊙ (mode Sum) of the h-orbit of f; the result is
/// h-invariant.
enum class SymmetrizeMode { Max, Sum };
PLFunction symmetrize(const PLFunction& f, const FiniteActionGroup& g, const Subgroup& h,
                      SymmetrizeMode mode);

/// A rational function whose stabilizer in g is exactly h: the pull-back
/// along pi_h of a small chip-firing move at a 2-valent point of Γ/h. The
/// point is the midpoint of a seed-selected quotient edge (offset 1 on an
/// infinite edge); epsilon is half the distance to the nearest point of
/// valence != 2 (+inf on homogeneous curves). Requires the action of g to be
/// Galois (throws std::domain_error otherwise) and a non-singleton curve.
PLFunction witness_for_subgroup(const FiniteActionGroup& g, const Subgroup& h,
                                std::uint64_t seed);

/// A function invariant under exactly one of h1, h2, when one exists.
/// Equality of the invariant subsemifields is decided exactly: on an
/// equivariantly refined model (no flips, no orbit-loops) two subgroups have
/// equal invariant semifields iff their vertex and edge orbit partitions
/// coincide. When partitions differ, a chip-firing separator on the smaller
/// orbit is produced and machine-verified.
struct SeparatorResult {
  std::optional<PLFunction> separator;
  int invariant_under = -1;  // 0 = h1 only, 1 = h2 only
  std::string note;          // explanation when no separator exists
};
SeparatorResult separating_function(const FiniteActionGroup& g, const Subgroup& h1,
                                    const Subgroup& h2);

/// Geometric proxies for the normal-subgroup characterization.
struct NormalityReport {
  bool table_normal = false;
  bool all_descend = false;
  std::string first_obstruction;
  std::optional<std::size_t> induced_order;  // distinct induced automorphisms of Γ/h
  std::size_t expected_quotient_order = 0;   // |g| / |h|
  bool order_matches = false;                // induced_order == expected (when defined)
  std::size_t orbit_kernel_order = 0;        // elements inducing the identity on Γ/h
  bool kernel_identity_ok = false;           // induced_order * kernel == |g|
  bool consistent = false;                   // table_normal == all_descend
};
NormalityReport normality_report(const FiniteActionGroup& g, const Subgroup& h);

/// A prepared (curve, action, covering) triple over one equivariantly
/// refined working model.
struct Instance {
  std::string name;
  FiniteActionGroup group;
  std::optional<HarmonicMorphism> phi;  // absent when the morphism is not action-compatible
  bool phi_is_projection = true;
  std::string phi_incompatibility;       // set when phi was rejected (phi ∘ g != phi)
  std::optional<QuotientResult> full_quotient;  // always set by prepare_instance
  Relocation from_input;                 // input model -> working model
};

/// Builds the working model: equivariant refinement, then (for an external
/// morphism) the fiber-closed refinement, with the group and morphism
/// transported. An external morphism must act on the loaded curve model.
Instance prepare_instance(const ModelPtr& curve, const std::vector<ModelAutomorphism>& generators,
                          const std::optional<HarmonicMorphism>& phi, std::size_t bound = 720);

/// Machine-checkable evidence bundle for the Galois correspondence on one
/// instance.
struct GaloisCertificate {
  struct SubgroupRecord {
    std::string name;
    Subgroup elements;
    std::vector<std::pair<std::string, std::string>> quotient_edge_lengths;
    bool witness_built = false;
    std::string witness_note;
    std::string witness_fn_text;  // function file text, reproducible from the seed
    Subgroup witness_stabilizer;
    bool round_trip_ok = false;
  };
  struct SeparationRecord {
    int h1 = 0;
    int h2 = 0;
    bool separated = false;
    std::string detail;
  };
  struct Counterexample {
    std::string kind;  // "divisibility" | "fiber" | "pullback-not-invariant" | "sample"
    std::string detail;
  };

  std::string curve_name;
  std::uint64_t seed = 0;
  int n_samples = 0;
  int group_order = 0;
  bool action_galois = false;
  std::optional<std::string> action_witness_edge;
  std::vector<std::string> exceptional_set;
  bool g_galois = false;
  std::string g_galois_obstruction;
  std::vector<SubgroupRecord> subgroup_records;
  std::vector<SeparationRecord> separations;
  bool all_separated = false;
  std::optional<std::pair<int, int>> separation_failure;
  std::optional<Counterexample> pullback_counterexample;
  int membership_probes = 0;
  int membership_samples = 0;
  int invariance_samples = 0;
  bool invariant_extension_galois = false;  // the Rat(Γ)/Rat(Γ)^G verdict
  bool overall = false;                     // the Rat(Γ)/phi*(Rat(Γ')) verdict

  /// Stable JSON, schema "tropgal-cert/1"; byte-identical for identical
  /// (input, seed, version).
  std::string to_json_string(int indent = 2) const;
};

GaloisCertificate correspondence_certificate(const Instance& inst, std::uint64_t seed,
                                             int n_samples);

/// Convenience overload matching the operation signature: phi and g must
/// already live on one (equivariantly refined) model.
GaloisCertificate correspondence_certificate(const HarmonicMorphism& phi,
                                             const FiniteActionGroup& g, std::uint64_t seed,
                                             int n_samples);

}  // namespace tropgal

#endif  // TROPGAL_GALOIS_HPP_
