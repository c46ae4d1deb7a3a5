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

#ifndef TROPGAL_RATFUN_HPP_
#define TROPGAL_RATFUN_HPP_

#include <memory>
#include <vector>

#include "tropgal/metric_graph.hpp"

namespace tropgal {

/// One affine piece of a function along an edge: integer slope from `start`
/// (an offset from the edge's v endpoint) to the next piece's start.
struct Piece {
  Rational start;
  long long slope = 0;
};

/// An element of Rat(Γ): a continuous piecewise-affine function with integer
/// slopes over a refinement of the curve's reference model, or the constant
/// -inf. Values are finite away from points at infinity; the value at a point
/// at infinity is determined by the slope of its edge's last piece.
///
/// The representation is canonical: per reference edge, consecutive pieces
/// always carry distinct slopes, so fn_equal is plain structural equality.
class PLFunction {
 public:
  static PLFunction neg_inf(ModelPtr curve);
  static PLFunction constant(ModelPtr curve, const Rational& c);

  /// vertex_values: one per model vertex. Entries at finite vertices must be
  /// finite; entries at points at infinity must match the incident slope
  /// (+inf, -inf, or the finite limit). pieces: per edge, starts ascending
  /// from 0, all interior to the edge. Continuity is validated exactly.
  static PLFunction from_data(ModelPtr curve, const std::vector<ExtRat>& vertex_values,
                              std::vector<std::vector<Piece>> pieces);

  bool is_neg_inf() const { return neg_inf_; }
  const ModelPtr& curve() const { return curve_; }

  /// Value at a finite vertex. Throws for vertices at infinity (use
  /// value_at_vertex) and on the constant -inf function.
  const Rational& finite_vertex_value(int v) const;

  /// Value at any vertex, with points at infinity resolved by slope.
  ExtRat value_at_vertex(int v) const;

  const std::vector<std::vector<Piece>>& pieces() const { return pieces_; }
  const std::vector<Piece>& edge_pieces(int e) const { return pieces_[e]; }

  /// Throws std::logic_error when a representation invariant is broken
  /// (continuity, integer slopes, canonical piece lists). Used by tests.
  void check_invariants() const;

 private:
  PLFunction() = default;
  friend struct FnOps;

  ModelPtr curve_;
  bool neg_inf_ = false;
  std::vector<Rational> vertex_values_;        // finite vertices only
  std::vector<std::vector<Piece>> pieces_;     // per edge
};

/// (f ⊕ g)(x) = max(f(x), g(x)), exact crossings, canonical result.
PLFunction trop_add_fn(const PLFunction& f, const PLFunction& g);
/// (f ⊙ g)(x) = f(x) + g(x); -inf absorbs.
PLFunction trop_mul_fn(const PLFunction& f, const PLFunction& g);
/// Pointwise negation; the ⊙-inverse. Throws on the constant -inf.
PLFunction trop_inv_fn(const PLFunction& f);
/// Pointwise min (derived helper: -max(-f, -g)).
PLFunction trop_min_fn(const PLFunction& f, const PLFunction& g);

ExtRat evaluate(const PLFunction& f, const Point& p);
bool fn_equal(const PLFunction& f, const PLFunction& g);

/// Canonical form. All operations already return canonical representations,
/// so this is the identity on their outputs; it re-canonicalizes a function
/// assembled from raw data.
PLFunction simplify(const PLFunction& f);

/// x ↦ dist(x, s) as a PLFunction with slopes in {-1, 0, +1}, zero exactly
/// on s. Errors: empty subgraph, or a connected component of s that is a
/// single point at infinity.
PLFunction distance_to_subgraph(const ModelPtr& m, const Subgraph& s);

/// The chip-firing move CF(s, l)(x) = -min(l, dist(x, s)); l > 0 or +inf.
PLFunction chip_firing(const ModelPtr& m, const Subgraph& s, const ExtRat& l);

/// Transports f from reloc.from to the refined model reloc.to.
PLFunction rebase(const PLFunction& f, const Relocation& reloc);

}  // namespace tropgal

#endif  // TROPGAL_RATFUN_HPP_
