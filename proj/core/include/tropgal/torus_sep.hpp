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

#ifndef TROPGAL_TORUS_SEP_HPP_
#define TROPGAL_TORUS_SEP_HPP_

#include <vector>

#include "tropgal/group_table.hpp"
#include "tropgal/tropical.hpp"

namespace tropgal {

/// A point of (T \ {0})^n = Q^n: all coordinates finite.
struct TorusPoint {
  std::vector<Rational> coords;

  friend bool operator==(const TorusPoint& a, const TorusPoint& b) { return a.coords == b.coords; }
};

/// A finite point set V with a finite group acting by permutations of V,
/// optionally induced from coordinate permutations.
class PointSetAction {
 public:
  /// perms: permutations of V given directly (images of each index).
  static PointSetAction from_point_perms(std::vector<TorusPoint> points,
                                         std::vector<std::vector<int>> perms);

  /// coord_perms: 0-based images of the n coordinate slots. Each induced map
  /// u ↦ (u_{p⁻¹(1)}, …) must permute V. The group is closed over the
  /// generators.
  static PointSetAction from_coordinate_perms(std::vector<TorusPoint> points,
                                              const std::vector<std::vector<int>>& coord_perms);

  const std::vector<TorusPoint>& points() const { return points_; }
  std::size_t dimension() const { return points_.empty() ? 0 : points_[0].coords.size(); }
  int size() const { return table_.size(); }
  const GroupTable& table() const { return table_; }
  int apply(int element, int point) const { return perms_[element][point]; }

 private:
  std::vector<TorusPoint> points_;
  std::vector<std::vector<int>> perms_;  // canonical element order
  GroupTable table_;
};

/// f_v(u) = -Σ_i |u_i - v_i|: zero iff u = v, negative otherwise. Per
/// coordinate the tropical form max(u_i - v_i, v_i - u_i) is an exact
/// absolute value; the coordinates combine by ⊙ (classical sum) and the
/// result is inverted (negated).
TropScalar separator_value(const TorusPoint& v, const TorusPoint& u);

/// The table u ↦ max_{h ∈ H} separator_value(h(v), u) over V: zero exactly
/// on the orbit Hv.
std::vector<TropScalar> subgroup_separator(const PointSetAction& a, const Subgroup& h, int v);

/// {g : f_H ∘ g⁻¹ = f_H as tables on V}; the final-proposition conclusion is
/// that this equals h whenever the stabilizer of v is trivial (checked as a
/// precondition; throws std::domain_error otherwise).
Subgroup separator_stabilizer(const PointSetAction& a, const Subgroup& h, int v);

}  // namespace tropgal

#endif  // TROPGAL_TORUS_SEP_HPP_
