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

// Independent brute-force oracles. These never call the library's search or
// construction routines for the quantity they check: distances come from
// exhaustive simple-path enumeration, subgroups from subset enumeration,
// push-forward values from explicit fiber sums.

#ifndef TROPGAL_TESTS_ORACLES_HPP_
#define TROPGAL_TESTS_ORACLES_HPP_

#include <vector>

#include "tropgal/group_table.hpp"
#include "tropgal/morphism.hpp"

namespace oracle {

/// Shortest-path distance by enumerating every simple vertex path of a
/// refinement at the query points.
tropgal::ExtRat distance(const tropgal::ModelPtr& m, const tropgal::Point& p,
                         const tropgal::Point& q);

/// dist(x, s): zero inside s, else the minimum path-enumeration distance to
/// an interval endpoint or covered vertex of s.
tropgal::ExtRat dist_to_subgraph(const tropgal::ModelPtr& m, const tropgal::Subgraph& s,
                                 const tropgal::Point& x);

/// Every closed subset of the composition table (feasible for |G| <= 16).
std::vector<tropgal::Subgroup> subgroups_by_subsets(const tropgal::GroupTable& t);

/// phi_*(f) at a target point by explicit fiber-sum evaluation.
tropgal::ExtRat pushforward_value(const tropgal::HarmonicMorphism& phi,
                                  const tropgal::PLFunction& f, const tropgal::Point& target);

/// |phi^{-1}(target)| by direct preimage enumeration.
int fiber_size(const tropgal::HarmonicMorphism& phi, const tropgal::Point& target);

/// Preimages of a target point, one per covering source edge / fiber vertex.
std::vector<tropgal::Point> fiber_points(const tropgal::HarmonicMorphism& phi,
                                         const tropgal::Point& target);

}  // namespace oracle

#endif  // TROPGAL_TESTS_ORACLES_HPP_
