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

#ifndef TROPGAL_GROUP_TABLE_HPP_
#define TROPGAL_GROUP_TABLE_HPP_

#include <cstddef>
#include <vector>

namespace tropgal {

/// A subgroup as a sorted list of element indices.
using Subgroup = std::vector<int>;

/// Finite group given by its composition table. mul[i][j] is the index of
/// element i composed after j (i ∘ j).
struct GroupTable {
  std::vector<std::vector<int>> mul;
  std::vector<int> inv;
  int id = 0;

  int size() const { return static_cast<int>(mul.size()); }
};

/// Smallest subgroup containing the seed elements.
Subgroup closure(const GroupTable& t, std::vector<int> seed);

/// Every subgroup, deduplicated, ordered by (order, lexicographic indices).
/// Includes the trivial subgroup and the full group.
std::vector<Subgroup> all_subgroups(const GroupTable& t);

bool is_normal_subgroup(const GroupTable& t, const Subgroup& h);
bool subgroup_contains(const Subgroup& h, int g);

}  // namespace tropgal

#endif  // TROPGAL_GROUP_TABLE_HPP_
