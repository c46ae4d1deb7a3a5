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

#include "tropgal/tropical.hpp"

#include <set>

namespace tropgal {

bool scaling_orbit_distinct(const Rational& lambda, const TropScalar& s, unsigned k) {
  if (lambda <= 0) throw std::invalid_argument("scaling_orbit_distinct: lambda must be positive");
  if (!s.is_finite() || s.raw().value() == 0) {
    throw std::invalid_argument("scaling_orbit_distinct: s must be finite and nonzero");
  }
  std::set<Rational> seen;
  Rational cur = s.raw().value();
  for (unsigned i = 0; i < k; ++i) {
    if (!seen.insert(cur).second) return false;
    cur *= lambda;
  }
  return true;
}

}  // namespace tropgal
