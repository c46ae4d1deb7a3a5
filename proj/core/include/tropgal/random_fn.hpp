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

#ifndef TROPGAL_RANDOM_FN_HPP_
#define TROPGAL_RANDOM_FN_HPP_

#include <cstdint>

#include "tropgal/ratfun.hpp"

namespace tropgal {

/// splitmix64: tiny, deterministic, platform-independent. All sampling in the
/// toolkit goes through this so outputs are reproducible bit for bit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
  long long int_in(long long lo, long long hi) {  // inclusive bounds
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

/// Seeded random element of Rat(Γ): random half-integer vertex values joined
/// by two-slope paths per edge (exact integer slopes), random tails on
/// infinite edges, optionally ⊕-combined with a randomly placed scaled
/// chip-firing move. Deterministic given (curve, seed).
PLFunction random_fn(const ModelPtr& m, std::uint64_t seed);

/// Random finite point: a finite vertex or an eighth-fraction interior point.
Point random_point(const ModelPtr& m, Rng& rng);

/// Random interior (non-vertex, non-infinity) point.
Point random_interior_point(const ModelPtr& m, Rng& rng);

}  // namespace tropgal

#endif  // TROPGAL_RANDOM_FN_HPP_
