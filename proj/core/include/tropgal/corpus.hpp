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

#ifndef TROPGAL_CORPUS_HPP_
#define TROPGAL_CORPUS_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace tropgal {

/// A reproducible (curve file, action file, expected verdict) triple. The
/// fixed members cover the two figure examples, the free rotation on a
/// 2-cycle, a folded path, and an infinite-edge pair; three seeded rotation
/// and reflection families follow.
struct CorpusInstance {
  std::string name;
  std::string curve_text;
  std::string action_text;
  bool expected_galois = false;
};

std::vector<CorpusInstance> build_corpus(std::uint64_t seed);

/// Full certificate run over the corpus as one stable JSON document
/// ("tropgal-corpus/1"); byte-identical for identical (seed, samples).
std::string run_corpus_json(std::uint64_t seed, int n_samples);

}  // namespace tropgal

#endif  // TROPGAL_CORPUS_HPP_
