// Copyright 2026 The rankforge Authors
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rankforge/actions.hpp"

namespace rankforge {

struct GeneratorSizes {
  std::size_t max_group = 8;
  std::size_t max_points = 6;
  std::size_t max_n = 3;
  std::size_t count = 200;
};

// Parses "g<=8,x<=6,n<=3,count=200"; "≤" and "=" are accepted for "<=".
GeneratorSizes parse_sizes(std::string_view text);
std::string to_string(const GeneratorSizes& sizes);

// A generated finite-discrete system: the group generated by a few
// permutations, optionally with one corrupted cc entry cc(x, G, y, G).
struct GeneratedCase {
  std::size_t points = 0;
  std::vector<Permutation> generators;
  std::optional<std::pair<std::size_t, std::size_t>> mutation;

  // Closes the generators under composition (identity first, then BFS order).
  FiniteDiscreteSpec spec(const BasisSpec& basis) const;
  ActionSystem build(const BasisSpec& basis) const;
  // Compact, space-free description.
  std::string describe() const;
};

// Draws a permutation of 0..n-1 by cutting a shuffled list into cycles.
Permutation random_cycle_permutation(std::mt19937_64& rng, std::size_t n);

// 1-2 generators per system; systems with |G| > max_group are redrawn.
std::vector<GeneratedCase> generate_ensemble(std::uint64_t seed, const GeneratorSizes& sizes);

// Smaller variants of a case: one generator dropped, or one orbit removed.
std::vector<GeneratedCase> shrink_candidates(const GeneratedCase& c);

// Greedy deletion: keeps replacing the case by its first still-failing
// candidate until none fails.
template <typename StillFails>
GeneratedCase shrink(GeneratedCase c, StillFails still_fails) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto& cand : shrink_candidates(c)) {
      if (still_fails(cand)) {
        c = std::move(cand);
        progress = true;
        break;
      }
    }
  }
  return c;
}

// All singletons plus each larger subset with probability 1/4.
BasisSpec random_subbasis(std::mt19937_64& rng, const FiniteDiscreteSpec& spec);

}  // namespace rankforge
