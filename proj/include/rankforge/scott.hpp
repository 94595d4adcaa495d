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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "rankforge/level.hpp"
#include "rankforge/structures.hpp"

namespace rankforge {

struct ScottRank {
  unsigned value = 0;
  unsigned stabilized_at = 0;
};

// Back-and-forth equivalence levels for every tuple of every structure in a
// family, computed by level-synchronous partition refinement.
//
// Tuples of length 0..L are tabulated, where L is the largest universe in the
// family. A longer tuple always repeats an entry, and a repeated entry can be
// dropped without changing the class as long as the repetition pattern is
// kept; extensions past length L are resolved that way, so the table is exact
// for tuples of every length.
class ScottTable {
 public:
  explicit ScottTable(std::vector<Structure> family);

  const std::vector<Structure>& family() const { return family_; }
  std::size_t max_length() const { return max_length_; }
  // Least level whose partition equals the next one.
  unsigned stab() const { return stab_; }

  std::size_t tuple_count(std::size_t structure, std::size_t length) const;
  // Tuple with the given lexicographic index among tuples of that length.
  Tuple tuple_at(std::size_t structure, std::size_t length, std::size_t index) const;

  // Block id at a level; levels past stab resolve to stab. Tuples must have
  // length <= max_length().
  std::uint32_t block(std::size_t structure, std::span<const Element> tuple,
                      Level level) const;
  std::size_t block_count(Level level) const;

  // (family[s1], t1) equivalent to (family[s2], t2) at the level. Any tuple
  // length is accepted.
  bool equivalent(std::size_t s1, std::span<const Element> t1, std::size_t s2,
                  std::span<const Element> t2, Level level) const;

 private:
  std::size_t global_index(std::size_t structure, std::span<const Element> t) const;
  void build_level_zero();
  bool refine();
  const std::vector<std::pair<std::uint64_t, std::size_t>>& extensions(std::size_t n);

  std::vector<Structure> family_;
  std::size_t max_length_ = 0;
  // offsets_[s][len] = first global index of tuples of that length.
  std::vector<std::vector<std::size_t>> offsets_;
  std::size_t total_ = 0;
  std::vector<std::vector<std::uint32_t>> levels_;
  std::vector<std::size_t> counts_;
  unsigned stab_ = 0;
  std::map<std::size_t, std::vector<std::pair<std::uint64_t, std::size_t>>> extensions_;
};

bool scott_equiv(const Structure& m, std::span<const Element> a,
                 const Structure& n, std::span<const Element> b, Level level);
ScottTable scott_table(std::vector<Structure> family);
ScottRank scott_rank(const Structure& m);
// Stabilized equivalence of the empty tuples.
bool scott_iso_check(const Structure& m, const Structure& n);
// Least level at which the empty tuples of m and n separate, if any.
std::optional<unsigned> scott_distinguishing_level(const Structure& m,
                                                   const Structure& n);

}  // namespace rankforge
