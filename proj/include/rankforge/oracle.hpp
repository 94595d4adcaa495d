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
#include <map>
#include <span>
#include <vector>

#include "rankforge/action_system.hpp"
#include "rankforge/structures.hpp"

// Brute-force reference implementations. They read systems and structures
// only through their public accessors and share no code with the engines.
namespace rankforge::oracle {

// Literal recursion of the level definition, memoized per level.
class NaiveLeq {
 public:
  explicit NaiveLeq(const ActionSystem& sys, unsigned max_depth = 32);

  bool operator()(std::size_t x0, std::size_t v0, std::size_t x1, std::size_t v1,
                  unsigned level);

 private:
  const ActionSystem& sys_;
  unsigned max_depth_;
  std::vector<std::vector<std::size_t>> below_;
  std::vector<std::vector<std::int8_t>> memo_;
};

bool naive_leq(const ActionSystem& sys, std::size_t x0, std::size_t v0, std::size_t x1,
               std::size_t v1, unsigned level);

// Literal back-and-forth game recursion between two finite structures.
class NaiveScott {
 public:
  NaiveScott(const Structure& m, const Structure& n);

  bool operator()(const Tuple& a, const Tuple& b, unsigned level);

 private:
  bool atomic_match(const Tuple& a, const Tuple& b) const;

  const Structure& m_;
  const Structure& n_;
  std::map<std::pair<Tuple, Tuple>, std::vector<std::int8_t>> memo_;
};

bool naive_scott(const Structure& m, std::span<const Element> a, const Structure& n,
                 std::span<const Element> b, unsigned level);

struct OrbitPartition {
  std::vector<std::size_t> orbit_of;
  std::vector<Bitset> orbits;
};

OrbitPartition orbit_partition(const ActionSystem& sys);
// Every union of orbits; throws kBudget past max_orbits orbits.
std::vector<Bitset> invariant_sets(const ActionSystem& sys, std::size_t max_orbits = 4);

}  // namespace rankforge::oracle
