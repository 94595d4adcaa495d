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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rankforge/action_system.hpp"
#include "rankforge/structures.hpp"

namespace rankforge {

enum class BasisKind { kAllSubsets, kSingletonsPlusG, kExplicit };

struct BasisSpec {
  BasisKind kind = BasisKind::kAllSubsets;
  // Element labels of each set, for kExplicit.
  std::vector<std::vector<std::string>> sets;

  friend bool operator==(const BasisSpec&, const BasisSpec&) = default;
};

// "all-subsets", "singletons+G" or "sets: {e,s} {e}".
BasisSpec parse_basis_spec(std::string_view text);
std::string to_string(const BasisSpec& spec);

// A finite group acting on 0..size-1 by the listed permutations.
struct FiniteDiscreteSpec {
  std::size_t size = 0;
  std::vector<std::string> labels;
  std::vector<Permutation> perms;
  BasisSpec basis;
};

FiniteDiscreteSpec parse_action_file(std::string_view text);
std::string serialize(const FiniteDiscreteSpec& spec);

// cc(x0,V0,x1,V1) is V0.x0 subset-of V1.x1. Throws kInvalidSystem if the
// elements are not a group and kBudget past the group limit.
ActionSystem build_finite_discrete(const FiniteDiscreteSpec& spec,
                                   std::size_t max_group = 16);

// Partial injection a -> b, stored as pairs sorted by domain entry.
struct CosetDescriptor {
  std::vector<std::pair<Element, Element>> graph;

  Tuple from() const;
  Tuple to() const;
  std::string label() const;

  friend bool operator==(const CosetDescriptor&, const CosetDescriptor&) = default;
  friend auto operator<=>(const CosetDescriptor&, const CosetDescriptor&) = default;
};

// Throws kUsage unless a and b are injective tuples of equal length.
CosetDescriptor make_descriptor(std::span<const Element> a, std::span<const Element> b);

// A logic action: the points are structures, the basis elements are the
// cosets V_{a,b} = {sigma : sigma(a) = b}.
struct LogicAction {
  ActionSystem system;
  std::vector<Structure> structures;
  // One descriptor per basis element (the first one enumerated).
  std::vector<CosetDescriptor> descriptors;
  // Every enumerated descriptor to its basis element.
  std::map<CosetDescriptor, std::size_t> basis_of;

  std::optional<std::size_t> point_of(const Structure& m) const;
  std::optional<std::size_t> basis_index(std::span<const Element> a,
                                         std::span<const Element> b) const;
};

struct LogicLimits {
  std::size_t max_n = 6;
  std::size_t max_points = 4096;
  std::size_t max_support = 3;
  std::size_t max_k = 3;
};

// S_n acting on structures over 0..n-1. The points are the orbits of `seeds`
// (all structures of the signature when `seeds` is empty); the basis is every
// nonempty V_{a,b} with injective a, b of length <= k, deduplicated as sets of
// permutations. contains is set inclusion, cc is inclusion of V.M sets.
LogicAction build_finite_logic(const Signature& signature, std::size_t n,
                               std::size_t k, const std::vector<Structure>& seeds = {},
                               const LogicLimits& limits = {});

// S_infinity acting on structures supported in 0..s-1, points as given. The
// basis is V_{a,b} for injective a, b over 0..s-1 of length <= k;
// V' contains-in V iff graph(V) subset-of graph(V'). cc is closure inclusion,
// decided through existential theories over representative coset members.
LogicAction build_symbolic_logic(const Signature& signature, std::size_t s,
                                 std::size_t k, const std::vector<Structure>& points,
                                 const LogicLimits& limits = {});

// All structures of the signature on n elements, in lexicographic fact order.
std::vector<Structure> all_structures(const Signature& signature, std::size_t n,
                                      std::size_t max_count = 1u << 20);

// Scott stabilized equivalence of (M,a) and (N,a') implies
// (M,V_{a,b}) <=_STAB (N,V_{a',b}).
struct ComparisonOutcome {
  bool scott_hypothesis = false;
  bool hjorth_conclusion = false;
  bool holds() const { return !scott_hypothesis || hjorth_conclusion; }
};

// Finite logic only (the symbolic window has no Scott table); the pair is
// evaluated in the system generated by the orbits of m and n.
ComparisonOutcome scott_hjorth_comparison(const Structure& m, std::span<const Element> a,
                                          const Structure& n, std::span<const Element> a2,
                                          std::span<const Element> b, std::size_t k);

// Exhaustive scan over structures on n elements and injective tuples of
// length <= max_len. M runs over orbit representatives: relabeling M and a
// together leaves V_{a,b}.M unchanged.
struct ComparisonScan {
  std::size_t structures = 0;
  std::size_t orbits = 0;
  std::size_t cases = 0;
  std::size_t hypothesis_true = 0;
  std::size_t counterexamples = 0;
  unsigned scott_stab = 0;
  // (Scott level reached, Hjorth level reached) -> count; "none" when even
  // the first level fails, "STAB" when the stabilized relation holds.
  std::map<std::pair<std::string, std::string>, std::size_t> levels;
  std::vector<std::string> witnesses;
};
ComparisonScan comparison_scan(const Signature& signature, std::size_t n,
                               std::size_t max_len, const LogicLimits& limits = {});

// Bit <k,l> (diagonal order of the |B| x |X| rectangle) is set iff V_k.x
// meets the point l.
std::vector<bool> encode_action_trace(const ActionSystem& sys, std::size_t x);
std::size_t diagonal_index(std::size_t k, std::size_t l, std::size_t rows,
                           std::size_t cols);

// Entries where the stabilized relation of a symbolic system differs from
// the same entries computed over the enlarged window (s+1, k+1).
struct DriftEntry {
  std::size_t x0, v0, x1, v1;
  bool base, enlarged;
};
std::vector<DriftEntry> symbolic_drift(const Signature& signature, std::size_t s,
                                       std::size_t k, const std::vector<Structure>& points,
                                       const LogicLimits& limits = {});

}  // namespace rankforge
