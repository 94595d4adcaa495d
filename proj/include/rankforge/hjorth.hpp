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

#include <compare>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rankforge/action_system.hpp"
#include "rankforge/level.hpp"

namespace rankforge {

struct Rank {
  unsigned value = 0;
  unsigned stabilized_at = 0;

  friend bool operator==(const Rank&, const Rank&) = default;
};

struct EngineLimits {
  std::size_t table_bits = kDefaultTableBits;
};

// The stratified tables T_1 ⊇ T_2 ⊇ ... realizing the relations
// (x0,V0) <=_a (x1,V1) over basis elements.
//
// T_1 is cc. T_{a+1}(x0,V0,x1,V1) holds iff every basis W0 inside V0 admits
// a basis W1 inside V1 with T_a(x1,W1,x0,W0). Each sweep checks
// T_{a+1} ⊆ T_a and aborts with kInvalidBaseRelation otherwise.
class LevelTable {
 public:
  LevelTable(const ActionSystem& sys, std::optional<unsigned> max_level,
             EngineLimits limits = {});

  bool stabilized() const { return stabilized_; }
  // Least a with T_{a+1} = T_a. Throws kUsage if not stabilized.
  unsigned stab() const;
  // Highest level held in memory (levels start at 1).
  unsigned top_level() const { return static_cast<unsigned>(right_.size()); }

  bool leq(std::size_t x0, std::size_t v0, std::size_t x1, std::size_t v1,
           Level level) const;
  // {V1 : T(x0,V0,x1,V1)}
  const Bitset& right_row(Level level, std::size_t x0, std::size_t v0,
                          std::size_t x1) const;
  // {Vl : T(xl,Vl,xr,Vr)}
  const Bitset& left_row(Level level, std::size_t xl, std::size_t xr,
                         std::size_t vr) const;

 private:
  unsigned resolve(Level level) const;

  std::size_t num_points_;
  std::size_t num_basis_;
  std::vector<std::vector<Bitset>> right_;
  std::vector<std::vector<Bitset>> left_;
  bool stabilized_ = false;
  unsigned stab_ = 0;
};

struct FixedPointSets {
  Bitset direct;
  Bitset via_leq;
  bool applicable = true;
};

struct RankPart {
  unsigned rank;
  Bitset points;
};

// An action system together with its level table and point ranks.
class HjorthAnalysis {
 public:
  explicit HjorthAnalysis(ActionSystem sys,
                          std::optional<unsigned> max_level = std::nullopt,
                          EngineLimits limits = {});

  const ActionSystem& system() const { return sys_; }
  const LevelTable& table() const { return table_; }

  bool leq(std::size_t x0, std::size_t v0, std::size_t x1, std::size_t v1,
           Level level) const;
  bool equiv(std::size_t x, std::size_t y, Level level) const;

  Rank rank(std::size_t x) const;
  // Levels a <= stab at which the rank condition holds for x.
  std::vector<unsigned> rank_condition_profile(std::size_t x) const;
  std::strong_ordering compare_ranks(std::size_t x, std::size_t y) const;
  std::vector<RankPart> partition_by_rank() const;

  // equiv at max(rank x, rank y) + 1.
  bool orbit_check_via_rank(std::size_t x, std::size_t y) const;
  // Least m with {y : y equiv_{rank(x)+m} x} equal to the orbit of x.
  std::optional<unsigned> minimal_m(std::size_t x) const;
  Bitset orbit(std::size_t x) const;

  // y in (V.x)^{*W} computed from the action, and T_STAB(y,W,x,V).
  std::pair<bool, bool> star_orbit_equivalence_check(std::size_t y, std::size_t w,
                                                     std::size_t x,
                                                     std::size_t v) const;
  // {x : some g in U fixes x}, directly and through the stabilized relation.
  FixedPointSets fixed_point_set(const Bitset& u) const;

 private:
  bool rank_condition(std::size_t x, unsigned level) const;

  ActionSystem sys_;
  LevelTable table_;
  std::vector<Rank> ranks_;
};

// Per-point |rank under a - rank under b|; systems must share their points.
std::vector<unsigned> basis_shift_check(const HjorthAnalysis& a,
                                        const HjorthAnalysis& b);

// Category-quantifier transforms at finite-discrete scale, U a subset of G:
// star = {x : every g in U has g.x in A}, delta = {x : some g in U has g.x in A}.
Bitset vaught_star(const ActionSystem& sys, const Bitset& a, const Bitset& u);
Bitset vaught_delta(const ActionSystem& sys, const Bitset& a, const Bitset& u);

}  // namespace rankforge
