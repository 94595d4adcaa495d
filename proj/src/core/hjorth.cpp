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

#include "rankforge/hjorth.hpp"

#include <map>
#include <set>

#include "rankforge/error.hpp"

namespace rankforge {

LevelTable::LevelTable(const ActionSystem& sys, std::optional<unsigned> max_level,
                       EngineLimits limits)
    : num_points_(sys.num_points()), num_basis_(sys.num_basis()) {
  const std::size_t nx = num_points_;
  const std::size_t nb = num_basis_;
  const long double bits = static_cast<long double>(nx) * nx * nb * nb;
  if (bits > static_cast<long double>(limits.table_bits)) {
    fail(ErrorCode::kBudget, "level table needs " + std::to_string(nx) + "^2 * " +
                                 std::to_string(nb) + "^2 bits, budget is " +
                                 std::to_string(limits.table_bits));
  }
  if (max_level && *max_level == 0) fail(ErrorCode::kUsage, "max level must be >= 1");

  auto transpose = [&](const std::vector<Bitset>& right) {
    std::vector<Bitset> left(nx * nx * nb, Bitset(nb));
    for (std::size_t xl = 0; xl < nx; ++xl) {
      for (std::size_t vl = 0; vl < nb; ++vl) {
        for (std::size_t xr = 0; xr < nx; ++xr) {
          right[(xl * nb + vl) * nx + xr].for_each(
              [&](std::size_t vr) { left[(xl * nx + xr) * nb + vr].set(vl); });
        }
      }
    }
    return left;
  };

  right_.push_back(sys.parts().cc_rows);
  left_.push_back(transpose(right_.back()));

  std::vector<Bitset> closed(nb, Bitset(nb));
  while (!max_level || top_level() < *max_level) {
    const auto& cur_right = right_.back();
    const auto& cur_left = left_.back();
    std::vector<Bitset> next(nx * nb * nx, Bitset(nb));
    for (std::size_t x0 = 0; x0 < nx; ++x0) {
      for (std::size_t x1 = 0; x1 < nx; ++x1) {
        // closed[W0] = {V1 : some W1 inside V1 has T(x1,W1,x0,W0)}
        for (std::size_t w0 = 0; w0 < nb; ++w0) {
          Bitset& c = closed[w0];
          c.clear();
          cur_left[(x1 * nx + x0) * nb + w0].for_each(
              [&](std::size_t w1) { c |= sys.up(w1); });
        }
        for (std::size_t v0 = 0; v0 < nb; ++v0) {
          Bitset& row = next[(x0 * nb + v0) * nx + x1];
          row.fill();
          sys.down(v0).for_each([&](std::size_t w0) { row &= closed[w0]; });
        }
      }
    }
    bool same = true;
    for (std::size_t i = 0; i < next.size(); ++i) {
      if (next[i] == cur_right[i]) continue;
      same = false;
      if (!next[i].is_subset_of(cur_right[i])) {
        const std::size_t x1 = i % nx;
        const std::size_t v0 = (i / nx) % nb;
        const std::size_t x0 = i / nx / nb;
        const std::size_t v1 = (next[i] - cur_right[i]).indices().front();
        fail(ErrorCode::kInvalidBaseRelation,
             "invalid base relation: T_" + std::to_string(top_level() + 1) +
                 " not contained in T_" + std::to_string(top_level()) + " at (" +
                 sys.point_label(x0) + "," + sys.basis_label(v0) + "," +
                 sys.point_label(x1) + "," + sys.basis_label(v1) + ")");
      }
    }
    if (same) {
      stabilized_ = true;
      stab_ = top_level();
      break;
    }
    left_.push_back(transpose(next));
    right_.push_back(std::move(next));
  }
}

unsigned LevelTable::stab() const {
  if (!stabilized_) fail(ErrorCode::kUsage, "level table did not stabilize");
  return stab_;
}

unsigned LevelTable::resolve(Level level) const {
  if (level.is_stabilized()) return stab();
  if (level.value() == 0) fail(ErrorCode::kUsage, "Hjorth levels start at 1");
  if (level.value() <= top_level()) return level.value();
  if (stabilized_) return stab_;
  fail(ErrorCode::kUsage, "level " + level.to_string() + " beyond computed range");
}

bool LevelTable::leq(std::size_t x0, std::size_t v0, std::size_t x1,
                     std::size_t v1, Level level) const {
  if (x0 >= num_points_ || x1 >= num_points_ || v0 >= num_basis_ || v1 >= num_basis_) {
    fail(ErrorCode::kRange, "unknown point or basis index");
  }
  return right_row(level, x0, v0, x1).test(v1);
}

const Bitset& LevelTable::right_row(Level level, std::size_t x0, std::size_t v0,
                                    std::size_t x1) const {
  return right_[resolve(level) - 1][(x0 * num_basis_ + v0) * num_points_ + x1];
}

const Bitset& LevelTable::left_row(Level level, std::size_t xl, std::size_t xr,
                                   std::size_t vr) const {
  return left_[resolve(level) - 1][(xl * num_points_ + xr) * num_basis_ + vr];
}

HjorthAnalysis::HjorthAnalysis(ActionSystem sys, std::optional<unsigned> max_level,
                               EngineLimits limits)
    : sys_(std::move(sys)), table_(sys_, max_level, limits) {
  if (!table_.stabilized()) return;
  for (std::size_t x = 0; x < sys_.num_points(); ++x) {
    std::optional<unsigned> found;
    for (unsigned a = 1; a <= table_.stab() && !found; ++a) {
      if (rank_condition(x, a)) found = a;
    }
    if (!found) {
      fail(ErrorCode::kInvalidBaseRelation,
           "invalid base relation: rank condition fails at every level for point " +
               sys_.point_label(x));
    }
    ranks_.push_back({*found, table_.stab()});
  }
}

bool HjorthAnalysis::leq(std::size_t x0, std::size_t v0, std::size_t x1,
                         std::size_t v1, Level level) const {
  return table_.leq(x0, v0, x1, v1, level);
}

bool HjorthAnalysis::equiv(std::size_t x, std::size_t y, Level level) const {
  if (x >= sys_.num_points() || y >= sys_.num_points()) {
    fail(ErrorCode::kRange, "unknown point index");
  }
  for (std::size_t v = 0; v < sys_.num_basis(); ++v) {
    if (table_.left_row(level, y, x, v).none()) return false;
    if (table_.left_row(level, x, y, v).none()) return false;
  }
  return true;
}

bool HjorthAnalysis::rank_condition(std::size_t x, unsigned level) const {
  // For every W0: each V1 reachable from some V0 finely containing W0 must
  // have every fine enlargement W1 in T_{a+1}(x,W0,x,.).
  const Level cur = Level::at(level);
  const Level next = Level::at(level + 1);
  Bitset reach(sys_.num_basis());
  for (std::size_t w0 = 0; w0 < sys_.num_basis(); ++w0) {
    reach.clear();
    for (std::size_t v0 = 0; v0 < sys_.num_basis(); ++v0) {
      if (sys_.fine(w0, v0)) reach |= table_.right_row(cur, x, v0, x);
    }
    const Bitset& stepped = table_.right_row(next, x, w0, x);
    bool ok = true;
    reach.for_each([&](std::size_t v1) {
      if (ok && !sys_.fine_up(v1).is_subset_of(stepped)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

Rank HjorthAnalysis::rank(std::size_t x) const {
  table_.stab();
  if (x >= ranks_.size()) fail(ErrorCode::kRange, "unknown point index");
  return ranks_[x];
}

std::vector<unsigned> HjorthAnalysis::rank_condition_profile(std::size_t x) const {
  std::vector<unsigned> out;
  for (unsigned a = 1; a <= table_.stab(); ++a) {
    if (rank_condition(x, a)) out.push_back(a);
  }
  return out;
}

std::strong_ordering HjorthAnalysis::compare_ranks(std::size_t x, std::size_t y) const {
  return rank(x).value <=> rank(y).value;
}

std::vector<RankPart> HjorthAnalysis::partition_by_rank() const {
  std::map<unsigned, Bitset> parts;
  for (std::size_t x = 0; x < sys_.num_points(); ++x) {
    auto [it, _] = parts.try_emplace(rank(x).value, Bitset(sys_.num_points()));
    it->second.set(x);
  }
  std::vector<RankPart> out;
  for (auto& [r, pts] : parts) out.push_back({r, std::move(pts)});
  return out;
}

bool HjorthAnalysis::orbit_check_via_rank(std::size_t x, std::size_t y) const {
  const unsigned delta = std::max(rank(x).value, rank(y).value);
  return equiv(x, y, Level::at(delta + 1));
}

Bitset HjorthAnalysis::orbit(std::size_t x) const {
  const auto& g = sys_.group();
  Bitset out(sys_.num_points());
  for (const auto& p : g.action) out.set(p[x]);
  return out;
}

std::optional<unsigned> HjorthAnalysis::minimal_m(std::size_t x) const {
  const Bitset target = orbit(x);
  const unsigned delta = rank(x).value;
  for (unsigned m = 0; delta + m <= table_.stab() + 1; ++m) {
    Bitset cls(sys_.num_points());
    for (std::size_t y = 0; y < sys_.num_points(); ++y) {
      if (equiv(x, y, Level::at(delta + m))) cls.set(y);
    }
    if (cls == target) return m;
  }
  return std::nullopt;
}

std::pair<bool, bool> HjorthAnalysis::star_orbit_equivalence_check(
    std::size_t y, std::size_t w, std::size_t x, std::size_t v) const {
  const bool in_star = sys_.orbit_set(y, w).is_subset_of(sys_.orbit_set(x, v));
  return {in_star, leq(y, w, x, v, Level::stabilized())};
}

FixedPointSets HjorthAnalysis::fixed_point_set(const Bitset& u) const {
  const auto& g = sys_.group();
  if (u.size() != g.size()) fail(ErrorCode::kUsage, "group subset has the wrong size");
  FixedPointSets out{Bitset(sys_.num_points()), Bitset(sys_.num_points()), true};
  for (std::size_t x = 0; x < sys_.num_points(); ++x) {
    u.for_each([&](std::size_t e) {
      if (g.action[e][x] == x) out.direct.set(x);
    });
  }
  // The characterization picks {e} and {g} as the small neighbourhoods.
  for (std::size_t e = 0; e < g.size(); ++e) {
    Bitset single(g.size());
    single.set(e);
    if (!sys_.basis_for_members(single)) out.applicable = false;
  }
  const std::size_t nb = sys_.num_basis();
  for (std::size_t v = 0; v < nb; ++v) {
    for (std::size_t w = 0; w < nb; ++w) {
      // W^-1 V inside U?
      bool inside = true;
      g.basis_members[w].for_each([&](std::size_t a) {
        if (!inside) return;
        g.basis_members[v].for_each([&](std::size_t b) {
          if (inside && !u.test(g.compose(g.inverse[a], b))) inside = false;
        });
      });
      if (!inside) continue;
      for (std::size_t x = 0; x < sys_.num_points(); ++x) {
        if (leq(x, v, x, w, Level::stabilized())) out.via_leq.set(x);
      }
    }
  }
  return out;
}

std::vector<unsigned> basis_shift_check(const HjorthAnalysis& a,
                                        const HjorthAnalysis& b) {
  if (a.system().num_points() != b.system().num_points()) {
    fail(ErrorCode::kUsage, "basis shift needs systems over the same points");
  }
  std::vector<unsigned> out;
  for (std::size_t x = 0; x < a.system().num_points(); ++x) {
    const unsigned ra = a.rank(x).value;
    const unsigned rb = b.rank(x).value;
    out.push_back(ra > rb ? ra - rb : rb - ra);
  }
  return out;
}

namespace {

Bitset vaught(const ActionSystem& sys, const Bitset& a, const Bitset& u, bool every) {
  const auto& g = sys.group();
  if (u.size() != g.size() || a.size() != sys.num_points()) {
    fail(ErrorCode::kUsage, "set sizes do not match the system");
  }
  Bitset out(sys.num_points());
  for (std::size_t x = 0; x < sys.num_points(); ++x) {
    bool all = true;
    bool some = false;
    u.for_each([&](std::size_t e) {
      const bool hit = a.test(g.action[e][x]);
      all = all && hit;
      some = some || hit;
    });
    out.set(x, every ? all : some);
  }
  return out;
}

}  // namespace

Bitset vaught_star(const ActionSystem& sys, const Bitset& a, const Bitset& u) {
  return vaught(sys, a, u, true);
}

Bitset vaught_delta(const ActionSystem& sys, const Bitset& a, const Bitset& u) {
  return vaught(sys, a, u, false);
}

}  // namespace rankforge
