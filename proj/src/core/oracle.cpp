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

#include "rankforge/oracle.hpp"

#include "rankforge/error.hpp"

namespace rankforge::oracle {

NaiveLeq::NaiveLeq(const ActionSystem& sys, unsigned max_depth)
    : sys_(sys), max_depth_(max_depth), below_(sys.num_basis()) {
  for (std::size_t v = 0; v < sys.num_basis(); ++v) {
    for (std::size_t w = 0; w < sys.num_basis(); ++w) {
      if (sys.contains(w, v)) below_[v].push_back(w);
    }
  }
}

bool NaiveLeq::operator()(std::size_t x0, std::size_t v0, std::size_t x1, std::size_t v1,
                          unsigned level) {
  if (level == 0) fail(ErrorCode::kUsage, "levels start at 1");
  if (level > max_depth_) {
    fail(ErrorCode::kDepthExceeded, "naive recursion deeper than " + std::to_string(max_depth_));
  }
  if (level == 1) return sys_.cc(x0, v0, x1, v1);
  const std::size_t nx = sys_.num_points();
  const std::size_t nb = sys_.num_basis();
  if (memo_.size() < level + 1) memo_.resize(level + 1);
  auto& memo = memo_[level];
  if (memo.empty()) memo.assign(nx * nb * nx * nb, -1);
  std::int8_t& slot = memo[((x0 * nb + v0) * nx + x1) * nb + v1];
  if (slot >= 0) return slot == 1;
  bool all = true;
  for (std::size_t w0 : below_[v0]) {
    bool some = false;
    for (std::size_t w1 : below_[v1]) {
      if ((*this)(x1, w1, x0, w0, level - 1)) {
        some = true;
        break;
      }
    }
    if (!some) {
      all = false;
      break;
    }
  }
  slot = all ? 1 : 0;
  return all;
}

bool naive_leq(const ActionSystem& sys, std::size_t x0, std::size_t v0, std::size_t x1,
               std::size_t v1, unsigned level) {
  NaiveLeq oracle(sys);
  return oracle(x0, v0, x1, v1, level);
}

NaiveScott::NaiveScott(const Structure& m, const Structure& n) : m_(m), n_(n) {
  if (!m.is_finite() || !n.is_finite()) {
    fail(ErrorCode::kUnsupported, "the game oracle needs finite structures");
  }
  if (!(m.signature() == n.signature())) {
    fail(ErrorCode::kSchema, "structures have different signatures");
  }
}

bool NaiveScott::atomic_match(const Tuple& a, const Tuple& b) const {
  const std::size_t k = a.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if ((a[i] == a[j]) != (b[i] == b[j])) return false;
    }
  }
  const auto& rels = m_.signature().relations();
  for (std::size_t r = 0; r < rels.size(); ++r) {
    const unsigned arity = rels[r].arity;
    std::vector<std::size_t> pick(arity, 0);
    Tuple ta(arity), tb(arity);
    if (k == 0) continue;
    while (true) {
      for (unsigned i = 0; i < arity; ++i) {
        ta[i] = a[pick[i]];
        tb[i] = b[pick[i]];
      }
      if (m_.holds(r, ta) != n_.holds(r, tb)) return false;
      unsigned i = 0;
      while (i < arity && ++pick[i] == k) pick[i++] = 0;
      if (i == arity) break;
    }
  }
  return true;
}

bool NaiveScott::operator()(const Tuple& a, const Tuple& b, unsigned level) {
  if (a.size() != b.size()) fail(ErrorCode::kSchema, "tuple length mismatch");
  auto& memo = memo_[{a, b}];
  if (memo.size() <= level) memo.resize(level + 1, -1);
  if (memo[level] >= 0) return memo[level] == 1;
  bool result;
  if (level == 0) {
    result = atomic_match(a, b);
  } else {
    result = (*this)(a, b, level - 1);
    Tuple ea = a, eb = b;
    ea.push_back(0);
    eb.push_back(0);
    // forth: every c in M is answered by some d in N
    for (Element c = 0; result && c < m_.size(); ++c) {
      ea.back() = c;
      bool found = false;
      for (Element d = 0; !found && d < n_.size(); ++d) {
        eb.back() = d;
        found = (*this)(ea, eb, level - 1);
      }
      result = found;
    }
    // back: every d in N is answered by some c in M
    for (Element d = 0; result && d < n_.size(); ++d) {
      eb.back() = d;
      bool found = false;
      for (Element c = 0; !found && c < m_.size(); ++c) {
        ea.back() = c;
        found = (*this)(ea, eb, level - 1);
      }
      result = found;
    }
  }
  memo_[{a, b}][level] = result ? 1 : 0;
  return result;
}

bool naive_scott(const Structure& m, std::span<const Element> a, const Structure& n,
                 std::span<const Element> b, unsigned level) {
  NaiveScott oracle(m, n);
  return oracle(Tuple(a.begin(), a.end()), Tuple(b.begin(), b.end()), level);
}

OrbitPartition orbit_partition(const ActionSystem& sys) {
  const auto& g = sys.group();
  const std::size_t nx = sys.num_points();
  OrbitPartition out;
  out.orbit_of.assign(nx, SIZE_MAX);
  for (std::size_t x = 0; x < nx; ++x) {
    if (out.orbit_of[x] != SIZE_MAX) continue;
    const std::size_t id = out.orbits.size();
    Bitset orbit(nx);
    std::vector<std::size_t> frontier{x};
    orbit.set(x);
    while (!frontier.empty()) {
      const std::size_t y = frontier.back();
      frontier.pop_back();
      for (std::size_t e = 0; e < g.size(); ++e) {
        const std::size_t z = sys.act(e, y);
        if (!orbit.test(z)) {
          orbit.set(z);
          frontier.push_back(z);
        }
      }
    }
    orbit.for_each([&](std::size_t y) { out.orbit_of[y] = id; });
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

std::vector<Bitset> invariant_sets(const ActionSystem& sys, std::size_t max_orbits) {
  const auto parts = orbit_partition(sys);
  const std::size_t k = parts.orbits.size();
  if (k > max_orbits) {
    fail(ErrorCode::kBudget, std::to_string(k) + " orbits, invariant set enumeration allows " +
                                 std::to_string(max_orbits));
  }
  std::vector<Bitset> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    Bitset set(sys.num_points());
    for (std::size_t o = 0; o < k; ++o) {
      if ((mask >> o) & 1) set |= parts.orbits[o];
    }
    out.push_back(std::move(set));
  }
  return out;
}

}  // namespace rankforge::oracle
