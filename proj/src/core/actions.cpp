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

#include "rankforge/actions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "rankforge/error.hpp"
#include "rankforge/hjorth.hpp"
#include "rankforge/scott.hpp"
#include "vec_hash.hpp"

namespace rankforge {

namespace {

std::string set_label(const std::vector<std::string>& labels, const Bitset& members) {
  std::string out = "{";
  bool first = true;
  members.for_each([&](std::size_t g) {
    if (!first) out += ',';
    out += labels[g];
    first = false;
  });
  return out + "}";
}

void check_table_budget(std::size_t nx, std::size_t nb) {
  const long double bits = static_cast<long double>(nx) * nx * nb * nb;
  if (bits > static_cast<long double>(kDefaultTableBits)) {
    fail(ErrorCode::kBudget, "system with " + std::to_string(nx) + " points and " +
                                 std::to_string(nb) + " basis elements exceeds the table budget");
  }
}

// contains_up from member sets (inclusion).
std::vector<Bitset> inclusion_up(const std::vector<Bitset>& members) {
  std::vector<Bitset> up(members.size(), Bitset(members.size()));
  for (std::size_t w = 0; w < members.size(); ++w) {
    for (std::size_t v = 0; v < members.size(); ++v) {
      if (members[w].is_subset_of(members[v])) up[w].set(v);
    }
  }
  return up;
}

// cc rows from orbit sets orbit[x * nb + v] = V.x.
std::vector<Bitset> containment_rows(const std::vector<Bitset>& orbit, std::size_t nx,
                                     std::size_t nb) {
  std::vector<Bitset> rows(nx * nb * nx, Bitset(nb));
  for (std::size_t x0 = 0; x0 < nx; ++x0) {
    for (std::size_t v0 = 0; v0 < nb; ++v0) {
      const Bitset& lhs = orbit[x0 * nb + v0];
      for (std::size_t x1 = 0; x1 < nx; ++x1) {
        Bitset& row = rows[(x0 * nb + v0) * nx + x1];
        for (std::size_t v1 = 0; v1 < nb; ++v1) {
          if (lhs.is_subset_of(orbit[x1 * nb + v1])) row.set(v1);
        }
      }
    }
  }
  return rows;
}

std::vector<Bitset> orbit_sets(const GroupData& g, std::size_t nx) {
  const std::size_t nb = g.basis_members.size();
  std::vector<Bitset> out(nx * nb, Bitset(nx));
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t v = 0; v < nb; ++v) {
      g.basis_members[v].for_each([&](std::size_t e) { out[x * nb + v].set(g.action[e][x]); });
    }
  }
  return out;
}

// Injective tuples over 0..n-1 of length len, lexicographic.
std::vector<Tuple> injective_tuples(std::size_t n, std::size_t len) {
  std::vector<Tuple> out;
  Tuple cur;
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == len) {
      out.push_back(cur);
      return;
    }
    for (Element e = 0; e < n; ++e) {
      if (used[e]) continue;
      used[e] = true;
      cur.push_back(e);
      self(self);
      cur.pop_back();
      used[e] = false;
    }
  };
  rec(rec);
  return out;
}

std::vector<Permutation> symmetric_group(std::size_t n) {
  std::vector<Permutation> out;
  Permutation p(n);
  std::iota(p.begin(), p.end(), Element{0});
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string perm_label(const Permutation& p) {
  std::string out;
  for (auto e : p) out += std::to_string(e);
  return out.empty() ? "id" : out;
}

void check_signature(const Signature& sig, const Structure& m) {
  if (!(m.signature() == sig)) {
    fail(ErrorCode::kSchema, "structure signature does not match the system signature");
  }
}

struct LogicPieces {
  std::vector<Structure> structures;
  std::vector<CosetDescriptor> descriptors;
  std::map<CosetDescriptor, std::size_t> basis_of;
};

bool is_injective(std::span<const Element> t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t[i] == t[j]) return false;
    }
  }
  return true;
}

}  // namespace

ActionSystem build_finite_discrete(const FiniteDiscreteSpec& spec, std::size_t max_group) {
  if (spec.perms.size() > max_group) {
    fail(ErrorCode::kBudget, "group has " + std::to_string(spec.perms.size()) +
                                 " elements, budget is " + std::to_string(max_group));
  }
  GroupData g;
  g.labels = spec.labels;
  g.perms = spec.perms;
  for (const auto& p : spec.perms) {
    if (p.size() != spec.size) fail(ErrorCode::kSchema, "permutation of wrong size");
    g.action.emplace_back(p.begin(), p.end());
  }
  g.close_tables();
  const std::size_t n = g.size();
  const std::size_t nx = spec.size;

  std::vector<Bitset> members;
  switch (spec.basis.kind) {
    case BasisKind::kAllSubsets: {
      if (n >= 63) fail(ErrorCode::kBudget, "all-subsets basis of a group this large");
      check_table_budget(nx, (std::size_t{1} << n) - 1);
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        Bitset b(n);
        for (std::size_t e = 0; e < n; ++e) b.set(e, (mask >> e) & 1);
        members.push_back(std::move(b));
      }
      break;
    }
    case BasisKind::kSingletonsPlusG: {
      for (std::size_t e = 0; e < n; ++e) {
        Bitset b(n);
        b.set(e);
        members.push_back(std::move(b));
      }
      if (n > 1) {
        Bitset all(n);
        all.fill();
        members.push_back(std::move(all));
      }
      break;
    }
    case BasisKind::kExplicit: {
      for (const auto& set : spec.basis.sets) {
        Bitset b(n);
        for (const auto& label : set) {
          const auto it = std::find(g.labels.begin(), g.labels.end(), label);
          if (it == g.labels.end()) {
            fail(ErrorCode::kSchema, "basis names unknown element '" + label + "'");
          }
          b.set(static_cast<std::size_t>(it - g.labels.begin()));
        }
        if (b.none()) fail(ErrorCode::kInvalidSystem, "empty basis element");
        for (const auto& prev : members) {
          if (prev == b) {
            fail(ErrorCode::kInvalidSystem,
                 "basis element " + set_label(g.labels, b) + " listed twice");
          }
        }
        members.push_back(std::move(b));
      }
      break;
    }
  }
  const std::size_t nb = members.size();
  check_table_budget(nx, nb);
  g.basis_members = members;

  ActionSystem::Parts parts;
  parts.description = "finite-discrete |X|=" + std::to_string(nx) +
                      " |G|=" + std::to_string(n) + " basis=" + to_string(spec.basis);
  for (std::size_t x = 0; x < nx; ++x) parts.point_labels.push_back(std::to_string(x));
  for (const auto& m : members) parts.basis_labels.push_back(set_label(g.labels, m));
  parts.contains_up = inclusion_up(members);
  parts.fine_up = parts.contains_up;
  parts.cc_rows = containment_rows(orbit_sets(g, nx), nx, nb);
  parts.group = std::move(g);
  return ActionSystem(std::move(parts));
}

Tuple CosetDescriptor::from() const {
  Tuple out;
  for (const auto& [a, b] : graph) out.push_back(a);
  return out;
}

Tuple CosetDescriptor::to() const {
  Tuple out;
  for (const auto& [a, b] : graph) out.push_back(b);
  return out;
}

std::string CosetDescriptor::label() const {
  std::string out = "V[";
  for (std::size_t i = 0; i < graph.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(graph[i].first) + ">" + std::to_string(graph[i].second);
  }
  return out + "]";
}

CosetDescriptor make_descriptor(std::span<const Element> a, std::span<const Element> b) {
  if (a.size() != b.size()) fail(ErrorCode::kUsage, "coset tuples differ in length");
  if (!is_injective(a) || !is_injective(b)) {
    fail(ErrorCode::kUsage, "coset tuples must be injective");
  }
  CosetDescriptor d;
  for (std::size_t i = 0; i < a.size(); ++i) d.graph.emplace_back(a[i], b[i]);
  std::sort(d.graph.begin(), d.graph.end());
  return d;
}

std::optional<std::size_t> LogicAction::point_of(const Structure& m) const {
  for (std::size_t i = 0; i < structures.size(); ++i) {
    if (structures[i] == m) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> LogicAction::basis_index(std::span<const Element> a,
                                                    std::span<const Element> b) const {
  const auto it = basis_of.find(make_descriptor(a, b));
  if (it == basis_of.end()) return std::nullopt;
  return it->second;
}

std::vector<Structure> all_structures(const Signature& signature, std::size_t n,
                                      std::size_t max_count) {
  std::vector<std::size_t> cells;
  std::size_t bits = 0;
  for (const auto& r : signature.relations()) {
    std::size_t c = 1;
    for (unsigned i = 0; i < r.arity; ++i) {
      c *= n;
      if (c > 64) fail(ErrorCode::kBudget, "too many structures to enumerate");
    }
    cells.push_back(c);
    bits += c;
  }
  if (bits >= 63 || (std::uint64_t{1} << bits) > max_count) {
    fail(ErrorCode::kBudget, "enumerating all structures needs 2^" + std::to_string(bits) +
                                 " structures, budget is " + std::to_string(max_count));
  }
  std::vector<Structure> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    std::vector<std::vector<Tuple>> facts(cells.size());
    std::size_t bit = 0;
    for (std::size_t r = 0; r < cells.size(); ++r) {
      const unsigned arity = signature.relations()[r].arity;
      for (std::size_t c = 0; c < cells[r]; ++c, ++bit) {
        if (!((mask >> bit) & 1)) continue;
        Tuple t(arity);
        std::size_t rest = c;
        for (unsigned i = arity; i-- > 0;) {
          t[i] = static_cast<Element>(rest % n);
          rest /= n;
        }
        facts[r].push_back(std::move(t));
      }
    }
    out.push_back(Structure::finite(signature, n, std::move(facts)));
  }
  return out;
}

LogicAction build_finite_logic(const Signature& signature, std::size_t n, std::size_t k,
                               const std::vector<Structure>& seeds,
                               const LogicLimits& limits) {
  if (n == 0) fail(ErrorCode::kUsage, "logic action needs n >= 1");
  if (n > limits.max_n) {
    fail(ErrorCode::kBudget, "n = " + std::to_string(n) + " exceeds the budget n <= " +
                                 std::to_string(limits.max_n));
  }
  if (k > n) fail(ErrorCode::kUsage, "tuple length k must be <= n");
  if (k > limits.max_k) {
    fail(ErrorCode::kBudget, "k = " + std::to_string(k) + " exceeds the budget k <= " +
                                 std::to_string(limits.max_k));
  }
  const auto sn = symmetric_group(n);

  std::vector<Structure> start = seeds;
  if (start.empty()) start = all_structures(signature, n, limits.max_points);
  for (const auto& m : start) {
    check_signature(signature, m);
    if (!m.is_finite() || m.size() != n) {
      fail(ErrorCode::kSchema, "points of the logic action must be finite structures of size " +
                                   std::to_string(n));
    }
  }

  LogicPieces out;
  std::unordered_map<std::vector<std::uint64_t>, std::size_t, detail::VecHash> index;
  for (const auto& seed : start) {
    if (index.count(seed.key())) continue;
    for (const auto& p : sn) {
      Structure img = seed.relabeled(p);
      if (index.emplace(img.key(), out.structures.size()).second) {
        out.structures.push_back(std::move(img));
        if (out.structures.size() > limits.max_points) {
          fail(ErrorCode::kBudget, "logic action exceeds " +
                                       std::to_string(limits.max_points) + " points");
        }
      }
    }
  }
  const std::size_t nx = out.structures.size();

  GroupData g;
  g.perms = sn;
  for (const auto& p : sn) {
    g.labels.push_back(perm_label(p));
    std::vector<std::size_t> act(nx);
    for (std::size_t x = 0; x < nx; ++x) {
      act[x] = index.at(out.structures[x].relabeled(p).key());
    }
    g.action.push_back(std::move(act));
  }
  g.close_tables();

  std::map<Bitset, std::size_t> by_members;
  for (std::size_t len = 0; len <= k; ++len) {
    const auto tuples = injective_tuples(n, len);
    for (const auto& a : tuples) {
      for (const auto& b : tuples) {
        Bitset members(sn.size());
        for (std::size_t e = 0; e < sn.size(); ++e) {
          bool ok = true;
          for (std::size_t i = 0; i < len && ok; ++i) ok = sn[e][a[i]] == b[i];
          members.set(e, ok);
        }
        auto desc = make_descriptor(a, b);
        auto [it, fresh] = by_members.emplace(members, g.basis_members.size());
        if (fresh) {
          g.basis_members.push_back(members);
          out.descriptors.push_back(desc);
        }
        out.basis_of.emplace(std::move(desc), it->second);
      }
    }
  }
  const std::size_t nb = g.basis_members.size();
  check_table_budget(nx, nb);

  ActionSystem::Parts parts;
  parts.description = "finite-logic n=" + std::to_string(n) + " k=" + std::to_string(k) +
                      " points=" + std::to_string(nx);
  for (std::size_t x = 0; x < nx; ++x) parts.point_labels.push_back("p" + std::to_string(x));
  for (const auto& d : out.descriptors) parts.basis_labels.push_back(d.label());
  parts.contains_up = inclusion_up(g.basis_members);
  parts.fine_up = parts.contains_up;
  parts.cc_rows = containment_rows(orbit_sets(g, nx), nx, nb);
  parts.group = std::move(g);
  return LogicAction{ActionSystem(std::move(parts)), std::move(out.structures),
                     std::move(out.descriptors), std::move(out.basis_of)};
}

namespace {

// Representatives c = sigma^-1(to(w)) for sigma in V_v: entries of to(w)
// hit by to(v) are forced; the rest go to distinct elements outside from(v),
// either in the support or fresh (one fresh stands for all).
void coset_representatives(const CosetDescriptor& v, const CosetDescriptor& w,
                           std::size_t support,
                           const std::function<bool(const Tuple&)>& visit) {
  const Tuple vb = v.to();
  const Tuple va = v.from();
  const Tuple wb = w.to();
  Tuple c(wb.size());
  std::vector<int> forced(wb.size(), -1);
  for (std::size_t j = 0; j < wb.size(); ++j) {
    const auto it = std::find(vb.begin(), vb.end(), wb[j]);
    if (it != vb.end()) forced[j] = static_cast<int>(it - vb.begin());
  }
  std::vector<Element> pool;
  for (Element e = 0; e < support; ++e) {
    if (std::find(va.begin(), va.end(), e) == va.end()) pool.push_back(e);
  }
  std::vector<bool> used(pool.size(), false);
  Element next_fresh = static_cast<Element>(support);
  for (auto e : va) next_fresh = std::max<Element>(next_fresh, e + 1);
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (stop) return;
    if (j == wb.size()) {
      if (!visit(c)) stop = true;
      return;
    }
    if (forced[j] >= 0) {
      c[j] = va[static_cast<std::size_t>(forced[j])];
      self(self, j + 1);
      return;
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      c[j] = pool[i];
      self(self, j + 1);
      used[i] = false;
    }
    c[j] = next_fresh++;
    self(self, j + 1);
    --next_fresh;
  };
  rec(rec, 0);
}

}  // namespace

LogicAction build_symbolic_logic(const Signature& signature, std::size_t s, std::size_t k,
                                 const std::vector<Structure>& points,
                                 const LogicLimits& limits) {
  if (s > limits.max_support) {
    fail(ErrorCode::kBudget, "support window s = " + std::to_string(s) +
                                 " exceeds the budget s <= " + std::to_string(limits.max_support));
  }
  if (k > limits.max_k) {
    fail(ErrorCode::kBudget, "k = " + std::to_string(k) + " exceeds the budget k <= " +
                                 std::to_string(limits.max_k));
  }
  if (k > s) fail(ErrorCode::kUsage, "tuple length k must be <= s");
  if (points.empty()) fail(ErrorCode::kUsage, "symbolic logic action needs points");

  LogicPieces out;
  for (const auto& m : points) {
    check_signature(signature, m);
    if (m.size() > s) {
      fail(ErrorCode::kRange, "structure does not fit the support window s = " +
                                  std::to_string(s));
    }
    std::vector<std::vector<Tuple>> facts;
    for (std::size_t r = 0; r < signature.size(); ++r) facts.push_back(m.facts(r));
    out.structures.push_back(Structure::supported(signature, s, std::move(facts)));
  }
  const std::size_t nx = out.structures.size();

  for (std::size_t len = 0; len <= k; ++len) {
    const auto tuples = injective_tuples(s, len);
    for (const auto& a : tuples) {
      if (!std::is_sorted(a.begin(), a.end())) continue;
      for (const auto& b : tuples) {
        auto desc = make_descriptor(a, b);
        out.basis_of.emplace(desc, out.descriptors.size());
        out.descriptors.push_back(std::move(desc));
      }
    }
  }
  const std::size_t nb = out.descriptors.size();
  check_table_budget(nx, nb);

  ActionSystem::Parts parts;
  parts.description = "symbolic-logic s=" + std::to_string(s) + " k=" + std::to_string(k) +
                      " points=" + std::to_string(nx);
  for (std::size_t x = 0; x < nx; ++x) parts.point_labels.push_back("p" + std::to_string(x));
  for (const auto& d : out.descriptors) parts.basis_labels.push_back(d.label());
  parts.contains_up.assign(nb, Bitset(nb));
  for (std::size_t w = 0; w < nb; ++w) {
    const auto& gw = out.descriptors[w].graph;
    for (std::size_t v = 0; v < nb; ++v) {
      const auto& gv = out.descriptors[v].graph;
      if (std::includes(gw.begin(), gw.end(), gv.begin(), gv.end())) {
        parts.contains_up[w].set(v);
      }
    }
  }
  parts.fine_up = parts.contains_up;

  parts.cc_rows.assign(nx * nb * nx, Bitset(nb));
  for (std::size_t x0 = 0; x0 < nx; ++x0) {
    const Structure& m = out.structures[x0];
    for (std::size_t v0 = 0; v0 < nb; ++v0) {
      for (std::size_t x1 = 0; x1 < nx; ++x1) {
        const Structure& nst = out.structures[x1];
        Bitset& row = parts.cc_rows[(x0 * nb + v0) * nx + x1];
        for (std::size_t v1 = 0; v1 < nb; ++v1) {
          const Tuple a1 = out.descriptors[v1].from();
          bool all = true;
          coset_representatives(out.descriptors[v0], out.descriptors[v1], s,
                                [&](const Tuple& c) {
                                  all = thsigma_contains(m, c, nst, a1);
                                  return all;
                                });
          row.set(v1, all);
        }
      }
    }
  }
  return LogicAction{ActionSystem(std::move(parts)), std::move(out.structures),
                     std::move(out.descriptors), std::move(out.basis_of)};
}

ComparisonOutcome scott_hjorth_comparison(const Structure& m, std::span<const Element> a,
                                          const Structure& n, std::span<const Element> a2,
                                          std::span<const Element> b, std::size_t k) {
  if (a.size() != b.size() || a2.size() != b.size()) {
    fail(ErrorCode::kUsage, "comparison tuples differ in length");
  }
  if (!m.is_finite() || !n.is_finite()) {
    fail(ErrorCode::kUnsupported, "comparison is only available for the finite logic action");
  }
  if (m.size() != n.size() || !(m.signature() == n.signature())) {
    fail(ErrorCode::kUsage, "comparison needs structures on the same universe and signature");
  }
  const LogicAction logic =
      build_finite_logic(m.signature(), m.size(), std::max(k, b.size()), {m, n});
  const HjorthAnalysis h(logic.system);
  const auto v0 = logic.basis_index(a, b);
  const auto v1 = logic.basis_index(a2, b);
  const ScottTable table({m, n});
  ComparisonOutcome out;
  out.scott_hypothesis = table.equivalent(0, a, 1, a2, Level::stabilized());
  out.hjorth_conclusion = h.leq(*logic.point_of(m), *v0, *logic.point_of(n), *v1,
                                Level::stabilized());
  return out;
}

ComparisonScan comparison_scan(const Signature& signature, std::size_t n,
                               std::size_t max_len, const LogicLimits& limits) {
  if (max_len > n) fail(ErrorCode::kUsage, "tuple length must be <= n");
  ComparisonScan out;
  const auto all = all_structures(signature, n, limits.max_points);
  out.structures = all.size();

  std::unordered_map<std::vector<std::uint64_t>, std::size_t, detail::VecHash> index;
  for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i].key(), i);
  const auto sn = symmetric_group(n);
  std::vector<std::size_t> orbit_of(all.size(), SIZE_MAX);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (orbit_of[i] != SIZE_MAX) continue;
    orbits.emplace_back();
    for (const auto& p : sn) {
      const std::size_t j = index.at(all[i].relabeled(p).key());
      if (orbit_of[j] == SIZE_MAX) {
        orbit_of[j] = orbits.size() - 1;
        orbits.back().push_back(j);
      }
    }
  }
  out.orbits = orbits.size();

  const ScottTable scott(all);
  out.scott_stab = scott.stab();
  std::vector<std::vector<Tuple>> tuples;
  for (std::size_t len = 0; len <= max_len; ++len) tuples.push_back(injective_tuples(n, len));

  auto level_name = [](std::optional<unsigned> reached, unsigned stab) -> std::string {
    if (!reached) return "none";
    if (*reached >= stab) return "STAB";
    return std::to_string(*reached);
  };

  for (std::size_t oi = 0; oi < orbits.size(); ++oi) {
    const std::size_t mi = orbits[oi].front();
    for (std::size_t oj = 0; oj < orbits.size(); ++oj) {
      const std::size_t rep = orbits[oj].front();
      const LogicAction logic =
          build_finite_logic(signature, n, max_len, {all[mi], all[rep]}, limits);
      const HjorthAnalysis h(logic.system);
      const unsigned hstab = h.table().stab();
      const std::size_t px = *logic.point_of(all[mi]);
      for (const std::size_t ni : orbits[oj]) {
        const std::size_t py = *logic.point_of(all[ni]);
        for (std::size_t len = 0; len <= max_len; ++len) {
          for (const auto& a : tuples[len]) {
            for (const auto& a2 : tuples[len]) {
              std::optional<unsigned> sreach;
              for (unsigned lv = 0; lv <= out.scott_stab; ++lv) {
                if (!scott.equivalent(mi, a, ni, a2, Level::at(lv))) break;
                sreach = lv;
              }
              const bool hyp = sreach && *sreach >= out.scott_stab;
              for (const auto& b : tuples[len]) {
                const std::size_t v0 = *logic.basis_index(a, b);
                const std::size_t v1 = *logic.basis_index(a2, b);
                std::optional<unsigned> hreach;
                for (unsigned lv = 1; lv <= hstab; ++lv) {
                  if (!h.leq(px, v0, py, v1, Level::at(lv))) break;
                  hreach = lv;
                }
                const bool concl = hreach && *hreach >= hstab;
                ++out.cases;
                if (hyp) ++out.hypothesis_true;
                ++out.levels[{level_name(sreach, out.scott_stab), level_name(hreach, hstab)}];
                if (hyp && !concl) {
                  ++out.counterexamples;
                  if (out.witnesses.size() < 5) {
                    std::string w = "M" + std::to_string(mi) + ",N" + std::to_string(ni) + ",a=";
                    for (auto e : a) w += std::to_string(e);
                    w += ",a'=";
                    for (auto e : a2) w += std::to_string(e);
                    w += ",b=";
                    for (auto e : b) w += std::to_string(e);
                    out.witnesses.push_back(std::move(w));
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return out;
}

std::size_t diagonal_index(std::size_t k, std::size_t l, std::size_t rows,
                           std::size_t cols) {
  if (k >= rows || l >= cols) fail(ErrorCode::kRange, "trace index out of range");
  std::size_t pos = 0;
  for (std::size_t kk = 0; kk < rows; ++kk) {
    for (std::size_t ll = 0; ll < cols; ++ll) {
      if (kk + ll < k + l || (kk + ll == k + l && ll < l)) ++pos;
    }
  }
  return pos;
}

std::vector<bool> encode_action_trace(const ActionSystem& sys, std::size_t x) {
  const std::size_t rows = sys.num_basis();
  const std::size_t cols = sys.num_points();
  if (x >= cols) fail(ErrorCode::kRange, "unknown point index");
  std::vector<bool> out(rows * cols, false);
  std::size_t pos = 0;
  for (std::size_t d = 0; d + 1 < rows + cols; ++d) {
    for (std::size_t l = 0; l <= d && l < cols; ++l) {
      const std::size_t k = d - l;
      if (k >= rows) continue;
      out[pos++] = sys.orbit_set(x, k).test(l);
    }
  }
  return out;
}

std::vector<DriftEntry> symbolic_drift(const Signature& signature, std::size_t s,
                                       std::size_t k, const std::vector<Structure>& points,
                                       const LogicLimits& limits) {
  LogicLimits wide = limits;
  wide.max_support += 1;
  wide.max_k += 1;
  const LogicAction base = build_symbolic_logic(signature, s, k, points, limits);
  const LogicAction big = build_symbolic_logic(signature, s + 1, k + 1, points, wide);
  const HjorthAnalysis hb(base.system);
  const HjorthAnalysis hw(big.system);
  std::vector<std::size_t> map(base.descriptors.size());
  for (std::size_t v = 0; v < base.descriptors.size(); ++v) {
    map[v] = big.basis_of.at(base.descriptors[v]);
  }
  std::vector<DriftEntry> out;
  const std::size_t nx = base.structures.size();
  for (std::size_t x0 = 0; x0 < nx; ++x0) {
    for (std::size_t v0 = 0; v0 < map.size(); ++v0) {
      for (std::size_t x1 = 0; x1 < nx; ++x1) {
        for (std::size_t v1 = 0; v1 < map.size(); ++v1) {
          const bool a = hb.leq(x0, v0, x1, v1, Level::stabilized());
          const bool b = hw.leq(x0, map[v0], x1, map[v1], Level::stabilized());
          if (a != b) out.push_back({x0, v0, x1, v1, a, b});
        }
      }
    }
  }
  return out;
}

}  // namespace rankforge
