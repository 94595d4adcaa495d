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

#include "rankforge/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <set>

#include "rankforge/error.hpp"
#include "rankforge/hjorth.hpp"
#include "rankforge/oracle.hpp"
#include "rankforge/scott.hpp"

namespace rankforge {

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; }));
}

namespace {

using Witness = std::optional<std::string>;

std::string clean(std::string s) {
  for (auto& ch : s) {
    if (ch == ' ' || ch == '\t' || ch == '\n') ch = '_';
  }
  return s;
}

std::string error_text(const Error& e) {
  const std::string name = error_code_name(e.code());
  const std::string msg = e.what();
  return msg.rfind(name, 0) == 0 ? msg : name + ": " + msg;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string tuple_str(std::span<const Element> t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(t[i]);
  }
  return out + ")";
}

std::string quad(const ActionSystem& sys, std::size_t x0, std::size_t v0, std::size_t x1,
                 std::size_t v1) {
  return "(" + sys.point_label(x0) + "," + sys.basis_label(v0) + "," + sys.point_label(x1) +
         "," + sys.basis_label(v1) + ")";
}

Bitset random_subset(std::mt19937_64& rng, std::size_t n, bool nonempty) {
  Bitset out(n);
  std::bernoulli_distribution coin(0.5);
  do {
    for (std::size_t i = 0; i < n; ++i) out.set(i, coin(rng));
  } while (nonempty && out.none());
  return out;
}

Structure random_structure(std::mt19937_64& rng, const Signature& sig, std::size_t size,
                           bool supported) {
  std::bernoulli_distribution coin(0.5);
  std::vector<std::vector<Tuple>> facts(sig.size());
  for (std::size_t r = 0; r < sig.size(); ++r) {
    const unsigned arity = sig.relations()[r].arity;
    std::size_t cells = 1;
    for (unsigned i = 0; i < arity; ++i) cells *= size;
    for (std::size_t c = 0; c < cells; ++c) {
      if (!coin(rng)) continue;
      Tuple t(arity);
      std::size_t rest = c;
      for (unsigned i = arity; i-- > 0;) {
        t[i] = static_cast<Element>(rest % size);
        rest /= size;
      }
      facts[r].push_back(std::move(t));
    }
  }
  return supported ? Structure::supported(sig, size, std::move(facts))
                   : Structure::finite(sig, size, std::move(facts));
}

Permutation random_permutation(std::mt19937_64& rng, std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), Element{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Least-key relabeling: a brute-force canonical form.
std::vector<std::uint64_t> canonical_key(const Structure& m) {
  Permutation p(m.size());
  std::iota(p.begin(), p.end(), Element{0});
  std::vector<std::uint64_t> best = m.key();
  do {
    auto k = m.relabeled(p).key();
    if (k < best) best = std::move(k);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

std::vector<Tuple> all_tuples(std::size_t size, std::size_t len) {
  std::vector<Tuple> out;
  std::size_t count = 1;
  for (std::size_t i = 0; i < len; ++i) count *= size;
  for (std::size_t c = 0; c < count; ++c) {
    Tuple t(len);
    std::size_t rest = c;
    for (std::size_t i = len; i-- > 0;) {
      t[i] = static_cast<Element>(rest % size);
      rest /= size;
    }
    out.push_back(std::move(t));
  }
  return out;
}

class Runner {
 public:
  explicit Runner(const VerifyConfig& config) : config_(config) {}

  CheckResult run(const std::string& name);

  using CaseCheck =
      std::function<Witness(const HjorthAnalysis&, std::mt19937_64&, std::size_t&)>;

  const std::vector<GeneratedCase>& cases();
  const HjorthAnalysis* analysis(std::size_t i, std::string& error);
  CheckResult ensemble(const std::string& name, const CaseCheck& fn);
  std::mt19937_64 rng_for(const std::string& name, std::size_t i) const {
    return std::mt19937_64(config_.seed ^ fnv1a(name) ^ (0x9e3779b97f4a7c15ull * (i + 1)));
  }

  CheckResult leq_oracle();
  CheckResult base_relation();
  CheckResult transitivity();
  CheckResult level_monotonicity();
  CheckResult set_monotonicity();
  CheckResult translation_invariance();
  CheckResult equiv_invariance();
  CheckResult rank_orbit_invariance();
  CheckResult rank_profile();
  CheckResult rank_partition();
  CheckResult finite_discrete_collapse();
  CheckResult action_trace();
  CheckResult orbit_via_rank();
  CheckResult minimal_m();
  CheckResult stab_invariant_sets();
  CheckResult vaught_laws();
  CheckResult star_orbit_equivalence();
  CheckResult fixed_point_set();
  CheckResult rank_comparison();
  CheckResult basis_shift();
  CheckResult clopen_subgroup();
  CheckResult scott_oracle();
  CheckResult scott_invariants();
  CheckResult scott_isomorphism();
  CheckResult scott_rank_ladder();
  CheckResult scott_rank_permutation();
  CheckResult qf_equivariance();
  CheckResult thsigma_iso();
  CheckResult thsigma_cap();
  CheckResult comparison();
  CheckResult symbolic_cross_validation();
  CheckResult symbolic_full_group();
  CheckResult symbolic_drift_check();

 private:
  const VerifyConfig& config_;
  std::optional<std::vector<GeneratedCase>> cases_;
  std::vector<std::unique_ptr<HjorthAnalysis>> analyses_;
  std::vector<std::string> errors_;
};

const std::vector<GeneratedCase>& Runner::cases() {
  if (!cases_) {
    cases_ = generate_ensemble(config_.seed, config_.sizes);
    if (config_.mutate) {
      if (*config_.mutate != "cc") fail(ErrorCode::kUsage, "unknown mutation '" + *config_.mutate + "'");
      for (auto& c : *cases_) {
        const auto s = c.spec(BasisSpec{});
        Bitset orbit0(c.points);
        for (const auto& p : s.perms) orbit0.set(p[0]);
        if (orbit0.count() == c.points) continue;
        std::size_t y = 0;
        while (orbit0.test(y)) ++y;
        c.mutation = std::make_pair(std::size_t{0}, y);
        break;
      }
    }
    analyses_.resize(cases_->size());
    errors_.resize(cases_->size());
  }
  return *cases_;
}

const HjorthAnalysis* Runner::analysis(std::size_t i, std::string& error) {
  cases();
  if (!analyses_[i] && errors_[i].empty()) {
    try {
      analyses_[i] = std::make_unique<HjorthAnalysis>((*cases_)[i].build(BasisSpec{}));
    } catch (const Error& e) {
      errors_[i] = error_text(e);
    }
  }
  error = errors_[i];
  return analyses_[i].get();
}

CheckResult Runner::ensemble(const std::string& name, const CaseCheck& fn) {
  CheckResult out{name, true, "-", 0};
  const auto& cs = cases();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    std::string error;
    const HjorthAnalysis* h = analysis(i, error);
    auto rng = rng_for(name, i);
    Witness w;
    if (!h) {
      w = error;
    } else {
      w = fn(*h, rng, out.instances);
    }
    if (!w) continue;
    // Shrink, then describe the shrunk case.
    auto evaluate = [&](const GeneratedCase& c) -> Witness {
      try {
        HjorthAnalysis hc(c.build(BasisSpec{}));
        auto r = rng_for(name, i);
        std::size_t dummy = 0;
        return fn(hc, r, dummy);
      } catch (const Error& e) {
        return error_text(e);
      }
    };
    const GeneratedCase small =
        shrink(cs[i], [&](const GeneratedCase& c) { return evaluate(c).has_value(); });
    const Witness detail = evaluate(small);
    out.pass = false;
    out.witness = clean("case=" + std::to_string(i) + ";" + small.describe() + ";" +
                        detail.value_or(*w));
    return out;
  }
  return out;
}

CheckResult Runner::leq_oracle() {
  return ensemble("leq_oracle", [](const HjorthAnalysis& h, std::mt19937_64&,
                                   std::size_t& n) -> Witness {
    const auto& sys = h.system();
    oracle::NaiveLeq naive(sys);
    const unsigned top = h.table().stab() + 1;
    for (unsigned a = 1; a <= top; ++a) {
      for (std::size_t x0 = 0; x0 < sys.num_points(); ++x0)
        for (std::size_t v0 = 0; v0 < sys.num_basis(); ++v0)
          for (std::size_t x1 = 0; x1 < sys.num_points(); ++x1)
            for (std::size_t v1 = 0; v1 < sys.num_basis(); ++v1) {
              ++n;
              const bool e = h.leq(x0, v0, x1, v1, Level::at(a));
              if (e != naive(x0, v0, x1, v1, a)) {
                return "T" + std::to_string(a) + quad(sys, x0, v0, x1, v1) +
                       "engine=" + std::to_string(e);
              }
            }
    }
    return std::nullopt;
  });
}

CheckResult Runner::base_relation() {
  return ensemble("base_relation", [](const HjorthAnalysis& h, std::mt19937_64&,
                                      std::size_t& n) -> Witness {
    const auto& sys = h.system();
    const auto& g = sys.group();
    auto image = [&](std::size_t x, std::size_t v) {
      std::set<std::size_t> out;
      for (std::size_t e = 0; e < g.size(); ++e) {
        if (g.basis_members[v].test(e)) out.insert(sys.act(e, x));
      }
      return out;
    };
    for (std::size_t x0 = 0; x0 < sys.num_points(); ++x0)
      for (std::size_t v0 = 0; v0 < sys.num_basis(); ++v0) {
        const auto lhs = image(x0, v0);
        for (std::size_t x1 = 0; x1 < sys.num_points(); ++x1)
          for (std::size_t v1 = 0; v1 < sys.num_basis(); ++v1) {
            ++n;
            const auto rhs = image(x1, v1);
            const bool inc = std::includes(rhs.begin(), rhs.end(), lhs.begin(), lhs.end());
            if (inc != h.leq(x0, v0, x1, v1, Level::at(1))) {
              return "T1" + quad(sys, x0, v0, x1, v1) + "differs_from_orbit_inclusion";
            }
          }
      }
    return std::nullopt;
  });
}

CheckResult Runner::transitivity() {
  return ensemble("transitivity", [](const HjorthAnalysis& h, std::mt19937_64&,
                                     std::size_t& n) -> Witness {
    const auto& sys = h.system();
    const std::size_t nx = sys.num_points();
    const std::size_t nb = sys.num_basis();
    for (unsigned a = 1; a <= h.table().stab(); ++a) {
      std::vector<Bitset> reach(nx * nb, Bitset(nx * nb));
      for (std::size_t x0 = 0; x0 < nx; ++x0)
        for (std::size_t v0 = 0; v0 < nb; ++v0)
          for (std::size_t x1 = 0; x1 < nx; ++x1)
            h.table().right_row(Level::at(a), x0, v0, x1).for_each(
                [&](std::size_t v1) { reach[x0 * nb + v0].set(x1 * nb + v1); });
      for (std::size_t p = 0; p < nx * nb; ++p) {
        Witness w;
        reach[p].for_each([&](std::size_t q) {
          ++n;
          if (w || reach[q].is_subset_of(reach[p])) return;
          const std::size_t r = (reach[q] - reach[p]).indices().front();
          w = "T" + std::to_string(a) + ":" + quad(sys, p / nb, p % nb, q / nb, q % nb) +
              "&" + quad(sys, q / nb, q % nb, r / nb, r % nb) + "but_not" +
              quad(sys, p / nb, p % nb, r / nb, r % nb);
        });
        if (w) return w;
      }
    }
    return std::nullopt;
  });
}

CheckResult Runner::level_monotonicity() {
  return ensemble("level_monotonicity", [](const HjorthAnalysis& h, std::mt19937_64&,
                                           std::size_t& n) -> Witness {
    const auto& sys = h.system();
    for (unsigned a = 1; a <= h.table().stab(); ++a) {
      for (std::size_t x0 = 0; x0 < sys.num_points(); ++x0)
        for (std::size_t v0 = 0; v0 < sys.num_basis(); ++v0)
          for (std::size_t x1 = 0; x1 < sys.num_points(); ++x1) {
            ++n;
            const Bitset& hi = h.table().right_row(Level::at(a + 1), x0, v0, x1);
            const Bitset& lo = h.table().right_row(Level::at(a), x0, v0, x1);
            if (!hi.is_subset_of(lo)) {
              const std::size_t v1 = (hi - lo).indices().front();
              return "T" + std::to_string(a + 1) + quad(sys, x0, v0, x1, v1) + "not_in_T" +
                     std::to_string(a);
            }
          }
    }
    return std::nullopt;
  });
}

CheckResult Runner::set_monotonicity() {
  return ensemble("set_monotonicity", [](const HjorthAnalysis& h, std::mt19937_64&,
                                         std::size_t& n) -> Witness {
    const auto& sys = h.system();
    for (unsigned a = 1; a <= h.table().stab(); ++a) {
      const Level lv = Level::at(a);
      for (std::size_t x0 = 0; x0 < sys.num_points(); ++x0)
        for (std::size_t v0 = 0; v0 < sys.num_basis(); ++v0)
          for (std::size_t x1 = 0; x1 < sys.num_points(); ++x1) {
            const Bitset& row = h.table().right_row(lv, x0, v0, x1);
            Witness w;
            row.for_each([&](std::size_t v1) {
              ++n;
              if (w || sys.up(v1).is_subset_of(row)) return;
              const std::size_t w1 = (sys.up(v1) - row).indices().front();
              w = "T" + std::to_string(a) + quad(sys, x0, v0, x1, v1) + "but_not_for_larger_" +
                  sys.basis_label(w1);
            });
            if (w) return w;
            for (std::size_t w0 = 0; w0 < sys.num_basis(); ++w0) {
              if (!sys.contains(w0, v0)) continue;
              ++n;
              if (!row.is_subset_of(h.table().right_row(lv, x0, w0, x1))) {
                return "T" + std::to_string(a) + "(" + sys.point_label(x0) + "," +
                       sys.basis_label(v0) + ",..)_not_inherited_by_smaller_" +
                       sys.basis_label(w0);
              }
            }
          }
    }
    return std::nullopt;
  });
}

CheckResult Runner::translation_invariance() {
  return ensemble("translation_invariance", [](const HjorthAnalysis& h, std::mt19937_64&,
                                               std::size_t& n) -> Witness {
    const auto& sys = h.system();
    for (unsigned a = 1; a <= h.table().stab() + 1; ++a)
      for (std::size_t x = 0; x < sys.num_points(); ++x)
        for (std::size_t v = 0; v < sys.num_basis(); ++v)
          for (std::size_t g = 0; g < sys.group().size(); ++g) {
            const auto t = sys.translate(v, g);
            if (!t) continue;
            ++n;
            if (!h.leq(x, v, sys.act(g, x), *t, Level::at(a))) {
              return "T" + std::to_string(a) + quad(sys, x, v, sys.act(g, x), *t) + "false";
            }
          }
    return std::nullopt;
  });
}

CheckResult Runner::equiv_invariance() {
  return ensemble("equiv_invariance", [](const HjorthAnalysis& h, std::mt19937_64&,
                                         std::size_t& n) -> Witness {
    const auto& sys = h.system();
    const std::size_t nx = sys.num_points();
    for (unsigned a = 1; a <= h.table().stab() + 1; ++a) {
      const Level lv = Level::at(a);
      std::vector<std::vector<bool>> eq(nx, std::vector<bool>(nx));
      for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t y = 0; y < nx; ++y) eq[x][y] = h.equiv(x, y, lv);
      const std::string at = "level" + std::to_string(a) + ":";
      for (std::size_t x = 0; x < nx; ++x) {
        if (!eq[x][x]) return at + "not_reflexive_at_" + sys.point_label(x);
        for (std::size_t y = 0; y < nx; ++y) {
          ++n;
          if (eq[x][y] != eq[y][x]) {
            return at + "not_symmetric_" + sys.point_label(x) + "," + sys.point_label(y);
          }
          for (std::size_t z = 0; z < nx; ++z) {
            if (eq[x][y] && eq[y][z] && !eq[x][z]) {
              return at + "not_transitive_" + sys.point_label(x) + "," + sys.point_label(y) +
                     "," + sys.point_label(z);
            }
          }
          for (std::size_t g = 0; g < sys.group().size(); ++g) {
            if (eq[x][y] != eq[sys.act(g, x)][sys.act(g, y)]) {
              return at + "not_invariant_" + sys.point_label(x) + "," + sys.point_label(y) +
                     "_under_" + sys.group().labels[g];
            }
          }
        }
      }
    }
    return std::nullopt;
  });
}

CheckResult Runner::rank_orbit_invariance() {
  return ensemble("rank_orbit_invariance", [](const HjorthAnalysis& h, std::mt19937_64&,
                                              std::size_t& n) -> Witness {
    const auto& sys = h.system();
    for (std::size_t x = 0; x < sys.num_points(); ++x)
      for (std::size_t g = 0; g < sys.group().size(); ++g) {
        ++n;
        const std::size_t y = sys.act(g, x);
        if (h.rank(x).value != h.rank(y).value) {
          return "rank(" + sys.point_label(x) + ")=" + std::to_string(h.rank(x).value) +
                 "_rank(" + sys.point_label(y) + ")=" + std::to_string(h.rank(y).value);
        }
      }
    return std::nullopt;
  });
}

CheckResult Runner::rank_profile() {
  return ensemble("rank_profile", [](const HjorthAnalysis& h, std::mt19937_64&,
                                     std::size_t& n) -> Witness {
    const auto& sys = h.system();
    for (std::size_t x = 0; x < sys.num_points(); ++x) {
      ++n;
      const auto prof = h.rank_condition_profile(x);
      if (prof.empty() || prof.front() != h.rank(x).value || prof.back() != h.table().stab()) {
        return "profile_of_" + sys.point_label(x) + "_inconsistent_with_rank";
      }
    }
    return std::nullopt;
  });
}

CheckResult Runner::rank_partition() {
  return ensemble("rank_partition", [](const HjorthAnalysis& h, std::mt19937_64&,
                                       std::size_t& n) -> Witness {
    const auto& sys = h.system();
    Bitset seen(sys.num_points());
    for (const auto& part : h.partition_by_rank()) {
      ++n;
      if (part.points.intersects(seen)) return "parts_overlap";
      seen |= part.points;
      Witness w;
      part.points.for_each([&](std::size_t x) {
        for (std::size_t g = 0; g < sys.group().size() && !w; ++g) {
          if (!part.points.test(sys.act(g, x))) {
            w = "part_rank" + std::to_string(part.rank) + "_not_closed_at_" + sys.point_label(x);
          }
        }
      });
      if (w) return w;
    }
    if (seen.count() != sys.num_points()) return "parts_do_not_cover_X";
    return std::nullopt;
  });
}

CheckResult Runner::finite_discrete_collapse() {
  return ensemble("finite_discrete_collapse", [](const HjorthAnalysis& h, std::mt19937_64&,
                                                 std::size_t& n) -> Witness {
    const auto& sys = h.system();
    ++n;
    if (h.table().stab() != 1) return "stab=" + std::to_string(h.table().stab());
    const auto orbits = oracle::orbit_partition(sys);
    for (std::size_t x = 0; x < sys.num_points(); ++x)
      for (std::size_t y = 0; y < sys.num_points(); ++y) {
        ++n;
        const bool same = orbits.orbit_of[x] == orbits.orbit_of[y];
        if (h.equiv(x, y, Level::at(2)) != same) {
          return "level2_equiv(" + sys.point_label(x) + "," + sys.point_label(y) +
                 ")_differs_from_orbit";
        }
      }
    return std::nullopt;
  });
}

CheckResult Runner::action_trace() {
  return ensemble("action_trace", [](const HjorthAnalysis& h, std::mt19937_64&,
                                     std::size_t& n) -> Witness {
    const auto& sys = h.system();
    const std::size_t nb = sys.num_basis();
    const std::size_t nx = sys.num_points();
    for (std::size_t x = 0; x < nx; ++x) {
      const auto trace = encode_action_trace(sys, x);
      if (trace.size() != nb * nx) return "trace_length";
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nx; ++l) {
          ++n;
          bool meets = false;
          for (std::size_t e = 0; e < sys.group().size(); ++e) {
            meets |= sys.group().basis_members[k].test(e) && sys.act(e, x) == l;
          }
          if (trace[diagonal_index(k, l, nb, nx)] != meets) {
            return "trace_bit<" + std::to_string(k) + "," + std::to_string(l) + ">_of_" +
                   sys.point_label(x);
          }
        }
    }
    // With basis {G} the trace of x is its orbit, so orbit mates agree.
    const auto& g = sys.group();
    Bitset all(g.size());
    all.fill();
    const auto gv = sys.basis_for_members(all);
    const auto orbits = oracle::orbit_partition(sys);
    for (std::size_t x = 0; x < nx; ++x)
      for (std::size_t y = 0; y < nx; ++y) {
        if (orbits.orbit_of[x] != orbits.orbit_of[y]) continue;
        ++n;
        for (std::size_t l = 0; l < nx; ++l) {
          if (sys.orbit_set(x, *gv).test(l) != sys.orbit_set(y, *gv).test(l)) {
            return "G_row_differs_for_" + sys.point_label(x) + "," + sys.point_label(y);
          }
        }
      }
    return std::nullopt;
  });
}

CheckResult Runner::orbit_via_rank() {
  return ensemble("orbit_via_rank", [](const HjorthAnalysis& h, std::mt19937_64&,
                                       std::size_t& n) -> Witness {
    const auto& sys = h.system();
    const auto orbits = oracle::orbit_partition(sys);
    for (std::size_t x = 0; x < sys.num_points(); ++x)
      for (std::size_t y = 0; y < sys.num_points(); ++y) {
        ++n;
        const bool same = orbits.orbit_of[x] == orbits.orbit_of[y];
        if (h.orbit_check_via_rank(x, y) != same) {
          return "equiv_at_rank+1(" + sys.point_label(x) + "," + sys.point_label(y) + ")=" +
                 std::to_string(!same) + "_orbit=" + std::to_string(same);
        }
      }
    return std::nullopt;
  });
}

CheckResult Runner::minimal_m() {
  return ensemble("minimal_m", [](const HjorthAnalysis& h, std::mt19937_64&,
                                  std::size_t& n) -> Witness {
    for (std::size_t x = 0; x < h.system().num_points(); ++x) {
      ++n;
      if (!h.minimal_m(x)) return "no_m_for_" + h.system().point_label(x);
    }
    return std::nullopt;
  });
}

CheckResult Runner::stab_invariant_sets() {
  return ensemble("stab_invariant_sets", [](const HjorthAnalysis& h, std::mt19937_64&,
                                            std::size_t& n) -> Witness {
    const auto& sys = h.system();
    if (oracle::orbit_partition(sys).orbits.size() > 4) return std::nullopt;
    const auto sets = oracle::invariant_sets(sys, 4);
    for (std::size_t x = 0; x < sys.num_points(); ++x)
      for (std::size_t y = 0; y < sys.num_points(); ++y) {
        ++n;
        bool same = true;
        for (const auto& s : sets) same = same && s.test(x) == s.test(y);
        if (h.equiv(x, y, Level::stabilized()) != same) {
          return "STAB_equiv(" + sys.point_label(x) + "," + sys.point_label(y) +
                 ")_differs_from_invariant_sets";
        }
      }
    return std::nullopt;
  });
}

CheckResult Runner::vaught_laws() {
  return ensemble("vaught_laws", [](const HjorthAnalysis& h, std::mt19937_64& rng,
                                    std::size_t& n) -> Witness {
    const auto& sys = h.system();
    const auto& g = sys.group();
    const std::size_t nx = sys.num_points();
    Bitset everything(nx);
    everything.fill();
    Bitset whole(g.size());
    whole.fill();
    auto invariant = [&](const Bitset& s) {
      for (std::size_t e = 0; e < g.size(); ++e)
        for (std::size_t x = 0; x < nx; ++x)
          if (s.test(x) != s.test(sys.act(e, x))) return false;
      return true;
    };
    for (int trial = 0; trial < 200; ++trial) {
      ++n;
      const Bitset a = random_subset(rng, nx, false);
      const Bitset a2 = random_subset(rng, nx, false);
      const Bitset u = random_subset(rng, g.size(), true);
      const std::string at = "trial" + std::to_string(trial) + ":";
      // 1: A^delta, A^* invariant; A invariant iff A = A^delta iff A = A^*.
      const Bitset dg = vaught_delta(sys, a, whole);
      const Bitset sg = vaught_star(sys, a, whole);
      if (!invariant(dg) || !invariant(sg)) return at + "item1_transform_not_invariant";
      const bool inv = invariant(a);
      if (inv != (a == dg) || inv != (a == sg)) return at + "item1_invariance_characterization";
      // 2: A^{delta U} = X - (X - A)^{*U}.
      Bitset comp = everything;
      comp -= a;
      Bitset rhs = everything;
      rhs -= vaught_star(sys, comp, u);
      if (vaught_delta(sys, a, u) != rhs) return at + "item2_duality";
      // 3: unions under delta, intersections under star.
      Bitset uni = a;
      uni |= a2;
      Bitset du = vaught_delta(sys, a, u);
      du |= vaught_delta(sys, a2, u);
      if (vaught_delta(sys, uni, u) != du) return at + "item3_union";
      Bitset inter = a;
      inter &= a2;
      Bitset si = vaught_star(sys, a, u);
      si &= vaught_star(sys, a2, u);
      if (vaught_star(sys, inter, u) != si) return at + "item3_intersection";
      // 4 holds vacuously: every subset of a finite discrete space is clopen.
      // 5: A^{*U} = intersection of A^{delta Un} over basis Un inside U.
      Bitset meet = everything;
      for (std::size_t v = 0; v < sys.num_basis(); ++v) {
        if (g.basis_members[v].is_subset_of(u)) meet &= vaught_delta(sys, a, g.basis_members[v]);
      }
      if (vaught_star(sys, a, u) != meet) return at + "item5_basis_intersection";
    }
    return std::nullopt;
  });
}

CheckResult Runner::star_orbit_equivalence() {
  return ensemble("star_orbit_equivalence", [](const HjorthAnalysis& h, std::mt19937_64&,
                                               std::size_t& n) -> Witness {
    const auto& sys = h.system();
    for (std::size_t y = 0; y < sys.num_points(); ++y)
      for (std::size_t w = 0; w < sys.num_basis(); ++w)
        for (std::size_t x = 0; x < sys.num_points(); ++x)
          for (std::size_t v = 0; v < sys.num_basis(); ++v) {
            ++n;
            const auto [star, leq] = h.star_orbit_equivalence_check(y, w, x, v);
            if (star != leq) {
              return quad(sys, y, w, x, v) + "star=" + std::to_string(star) +
                     "_leq=" + std::to_string(leq);
            }
          }
    return std::nullopt;
  });
}

CheckResult Runner::fixed_point_set() {
  return ensemble("fixed_point_set", [](const HjorthAnalysis& h, std::mt19937_64&,
                                        std::size_t& n) -> Witness {
    const auto& sys = h.system();
    for (std::size_t u = 0; u < sys.num_basis(); ++u) {
      ++n;
      const auto z = h.fixed_point_set(sys.group().basis_members[u]);
      if (!z.applicable) return "basis_lacks_singletons";
      if (z.direct != z.via_leq) return "Z_differs_for_U=" + sys.basis_label(u);
    }
    return std::nullopt;
  });
}

CheckResult Runner::rank_comparison() {
  return ensemble("rank_comparison", [](const HjorthAnalysis& h, std::mt19937_64&,
                                        std::size_t& n) -> Witness {
    const auto& sys = h.system();
    for (std::size_t x = 0; x < sys.num_points(); ++x)
      for (std::size_t y = 0; y < sys.num_points(); ++y) {
        ++n;
        const auto c = h.compare_ranks(x, y);
        const auto r = h.compare_ranks(y, x);
        if ((c < 0) != (r > 0) || (c == 0) != (r == 0)) {
          return "not_antisymmetric_" + sys.point_label(x) + "," + sys.point_label(y);
        }
        if (c != (h.rank(x).value <=> h.rank(y).value)) return "disagrees_with_rank_values";
        for (std::size_t g = 0; g < sys.group().size(); ++g) {
          if (h.compare_ranks(sys.act(g, x), y) != c) {
            return "not_orbit_invariant_" + sys.point_label(x) + "," + sys.point_label(y);
          }
        }
      }
    return std::nullopt;
  });
}

CheckResult Runner::basis_shift() {
  return ensemble("basis_shift", [](const HjorthAnalysis& h, std::mt19937_64& rng,
                                    std::size_t& n) -> Witness {
    const auto& sys = h.system();
    const auto& g = sys.group();
    FiniteDiscreteSpec spec;
    spec.size = sys.num_points();
    spec.labels = g.labels;
    spec.perms = g.perms;
    std::vector<BasisSpec> alts{BasisSpec{BasisKind::kSingletonsPlusG, {}}};
    for (int i = 0; i < 2; ++i) alts.push_back(random_subbasis(rng, spec));
    for (const auto& alt : alts) {
      spec.basis = alt;
      const HjorthAnalysis other(build_finite_discrete(spec, g.size()));
      const auto shift = basis_shift_check(h, other);
      for (std::size_t x = 0; x < shift.size(); ++x) {
        ++n;
        if (shift[x] > 1) {
          return "shift=" + std::to_string(shift[x]) + "_at_" + sys.point_label(x) +
                 "_basis=" + to_string(alt);
        }
      }
    }
    return std::nullopt;
  });
}

CheckResult Runner::clopen_subgroup() {
  return ensemble("clopen_subgroup", [](const HjorthAnalysis& h, std::mt19937_64&,
                                        std::size_t& n) -> Witness {
    const auto& sys = h.system();
    const auto& g = sys.group();
    unsigned max_g = 0;
    for (std::size_t x = 0; x < sys.num_points(); ++x) max_g = std::max(max_g, h.rank(x).value);
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t gen = 0; gen < g.size(); ++gen) {
      std::vector<std::size_t> sub{g.identity};
      for (std::size_t p = gen; p != g.identity; p = g.compose(gen, p)) sub.push_back(p);
      std::sort(sub.begin(), sub.end());
      sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
      if (!seen.insert(sub).second) continue;
      FiniteDiscreteSpec spec;
      spec.size = sys.num_points();
      for (auto e : sub) {
        spec.labels.push_back(g.labels[e]);
        spec.perms.push_back(g.perms[e]);
      }
      const HjorthAnalysis ho(build_finite_discrete(spec, sub.size()));
      unsigned max_o = 0;
      for (std::size_t x = 0; x < sys.num_points(); ++x) max_o = std::max(max_o, ho.rank(x).value);
      ++n;
      if (max_o > max_g + 1) {
        return "subgroup<" + g.labels[gen] + ">_rank" + std::to_string(max_o) + ">" +
               std::to_string(max_g) + "+1";
      }
    }
    return std::nullopt;
  });
}

// Iso-class representatives of one-binary-relation structures of sizes 1..3
// plus a seeded sample of size 4, 500 in total.
std::vector<Structure> scott_sample(std::uint64_t seed) {
  const Signature sig = parse_signature_spec("edge:2");
  std::vector<Structure> out;
  for (std::size_t size = 1; size <= 3; ++size) {
    std::set<std::vector<std::uint64_t>> seen;
    for (auto& m : all_structures(sig, size)) {
      if (seen.insert(canonical_key(m)).second) out.push_back(std::move(m));
    }
  }
  std::mt19937_64 rng(seed ^ 0x5c077ull);
  std::set<std::vector<std::uint64_t>> seen;
  while (out.size() < 500) {
    Structure m = random_structure(rng, sig, 4, false);
    if (seen.insert(canonical_key(m)).second) out.push_back(std::move(m));
  }
  return out;
}

CheckResult Runner::scott_oracle() {
  CheckResult out{"scott_oracle", true, "-", 0};
  const auto sample = scott_sample(config_.seed);
  const ScottTable table(sample);
  const unsigned top = table.stab() + 1;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const std::size_t j = (i + 1) % sample.size();
    for (std::size_t other : {i, j}) {
      oracle::NaiveScott naive(sample[i], sample[other]);
      for (std::size_t len = 0; len <= 2; ++len) {
        for (const auto& a : all_tuples(sample[i].size(), len))
          for (const auto& b : all_tuples(sample[other].size(), len))
            for (unsigned lv = 0; lv <= top; ++lv) {
              ++out.instances;
              const bool e = table.equivalent(i, a, other, b, Level::at(lv));
              if (e != naive(a, b, lv)) {
                out.pass = false;
                out.witness = "structures=" + std::to_string(i) + "," + std::to_string(other) +
                              ";a=" + tuple_str(a) + ";b=" + tuple_str(b) +
                              ";level=" + std::to_string(lv) + ";engine=" + std::to_string(e);
                return out;
              }
            }
      }
    }
  }
  return out;
}

CheckResult Runner::scott_invariants() {
  CheckResult out{"scott_invariants", true, "-", 0};
  const auto sample = scott_sample(config_.seed);
  const ScottTable table(sample);
  std::size_t tuples = 0;
  for (std::size_t s = 0; s < sample.size(); ++s)
    for (std::size_t len = 0; len <= table.max_length(); ++len) tuples += table.tuple_count(s, len);
  if (table.stab() > tuples) {
    out.pass = false;
    out.witness = "stab_exceeds_tuple_count";
    return out;
  }
  for (unsigned lv = 0; lv < table.stab() + 1; ++lv) {
    // Each level refines the previous: equal blocks at lv+1 imply equal at lv.
    std::map<std::uint32_t, std::uint32_t> parent;
    for (std::size_t s = 0; s < sample.size(); ++s)
      for (std::size_t len = 0; len <= 2; ++len)
        for (std::size_t i = 0; i < table.tuple_count(s, len); ++i) {
          ++out.instances;
          const Tuple t = table.tuple_at(s, len, i);
          const auto hi = table.block(s, t, Level::at(lv + 1));
          const auto lo = table.block(s, t, Level::at(lv));
          auto [it, fresh] = parent.emplace(hi, lo);
          if (!fresh && it->second != lo) {
            out.pass = false;
            out.witness = "level" + std::to_string(lv + 1) + "_block_spans_two_level" +
                          std::to_string(lv) + "_blocks";
            return out;
          }
        }
  }
  return out;
}

CheckResult Runner::scott_isomorphism() {
  CheckResult out{"scott_isomorphism", true, "-", 0};
  const Signature sig = parse_signature_spec("edge:2");
  std::vector<Structure> reps;
  for (std::size_t size = 1; size <= 4; ++size) {
    const auto all = all_structures(sig, size);
    std::map<std::vector<std::uint64_t>, std::size_t> class_of;
    std::vector<std::size_t> cls(all.size());
    std::vector<std::size_t> first;
    for (std::size_t i = 0; i < all.size(); ++i) {
      auto [it, fresh] = class_of.emplace(canonical_key(all[i]), first.size());
      if (fresh) first.push_back(i);
      cls[i] = it->second;
    }
    // Same size: empty tuples share a stabilized block iff same iso class.
    const ScottTable table(all);
    std::map<std::uint32_t, std::size_t> block_class;
    std::mt19937_64 rng(config_.seed ^ size);
    for (std::size_t i = 0; i < all.size(); ++i) {
      ++out.instances;
      const auto b = table.block(i, {}, Level::stabilized());
      auto [it, fresh] = block_class.emplace(b, cls[i]);
      if (it->second != cls[i]) {
        out.pass = false;
        out.witness = "size" + std::to_string(size) + ";structures=" +
                      std::to_string(first[it->second]) + "," + std::to_string(i) +
                      ";scott_equivalent_but_not_isomorphic";
        return out;
      }
      if (fresh != (first[cls[i]] == i)) {
        out.pass = false;
        out.witness = "size" + std::to_string(size) + ";structure=" + std::to_string(i) +
                      ";isomorphic_structures_split";
        return out;
      }
      {
        if (!brute_isomorphic(all[i], all[first[cls[i]]], {}, {})) {
          out.pass = false;
          out.witness = "size" + std::to_string(size) + ";structure=" + std::to_string(i) +
                        ";canonical_class_not_isomorphic";
          return out;
        }
      }
    }
    if (block_class.size() != first.size()) {
      out.pass = false;
      out.witness = "size" + std::to_string(size) + ";isomorphic_structures_split";
      return out;
    }
    for (auto i : first) reps.push_back(all[i]);
  }
  // Across sizes the empty tuples must always separate.
  const ScottTable mixed(reps);
  std::set<std::uint32_t> blocks;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    ++out.instances;
    if (!blocks.insert(mixed.block(i, {}, Level::stabilized())).second) {
      out.pass = false;
      out.witness = "representative" + std::to_string(i) + "_equivalent_to_another";
      return out;
    }
  }
  return out;
}

CheckResult Runner::scott_rank_ladder() {
  CheckResult out{"scott_rank_ladder", true, "-", 0};
  auto failed = [&](std::string w) {
    out.pass = false;
    out.witness = std::move(w);
    return out;
  };
  if (scott_rank(linear_order(2)).value != 1) return failed("scott_rank(L2)!=1");
  // Naive rank of small linear orders over tuples of length <= m.
  for (std::size_t m = 1; m <= 4; ++m) {
    const Structure lm = linear_order(m);
    oracle::NaiveScott naive(lm, lm);
    unsigned rank = 0;
    for (;; ++rank) {
      bool steps = true;
      for (std::size_t len = 0; len <= m && steps; ++len) {
        const auto ts = all_tuples(m, len);
        for (const auto& a : ts)
          for (const auto& b : ts) {
            ++out.instances;
            if (naive(a, b, rank) && !naive(a, b, rank + 1)) {
              steps = false;
              break;
            }
          }
      }
      if (steps) break;
    }
    if (scott_rank(lm).value != rank) {
      return failed("scott_rank(L" + std::to_string(m) + ")=" +
                    std::to_string(scott_rank(lm).value) + "_naive=" + std::to_string(rank));
    }
  }
  unsigned prev = 0;
  for (std::size_t m = 1; m <= 6; ++m) {
    const Structure a = linear_order(m);
    const Structure b = linear_order(m + 1);
    const auto d = scott_distinguishing_level(a, b);
    oracle::NaiveScott naive(a, b);
    unsigned lv = 0;
    while (naive({}, {}, lv)) ++lv;
    ++out.instances;
    if (!d || *d != lv) {
      return failed("L" + std::to_string(m) + "vsL" + std::to_string(m + 1) + ":engine=" +
                    (d ? std::to_string(*d) : "none") + "_naive=" + std::to_string(lv));
    }
    if (*d < prev) return failed("distinguishing_level_decreases_at_m=" + std::to_string(m));
    prev = *d;
  }
  return out;
}

CheckResult Runner::scott_rank_permutation() {
  CheckResult out{"scott_rank_permutation", true, "-", 0};
  std::mt19937_64 rng(config_.seed ^ 0x9e37ull);
  const Signature sig = parse_signature_spec("edge:2,mark:1");
  for (int i = 0; i < 20; ++i) {
    ++out.instances;
    const std::size_t size = 1 + rng() % 4;
    const Structure m = random_structure(rng, sig, size, false);
    const Permutation p = random_permutation(rng, size);
    if (scott_rank(m).value != scott_rank(m.relabeled(p)).value) {
      out.pass = false;
      out.witness = "instance" + std::to_string(i) + "_rank_changes_under_relabeling";
      return out;
    }
  }
  return out;
}

CheckResult Runner::qf_equivariance() {
  CheckResult out{"qf_equivariance", true, "-", 0};
  std::mt19937_64 rng(config_.seed ^ 0x0f7ull);
  const Signature sig = parse_signature_spec("edge:2,mark:1");
  for (int i = 0; i < 500; ++i) {
    ++out.instances;
    const std::size_t size = 1 + rng() % 4;
    const Structure m = random_structure(rng, sig, size, false);
    const Permutation p = random_permutation(rng, size);
    Tuple t(rng() % 4);
    for (auto& e : t) e = static_cast<Element>(rng() % size);
    Tuple pt = t;
    for (auto& e : pt) e = p[e];
    if (!(qf_type(m, t) == qf_type(m.relabeled(p), pt))) {
      out.pass = false;
      out.witness = "instance" + std::to_string(i) + ";tuple=" + tuple_str(t);
      return out;
    }
  }
  return out;
}

CheckResult Runner::thsigma_iso() {
  CheckResult out{"thsigma_iso", true, "-", 0};
  const Signature sig = parse_signature_spec("edge:2");
  std::mt19937_64 rng(config_.seed ^ 0x7a5ull);
  for (std::size_t size = 1; size <= 4; ++size) {
    for (const auto& m : all_structures(sig, size)) {
      // All relabelings up to size 3, one random relabeling at size 4.
      std::vector<Permutation> perms;
      Permutation p(size);
      std::iota(p.begin(), p.end(), Element{0});
      if (size <= 3) {
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
      } else {
        perms.push_back(random_permutation(rng, size));
      }
      for (const auto& pi : perms) {
        const Structure n = m.relabeled(pi);
        const Tuple a{static_cast<Element>(rng() % size)};
        const Tuple b{pi[a[0]]};
        for (const auto& [ta, tb] : {std::pair{Tuple{}, Tuple{}}, std::pair{a, b}}) {
          ++out.instances;
          if (!brute_isomorphic(m, n, ta, tb)) {
            out.pass = false;
            out.witness = "relabeling_not_recognized_as_isomorphism";
            return out;
          }
          if (!thsigma_contains(n, tb, m, ta) || !thsigma_contains(m, ta, n, tb)) {
            out.pass = false;
            out.witness = "size" + std::to_string(size) + ";isomorphic_pair_with_" +
                          tuple_str(ta) + "->" + tuple_str(tb) + "_fails_thsigma";
            return out;
          }
        }
      }
    }
  }
  return out;
}

// Complete quantifier-free types of (b, c) for every c of length <= cap over
// supp(N), b and cap fresh elements, with c kept injective and disjoint from b
// (repetitions only add equalities already determined by the injective part).
std::set<QfType> realized_types(const Structure& n, const Tuple& b, std::size_t cap) {
  std::vector<Element> window;
  for (Element e = 0; e < n.size(); ++e) {
    if (std::find(b.begin(), b.end(), e) == b.end()) window.push_back(e);
  }
  Element fresh = static_cast<Element>(n.size());
  for (auto e : b) fresh = std::max<Element>(fresh, e + 1);
  for (std::size_t i = 0; i < cap; ++i) window.push_back(fresh + static_cast<Element>(i));
  std::set<QfType> out;
  Tuple cur = b;
  std::vector<bool> used(window.size(), false);
  auto rec = [&](auto&& self) -> void {
    out.insert(qf_type(n, cur));
    if (cur.size() == b.size() + cap) return;
    for (std::size_t i = 0; i < window.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      cur.push_back(window[i]);
      self(self);
      cur.pop_back();
      used[i] = false;
    }
  };
  rec(rec);
  return out;
}

CheckResult Runner::thsigma_cap() {
  CheckResult out{"thsigma_cap", true, "-", 0};
  const Signature sig = parse_signature_spec("edge:2");
  std::vector<Structure> pts;
  for (std::size_t s = 0; s <= 2; ++s) {
    for (const auto& m : all_structures(sig, s)) {
      std::vector<std::vector<Tuple>> facts{m.facts(0)};
      pts.push_back(Structure::supported(sig, s, std::move(facts)));
    }
  }
  std::map<std::pair<std::size_t, std::size_t>, std::set<QfType>> cache;
  auto types = [&](std::size_t i, std::size_t cap) -> const std::set<QfType>& {
    auto it = cache.find({i, cap});
    if (it == cache.end()) it = cache.emplace(std::pair{i, cap}, realized_types(pts[i], {}, cap)).first;
    return it->second;
  };
  std::mt19937_64 rng(config_.seed ^ 0xcabull);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const std::size_t cap = pts[i].size() + pts[j].size() + 1;
      const auto& tn = types(i, cap);
      const auto& tm = types(j, cap);
      const bool at_cap = std::includes(tm.begin(), tm.end(), tn.begin(), tn.end());
      const bool engine = thsigma_contains(pts[i], {}, pts[j], {});
      ++out.instances;
      bool longer = at_cap;
      if (rng() % 8 == 0) {
        const auto& ln = types(i, cap + 2);
        const auto& lm = types(j, cap + 2);
        longer = std::includes(lm.begin(), lm.end(), ln.begin(), ln.end());
        ++out.instances;
      }
      if (engine != at_cap || at_cap != longer) {
        out.pass = false;
        out.witness = "pair=" + std::to_string(i) + "," + std::to_string(j) +
                      ";engine=" + std::to_string(engine) + ";cap=" + std::to_string(at_cap) +
                      ";cap+2=" + std::to_string(longer);
        return out;
      }
    }
  return out;
}

CheckResult Runner::comparison() {
  CheckResult out{"comparison", true, "-", 0};
  for (const char* spec : {"edge:2", ""}) {
    const Signature sig = parse_signature_spec(spec);
    for (std::size_t n = 1; n <= config_.sizes.max_n; ++n) {
      const auto scan = comparison_scan(sig, n, std::min<std::size_t>(2, n));
      out.instances += scan.cases;
      if (scan.counterexamples) {
        out.pass = false;
        out.witness = "signature=" + std::string(*spec ? spec : "empty") + ";n=" +
                      std::to_string(n) + ";" + scan.witnesses.front();
        return out;
      }
    }
  }
  return out;
}

CheckResult Runner::symbolic_cross_validation() {
  // Finite-logic cc in S_{s+2} implies symbolic cc in S_infinity.
  CheckResult out{"symbolic_cross_validation", true, "-", 0};
  const Signature sig = parse_signature_spec("edge:2");
  std::mt19937_64 rng(config_.seed ^ 0x5b0ull);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t s = 1 + rng() % 2;
    const std::size_t k = rng() % (s + 1);
    const std::size_t n = s + 2;
    const Structure ms = random_structure(rng, sig, s, true);
    const Structure ns = random_structure(rng, sig, s, true);
    auto widen = [&](const Structure& m) {
      return Structure::finite(sig, n, std::vector<std::vector<Tuple>>{m.facts(0)});
    };
    const LogicAction fin = build_finite_logic(sig, n, k, {widen(ms), widen(ns)});
    const LogicAction sym = build_symbolic_logic(sig, s, k, {ms, ns});
    const std::size_t fp[2] = {*fin.point_of(widen(ms)), *fin.point_of(widen(ns))};
    for (std::size_t p = 0; p < 2; ++p)
      for (std::size_t q = 0; q < 2; ++q)
        for (std::size_t v0 = 0; v0 < sym.descriptors.size(); ++v0)
          for (std::size_t v1 = 0; v1 < sym.descriptors.size(); ++v1) {
            ++out.instances;
            const std::size_t f0 = fin.basis_of.at(sym.descriptors[v0]);
            const std::size_t f1 = fin.basis_of.at(sym.descriptors[v1]);
            if (fin.system.cc(fp[p], f0, fp[q], f1) && !sym.system.cc(p, v0, q, v1)) {
              out.pass = false;
              out.witness = "trial" + std::to_string(trial) + ";s=" + std::to_string(s) +
                            ";cc" + quad(sym.system, p, v0, q, v1) + "_finite_only";
              return out;
            }
          }
  }
  return out;
}

CheckResult Runner::symbolic_full_group() {
  CheckResult out{"symbolic_full_group", true, "-", 0};
  const Signature sig = parse_signature_spec("edge:2");
  std::vector<Structure> pts;
  for (std::size_t s = 0; s <= 2; ++s) {
    for (const auto& m : all_structures(sig, s)) {
      pts.push_back(Structure::supported(sig, s, std::vector<std::vector<Tuple>>{m.facts(0)}));
    }
  }
  const LogicAction sym = build_symbolic_logic(sig, 2, 0, pts);
  for (std::size_t p = 0; p < pts.size(); ++p)
    for (std::size_t q = 0; q < pts.size(); ++q) {
      ++out.instances;
      const bool th = thsigma_contains(sym.structures[p], {}, sym.structures[q], {});
      if (sym.system.cc(p, 0, q, 0) != th) {
        out.pass = false;
        out.witness = "points=" + std::to_string(p) + "," + std::to_string(q);
        return out;
      }
    }
  return out;
}

CheckResult Runner::symbolic_drift_check() {
  // cc must agree exactly between (s, k) and (s+1, k+1). Levels are compared
  // only when both windows pass the engine's monotonicity validation.
  CheckResult out{"symbolic_drift", true, "-", 0};
  const Signature sig = parse_signature_spec("edge:2");
  std::mt19937_64 rng(config_.seed ^ 0xd1full);
  LogicLimits wide;
  wide.max_support += 1;
  wide.max_k += 1;
  auto failed = [&](int trial, std::size_t s, std::size_t k, const std::string& what) {
    out.pass = false;
    out.witness = "trial" + std::to_string(trial) + ";s=" + std::to_string(s) + ";k=" +
                  std::to_string(k) + ";" + what;
    return out;
  };
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t s = 1 + rng() % 2;
    const std::size_t k = rng() % 2;
    const std::vector<Structure> pts{random_structure(rng, sig, s, true),
                                     random_structure(rng, sig, s, true)};
    const LogicAction base = build_symbolic_logic(sig, s, k, pts);
    const LogicAction big = build_symbolic_logic(sig, s + 1, k + 1, pts, wide);
    const std::size_t nb = base.descriptors.size();
    for (std::size_t x0 = 0; x0 < pts.size(); ++x0)
      for (std::size_t v0 = 0; v0 < nb; ++v0)
        for (std::size_t x1 = 0; x1 < pts.size(); ++x1)
          for (std::size_t v1 = 0; v1 < nb; ++v1) {
            ++out.instances;
            const bool c = base.system.cc(x0, v0, x1, v1);
            const bool w = big.system.cc(x0, big.basis_of.at(base.descriptors[v0]), x1,
                                         big.basis_of.at(base.descriptors[v1]));
            if (c != w) return failed(trial, s, k, "cc" + quad(base.system, x0, v0, x1, v1));
          }
    std::vector<DriftEntry> drift;
    try {
      drift = symbolic_drift(sig, s, k, pts);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInvalidBaseRelation) throw;
      continue;
    }
    ++out.instances;
    if (!drift.empty()) {
      const auto& d = drift.front();
      return failed(trial, s, k,
                    "STAB" + quad(base.system, d.x0, d.v0, d.x1, d.v1) +
                        "base=" + std::to_string(d.base) + ";enlarged=" +
                        std::to_string(d.enlarged));
    }
  }
  return out;
}

const std::map<std::string, CheckResult (Runner::*)()>& check_table() {
  static const std::map<std::string, CheckResult (Runner::*)()> table{
      {"leq_oracle", &Runner::leq_oracle},
      {"base_relation", &Runner::base_relation},
      {"transitivity", &Runner::transitivity},
      {"level_monotonicity", &Runner::level_monotonicity},
      {"set_monotonicity", &Runner::set_monotonicity},
      {"translation_invariance", &Runner::translation_invariance},
      {"equiv_invariance", &Runner::equiv_invariance},
      {"rank_orbit_invariance", &Runner::rank_orbit_invariance},
      {"rank_profile", &Runner::rank_profile},
      {"rank_partition", &Runner::rank_partition},
      {"finite_discrete_collapse", &Runner::finite_discrete_collapse},
      {"action_trace", &Runner::action_trace},
      {"orbit_via_rank", &Runner::orbit_via_rank},
      {"minimal_m", &Runner::minimal_m},
      {"stab_invariant_sets", &Runner::stab_invariant_sets},
      {"vaught_laws", &Runner::vaught_laws},
      {"star_orbit_equivalence", &Runner::star_orbit_equivalence},
      {"fixed_point_set", &Runner::fixed_point_set},
      {"rank_comparison", &Runner::rank_comparison},
      {"basis_shift", &Runner::basis_shift},
      {"clopen_subgroup", &Runner::clopen_subgroup},
      {"scott_oracle", &Runner::scott_oracle},
      {"scott_invariants", &Runner::scott_invariants},
      {"scott_isomorphism", &Runner::scott_isomorphism},
      {"scott_rank_ladder", &Runner::scott_rank_ladder},
      {"scott_rank_permutation", &Runner::scott_rank_permutation},
      {"qf_equivariance", &Runner::qf_equivariance},
      {"thsigma_iso", &Runner::thsigma_iso},
      {"thsigma_cap", &Runner::thsigma_cap},
      {"comparison", &Runner::comparison},
      {"symbolic_cross_validation", &Runner::symbolic_cross_validation},
      {"symbolic_full_group", &Runner::symbolic_full_group},
      {"symbolic_drift", &Runner::symbolic_drift_check},
  };
  return table;
}

const std::map<std::string, std::vector<std::string>>& suites() {
  static const std::map<std::string, std::vector<std::string>> table{
      {"lemmas",
       {"leq_oracle", "base_relation", "transitivity", "level_monotonicity", "set_monotonicity",
        "translation_invariance", "equiv_invariance", "rank_orbit_invariance", "rank_profile",
        "rank_partition", "finite_discrete_collapse", "action_trace"}},
      {"iso",
       {"orbit_via_rank", "minimal_m", "stab_invariant_sets", "scott_oracle", "scott_invariants",
        "scott_isomorphism", "scott_rank_ladder", "scott_rank_permutation", "qf_equivariance",
        "thsigma_iso", "thsigma_cap"}},
      {"vaught", {"vaught_laws", "star_orbit_equivalence", "fixed_point_set", "rank_comparison"}},
      {"comparison",
       {"comparison", "symbolic_cross_validation", "symbolic_full_group", "symbolic_drift"}},
      {"basis", {"basis_shift", "clopen_subgroup"}},
  };
  return table;
}

CheckResult Runner::run(const std::string& name) {
  const auto& table = check_table();
  const auto it = table.find(name);
  if (it == table.end()) fail(ErrorCode::kUsage, "unknown check '" + name + "'");
  try {
    return (this->*(it->second))();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kUsage || e.code() == ErrorCode::kBudget) throw;
    return CheckResult{name, false,
                       clean(error_text(e)), 0};
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemmas", "iso", "vaught", "comparison", "basis",
                                              "all"};
  return names;
}

std::vector<std::string> suite_checks(const std::string& suite) {
  if (suite == "all") {
    std::vector<std::string> out;
    for (const auto& s : suite_names()) {
      if (s == "all") continue;
      const auto& part = suites().at(s);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  const auto it = suites().find(suite);
  if (it == suites().end()) {
    fail(ErrorCode::kUsage,
         "unknown suite '" + suite + "' (expected lemmas, iso, vaught, comparison, basis or all)");
  }
  return it->second;
}

VerificationReport run_suite(const std::string& suite, const VerifyConfig& config) {
  const auto names = suite_checks(suite);
  Runner runner(config);
  VerificationReport report;
  for (const auto& name : names) report.checks.push_back(runner.run(name));
  return report;
}

CheckResult run_check(const std::string& name, const VerifyConfig& config) {
  Runner runner(config);
  return runner.run(name);
}

}  // namespace rankforge
