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

#include "rankforge/generators.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>

#include "rankforge/error.hpp"

namespace rankforge {

namespace {

std::size_t parse_value(std::string_view key, std::string_view v) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    fail(ErrorCode::kUsage, "bad value for '" + std::string(key) + "' in --sizes");
  }
  return value;
}

}  // namespace

GeneratorSizes parse_sizes(std::string_view text) {
  GeneratorSizes out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) {
      if (end == text.size()) break;
      continue;
    }
    std::size_t key_end = 0;
    while (key_end < item.size() && std::isalpha(static_cast<unsigned char>(item[key_end]))) {
      ++key_end;
    }
    const std::string_view key = item.substr(0, key_end);
    std::string_view rest = item.substr(key_end);
    for (std::string_view op : {"<=", "\xE2\x89\xA4", "="}) {
      if (rest.substr(0, op.size()) == op) {
        rest.remove_prefix(op.size());
        break;
      }
    }
    const std::size_t value = parse_value(key, rest);
    if (key == "g") {
      out.max_group = value;
    } else if (key == "x") {
      out.max_points = value;
    } else if (key == "n") {
      out.max_n = value;
    } else if (key == "count") {
      out.count = value;
    } else {
      fail(ErrorCode::kUsage, "unknown size key '" + std::string(key) + "'");
    }
    if (end == text.size()) break;
  }
  if (out.max_group == 0 || out.max_points == 0) {
    fail(ErrorCode::kUsage, "group and space sizes must be positive");
  }
  return out;
}

std::string to_string(const GeneratorSizes& s) {
  return "g<=" + std::to_string(s.max_group) + ",x<=" + std::to_string(s.max_points) +
         ",n<=" + std::to_string(s.max_n) + ",count=" + std::to_string(s.count);
}

FiniteDiscreteSpec GeneratedCase::spec(const BasisSpec& basis) const {
  FiniteDiscreteSpec out;
  out.size = points;
  out.basis = basis;
  Permutation id(points);
  std::iota(id.begin(), id.end(), Element{0});
  std::map<Permutation, std::size_t> seen{{id, 0}};
  out.perms.push_back(id);
  for (std::size_t i = 0; i < out.perms.size(); ++i) {
    for (const auto& gen : generators) {
      Permutation p(points);
      for (std::size_t x = 0; x < points; ++x) p[x] = gen[out.perms[i][x]];
      if (seen.emplace(p, out.perms.size()).second) out.perms.push_back(std::move(p));
    }
  }
  out.labels.push_back("e");
  for (std::size_t i = 1; i < out.perms.size(); ++i) out.labels.push_back("g" + std::to_string(i));
  return out;
}

ActionSystem GeneratedCase::build(const BasisSpec& basis) const {
  const auto s = spec(basis);
  ActionSystem sys = build_finite_discrete(s, s.perms.size());
  if (!mutation) return sys;
  Bitset all(s.perms.size());
  all.fill();
  const auto g = sys.basis_for_members(all);
  if (!g) return sys;
  return sys.with_cc_entry(mutation->first, *g, mutation->second, *g, true);
}

std::string GeneratedCase::describe() const {
  std::string out = "X=" + std::to_string(points) + ";gens=";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) out += '/';
    for (std::size_t x = 0; x < generators[i].size(); ++x) {
      if (x) out += '.';
      out += std::to_string(generators[i][x]);
    }
  }
  if (generators.empty()) out += "none";
  if (mutation) {
    out += ";mutate=cc(" + std::to_string(mutation->first) + ",G," +
           std::to_string(mutation->second) + ",G)";
  }
  return out;
}

Permutation random_cycle_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), Element{0});
  std::shuffle(order.begin(), order.end(), rng);
  Permutation p(n);
  std::iota(p.begin(), p.end(), Element{0});
  std::uniform_int_distribution<std::size_t> len_dist(1, 4);
  std::size_t i = 0;
  while (i < n) {
    const std::size_t len = std::min(len_dist(rng), n - i);
    for (std::size_t j = 0; j < len; ++j) p[order[i + j]] = order[i + (j + 1) % len];
    i += len;
  }
  return p;
}

std::vector<GeneratedCase> generate_ensemble(std::uint64_t seed, const GeneratorSizes& sizes) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> points_dist(1, sizes.max_points);
  std::uniform_int_distribution<std::size_t> gens_dist(1, 2);
  std::vector<GeneratedCase> out;
  while (out.size() < sizes.count) {
    GeneratedCase c;
    c.points = points_dist(rng);
    const std::size_t gens = gens_dist(rng);
    for (std::size_t i = 0; i < gens; ++i) {
      c.generators.push_back(random_cycle_permutation(rng, c.points));
    }
    if (c.spec(BasisSpec{}).perms.size() > sizes.max_group) continue;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<GeneratedCase> shrink_candidates(const GeneratedCase& c) {
  std::vector<GeneratedCase> out;
  for (std::size_t i = 0; i < c.generators.size(); ++i) {
    GeneratedCase d = c;
    d.generators.erase(d.generators.begin() + static_cast<std::ptrdiff_t>(i));
    out.push_back(std::move(d));
  }
  // Orbits of the generated group; remove one and renumber the rest.
  const auto s = c.spec(BasisSpec{});
  std::vector<std::size_t> orbit(c.points, SIZE_MAX);
  std::size_t count = 0;
  for (std::size_t x = 0; x < c.points; ++x) {
    if (orbit[x] != SIZE_MAX) continue;
    for (const auto& p : s.perms) orbit[p[x]] = count;
    ++count;
  }
  if (count < 2) return out;
  for (std::size_t o = 0; o < count; ++o) {
    std::vector<std::size_t> renum(c.points, SIZE_MAX);
    std::size_t next = 0;
    for (std::size_t x = 0; x < c.points; ++x) {
      if (orbit[x] != o) renum[x] = next++;
    }
    GeneratedCase d;
    d.points = next;
    for (const auto& gen : c.generators) {
      Permutation p(next);
      for (std::size_t x = 0; x < c.points; ++x) {
        if (renum[x] != SIZE_MAX) p[renum[x]] = static_cast<Element>(renum[gen[x]]);
      }
      d.generators.push_back(std::move(p));
    }
    if (c.mutation) {
      const auto [a, b] = *c.mutation;
      if (renum[a] == SIZE_MAX || renum[b] == SIZE_MAX) continue;
      d.mutation = std::make_pair(renum[a], renum[b]);
    }
    out.push_back(std::move(d));
  }
  return out;
}

BasisSpec random_subbasis(std::mt19937_64& rng, const FiniteDiscreteSpec& spec) {
  const std::size_t n = spec.perms.size();
  if (n >= 20) fail(ErrorCode::kBudget, "random subbasis of a group this large");
  BasisSpec out{BasisKind::kExplicit, {}};
  std::bernoulli_distribution keep(0.25);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const bool single = (mask & (mask - 1)) == 0;
    if (!single && !keep(rng)) continue;
    std::vector<std::string> set;
    for (std::size_t e = 0; e < n; ++e) {
      if ((mask >> e) & 1) set.push_back(spec.labels[e]);
    }
    out.sets.push_back(std::move(set));
  }
  return out;
}

}  // namespace rankforge
