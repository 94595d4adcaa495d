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

#include "rankforge/scott.hpp"

#include <algorithm>

#include "rankforge/error.hpp"
#include "vec_hash.hpp"

namespace rankforge {

namespace {

constexpr std::size_t kTupleBudget = std::size_t{1} << 25;

using Interner = detail::FlatInterner;

std::uint32_t intern(Interner& table, const std::vector<std::uint64_t>& key) {
  return table.intern(key);
}

// First (i, j), i < j, with t[i] == t[j], ordered by j then i. Equal
// repetition patterns give equal answers.
std::optional<std::pair<std::size_t, std::size_t>> first_repeat(
    std::span<const Element> t) {
  for (std::size_t j = 1; j < t.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (t[i] == t[j]) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

bool same_pattern(std::span<const Element> a, std::span<const Element> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if ((a[i] == a[j]) != (b[i] == b[j])) return false;
    }
  }
  return true;
}

}  // namespace

ScottTable::ScottTable(std::vector<Structure> family)
    : family_(std::move(family)) {
  for (const auto& m : family_) {
    if (!m.is_finite()) fail(ErrorCode::kSchema, "Scott tables need finite structures");
    if (m.signature() != family_.front().signature()) {
      fail(ErrorCode::kSchema, "family members must share a signature");
    }
    max_length_ = std::max(max_length_, m.size());
  }
  for (const auto& m : family_) {
    std::vector<std::size_t> offs;
    std::size_t count = 1;
    for (std::size_t len = 0; len <= max_length_; ++len) {
      offs.push_back(total_);
      total_ += count;
      if (total_ > kTupleBudget) {
        fail(ErrorCode::kBudget, "Scott table exceeds the tuple budget");
      }
      count *= m.size();
    }
    offsets_.push_back(std::move(offs));
  }
  build_level_zero();
  while (refine()) {
  }
}

std::size_t ScottTable::tuple_count(std::size_t structure, std::size_t length) const {
  std::size_t count = 1;
  for (std::size_t i = 0; i < length; ++i) count *= family_[structure].size();
  return count;
}

Tuple ScottTable::tuple_at(std::size_t structure, std::size_t length,
                           std::size_t index) const {
  const std::size_t n = family_[structure].size();
  Tuple t(length);
  for (std::size_t i = length; i-- > 0;) {
    t[i] = static_cast<Element>(index % n);
    index /= n;
  }
  return t;
}

std::size_t ScottTable::global_index(std::size_t structure,
                                     std::span<const Element> t) const {
  const std::size_t n = family_[structure].size();
  std::size_t idx = 0;
  for (auto e : t) {
    if (e >= n) fail(ErrorCode::kRange, "tuple entry outside the universe");
    idx = idx * n + e;
  }
  return offsets_[structure][t.size()] + idx;
}

void ScottTable::build_level_zero() {
  std::vector<std::uint32_t> level(total_);
  Interner ids;
  std::vector<std::uint64_t> key;
  std::vector<std::size_t> idx;
  Tuple args;
  for (std::size_t s = 0; s < family_.size(); ++s) {
    const Structure& m = family_[s];
    const std::size_t n = m.size();
    key = {0};
    level[offsets_[s][0]] = intern(ids, key);
    for (std::size_t len = 1; len <= max_length_ && n > 0; ++len) {
      const std::size_t count = tuple_count(s, len);
      const std::size_t p = len - 1;
      for (std::size_t j = 0; j < count; ++j) {
        const Tuple u = tuple_at(s, len, j);
        // The type of u is the type of its prefix plus every atom that
        // mentions the last position.
        key.assign({len, level[offsets_[s][p] + j / n]});
        std::uint64_t word = 0;
        unsigned nbits = 0;
        auto push = [&](bool bit) {
          word |= static_cast<std::uint64_t>(bit) << nbits;
          if (++nbits == 64) {
            key.push_back(word);
            word = 0;
            nbits = 0;
          }
        };
        for (std::size_t i = 0; i < p; ++i) push(u[i] == u[p]);
        for (std::size_t r = 0; r < m.signature().size(); ++r) {
          const unsigned arity = m.signature().relations()[r].arity;
          idx.assign(arity, 0);
          args.assign(arity, 0);
          while (true) {
            bool touches = false;
            for (unsigned i = 0; i < arity; ++i) {
              touches |= idx[i] == p;
              args[i] = u[idx[i]];
            }
            if (touches) push(m.holds(r, args));
            unsigned i = 0;
            while (i < arity && ++idx[i] == len) idx[i++] = 0;
            if (i == arity) break;
          }
        }
        key.push_back(word);
        level[offsets_[s][len] + j] = intern(ids, key);
      }
    }
  }
  levels_.push_back(std::move(level));
  counts_.push_back(ids.size());
}

const std::vector<std::pair<std::uint64_t, std::size_t>>& ScottTable::extensions(
    std::size_t n) {
  auto& ext = extensions_[n];
  if (!ext.empty() || n == 0) return ext;
  // One step past the table: drop the first repeated position.
  std::size_t count = 1;
  for (std::size_t i = 0; i < max_length_; ++i) count *= n;
  ext.reserve(count * n);
  Tuple u;
  for (std::size_t j = 0; j < count; ++j) {
    for (std::size_t c = 0; c < n; ++c) {
      u.assign(max_length_, 0);
      std::size_t rest = j;
      for (std::size_t i = max_length_; i-- > 0;) {
        u[i] = static_cast<Element>(rest % n);
        rest /= n;
      }
      u.push_back(static_cast<Element>(c));
      const auto rep = first_repeat(u);
      u.erase(u.begin() + static_cast<std::ptrdiff_t>(rep->second));
      std::size_t idx = 0;
      for (auto e : u) idx = idx * n + e;
      ext.emplace_back((std::uint64_t{1} << 63) |
                           (static_cast<std::uint64_t>(rep->first) << 50) |
                           (static_cast<std::uint64_t>(rep->second) << 42),
                       idx);
    }
  }
  return ext;
}

bool ScottTable::refine() {
  const auto& prev = levels_.back();
  std::vector<std::uint32_t> next(total_);
  Interner ids;
  std::vector<std::uint64_t> key;
  for (std::size_t s = 0; s < family_.size(); ++s) {
    const std::size_t n = family_[s].size();
    for (std::size_t len = 0; len <= max_length_; ++len) {
      const std::size_t count = tuple_count(s, len);
      const std::size_t base = offsets_[s][len];
      const bool last = len == max_length_;
      const auto* ext = last ? &extensions(n) : nullptr;
      for (std::size_t j = 0; j < count; ++j) {
        const std::size_t g = base + j;
        key.assign({prev[g]});
        for (std::size_t c = 0; c < n; ++c) {
          if (!last) {
            key.push_back(prev[offsets_[s][len + 1] + j * n + c]);
          } else {
            const auto& [tag, idx] = (*ext)[j * n + c];
            key.push_back(tag | prev[base + idx]);
          }
        }
        std::sort(key.begin() + 1, key.end());
        key.erase(std::unique(key.begin() + 1, key.end()), key.end());
        next[g] = intern(ids, key);
      }
    }
  }
  if (ids.size() == counts_.back()) {
    stab_ = static_cast<unsigned>(levels_.size() - 1);
    return false;
  }
  levels_.push_back(std::move(next));
  counts_.push_back(ids.size());
  return true;
}

std::uint32_t ScottTable::block(std::size_t structure,
                                std::span<const Element> tuple,
                                Level level) const {
  if (tuple.size() > max_length_) {
    fail(ErrorCode::kRange, "tuple longer than the tabulated range");
  }
  return levels_[level.resolve(stab_)][global_index(structure, tuple)];
}

std::size_t ScottTable::block_count(Level level) const {
  return counts_[level.resolve(stab_)];
}

bool ScottTable::equivalent(std::size_t s1, std::span<const Element> t1,
                            std::size_t s2, std::span<const Element> t2,
                            Level level) const {
  if (t1.size() != t2.size()) fail(ErrorCode::kSchema, "tuple length mismatch");
  Tuple a(t1.begin(), t1.end());
  Tuple b(t2.begin(), t2.end());
  for (auto e : a) {
    if (e >= family_[s1].size()) fail(ErrorCode::kRange, "tuple entry outside the universe");
  }
  for (auto e : b) {
    if (e >= family_[s2].size()) fail(ErrorCode::kRange, "tuple entry outside the universe");
  }
  if (a.size() > max_length_) {
    if (!same_pattern(a, b)) return false;
    while (a.size() > max_length_) {
      const auto rep = first_repeat(a);
      a.erase(a.begin() + static_cast<std::ptrdiff_t>(rep->second));
      b.erase(b.begin() + static_cast<std::ptrdiff_t>(rep->second));
    }
  }
  return block(s1, a, level) == block(s2, b, level);
}

bool scott_equiv(const Structure& m, std::span<const Element> a,
                 const Structure& n, std::span<const Element> b, Level level) {
  if (a.size() != b.size()) fail(ErrorCode::kSchema, "tuple length mismatch");
  const ScottTable table({m, n});
  return table.equivalent(0, a, 1, b, level);
}

ScottTable scott_table(std::vector<Structure> family) {
  return ScottTable(std::move(family));
}

ScottRank scott_rank(const Structure& m) {
  // With a single structure, "level a implies level a+1 on all tuple pairs"
  // is exactly partition stabilization.
  const ScottTable table({m});
  return {table.stab(), table.stab()};
}

bool scott_iso_check(const Structure& m, const Structure& n) {
  const ScottTable table({m, n});
  return table.equivalent(0, {}, 1, {}, Level::stabilized());
}

std::optional<unsigned> scott_distinguishing_level(const Structure& m,
                                                   const Structure& n) {
  const ScottTable table({m, n});
  for (unsigned level = 0; level <= table.stab(); ++level) {
    if (!table.equivalent(0, {}, 1, {}, Level::at(level))) return level;
  }
  return std::nullopt;
}

}  // namespace rankforge
