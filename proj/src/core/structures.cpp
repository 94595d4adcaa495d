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

#include "rankforge/structures.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "rankforge/error.hpp"

namespace rankforge {

namespace {

constexpr std::size_t kDenseLimit = std::size_t{1} << 22;

std::size_t checked_power(std::size_t base, unsigned exp) {
  std::size_t out = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && out > kDenseLimit / base) return kDenseLimit + 1;
    out *= base;
  }
  return out;
}

std::string tuple_text(std::span<const Element> t) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ')';
  return os.str();
}

}  // namespace

Signature::Signature(std::vector<Relation> relations)
    : relations_(std::move(relations)) {
  std::set<std::string> seen;
  for (const auto& r : relations_) {
    if (r.arity == 0) {
      fail(ErrorCode::kSchema, "relation '" + r.name + "' has arity 0");
    }
    if (r.name.empty() || r.name == "=") {
      fail(ErrorCode::kSchema, "invalid relation name '" + r.name + "'");
    }
    if (!seen.insert(r.name).second) {
      fail(ErrorCode::kSchema, "duplicate relation '" + r.name + "'");
    }
  }
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    if (relations_[i].name == name) return i;
  }
  return std::nullopt;
}

Signature parse_signature_spec(std::string_view spec) {
  std::vector<Relation> rels;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t end = spec.find(',', pos);
    if (end == std::string_view::npos) end = spec.size();
    std::string_view item = spec.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      fail(ErrorCode::kUsage,
           "signature item '" + std::string(item) + "' must be name:arity");
    }
    Relation r;
    r.name = std::string(item.substr(0, colon));
    try {
      r.arity = static_cast<unsigned>(std::stoul(std::string(item.substr(colon + 1))));
    } catch (const std::exception&) {
      fail(ErrorCode::kUsage, "bad arity in '" + std::string(item) + "'");
    }
    rels.push_back(std::move(r));
  }
  return Signature(std::move(rels));
}

Structure::Structure(StructureKind kind, Signature signature, std::size_t size,
                     std::vector<std::vector<Tuple>> facts)
    : kind_(kind), signature_(std::move(signature)), size_(size),
      facts_(std::move(facts)) {
  if (facts_.size() != signature_.size()) {
    fail(ErrorCode::kSchema, "fact lists do not match the signature");
  }
  std::size_t total = 0;
  for (std::size_t r = 0; r < facts_.size(); ++r) {
    const unsigned arity = signature_.relations()[r].arity;
    for (const auto& t : facts_[r]) {
      if (t.size() != arity) {
        fail(ErrorCode::kSchema, "fact " + signature_.relations()[r].name +
                                     tuple_text(t) + " has wrong arity");
      }
      for (auto e : t) {
        if (e >= size_) {
          fail(ErrorCode::kRange, "fact " + signature_.relations()[r].name +
                                      tuple_text(t) + " leaves the universe");
        }
      }
    }
    std::sort(facts_[r].begin(), facts_[r].end());
    facts_[r].erase(std::unique(facts_[r].begin(), facts_[r].end()),
                    facts_[r].end());
    offsets_.push_back(total);
    const std::size_t cells = checked_power(size_, arity);
    if (cells > kDenseLimit || total + cells > kDenseLimit) {
      fail(ErrorCode::kBudget, "structure too large for dense tables");
    }
    total += cells;
  }
  dense_ = Bitset(total);
  for (std::size_t r = 0; r < facts_.size(); ++r) {
    for (const auto& t : facts_[r]) {
      std::size_t idx = 0;
      for (std::size_t i = t.size(); i-- > 0;) idx = idx * size_ + t[i];
      dense_.set(offsets_[r] + idx);
    }
  }
  key_.push_back(static_cast<std::uint64_t>(kind_));
  key_.push_back(size_);
  for (auto w : dense_.words()) key_.push_back(w);
}

Structure Structure::finite(Signature signature, std::size_t size,
                            std::vector<std::vector<Tuple>> facts) {
  return Structure(StructureKind::kFinite, std::move(signature), size,
                   std::move(facts));
}

Structure Structure::supported(Signature signature, std::size_t support,
                               std::vector<std::vector<Tuple>> facts) {
  return Structure(StructureKind::kSupported, std::move(signature), support,
                   std::move(facts));
}

bool Structure::holds(std::size_t relation,
                      std::span<const Element> args) const {
  std::size_t idx = 0;
  for (std::size_t i = args.size(); i-- > 0;) {
    if (args[i] >= size_) return false;
    idx = idx * size_ + args[i];
  }
  return dense_.test(offsets_[relation] + idx);
}

Structure Structure::relabeled(std::span<const Element> pi) const {
  if (pi.size() != size_) {
    fail(ErrorCode::kSchema, "relabeling must be a permutation of the universe");
  }
  std::vector<std::vector<Tuple>> facts = facts_;
  for (auto& rel : facts) {
    for (auto& t : rel) {
      for (auto& e : t) e = pi[e];
    }
  }
  return Structure(kind_, signature_, size_, std::move(facts));
}

bool eval_atomic(const Structure& m, std::string_view atom,
                 std::span<const Element> args) {
  for (auto e : args) {
    if (!m.in_universe(e)) {
      fail(ErrorCode::kRange,
           "element " + std::to_string(e) + " is outside the universe");
    }
  }
  if (atom == "=") {
    if (args.size() != 2) fail(ErrorCode::kSchema, "equality takes 2 arguments");
    return args[0] == args[1];
  }
  const auto r = m.signature().find(atom);
  if (!r) fail(ErrorCode::kSchema, "unknown relation '" + std::string(atom) + "'");
  if (m.signature().relations()[*r].arity != args.size()) {
    fail(ErrorCode::kSchema, "arity mismatch for '" + std::string(atom) + "'");
  }
  return m.holds(*r, args);
}

QfType qf_type(const Structure& m, std::span<const Element> tuple) {
  for (auto e : tuple) {
    if (!m.in_universe(e)) {
      fail(ErrorCode::kRange,
           "element " + std::to_string(e) + " is outside the universe");
    }
  }
  const std::size_t k = tuple.size();
  std::size_t bits = k * k;
  for (const auto& r : m.signature().relations()) {
    bits += checked_power(k, r.arity);
  }
  QfType out{k, Bitset(bits)};
  std::size_t pos = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) out.table.set(pos++, tuple[i] == tuple[j]);
  }
  if (k == 0) return out;
  std::vector<std::size_t> idx;
  Tuple args;
  for (std::size_t r = 0; r < m.signature().size(); ++r) {
    const unsigned arity = m.signature().relations()[r].arity;
    idx.assign(arity, 0);
    args.assign(arity, 0);
    while (true) {
      for (unsigned i = 0; i < arity; ++i) args[i] = tuple[idx[i]];
      out.table.set(pos++, m.holds(r, args));
      unsigned i = 0;
      while (i < arity && ++idx[i] == k) idx[i++] = 0;
      if (i == arity) break;
    }
  }
  return out;
}

namespace {

void check_same_signature(const Structure& a, const Structure& b) {
  if (a.signature() != b.signature()) {
    fail(ErrorCode::kSchema, "structures have different signatures");
  }
}

// Backtracking embedding search used by thsigma_contains.
class EmbeddingSearch {
 public:
  EmbeddingSearch(const Structure& src, const Structure& dst)
      : src_(src), dst_(dst) {}

  bool run(std::span<const Element> b, std::span<const Element> a) {
    // Forced part: b_i -> a_i with matching equality pattern.
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        if ((b[i] == b[j]) != (a[i] == a[j])) return false;
      }
    }
    std::set<Element> used;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (std::find(domain_.begin(), domain_.end(), b[i]) != domain_.end()) continue;
      domain_.push_back(b[i]);
      image_.push_back(a[i]);
      used.insert(a[i]);
      if (!consistent_last()) return false;
    }
    free_.clear();
    for (Element e = 0; e < src_.size(); ++e) {
      if (std::find(domain_.begin(), domain_.end(), e) == domain_.end()) {
        free_.push_back(e);
      }
    }
    fresh_base_ = static_cast<Element>(dst_.size());
    for (auto e : a) fresh_base_ = std::max<Element>(fresh_base_, e + 1);
    used_ = std::move(used);
    return extend(0);
  }

 private:
  bool extend(std::size_t next) {
    if (next == free_.size()) return true;
    domain_.push_back(free_[next]);
    image_.push_back(0);
    for (Element target = 0; target < dst_.size(); ++target) {
      if (used_.count(target)) continue;
      if (try_target(next, target)) return true;
    }
    if (!dst_.is_finite()) {
      // Off-support targets are interchangeable; the least unused one stands
      // for all of them.
      Element fresh = fresh_base_;
      while (used_.count(fresh)) ++fresh;
      if (try_target(next, fresh)) return true;
    }
    domain_.pop_back();
    image_.pop_back();
    return false;
  }

  bool try_target(std::size_t next, Element target) {
    image_.back() = target;
    if (!consistent_last()) return false;
    used_.insert(target);
    const bool ok = extend(next + 1);
    used_.erase(target);
    return ok;
  }

  // Checks every atomic relation fact among assigned elements that involves
  // the most recently assigned one.
  bool consistent_last() const {
    const std::size_t p = domain_.size() - 1;
    const std::size_t k = domain_.size();
    std::vector<std::size_t> idx;
    Tuple s, d;
    for (std::size_t r = 0; r < src_.signature().size(); ++r) {
      const unsigned arity = src_.signature().relations()[r].arity;
      idx.assign(arity, 0);
      s.assign(arity, 0);
      d.assign(arity, 0);
      while (true) {
        bool touches = false;
        for (unsigned i = 0; i < arity; ++i) {
          touches |= idx[i] == p;
          s[i] = domain_[idx[i]];
          d[i] = image_[idx[i]];
        }
        if (touches && src_.holds(r, s) != dst_.holds(r, d)) return false;
        unsigned i = 0;
        while (i < arity && ++idx[i] == k) idx[i++] = 0;
        if (i == arity) break;
      }
    }
    return true;
  }

  const Structure& src_;
  const Structure& dst_;
  std::vector<Element> domain_;
  std::vector<Element> image_;
  std::vector<Element> free_;
  std::set<Element> used_;
  Element fresh_base_ = 0;
};

}  // namespace

bool thsigma_contains(const Structure& n, std::span<const Element> b,
                      const Structure& m, std::span<const Element> a) {
  if (a.size() != b.size()) fail(ErrorCode::kSchema, "tuple length mismatch");
  check_same_signature(n, m);
  if (n.kind() != m.kind()) {
    fail(ErrorCode::kSchema, "cannot compare finite and supported structures");
  }
  for (auto e : b) {
    if (!n.in_universe(e)) fail(ErrorCode::kRange, "parameter outside universe");
  }
  for (auto e : a) {
    if (!m.in_universe(e)) fail(ErrorCode::kRange, "parameter outside universe");
  }
  EmbeddingSearch search(n, m);
  return search.run(b, a);
}

bool brute_isomorphic(const Structure& m, const Structure& n,
                      std::span<const Element> a, std::span<const Element> b) {
  if (a.size() != b.size()) fail(ErrorCode::kSchema, "tuple length mismatch");
  check_same_signature(m, n);
  if (!m.is_finite() || !n.is_finite()) {
    fail(ErrorCode::kSchema, "brute_isomorphic needs finite structures");
  }
  if (m.size() != n.size()) return false;
  if (m.size() > 8) fail(ErrorCode::kBudget, "brute_isomorphic supports size <= 8");
  for (std::size_t r = 0; r < m.signature().size(); ++r) {
    if (m.facts(r).size() != n.facts(r).size()) return false;
  }
  std::vector<Element> pi(m.size());
  std::iota(pi.begin(), pi.end(), Element{0});
  Tuple image;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) ok = pi[a[i]] == b[i];
    for (std::size_t r = 0; r < m.signature().size() && ok; ++r) {
      for (const auto& t : m.facts(r)) {
        image.resize(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) image[i] = pi[t[i]];
        if (!n.holds(r, image)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return false;
}

Structure linear_order(std::size_t m) {
  std::vector<std::vector<Tuple>> facts(1);
  for (Element i = 0; i < m; ++i) {
    for (Element j = i + 1; j < m; ++j) facts[0].push_back({i, j});
  }
  return Structure::finite(Signature({{"lt", 2}}), m, std::move(facts));
}

}  // namespace rankforge
