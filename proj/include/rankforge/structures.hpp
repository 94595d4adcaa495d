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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rankforge/bitset.hpp"

namespace rankforge {

using Element = std::uint32_t;
using Tuple = std::vector<Element>;

struct Relation {
  std::string name;
  unsigned arity = 0;

  friend bool operator==(const Relation&, const Relation&) = default;
};

// Relational vocabulary. Equality is always available and never declared.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<Relation> relations);

  const std::vector<Relation>& relations() const { return relations_; }
  std::size_t size() const { return relations_.size(); }
  bool empty() const { return relations_.empty(); }
  std::optional<std::size_t> find(std::string_view name) const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<Relation> relations_;
};

// Parses "edge:2,lt:2" (empty string = pure equality).
Signature parse_signature_spec(std::string_view spec);

enum class StructureKind { kFinite, kSupported };

// A relational structure that is either finite (universe 0..size-1) or
// finitely supported (universe all naturals, every relation false on tuples
// with an entry >= support). Facts are kept as sorted, duplicate-free tuple
// lists per relation.
class Structure {
 public:
  static Structure finite(Signature signature, std::size_t size,
                          std::vector<std::vector<Tuple>> facts);
  static Structure supported(Signature signature, std::size_t support,
                             std::vector<std::vector<Tuple>> facts);

  StructureKind kind() const { return kind_; }
  bool is_finite() const { return kind_ == StructureKind::kFinite; }
  const Signature& signature() const { return signature_; }
  // Universe size for finite structures, support bound otherwise.
  std::size_t size() const { return size_; }
  const std::vector<Tuple>& facts(std::size_t relation) const {
    return facts_[relation];
  }

  // Whether `e` names an element of the universe.
  bool in_universe(Element e) const { return !is_finite() || e < size_; }

  // Relation lookup by index; no arity or range checks.
  bool holds(std::size_t relation, std::span<const Element> args) const;

  // The image pi*M under a permutation of 0..size-1:
  // R^{pi M}(a1..ak) iff R^M(pi^-1(a1)..pi^-1(ak)).
  Structure relabeled(std::span<const Element> pi) const;

  // Dense fact encoding; equal keys iff equal structures of the same kind.
  const std::vector<std::uint64_t>& key() const { return key_; }

  friend bool operator==(const Structure& a, const Structure& b) {
    return a.kind_ == b.kind_ && a.size_ == b.size_ &&
           a.signature_ == b.signature_ && a.facts_ == b.facts_;
  }

 private:
  Structure(StructureKind kind, Signature signature, std::size_t size,
            std::vector<std::vector<Tuple>> facts);

  StructureKind kind_ = StructureKind::kFinite;
  Signature signature_;
  std::size_t size_ = 0;
  std::vector<std::vector<Tuple>> facts_;
  // Dense truth tables (size^arity bits) per relation, concatenated.
  std::vector<std::size_t> offsets_;
  Bitset dense_;
  std::vector<std::uint64_t> key_;
};

// "=" denotes equality; anything else must be a declared relation.
bool eval_atomic(const Structure& m, std::string_view atom,
                 std::span<const Element> args);

// Truth table of every atomic formula over the entries of a tuple: the full
// equality matrix followed by each relation applied to every index pattern.
struct QfType {
  std::size_t length = 0;
  Bitset table;

  friend bool operator==(const QfType&, const QfType&) = default;
  friend auto operator<=>(const QfType&, const QfType&) = default;
};

QfType qf_type(const Structure& m, std::span<const Element> tuple);

// Th_Sigma(N, b) subset-of Th_Sigma(M, a): every existential sentence with
// parameters b true in N holds with parameters a in M. Decided as existence
// of an embedding of N's relevant part into M sending b to a.
bool thsigma_contains(const Structure& n, std::span<const Element> b,
                      const Structure& m, std::span<const Element> a);

// Exhaustive isomorphism search sending a to b entrywise (sizes <= 8).
bool brute_isomorphic(const Structure& m, const Structure& n,
                      std::span<const Element> a, std::span<const Element> b);

// Linear order on m elements, relation "lt".
Structure linear_order(std::size_t m);

struct NamedStructure {
  std::string id;
  Structure structure;
};

struct StructureFile {
  Signature signature;
  std::vector<NamedStructure> structures;
};

StructureFile parse_structure_file(std::string_view text);
std::string serialize(const StructureFile& file);
// First structure of a structure file.
Structure parse_structure(std::string_view text);

}  // namespace rankforge
