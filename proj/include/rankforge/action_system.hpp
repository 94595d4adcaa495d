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
#include <optional>
#include <string>
#include <vector>

#include "rankforge/bitset.hpp"
#include "rankforge/structures.hpp"

namespace rankforge {

using Permutation = std::vector<Element>;

// Default bound on |X|^2 |B|^2, the bit size of one level of a relation table.
inline constexpr std::size_t kDefaultTableBits = std::size_t{1} << 28;

// A finite group given by a faithful permutation representation `perms`,
// together with its action on the points of a system (`action[g][x]`). For
// finite-discrete systems both coincide. Basis elements of a system with a
// group are subsets of the group.
struct GroupData {
  std::vector<std::string> labels;
  std::vector<Permutation> perms;
  std::vector<std::vector<std::size_t>> action;
  std::size_t identity = 0;
  std::vector<std::size_t> inverse;
  // product[g * size + h] = index of g o h (apply h first).
  std::vector<std::size_t> product;
  std::vector<Bitset> basis_members;

  std::size_t size() const { return perms.size(); }
  std::size_t compose(std::size_t g, std::size_t h) const {
    return product[g * perms.size() + h];
  }

  // Fills inverse/product/identity from perms. Throws kInvalidSystem if the
  // permutations are not a group or repeat.
  void close_tables();
};

// A finite abstract action system: points, basis elements with containment
// and fineness, and the base relation cc(x0,V0,x1,V1) standing for
// closure(V0.x0) subset-of closure(V1.x1). Immutable after construction.
class ActionSystem {
 public:
  struct Parts {
    std::string description;
    std::vector<std::string> point_labels;
    std::vector<std::string> basis_labels;
    // contains[W] = {V : W subset-of V}; fine[W] = {V : closure(W) subset-of V}.
    std::vector<Bitset> contains_up;
    std::vector<Bitset> fine_up;
    // cc_rows[(x0 * |B| + V0) * |X| + x1] = {V1 : cc(x0,V0,x1,V1)}.
    std::vector<Bitset> cc_rows;
    std::optional<GroupData> group;
  };

  // Validates: contains is a partial order, fine implies contains, cc is
  // reflexive. Throws kInvalidSystem naming the offending entry.
  explicit ActionSystem(Parts parts);

  const std::string& description() const { return parts_.description; }
  std::size_t num_points() const { return parts_.point_labels.size(); }
  std::size_t num_basis() const { return parts_.basis_labels.size(); }
  const std::string& point_label(std::size_t x) const { return parts_.point_labels[x]; }
  const std::string& basis_label(std::size_t v) const { return parts_.basis_labels[v]; }
  std::optional<std::size_t> find_point(const std::string& label) const;
  std::optional<std::size_t> find_basis(const std::string& label) const;

  bool contains(std::size_t w, std::size_t v) const { return parts_.contains_up[w].test(v); }
  bool fine(std::size_t w, std::size_t v) const { return parts_.fine_up[w].test(v); }
  // {V : W subset-of V}
  const Bitset& up(std::size_t w) const { return parts_.contains_up[w]; }
  // {W : W subset-of V}
  const Bitset& down(std::size_t v) const { return contains_down_[v]; }
  // {V : fine(W, V)}
  const Bitset& fine_up(std::size_t w) const { return parts_.fine_up[w]; }

  bool cc(std::size_t x0, std::size_t v0, std::size_t x1, std::size_t v1) const {
    return cc_row(x0, v0, x1).test(v1);
  }
  const Bitset& cc_row(std::size_t x0, std::size_t v0, std::size_t x1) const {
    return parts_.cc_rows[(x0 * num_basis() + v0) * num_points() + x1];
  }

  bool has_group() const { return parts_.group.has_value(); }
  // Throws kUnsupported when the system exposes no group.
  const GroupData& group() const;
  std::size_t act(std::size_t g, std::size_t x) const { return group().action[g][x]; }
  // V.x as a point set.
  Bitset orbit_set(std::size_t x, std::size_t v) const;
  // Index of V.g^-1 if it is a basis element.
  std::optional<std::size_t> translate(std::size_t v, std::size_t g) const;
  std::optional<std::size_t> basis_for_members(const Bitset& members) const;

  // Copy with one cc entry overwritten (fault injection for the verifier).
  ActionSystem with_cc_entry(std::size_t x0, std::size_t v0, std::size_t x1,
                             std::size_t v1, bool value) const;

  const Parts& parts() const { return parts_; }

 private:
  Parts parts_;
  std::vector<Bitset> contains_down_;
};

}  // namespace rankforge
