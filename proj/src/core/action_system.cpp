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

#include "rankforge/action_system.hpp"

#include <map>

#include "rankforge/error.hpp"

namespace rankforge {

void GroupData::close_tables() {
  const std::size_t n = perms.size();
  if (n == 0) fail(ErrorCode::kInvalidSystem, "group has no elements");
  std::map<Permutation, std::size_t> index;
  for (std::size_t g = 0; g < n; ++g) {
    if (!index.emplace(perms[g], g).second) {
      fail(ErrorCode::kInvalidSystem,
           "elements '" + labels[index[perms[g]]] + "' and '" + labels[g] +
               "' act identically (action must be faithful)");
    }
  }
  const std::size_t points = perms.front().size();
  Permutation id(points);
  for (std::size_t i = 0; i < points; ++i) id[i] = static_cast<Element>(i);
  const auto id_it = index.find(id);
  if (id_it == index.end()) fail(ErrorCode::kInvalidSystem, "group lacks the identity");
  identity = id_it->second;

  product.assign(n * n, 0);
  inverse.assign(n, 0);
  Permutation tmp(points);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      for (std::size_t x = 0; x < points; ++x) tmp[x] = perms[g][perms[h][x]];
      const auto it = index.find(tmp);
      if (it == index.end()) {
        fail(ErrorCode::kInvalidSystem, "not closed under composition: " +
                                            labels[g] + " o " + labels[h]);
      }
      product[g * n + h] = it->second;
    }
    for (std::size_t x = 0; x < points; ++x) tmp[perms[g][x]] = static_cast<Element>(x);
    const auto it = index.find(tmp);
    if (it == index.end()) {
      fail(ErrorCode::kInvalidSystem, "not closed under inverse: " + labels[g]);
    }
    inverse[g] = it->second;
  }
}

ActionSystem::ActionSystem(Parts parts) : parts_(std::move(parts)) {
  const std::size_t nx = num_points();
  const std::size_t nb = num_basis();
  if (nx == 0) fail(ErrorCode::kInvalidSystem, "system has no points");
  if (nb == 0) fail(ErrorCode::kInvalidSystem, "system has an empty basis");
  if (parts_.contains_up.size() != nb || parts_.fine_up.size() != nb ||
      parts_.cc_rows.size() != nx * nb * nx) {
    fail(ErrorCode::kInvalidSystem, "system tables have inconsistent sizes");
  }
  contains_down_.assign(nb, Bitset(nb));
  for (std::size_t w = 0; w < nb; ++w) {
    if (!contains(w, w)) {
      fail(ErrorCode::kInvalidSystem, "contains is not reflexive at " + basis_label(w));
    }
    parts_.contains_up[w].for_each([&](std::size_t v) {
      contains_down_[v].set(w);
      if (v != w && contains(v, w)) {
        fail(ErrorCode::kInvalidSystem, "contains is not antisymmetric: " +
                                            basis_label(w) + ", " + basis_label(v));
      }
      if (!up(v).is_subset_of(up(w))) {
        fail(ErrorCode::kInvalidSystem, "contains is not transitive through " +
                                            basis_label(v));
      }
    });
    if (!parts_.fine_up[w].is_subset_of(parts_.contains_up[w])) {
      fail(ErrorCode::kInvalidSystem, "fine does not imply contains at " + basis_label(w));
    }
  }
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t v = 0; v < nb; ++v) {
      if (!cc(x, v, x, v)) {
        fail(ErrorCode::kInvalidSystem, "cc is not reflexive at (" + point_label(x) +
                                            ", " + basis_label(v) + ")");
      }
    }
  }
  if (parts_.group) {
    const auto& g = *parts_.group;
    if (g.basis_members.size() != nb) {
      fail(ErrorCode::kInvalidSystem, "basis members do not match the basis");
    }
    if (g.action.size() != g.size()) {
      fail(ErrorCode::kInvalidSystem, "action table does not match the group");
    }
    for (const auto& p : g.action) {
      if (p.size() != nx) fail(ErrorCode::kInvalidSystem, "point map of wrong size");
    }
    for (std::size_t a = 0; a < g.size(); ++a) {
      for (std::size_t b = 0; b < g.size(); ++b) {
        const auto& ab = g.action[g.compose(a, b)];
        for (std::size_t x = 0; x < nx; ++x) {
          if (ab[x] != g.action[a][g.action[b][x]]) {
            fail(ErrorCode::kInvalidSystem, "action is not compatible with composition at " +
                                                g.labels[a] + ", " + g.labels[b]);
          }
        }
      }
    }
    for (const auto& m : g.basis_members) {
      if (m.none()) fail(ErrorCode::kInvalidSystem, "empty basis element");
    }
  }
}

std::optional<std::size_t> ActionSystem::find_point(const std::string& label) const {
  for (std::size_t i = 0; i < num_points(); ++i) {
    if (parts_.point_labels[i] == label) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> ActionSystem::find_basis(const std::string& label) const {
  for (std::size_t i = 0; i < num_basis(); ++i) {
    if (parts_.basis_labels[i] == label) return i;
  }
  return std::nullopt;
}

const GroupData& ActionSystem::group() const {
  if (!parts_.group) {
    fail(ErrorCode::kUnsupported, "system '" + description() + "' exposes no group action");
  }
  return *parts_.group;
}

Bitset ActionSystem::orbit_set(std::size_t x, std::size_t v) const {
  const auto& g = group();
  Bitset out(num_points());
  g.basis_members[v].for_each([&](std::size_t e) { out.set(g.action[e][x]); });
  return out;
}

std::optional<std::size_t> ActionSystem::basis_for_members(const Bitset& members) const {
  const auto& g = group();
  for (std::size_t v = 0; v < num_basis(); ++v) {
    if (g.basis_members[v] == members) return v;
  }
  return std::nullopt;
}

std::optional<std::size_t> ActionSystem::translate(std::size_t v, std::size_t h) const {
  const auto& g = group();
  Bitset members(g.size());
  const std::size_t hinv = g.inverse[h];
  g.basis_members[v].for_each([&](std::size_t e) { members.set(g.compose(e, hinv)); });
  return basis_for_members(members);
}

ActionSystem ActionSystem::with_cc_entry(std::size_t x0, std::size_t v0,
                                         std::size_t x1, std::size_t v1,
                                         bool value) const {
  Parts copy = parts_;
  copy.cc_rows[(x0 * num_basis() + v0) * num_points() + x1].set(v1, value);
  copy.description += " [cc mutated]";
  return ActionSystem(std::move(copy));
}

}  // namespace rankforge
