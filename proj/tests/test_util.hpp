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

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "rankforge/actions.hpp"
#include "rankforge/structures.hpp"

namespace rankforge::testing {

inline const char* kSys1 =
    "space size 3\n"
    "group\n"
    "elem e : 0 1 2\n"
    "elem s : 1 0 2\n"
    "end\n"
    "basis all-subsets\n";

inline ActionSystem sys1(const char* basis = nullptr) {
  auto spec = parse_action_file(kSys1);
  if (basis) spec.basis = parse_basis_spec(basis);
  return build_finite_discrete(spec);
}

inline std::size_t basis(const ActionSystem& sys, const std::string& label) {
  return *sys.find_basis(label);
}

// V.x straight from the permutations.
inline std::set<std::size_t> image(const FiniteDiscreteSpec& spec,
                                   const std::vector<std::string>& members, std::size_t x) {
  std::set<std::size_t> out;
  for (const auto& m : members) {
    const auto it = std::find(spec.labels.begin(), spec.labels.end(), m);
    out.insert(spec.perms[static_cast<std::size_t>(it - spec.labels.begin())][x]);
  }
  return out;
}

inline bool subset(const std::set<std::size_t>& a, const std::set<std::size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Structure graph(std::size_t size, std::vector<Tuple> edges) {
  return Structure::finite(parse_signature_spec("edge:2"), size, {std::move(edges)});
}

}  // namespace rankforge::testing
