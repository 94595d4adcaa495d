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

#include <random>

#include "doctest.h"
#include "rankforge/error.hpp"
#include "rankforge/generators.hpp"
#include "rankforge/hjorth.hpp"
#include "rankforge/oracle.hpp"
#include "test_util.hpp"

using namespace rankforge;
using namespace rankforge::testing;

TEST_CASE("orbit partition") {
  const auto p = oracle::orbit_partition(sys1());
  CHECK(p.orbits.size() == 2);
  CHECK(p.orbit_of[0] == p.orbit_of[1]);
  CHECK(p.orbit_of[0] != p.orbit_of[2]);
  const auto inv = oracle::invariant_sets(sys1());
  CHECK(inv.size() == 4);
}

TEST_CASE("naive leq on SYS1") {
  const ActionSystem sys = sys1();
  const std::size_t e = basis(sys, "{e}");
  const std::size_t s = basis(sys, "{s}");
  const std::size_t g = basis(sys, "{e,s}");
  CHECK(oracle::naive_leq(sys, 0, s, 1, e, 1));
  CHECK(oracle::naive_leq(sys, 2, g, 2, e, 1));
  CHECK_FALSE(oracle::naive_leq(sys, 0, e, 2, g, 1));
  // Level 2 from level 1 by hand: V0 = {e} at x0 = 0 must be answered by
  // some W1 inside {e,s} at point 1 with T_1(1, W1, 0, {e}); W1 = {s} works.
  CHECK(oracle::naive_leq(sys, 0, e, 1, g, 2));
}

TEST_CASE("naive scott") {
  const Structure l2 = linear_order(2);
  CHECK(oracle::naive_scott(l2, Tuple{0}, l2, Tuple{0}, 3));
  CHECK_FALSE(oracle::naive_scott(l2, Tuple{0}, l2, Tuple{1}, 1));
  CHECK(oracle::naive_scott(l2, Tuple{0}, l2, Tuple{1}, 0));
}

TEST_CASE("ensembles") {
  const GeneratorSizes sizes = parse_sizes("g<=8,x<=5,n<=2,count=40");
  CHECK(sizes.max_group == 8);
  CHECK(sizes.max_points == 5);
  CHECK(sizes.count == 40);
  CHECK(parse_sizes(to_string(sizes)).count == 40);
  CHECK(parse_sizes("g≤6").max_group == 6);
  CHECK_THROWS_AS(parse_sizes("q<=1"), Error);

  const auto a = generate_ensemble(5, sizes);
  const auto b = generate_ensemble(5, sizes);
  REQUIRE(a.size() == 40);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].describe() == b[i].describe());
    CHECK(a[i].points <= 5);
    const auto spec = a[i].spec(BasisSpec{});
    CHECK(spec.perms.size() <= 8);
    for (std::size_t x = 0; x < spec.size; ++x) CHECK(spec.perms.front()[x] == x);
  }
}

TEST_CASE("random pieces") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const Permutation p = random_cycle_permutation(rng, 5);
    std::vector<bool> seen(5);
    for (auto e : p) seen[e] = true;
    for (bool s : seen) CHECK(s);
  }
  const auto spec = parse_action_file(kSys1);
  const BasisSpec b = random_subbasis(rng, spec);
  std::size_t singletons = 0;
  for (const auto& set : b.sets) singletons += set.size() == 1;
  CHECK(singletons == 2);
}

TEST_CASE("shrinking") {
  GeneratedCase c;
  c.points = 5;
  c.generators = {{1, 0, 2, 3, 4}, {0, 1, 3, 4, 2}};
  // Fails whenever 0 and 1 are swapped.
  const auto fails = [](const GeneratedCase& k) {
    for (const auto& g : k.generators)
      if (g.size() >= 2 && g[0] == 1) return true;
    return false;
  };
  const GeneratedCase s = shrink(c, fails);
  CHECK(fails(s));
  CHECK(s.generators.size() == 1);
  CHECK(s.points < 5);
}
