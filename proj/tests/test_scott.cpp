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
#include "rankforge/actions.hpp"
#include "rankforge/error.hpp"
#include "rankforge/oracle.hpp"
#include "rankforge/scott.hpp"
#include "test_util.hpp"

using namespace rankforge;
using rankforge::testing::graph;

TEST_CASE("scott equivalence on linear orders") {
  const Structure l2 = linear_order(2);
  const Structure l3 = linear_order(3);
  // Oracle values first, then the engine.
  CHECK(oracle::naive_scott(l2, Tuple{}, l3, Tuple{}, 1));
  CHECK_FALSE(oracle::naive_scott(l2, Tuple{}, l3, Tuple{}, 2));
  CHECK(scott_equiv(l2, Tuple{}, l3, Tuple{}, Level::at(1)));
  CHECK_FALSE(scott_equiv(l2, Tuple{}, l3, Tuple{}, Level::at(2)));
  CHECK(scott_equiv(l3, Tuple{2, 0}, l3, Tuple{2, 0}, Level::stabilized()));
  CHECK_THROWS_AS(scott_equiv(l2, Tuple{0}, l3, Tuple{}, Level::at(0)), Error);
}

TEST_CASE("scott tables") {
  const Structure l2 = linear_order(2);
  SUBCASE("level zero separates orientation") {
    const ScottTable t({l2});
    CHECK(t.block(0, Tuple{0, 1}, Level::at(0)) != t.block(0, Tuple{1, 0}, Level::at(0)));
  }
  SUBCASE("roots of L2 and L3") {
    const ScottTable t({l2, linear_order(3)});
    CHECK(t.block(0, Tuple{}, Level::at(1)) == t.block(1, Tuple{}, Level::at(1)));
    CHECK(t.block(0, Tuple{}, Level::at(2)) != t.block(1, Tuple{}, Level::at(2)));
  }
  SUBCASE("one empty element") {
    const ScottTable t({graph(1, {})});
    CHECK(t.stab() == 0);
  }
  SUBCASE("levels refine and match the oracle") {
    std::vector<Structure> fam{graph(3, {{0, 1}, {1, 2}}), graph(3, {{0, 1}, {0, 2}}),
                               graph(2, {{0, 0}}), graph(3, linear_order(3).facts(0))};
    const ScottTable t(fam);
    for (std::size_t i = 0; i < fam.size(); ++i) {
      for (std::size_t j = 0; j < fam.size(); ++j) {
        oracle::NaiveScott naive(fam[i], fam[j]);
        for (unsigned lv = 0; lv <= t.stab() + 1; ++lv) {
          for (Element a = 0; a < fam[i].size(); ++a)
            for (Element b = 0; b < fam[j].size(); ++b) {
              const bool e = t.equivalent(i, Tuple{a}, j, Tuple{b}, Level::at(lv));
              CHECK(e == naive(Tuple{a}, Tuple{b}, lv));
              if (lv > 0 && e) CHECK(t.equivalent(i, Tuple{a}, j, Tuple{b}, Level::at(lv - 1)));
            }
        }
      }
    }
  }
  SUBCASE("tuples longer than the table") {
    const ScottTable t({l2});
    CHECK(t.equivalent(0, Tuple{0, 1, 0}, 0, Tuple{0, 1, 0}, Level::stabilized()));
    CHECK_FALSE(t.equivalent(0, Tuple{0, 1, 0}, 0, Tuple{1, 0, 1}, Level::stabilized()));
    CHECK_FALSE(t.equivalent(0, Tuple{0, 1, 1}, 0, Tuple{0, 1, 0}, Level::at(0)));
  }
}

TEST_CASE("scott rank") {
  CHECK(scott_rank(graph(1, {})).value == 0);
  const ScottRank r2 = scott_rank(linear_order(2));
  CHECK(r2.value == 1);
  CHECK(r2.value <= r2.stabilized_at);
  // Frozen from the naive oracle (rf_oracle_scott_rank and the verify ladder).
  CHECK(scott_rank(linear_order(3)).value == 1);
  CHECK(scott_rank(linear_order(4)).value == 2);
  CHECK(scott_rank(linear_order(5)).value == 2);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 1 + rng() % 4;
    std::vector<Tuple> edges;
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (rng() % 2) edges.push_back({a, b});
    const Structure m = graph(n, edges);
    Permutation pi(n);
    std::iota(pi.begin(), pi.end(), Element{0});
    std::shuffle(pi.begin(), pi.end(), rng);
    CHECK(scott_rank(m).value == scott_rank(m.relabeled(pi)).value);
  }
}

TEST_CASE("scott isomorphism check") {
  CHECK(scott_iso_check(linear_order(3), linear_order(3)));
  CHECK_FALSE(scott_iso_check(linear_order(2), linear_order(3)));
  const Structure path = graph(3, {{0, 1}, {1, 2}});
  const Structure star = graph(3, {{0, 1}, {0, 2}});
  CHECK_FALSE(brute_isomorphic(path, star, Tuple{}, Tuple{}));
  CHECK_FALSE(scott_iso_check(path, star));
  CHECK(scott_iso_check(star, graph(3, {{2, 0}, {2, 1}})));
}

TEST_CASE("distinguishing levels of linear orders") {
  // Frozen from the naive oracle: L_m vs L_{m+1}, m = 1..6.
  const unsigned expected[] = {2, 2, 3, 3, 3, 3};
  for (std::size_t m = 1; m <= 6; ++m) {
    const Structure a = linear_order(m);
    const Structure b = linear_order(m + 1);
    unsigned naive = 0;
    while (oracle::naive_scott(a, Tuple{}, b, Tuple{}, naive)) ++naive;
    CHECK(naive == expected[m - 1]);
    const auto d = scott_distinguishing_level(a, b);
    REQUIRE(d.has_value());
    CHECK(*d == expected[m - 1]);
  }
  CHECK_FALSE(scott_distinguishing_level(linear_order(3), linear_order(3)).has_value());
}
