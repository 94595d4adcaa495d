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

#include <set>

#include "doctest.h"
#include "rankforge/error.hpp"
#include "rankforge/hjorth.hpp"
#include "rankforge/oracle.hpp"
#include "test_util.hpp"

using namespace rankforge;
using namespace rankforge::testing;

TEST_CASE("base relation of SYS1") {
  const auto spec = parse_action_file(kSys1);
  const ActionSystem sys = build_finite_discrete(spec);
  CHECK(sys.num_points() == 3);
  CHECK(sys.num_basis() == 3);
  const std::vector<std::vector<std::string>> members{{"e"}, {"s"}, {"e", "s"}};
  for (std::size_t x0 = 0; x0 < 3; ++x0)
    for (std::size_t v0 = 0; v0 < 3; ++v0)
      for (std::size_t x1 = 0; x1 < 3; ++x1)
        for (std::size_t v1 = 0; v1 < 3; ++v1)
          CHECK(sys.cc(x0, v0, x1, v1) ==
                subset(image(spec, members[v0], x0), image(spec, members[v1], x1)));
  CHECK(sys.cc(0, basis(sys, "{s}"), 1, basis(sys, "{e}")));
}

TEST_CASE("SYS1 levels and ranks") {
  const HjorthAnalysis h(sys1());
  const std::size_t e = basis(h.system(), "{e}");
  const std::size_t s = basis(h.system(), "{s}");
  const std::size_t g = basis(h.system(), "{e,s}");
  CHECK(h.leq(0, s, 1, e, Level::at(1)));
  CHECK(h.table().stabilized());
  CHECK(h.table().stab() == 1);
  CHECK(h.leq(2, g, 2, e, Level::at(1)));
  CHECK_FALSE(h.equiv(0, 2, Level::at(2)));
  CHECK(h.equiv(0, 1, Level::stabilized()));
  for (std::size_t x = 0; x < 3; ++x) {
    CHECK(h.rank(x).value == 1);
    CHECK(*h.minimal_m(x) == 0);
  }
  const auto parts = h.partition_by_rank();
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].points.count() == 3);
  CHECK(h.compare_ranks(0, 2) == std::strong_ordering::equal);
  CHECK(h.orbit_check_via_rank(0, 1));
  CHECK_FALSE(h.orbit_check_via_rank(0, 2));
}

TEST_CASE("levels agree with the naive recursion") {
  const char* bases[] = {"all-subsets", "singletons+G"};
  for (const char* b : bases) {
    const HjorthAnalysis h(sys1(b));
    const ActionSystem& sys = h.system();
    oracle::NaiveLeq naive(sys);
    const unsigned top = h.table().stab() + 1;
    for (unsigned lv = 1; lv <= top; ++lv)
      for (std::size_t x0 = 0; x0 < 3; ++x0)
        for (std::size_t v0 = 0; v0 < sys.num_basis(); ++v0)
          for (std::size_t x1 = 0; x1 < 3; ++x1)
            for (std::size_t v1 = 0; v1 < sys.num_basis(); ++v1)
              CHECK(h.leq(x0, v0, x1, v1, Level::at(lv)) == naive(x0, v0, x1, v1, lv));
  }
}

TEST_CASE("level bound") {
  const HjorthAnalysis h(sys1(), 1);
  CHECK_FALSE(h.table().stabilized());
  CHECK(h.table().top_level() == 1);
  CHECK_THROWS_AS(h.table().stab(), Error);
  CHECK_THROWS_AS(h.rank(0), Error);
}

TEST_CASE("invalid base relation") {
  // Making cc(0,{e},2,{e}) true breaks T_2 <= T_1 somewhere.
  const ActionSystem bad = sys1().with_cc_entry(0, 0, 2, 0, true);
  try {
    HjorthAnalysis h(bad);
    FAIL("expected kInvalidBaseRelation");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::kInvalidBaseRelation);
  }
}

TEST_CASE("bases that are not closed under translation") {
  // {e} and G alone: T_2 escapes T_1 at (0, G, 0, {e}).
  try {
    HjorthAnalysis h(sys1("sets: {e} {e,s}"));
    FAIL("expected kInvalidBaseRelation");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::kInvalidBaseRelation);
  }
}

TEST_CASE("Vaught transforms") {
  const ActionSystem sys = sys1();
  Bitset a(3);
  a.set(0);
  Bitset all(2);
  all.fill();
  const Bitset star = vaught_star(sys, a, all);
  const Bitset delta = vaught_delta(sys, a, all);
  CHECK(star.none());
  CHECK(delta.count() == 2);
  CHECK(delta.test(0));
  CHECK(delta.test(1));
  Bitset id(2);
  id.set(sys.group().identity);
  CHECK(vaught_star(sys, a, id) == a);
  CHECK(vaught_delta(sys, a, id) == a);
}

TEST_CASE("star orbits and fixed points") {
  const HjorthAnalysis h(sys1());
  const std::size_t e = basis(h.system(), "{e}");
  const std::size_t s = basis(h.system(), "{s}");
  const std::size_t g = basis(h.system(), "{e,s}");
  CHECK(h.star_orbit_equivalence_check(1, e, 0, s) == std::pair{true, true});
  CHECK(h.star_orbit_equivalence_check(2, e, 0, g) == std::pair{false, false});

  Bitset u(2);
  u.set(h.system().group().inverse.size() == 2 ? 1 - h.system().group().identity : 0);
  const FixedPointSets f = h.fixed_point_set(u);
  CHECK(f.applicable);
  CHECK(f.direct.count() == 1);
  CHECK(f.direct.test(2));
  CHECK(f.direct == f.via_leq);
}

TEST_CASE("basis shift") {
  const HjorthAnalysis a(sys1("all-subsets"));
  const HjorthAnalysis b(sys1("singletons+G"));
  for (unsigned d : basis_shift_check(a, b)) CHECK(d <= 1);
}
