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

#include <numeric>
#include <random>

#include "doctest.h"
#include "rankforge/error.hpp"
#include "rankforge/structures.hpp"
#include "test_util.hpp"

using namespace rankforge;
using rankforge::testing::graph;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    parse_structure_file(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kUsage;
}

}  // namespace

TEST_CASE("signature specs") {
  const Signature sig = parse_signature_spec("edge:2,mark:1");
  CHECK(sig.size() == 2);
  CHECK(sig.relations()[1].name == "mark");
  CHECK(*sig.find("edge") == 0);
  CHECK(parse_signature_spec("").empty());
  CHECK_THROWS_AS(parse_signature_spec("edge:0"), Error);
  CHECK_THROWS_AS(parse_signature_spec("edge:2,edge:1"), Error);
}

TEST_CASE("structure files") {
  SUBCASE("empty signature") {
    const auto f = parse_structure_file("signature\nend\nstructure a size 3\nend\n");
    REQUIRE(f.structures.size() == 1);
    CHECK(f.structures[0].structure.size() == 3);
    CHECK(f.signature.empty());
  }
  SUBCASE("2-path and round trip") {
    const std::string text =
        "# path\nsignature\nrel edge 2\nend\nstructure p size 3\nedge 1 2\nedge 0 1\nend\n";
    const auto f = parse_structure_file(text);
    const Structure& p = f.structures[0].structure;
    CHECK(p == graph(3, {{0, 1}, {1, 2}}));
    const std::string norm = serialize(f);
    CHECK(serialize(parse_structure_file(norm)) == norm);
    CHECK(norm.find("edge 0 1\nedge 1 2") != std::string::npos);
  }
  SUBCASE("supported") {
    const auto f = parse_structure_file(
        "signature\nrel edge 2\nend\nsupported m support 2\nedge 0 1\nend\n");
    CHECK_FALSE(f.structures[0].structure.is_finite());
  }
  SUBCASE("errors") {
    CHECK(code_of("signature\nrel edge 2\nend\nstructure p size 3\nedge 0 5\nend\n") ==
          ErrorCode::kRange);
    CHECK(code_of("signature\nrel edge 2\nend\nstructure p size 3\nedge 0\nend\n") ==
          ErrorCode::kSchema);
    CHECK(code_of("signature\nrel edge 2\nend\nstructure p size 3\nedge 0 1\n") ==
          ErrorCode::kParse);
    CHECK(code_of("signature\nrel edge 2\nend\nstructure p size x\nend\n") ==
          ErrorCode::kParse);
    CHECK(code_of("signature\nrel edge 2\nend\nstructure p size 2\nloop 0\nend\n") ==
          ErrorCode::kSchema);
    try {
      parse_structure_file("signature\nrel edge 2\nend\nstructure p size 3\nedge 0 5\nend\n");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("line 5") != std::string::npos);
    }
  }
}

TEST_CASE("atomic evaluation") {
  const Structure p = graph(3, {{0, 1}, {1, 2}});
  CHECK(eval_atomic(p, "edge", Tuple{0, 1}));
  CHECK_FALSE(eval_atomic(p, "edge", Tuple{1, 0}));
  CHECK(eval_atomic(p, "=", Tuple{2, 2}));
  CHECK_THROWS_AS(eval_atomic(p, "edge", Tuple{0}), Error);
  CHECK_THROWS_AS(eval_atomic(p, "nope", Tuple{0, 1}), Error);
  const Structure s =
      Structure::supported(parse_signature_spec("edge:2"), 2, {{Tuple{0, 1}}});
  CHECK_FALSE(eval_atomic(s, "edge", Tuple{0, 7}));
  CHECK(eval_atomic(s, "=", Tuple{7, 7}));
  CHECK_FALSE(eval_atomic(s, "=", Tuple{7, 8}));
}

TEST_CASE("quantifier-free types") {
  const Structure l2 = linear_order(2);
  CHECK(eval_atomic(l2, "lt", Tuple{0, 1}));
  CHECK_FALSE(eval_atomic(l2, "lt", Tuple{1, 0}));
  CHECK_FALSE(eval_atomic(l2, "=", Tuple{0, 1}));
  CHECK(qf_type(l2, Tuple{}).table.size() == 0);
  CHECK(qf_type(l2, Tuple{0, 1}) != qf_type(l2, Tuple{1, 0}));
  CHECK(qf_type(l2, Tuple{0, 0}) == qf_type(l2, Tuple{1, 1}));

  // Permutation equivariance.
  std::mt19937_64 rng(11);
  const Signature sig = parse_signature_spec("edge:2,mark:1");
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng() % 4;
    std::vector<std::vector<Tuple>> facts(2);
    for (Element a = 0; a < n; ++a) {
      if (rng() % 2) facts[1].push_back({a});
      for (Element b = 0; b < n; ++b) {
        if (rng() % 2) facts[0].push_back({a, b});
      }
    }
    const Structure m = Structure::finite(sig, n, facts);
    Permutation pi(n);
    std::iota(pi.begin(), pi.end(), Element{0});
    std::shuffle(pi.begin(), pi.end(), rng);
    Tuple t(rng() % 4);
    for (auto& e : t) e = static_cast<Element>(rng() % n);
    Tuple pt = t;
    for (auto& e : pt) e = pi[e];
    CHECK(qf_type(m, t) == qf_type(m.relabeled(pi), pt));
  }
}

TEST_CASE("existential theory containment") {
  const Structure l2 = linear_order(2);
  const Structure l3 = linear_order(3);
  CHECK(thsigma_contains(l2, Tuple{}, l3, Tuple{}));
  CHECK_FALSE(thsigma_contains(l3, Tuple{}, l2, Tuple{}));
  CHECK(thsigma_contains(l3, Tuple{1}, l3, Tuple{1}));
  // A middle element has both neighbours; an end element does not.
  CHECK_FALSE(thsigma_contains(l3, Tuple{1}, l3, Tuple{0}));
  CHECK(thsigma_contains(l2, Tuple{0}, l3, Tuple{1}));
  CHECK_THROWS_AS(thsigma_contains(l2, Tuple{0}, l3, Tuple{}), Error);

  const Signature sig = parse_signature_spec("edge:2");
  const Structure m = Structure::supported(sig, 3, {{Tuple{0, 1}}});
  const Structure n = Structure::supported(sig, 3, {{Tuple{0, 1}, Tuple{1, 2}}});
  CHECK(thsigma_contains(m, Tuple{}, n, Tuple{}));
  CHECK_FALSE(thsigma_contains(n, Tuple{}, m, Tuple{}));
}

TEST_CASE("brute-force isomorphism") {
  const Structure l2 = linear_order(2);
  CHECK(brute_isomorphic(l2, l2, Tuple{}, Tuple{}));
  CHECK_FALSE(brute_isomorphic(l2, l2, Tuple{0}, Tuple{1}));
  CHECK_FALSE(brute_isomorphic(l2, linear_order(3), Tuple{}, Tuple{}));
  CHECK(brute_isomorphic(graph(3, {{0, 1}}), graph(3, {{2, 0}}), Tuple{}, Tuple{}));
  CHECK_THROWS_AS(brute_isomorphic(l2, l2, Tuple{0}, Tuple{}), Error);
}

TEST_CASE("relabeling") {
  // R^{pi M}(a, b) iff R^M(pi^-1 a, pi^-1 b).
  const Structure m = graph(3, {{0, 1}});
  const Permutation pi{1, 2, 0};
  CHECK(m.relabeled(pi) == graph(3, {{1, 2}}));
}
