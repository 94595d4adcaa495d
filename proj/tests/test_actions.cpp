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

#include "doctest.h"
#include "rankforge/actions.hpp"
#include "rankforge/error.hpp"
#include "rankforge/hjorth.hpp"
#include "rankforge/oracle.hpp"
#include "test_util.hpp"

using namespace rankforge;
using namespace rankforge::testing;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    build_finite_discrete(parse_action_file(text));
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kUsage;
}

}  // namespace

TEST_CASE("action files") {
  const auto spec = parse_action_file(kSys1);
  CHECK(spec.size == 3);
  CHECK(spec.labels == std::vector<std::string>{"e", "s"});
  CHECK(spec.basis.kind == BasisKind::kAllSubsets);
  const std::string norm = serialize(spec);
  CHECK(serialize(parse_action_file(norm)) == norm);

  CHECK(parse_basis_spec("singletons+G").kind == BasisKind::kSingletonsPlusG);
  const BasisSpec b = parse_basis_spec("sets: {e,s} {e}");
  CHECK(b.kind == BasisKind::kExplicit);
  CHECK(b.sets.size() == 2);
  CHECK(parse_basis_spec(to_string(b)) == b);
  CHECK_THROWS_AS(parse_basis_spec("some"), Error);

  CHECK(code_of("space size 2\ngroup\nelem s : 1 0\nend\nbasis all-subsets\n") ==
        ErrorCode::kInvalidSystem);
  CHECK(code_of("space size 3\ngroup\nelem e : 0 1 2\nelem r : 1 2 0\nend\n"
                "basis all-subsets\n") == ErrorCode::kInvalidSystem);
  CHECK(code_of("space size 2\ngroup\nelem e : 0 0\nend\nbasis all-subsets\n") ==
        ErrorCode::kInvalidSystem);
  CHECK(code_of("space size 2\ngroup\nelem e : 0 2\nend\nbasis all-subsets\n") ==
        ErrorCode::kRange);
  CHECK(code_of("space size 2\ngroup\nelem e : 0 1\nend\nbasis sets: {q}\n") ==
        ErrorCode::kSchema);
}

TEST_CASE("group budget") {
  FiniteDiscreteSpec spec = parse_action_file(kSys1);
  CHECK_THROWS_AS(build_finite_discrete(spec, 1), Error);
  try {
    build_finite_discrete(spec, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBudget);
  }
}

TEST_CASE("coset descriptors") {
  const CosetDescriptor d = make_descriptor(Tuple{2, 0}, Tuple{1, 3});
  CHECK(d.from() == Tuple{0, 2});
  CHECK(d.to() == Tuple{3, 1});
  CHECK(make_descriptor(Tuple{0, 2}, Tuple{3, 1}) == d);
  CHECK_THROWS_AS(make_descriptor(Tuple{0, 0}, Tuple{1, 2}), Error);
  CHECK_THROWS_AS(make_descriptor(Tuple{0}, Tuple{1, 2}), Error);
}

TEST_CASE("finite logic action") {
  const Signature sig = parse_signature_spec("edge:2");
  SUBCASE("n = 2") {
    const LogicAction la = build_finite_logic(sig, 2, 1);
    CHECK(la.structures.size() == 16);
    CHECK(la.basis_index(Tuple{0}, Tuple{1}).has_value());
    CHECK(la.basis_index(Tuple{}, Tuple{}).has_value());
    // With n = 2 the swap is the only non-identity element, so V_{(0),(1)}
    // and V_{(1),(0)} coincide.
    CHECK(*la.basis_index(Tuple{0}, Tuple{1}) == *la.basis_index(Tuple{1}, Tuple{0}));
  }
  SUBCASE("n = 3 containment") {
    const LogicAction la = build_finite_logic(sig, 3, 2, {graph(3, {{0, 1}})});
    const auto v01 = *la.basis_index(Tuple{0, 1}, Tuple{0, 1});
    const auto v0 = *la.basis_index(Tuple{0}, Tuple{0});
    CHECK(la.system.contains(v01, v0));
    CHECK_FALSE(la.system.contains(v0, v01));
    CHECK(la.structures.size() == 6);
  }
  SUBCASE("cc is inclusion of orbit sets") {
    const LogicAction la = build_finite_logic(sig, 3, 1, {graph(3, {{0, 1}})});
    const ActionSystem& sys = la.system;
    for (std::size_t x0 = 0; x0 < sys.num_points(); ++x0)
      for (std::size_t v0 = 0; v0 < sys.num_basis(); ++v0)
        for (std::size_t x1 = 0; x1 < sys.num_points(); ++x1)
          for (std::size_t v1 = 0; v1 < sys.num_basis(); ++v1)
            CHECK(sys.cc(x0, v0, x1, v1) ==
                  sys.orbit_set(x0, v0).is_subset_of(sys.orbit_set(x1, v1)));
  }
  SUBCASE("budget") {
    LogicLimits limits;
    limits.max_n = 2;
    CHECK_THROWS_AS(build_finite_logic(sig, 3, 1, {}, limits), Error);
  }
}

TEST_CASE("symbolic logic action") {
  const Signature sig = parse_signature_spec("edge:2");
  const Structure m = Structure::supported(sig, 3, {{Tuple{0, 1}}});
  const Structure n = Structure::supported(sig, 3, {{Tuple{0, 1}, Tuple{1, 2}}});
  const LogicAction la = build_symbolic_logic(sig, 3, 1, {m, n});
  const std::size_t g = *la.basis_index(Tuple{}, Tuple{});
  CHECK(la.system.cc(0, g, 1, g));
  CHECK_FALSE(la.system.cc(1, g, 0, g));
}

TEST_CASE("symbolic windows violate level monotonicity") {
  // The coset basis over 0..s-1 is not a neighbourhood basis of S_infinity,
  // so the derived relation is not monotone in V. A loop with s = k = 1
  // already shows it.
  const Signature sig = parse_signature_spec("edge:2");
  const Structure loop = Structure::supported(sig, 1, {{Tuple{0, 0}}});
  const LogicAction la = build_symbolic_logic(sig, 1, 1, {loop});
  try {
    HjorthAnalysis h(la.system);
    FAIL("expected kInvalidBaseRelation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidBaseRelation);
  }
}

TEST_CASE("finite implies symbolic cc") {
  const Signature sig = parse_signature_spec("edge:2");
  const std::vector<std::vector<Tuple>> facts{{{0, 1}}, {{0, 1}, {1, 0}}, {}, {{0, 0}}};
  std::vector<Structure> sup;
  std::vector<Structure> fin_seeds;
  for (const auto& f : facts) {
    sup.push_back(Structure::supported(sig, 2, {f}));
    fin_seeds.push_back(graph(4, f));
  }
  const LogicAction sym = build_symbolic_logic(sig, 2, 1, sup);
  const LogicAction fin = build_finite_logic(sig, 4, 1, fin_seeds);
  const std::size_t gs = *sym.basis_index(Tuple{}, Tuple{});
  const std::size_t gf = *fin.basis_index(Tuple{}, Tuple{});
  for (std::size_t i = 0; i < facts.size(); ++i)
    for (std::size_t j = 0; j < facts.size(); ++j) {
      const auto fi = *fin.point_of(fin_seeds[i]);
      const auto fj = *fin.point_of(fin_seeds[j]);
      if (fin.system.cc(fi, gf, fj, gf)) CHECK(sym.system.cc(i, gs, j, gs));
    }
}

TEST_CASE("comparison") {
  const Signature sig = parse_signature_spec("edge:2");
  const ComparisonScan scan = comparison_scan(sig, 2, 2);
  CHECK(scan.counterexamples == 0);
  // Frozen from the scan; the orbit count matches the brute-force
  // isomorphism classes of 2-element digraphs.
  CHECK(scan.structures == 16);
  CHECK(scan.orbits == 10);
  CHECK(scan.cases == 2720);
  CHECK(scan.hypothesis_true == 176);
  CHECK(scan.scott_stab == 2);
  CHECK(scan.witnesses.empty());

  const Structure m = graph(2, {{0, 1}});
  const auto o = scott_hjorth_comparison(m, Tuple{0}, m.relabeled(Permutation{1, 0}),
                                         Tuple{1}, Tuple{0}, 1);
  CHECK(o.scott_hypothesis);
  CHECK(o.holds());
}

TEST_CASE("action traces") {
  const ActionSystem sys = sys1();
  CHECK(diagonal_index(0, 0, 3, 3) == 0);
  CHECK(diagonal_index(0, 1, 3, 3) < diagonal_index(0, 2, 3, 3));
  const auto trace = encode_action_trace(sys, 2);
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t l = 0; l < 3; ++l)
      CHECK(trace[diagonal_index(k, l, 3, 3)] == (l == 2));
  const auto t0 = encode_action_trace(sys, 0);
  CHECK(t0 != encode_action_trace(sys, 1));
}

TEST_CASE("all structures") {
  CHECK(all_structures(parse_signature_spec(""), 3).size() == 1);
  CHECK(all_structures(parse_signature_spec("p:1"), 3).size() == 8);
  CHECK_THROWS_AS(all_structures(parse_signature_spec("edge:2"), 3, 100), Error);
}
