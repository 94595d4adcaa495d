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
#include "rankforge/error.hpp"
#include "rankforge/verify.hpp"

using namespace rankforge;

namespace {

VerifyConfig small() {
  VerifyConfig c;
  c.seed = 3;
  c.sizes = parse_sizes("g<=6,x<=4,n<=2,count=20");
  return c;
}

}  // namespace

TEST_CASE("suite registry") {
  CHECK(suite_names().back() == "all");
  std::size_t total = 0;
  for (const auto& s : suite_names())
    if (s != "all") total += suite_checks(s).size();
  CHECK(suite_checks("all").size() == total);
  CHECK_THROWS_AS(suite_checks("nope"), Error);
}

TEST_CASE("small suites pass and are deterministic") {
  for (const char* suite : {"lemmas", "vaught", "basis"}) {
    const auto a = run_suite(suite, small());
    const auto b = run_suite(suite, small());
    CHECK_MESSAGE(a.passed(), suite);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
      CHECK(a.checks[i].name == b.checks[i].name);
      CHECK(a.checks[i].witness == b.checks[i].witness);
      CHECK(a.checks[i].instances == b.checks[i].instances);
      CHECK(a.checks[i].instances > 0);
    }
  }
}

TEST_CASE("mutation is caught and shrunk") {
  VerifyConfig c = small();
  c.mutate = "cc";
  const CheckResult r = run_check("base_relation", c);
  CHECK_FALSE(r.pass);
  CHECK(r.witness.find("mutate=cc") != std::string::npos);
  CHECK(r.witness.find(' ') == std::string::npos);
  c.mutate = "other";
  CHECK_THROWS_AS(run_suite("lemmas", c), Error);
}
