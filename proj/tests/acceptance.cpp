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

// Runs the twelve acceptance criteria and prints one PASS/FAIL line each.
// Usage: rankforge_acceptance <path-to-rankforge-cli>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "rankforge/scott.hpp"
#include "rankforge/verify.hpp"

using namespace rankforge;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

VerifyConfig acceptance_config() {
  VerifyConfig c;
  c.seed = 7;
  c.sizes = parse_sizes("g<=8,x<=6,n<=3,count=200");
  return c;
}

Outcome checks(std::initializer_list<const char*> names) {
  Outcome out;
  std::size_t instances = 0;
  for (const char* name : names) {
    const CheckResult r = run_check(name, acceptance_config());
    instances += r.instances;
    if (!r.pass) {
      out.pass = false;
      out.detail += std::string(name) + ":" + r.witness + " ";
    }
  }
  if (out.pass) out.detail = "instances=" + std::to_string(instances);
  return out;
}

std::string capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  status = pclose(pipe);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: rankforge_acceptance <rankforge-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];

  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "oracle_equivalence_leq", 60, [] { return checks({"leq_oracle"}); }},
      {2, "oracle_equivalence_scott", 60, [] { return checks({"scott_oracle"}); }},
      {3, "lemma_suite", 0,
       [] {
         return checks({"transitivity", "level_monotonicity", "set_monotonicity",
                        "translation_invariance", "equiv_invariance"});
       }},
      {4, "isomorphism_theorem", 0, [] { return checks({"orbit_via_rank", "minimal_m"}); }},
      {5, "finite_discrete_collapse", 0, [] { return checks({"finite_discrete_collapse"}); }},
      {6, "scott_isomorphism", 0, [] { return checks({"scott_isomorphism"}); }},
      {7, "scott_rank_ladder", 0,
       [] {
         Outcome o = checks({"scott_rank_ladder"});
         if (scott_rank(linear_order(2)).value != 1) {
           o.pass = false;
           o.detail += " scott_rank(L2)!=1";
         }
         return o;
       }},
      {8, "comparison", 300, [] { return checks({"comparison"}); }},
      {9, "vaught_laws", 0, [] { return checks({"vaught_laws"}); }},
      {10, "fixed_points_and_rank_comparison", 0,
       [] { return checks({"fixed_point_set", "rank_comparison"}); }},
      {11, "basis_shift_bound", 0, [] { return checks({"basis_shift"}); }},
      {12, "determinism", 0,
       [&cli] {
         const std::string cmd = "'" + cli +
                                 "' --format records --seed 7 --sizes g\\<=8,x\\<=6,n\\<=3 "
                                 "verify all";
         int s1 = 0, s2 = 0;
         const std::string a = capture(cmd, s1);
         const std::string b = capture(cmd, s2);
         Outcome o;
         o.pass = s1 == 0 && s2 == 0 && !a.empty() && a == b;
         o.detail = "bytes=" + std::to_string(a.size()) + " status=" + std::to_string(s1) +
                    "," + std::to_string(s2) + (a == b ? " identical" : " differ");
         return o;
       }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      o.pass = false;
      o.detail += " over_time_limit";
    }
    if (!o.pass) ++failed;
    char line[128];
    std::snprintf(line, sizeof line, "%s criterion %2d %-34s %7.2fs ", o.pass ? "PASS" : "FAIL",
                  c.id, c.name, secs);
    std::cout << line << o.detail << std::endl;
  }
  std::cout << (failed ? "FAIL" : "PASS") << " acceptance " << (12 - failed) << "/12"
            << std::endl;
  return failed ? 1 : 0;
}
