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

#include <string.h>

#include "doctest.h"
#include "rankforge/rankforge.h"

namespace {

const char* kL2 = "signature\nrel lt 2\nend\nstructure l2 size 2\nlt 0 1\nend\n";
const char* kSys1 =
    "space size 3\ngroup\nelem e : 0 1 2\nelem s : 1 0 2\nend\nbasis all-subsets\n";

}  // namespace

TEST_CASE("status names and version") {
  CHECK(strcmp(rf_status_name(RF_OK), "ok") == 0);
  CHECK(strlen(rf_version()) > 0);
}

TEST_CASE("structures through the C API") {
  rf_structures* f = nullptr;
  REQUIRE(rf_structures_parse(kL2, &f) == RF_OK);
  CHECK(rf_structures_count(f) == 1);
  unsigned rank = 9, stab = 9;
  CHECK(rf_scott_rank(f, 0, &rank, &stab) == RF_OK);
  CHECK(rank == 1);
  unsigned oracle = 9;
  CHECK(rf_oracle_scott_rank(f, 0, &oracle) == RF_OK);
  CHECK(oracle == 1);
  CHECK(rf_scott_rank(f, 4, &rank, &stab) == RF_ERR_RANGE);
  rf_structures_free(f);

  rf_structures* bad = nullptr;
  CHECK(rf_structures_parse("signature\nrel e 2\nend\nstructure a size 2\ne 0 7\nend\n",
                            &bad) == RF_ERR_RANGE);
  CHECK(bad == nullptr);
  CHECK(strstr(rf_last_error(), "line") != nullptr);
}

TEST_CASE("analysis through the C API") {
  rf_budget budget;
  rf_budget_default(&budget);
  rf_system* sys = nullptr;
  REQUIRE(rf_system_from_action(kSys1, nullptr, &budget, &sys) == RF_OK);
  CHECK(rf_system_num_points(sys) == 3);
  CHECK(rf_system_num_basis(sys) == 3);
  rf_analysis* a = nullptr;
  REQUIRE(rf_analysis_new(sys, 0, &a) == RF_OK);
  CHECK(rf_analysis_stabilized(a) == 1);
  unsigned stab = 0;
  rf_analysis_stab(a, &stab);
  CHECK(stab == 1);
  int eq = -1;
  CHECK(rf_equiv(a, 0, 1, RF_LEVEL_STAB, &eq) == RF_OK);
  CHECK(eq == 1);
  CHECK(rf_equiv(a, 0, 2, 2, &eq) == RF_OK);
  CHECK(eq == 0);
  CHECK(rf_equiv(a, 0, 1, 1, &eq) == RF_OK);
  CHECK(eq == 1);
  CHECK(rf_equiv(a, 0, 2, 1, &eq) == RF_OK);
  CHECK(eq == 0);
  size_t parts = 0;
  rf_partition_count(a, &parts);
  CHECK(parts == 1);
  CHECK(rf_equiv(a, 0, 9, 1, &eq) == RF_ERR_RANGE);
  rf_analysis_free(a);
  rf_system_free(sys);

  budget.max_points = 2;
  CHECK(rf_system_from_action(kSys1, nullptr, &budget, &sys) == RF_ERR_BUDGET);
  CHECK(rf_budget_parse("g=4,x=3", &budget) == RF_OK);
  CHECK(budget.max_group == 4);
  CHECK(rf_budget_parse("zz=1", &budget) == RF_ERR_PARSE);
  CHECK(rf_analysis_new(nullptr, 0, &a) == RF_ERR_USAGE);
}
