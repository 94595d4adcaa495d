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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rankforge/generators.hpp"

namespace rankforge {

struct CheckResult {
  std::string name;
  bool pass = true;
  // Space-free; "-" when passing.
  std::string witness = "-";
  std::size_t instances = 0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  std::size_t failures() const;
};

struct VerifyConfig {
  std::uint64_t seed = 7;
  GeneratorSizes sizes;
  // "cc" corrupts one cc entry of the first ensemble system with two orbits.
  std::optional<std::string> mutate;
};

// Suite names: lemmas, iso, vaught, comparison, basis, all.
const std::vector<std::string>& suite_names();
// Check names run by a suite, in report order. Throws kUsage for unknown suites.
std::vector<std::string> suite_checks(const std::string& suite);

VerificationReport run_suite(const std::string& suite, const VerifyConfig& config);
// A single named check.
CheckResult run_check(const std::string& name, const VerifyConfig& config);

}  // namespace rankforge
