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

#include <stdexcept>
#include <string>

namespace rankforge {

enum class ErrorCode {
  kParse,
  kSchema,
  kRange,
  kBudget,
  kUsage,
  kInvalidBaseRelation,
  kInvalidSystem,
  kUnsupported,
  kDepthExceeded,
};

const char* error_code_name(ErrorCode code);

// Single exception type for the core; the C API maps `code()` onto status
// values and the CLI maps those onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace rankforge
