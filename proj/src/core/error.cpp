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

#include "rankforge/error.hpp"

namespace rankforge {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kSchema: return "schema error";
    case ErrorCode::kRange: return "range error";
    case ErrorCode::kBudget: return "budget exceeded";
    case ErrorCode::kUsage: return "usage error";
    case ErrorCode::kInvalidBaseRelation: return "invalid base relation";
    case ErrorCode::kInvalidSystem: return "invalid system";
    case ErrorCode::kUnsupported: return "unsupported operation";
    case ErrorCode::kDepthExceeded: return "depth exceeded";
  }
  return "unknown error";
}

}  // namespace rankforge
