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

#include <limits>
#include <string>

namespace rankforge {

// A finite level of a decreasing relation chain, or the distinguished
// stabilized level that stands in for every limit stage.
class Level {
 public:
  static constexpr Level at(unsigned value) { return Level(value); }
  static constexpr Level stabilized() { return Level(kStab); }

  constexpr bool is_stabilized() const { return value_ == kStab; }
  constexpr unsigned value() const { return value_; }

  // The concrete table level this resolves to given a stabilization index.
  constexpr unsigned resolve(unsigned stab) const {
    return value_ > stab ? stab : value_;
  }

  std::string to_string() const {
    return is_stabilized() ? std::string("STAB") : std::to_string(value_);
  }

  friend constexpr bool operator==(Level, Level) = default;

 private:
  static constexpr unsigned kStab = std::numeric_limits<unsigned>::max();
  constexpr explicit Level(unsigned value) : value_(value) {}
  unsigned value_;
};

}  // namespace rankforge
