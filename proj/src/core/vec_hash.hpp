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

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace rankforge::detail {

inline std::uint64_t hash_words(std::span<const std::uint64_t> v) {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ v.size();
  for (auto x : v) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ull;
  }
  return h ^ (h >> 31);
}

struct VecHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    return static_cast<std::size_t>(hash_words(v));
  }
};

// Assigns dense ids to word strings. Keys live in one arena; the table is
// open-addressed with linear probing.
class FlatInterner {
 public:
  std::uint32_t intern(std::span<const std::uint64_t> key) {
    if ((starts_.size() + 1) * 2 > slots_.size()) grow();
    const std::uint64_t h = hash_words(key);
    const std::uint64_t tag = h >> 32;
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t i = h & mask;; i = (i + 1) & mask) {
      const std::uint64_t slot = slots_[i];
      if (slot == 0) {
        const auto id = static_cast<std::uint32_t>(starts_.size());
        starts_.push_back(arena_.size());
        arena_.insert(arena_.end(), key.begin(), key.end());
        slots_[i] = (tag << 32) | (id + 1);
        return id;
      }
      if ((slot >> 32) != tag) continue;
      const auto id = static_cast<std::uint32_t>(slot) - 1;
      const std::size_t begin = starts_[id];
      const std::size_t end = id + 1 < starts_.size() ? starts_[id + 1] : arena_.size();
      if (end - begin == key.size() &&
          std::equal(key.begin(), key.end(), arena_.begin() + static_cast<std::ptrdiff_t>(begin))) {
        return id;
      }
    }
  }

  std::size_t size() const { return starts_.size(); }

 private:
  void grow() {
    std::vector<std::uint64_t> fresh(slots_.empty() ? 1024 : slots_.size() * 2, 0);
    const std::size_t mask = fresh.size() - 1;
    for (std::uint32_t id = 0; id < starts_.size(); ++id) {
      const std::size_t begin = starts_[id];
      const std::size_t end = id + 1 < starts_.size() ? starts_[id + 1] : arena_.size();
      const std::uint64_t h = hash_words(std::span(arena_).subspan(begin, end - begin));
      std::size_t i = h & mask;
      while (fresh[i] != 0) i = (i + 1) & mask;
      fresh[i] = ((h >> 32) << 32) | (id + 1);
    }
    slots_ = std::move(fresh);
  }

  std::vector<std::uint64_t> arena_;
  std::vector<std::size_t> starts_;
  std::vector<std::uint64_t> slots_;
};

}  // namespace rankforge::detail
