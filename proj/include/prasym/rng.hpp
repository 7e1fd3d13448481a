// Copyright 2026 The prasym Authors.
//
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

#include <cstdint>

namespace prasym {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Domain-separated random streams derived from one user seed. Every draw is
// a pure function of (seed, stream, counter), so any partition of the work
// across threads reproduces the same numbers.
enum class Stream : std::uint64_t {
  kEdges = 1,
  kWeights = 2,
  kStartVector = 3,
  kCells = 4,
};

class CounterRng {
 public:
  constexpr CounterRng(std::uint64_t seed, Stream stream)
      : key_(splitmix64(splitmix64(seed) ^
                        (static_cast<std::uint64_t>(stream) * 0xd1b54a32d192ed03ULL))) {}

  constexpr std::uint64_t bits(std::uint64_t counter) const {
    return splitmix64(key_ ^ splitmix64(counter));
  }

  // Uniform on [0, 1) with 53 random bits.
  constexpr double uniform(std::uint64_t counter) const {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

  // Pair counter for the unordered pair {i, j}, i < j.
  static constexpr std::uint64_t pair(std::uint32_t i, std::uint32_t j) {
    return (static_cast<std::uint64_t>(i) << 32) | j;
  }

 private:
  std::uint64_t key_;
};

}  // namespace prasym
