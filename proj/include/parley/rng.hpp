// Copyright 2026 The Parley Authors
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
#include <random>

namespace parley {

// Seeded 32-bit Mersenne Twister; the output sequence is fixed by the C++
// standard, so the same seed gives the same draws on every platform.
class Rng {
 public:
  explicit Rng(uint32_t seed) : engine_(seed) {}

  uint32_t next() { return static_cast<uint32_t>(engine_()); }

  // Uniform index in [0, n) by rejection, without modulo bias.
  size_t index(size_t n) {
    const uint64_t range = uint64_t{1} << 32;
    const uint64_t limit = range - range % n;
    uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return static_cast<size_t>(x % n);
  }

  static uint32_t entropy_seed() { return std::random_device{}(); }

 private:
  std::mt19937 engine_;
};

}  // namespace parley
