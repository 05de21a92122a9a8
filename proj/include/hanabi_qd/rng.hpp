// Copyright 2026 The hanabi-qd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

namespace hanabi_qd {

constexpr uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Counter-based stream derivation: derive_seed(master, i, j, ...) gives an
// independent seed per coordinate tuple.
constexpr uint64_t derive_seed(uint64_t base) { return base; }
template <typename... Rest>
constexpr uint64_t derive_seed(uint64_t base, uint64_t next, Rest... rest) {
  return derive_seed(splitmix64(base ^ splitmix64(next + 0x632BE59BD9B4E019ULL)),
                     static_cast<uint64_t>(rest)...);
}

// Portable random stream. std::mt19937_64 output is fully specified; the
// distributions below are written out because the standard library ones are
// implementation-defined.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next() { return engine_(); }

  // Uniform in [0, 1) with 53 bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  // Uniform integer in [0, n), n > 0.
  uint32_t below(uint32_t n) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return static_cast<uint32_t>(r % n);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hanabi_qd
