// Copyright 2026 The qroute authors
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

#include <array>
#include <cmath>
#include <cstdint>

namespace qroute::rng {

// Philox4x32-10 counter-based generator. Results depend only on (key,
// counter), so draws indexed by (seed, stream, position) are identical no
// matter how the work is scheduled across threads.
struct Philox {
  uint64_t key;

  static std::array<uint32_t, 4> block(uint64_t key, uint64_t ctr_hi,
                                       uint64_t ctr_lo) {
    uint32_t c0 = static_cast<uint32_t>(ctr_lo);
    uint32_t c1 = static_cast<uint32_t>(ctr_lo >> 32);
    uint32_t c2 = static_cast<uint32_t>(ctr_hi);
    uint32_t c3 = static_cast<uint32_t>(ctr_hi >> 32);
    uint32_t k0 = static_cast<uint32_t>(key);
    uint32_t k1 = static_cast<uint32_t>(key >> 32);
    for (int round = 0; round < 10; ++round) {
      uint64_t p0 = 0xD2511F53ull * c0;
      uint64_t p1 = 0xCD9E8D57ull * c2;
      uint32_t h0 = static_cast<uint32_t>(p0 >> 32);
      uint32_t l0 = static_cast<uint32_t>(p0);
      uint32_t h1 = static_cast<uint32_t>(p1 >> 32);
      uint32_t l1 = static_cast<uint32_t>(p1);
      uint32_t n0 = h1 ^ c1 ^ k0;
      uint32_t n1 = l1;
      uint32_t n2 = h0 ^ c3 ^ k1;
      uint32_t n3 = l0;
      c0 = n0;
      c1 = n1;
      c2 = n2;
      c3 = n3;
      k0 += 0x9E3779B9u;
      k1 += 0xBB67AE85u;
    }
    return {c0, c1, c2, c3};
  }

  uint64_t bits64(uint64_t stream, uint64_t idx) const {
    auto b = block(key, stream, idx);
    return (static_cast<uint64_t>(b[0]) << 32) | b[1];
  }

  // Uniform in [0, 1).
  double uniform(uint64_t stream, uint64_t idx) const {
    return static_cast<double>(bits64(stream, idx) >> 11) * 0x1.0p-53;
  }

  double uniform(uint64_t stream, uint64_t idx, double lo, double hi) const {
    return lo + (hi - lo) * uniform(stream, idx);
  }
};

// SplitMix64 step, used to fold experiment/trial identifiers into keys.
inline uint64_t mix(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline uint64_t derive(uint64_t seed, uint64_t a) { return mix(seed ^ mix(a)); }

inline uint64_t derive(uint64_t seed, uint64_t a, uint64_t b) {
  return derive(derive(seed, a), b);
}

inline uint64_t derive(uint64_t seed, uint64_t a, uint64_t b, uint64_t c) {
  return derive(derive(seed, a, b), c);
}

// Standard normal pair from two counter draws (Box-Muller).
inline std::pair<double, double> normal_pair(const Philox& g, uint64_t stream,
                                             uint64_t idx) {
  double u1 = g.uniform(stream, 2 * idx);
  double u2 = g.uniform(stream, 2 * idx + 1);
  double r = std::sqrt(-2.0 * std::log(1.0 - u1));
  return {r * std::cos(2.0 * 3.14159265358979323846 * u2),
          r * std::sin(2.0 * 3.14159265358979323846 * u2)};
}

}  // namespace qroute::rng
