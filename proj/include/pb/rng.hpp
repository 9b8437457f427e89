// Copyright 2026 The pb Authors
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
//
// Deterministic 64-bit generator used everywhere randomness is needed.
// xorshift64* (xorshift 12/25/27 with a multiplicative output mix), seeded
// through splitmix64 so that small or correlated seeds still give distinct
// streams. Identical seeds produce identical streams on every platform;
// no system entropy is ever consulted.

#ifndef PB_RNG_HPP
#define PB_RNG_HPP

#include <cstdint>

namespace pb {

// splitmix64 finalizer; also the documented sub-seed derivation: the stream
// for sub-task k of a run with seed s is Rng(mix64(s ^ (k + 1) * GOLDEN)).
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed ^ (index + 1) * 0x9E3779B97F4A7C15ull);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(mix64(seed)) {
    if (state_ == 0) state_ = 0x2545F4914F6CDD1Dull;
  }

  std::uint64_t next_u64() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1Dull;
  }

  // Uniform in [0, bound); bound > 0. Rejection-free modulo with negligible
  // bias is not acceptable here, so reject the tail.
  std::uint64_t next_below(std::uint64_t bound) {
    std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform in [0, 1) with 53 random mantissa bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace pb

#endif  // PB_RNG_HPP
