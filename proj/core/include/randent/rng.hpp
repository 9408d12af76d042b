// Copyright 2026 The randent authors.
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

namespace randent {

// 64-bit finalizer used to derive stream states. Bijective, so distinct
// counters give distinct states.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// xoshiro256++ stream whose state is a pure function of (seed, stream_index).
/// Streams for distinct indices are derived counter-style (no sequential
/// iteration over trials), so any worker can open any trial's stream in O(1)
/// and two runs with the same inputs produce bit-identical draws.
class TrialStream {
 public:
  TrialStream(std::uint64_t seed, std::uint64_t stream_index) {
    constexpr std::uint64_t gamma = 0x9e3779b97f4a7c15ull;
    for (int i = 0; i < 4; ++i) {
      s_[i] = mix64(seed + gamma * (4 * stream_index + static_cast<std::uint64_t>(i) + 1));
    }
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = gamma;  // all-zero state is invalid
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform in [0, 1), 53-bit mantissa.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in (0, 1]; safe as a log() argument.
  double next_unit_open() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t s_[4];
};

}  // namespace randent
