// Copyright 2026 The rmcover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Word-level helpers shared by the kernels. Everything here works on a single
// 64-bit truth-table word (up to 6 variables).

#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace rmcover::bits {

/// kLowHalfMask[i] has bit x set iff bit i of x is zero.
inline constexpr std::array<std::uint64_t, 6> kLowHalfMask = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull};

/// kLinear[u] is the truth table of x -> u.x on 6 variables. Restricted to the
/// low 2^n bits it is the same linear function on n < 6 variables.
inline constexpr std::array<std::uint64_t, 64> kLinear = [] {
  std::array<std::uint64_t, 64> out{};
  for (unsigned u = 0; u < 64; ++u) {
    for (unsigned x = 0; x < 64; ++x) {
      if (std::popcount(u & x) & 1u) out[u] |= 1ull << x;
    }
  }
  return out;
}();

/// Positions (read as monomial masks over 7 variables) of degree <= 2.
inline constexpr std::array<std::uint64_t, 2> kDegreeAtMost2 = [] {
  std::array<std::uint64_t, 2> out{};
  for (unsigned m = 0; m < 128; ++m) {
    if (std::popcount(m) <= 2) out[m >> 6] |= 1ull << (m & 63);
  }
  return out;
}();

/// The word of x -> w(x + a) for a < 64.
constexpr std::uint64_t translate(std::uint64_t w, unsigned a) {
  for (int i = 0; i < 6; ++i) {
    if ((a >> i) & 1u) {
      const unsigned s = 1u << i;
      w = ((w & kLowHalfMask[i]) << s) | ((w >> s) & kLowHalfMask[i]);
    }
  }
  return w;
}

/// First derivative x -> w(x) + w(x + a).
constexpr std::uint64_t derivative(std::uint64_t w, unsigned a) { return w ^ translate(w, a); }

/// Binary Moebius transform of a word holding an n-variable table, n <= 6.
/// Maps a truth table to its ANF coefficients and back.
constexpr std::uint64_t moebius(std::uint64_t w, int n) {
  for (int i = 0; i < n && i < 6; ++i) w ^= (w & kLowHalfMask[i]) << (1u << i);
  return w;
}

constexpr bool parity(unsigned x) { return std::popcount(x) & 1u; }

}  // namespace rmcover::bits
