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

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "rmcover/bits.hpp"
#include "rmcover/truth_table.hpp"

namespace rmcover {

/// values[u] = sum_x (-1)^(f(x) + u.x).
struct WalshSpectrum {
  int n = 0;
  std::vector<int> values;

  /// sum_u values[u]^2; equals 2^(2n) for every Boolean function.
  std::int64_t energy() const;
  int max_abs() const;
};

/// In-place integer butterfly, n * 2^(n-1) add/subtract pairs.
WalshSpectrum walsh_spectrum(const TruthTable& t);

namespace detail {

// Distance-to-affine kernels. For every linear u the distance d(f, u.x) is a
// popcount; the complement covers u.x + 1. These agree with the butterfly
// spectrum through W(u) = 2^n - 2 d(f, u.x).

inline int nonlinearity_word(std::uint64_t f, int n) {
  const int size = 1 << n;
  const unsigned count = 1u << n;
  const std::uint64_t mask = n == 6 ? ~0ull : (1ull << size) - 1;
  int best = size;
  for (unsigned u = 0; u < count; ++u) {
    const int d = std::popcount(f ^ (bits::kLinear[u] & mask));
    best = std::min(best, std::min(d, size - d));
  }
  return best;
}

inline int nonlinearity_word6(std::uint64_t f) {
  int best = 64;
  for (unsigned u = 0; u < 64; ++u) {
    const int d = std::popcount(f ^ bits::kLinear[u]);
    best = std::min(best, std::min(d, 64 - d));
  }
  return best;
}

inline int nonlinearity_words7(std::uint64_t lo, std::uint64_t hi) {
  int best = 128;
  for (unsigned u = 0; u < 64; ++u) {
    const int a = std::popcount(lo ^ bits::kLinear[u]);
    const int c = std::popcount(hi ^ bits::kLinear[u]);
    // u7 = 0 gives a + c, u7 = 1 gives a + (64 - c); each with its complement.
    const int d0 = a + c;
    const int d1 = a + 64 - c;
    best = std::min({best, d0, 128 - d0, d1, 128 - d1});
  }
  return best;
}

}  // namespace detail

/// nl(f) = min over affine g of d(f, g) = 2^(n-1) - max_u |W(u)| / 2.
inline int nonlinearity(const TruthTable& t) {
  if (t.num_vars() == 7) return detail::nonlinearity_words7(t.word(0), t.word(1));
  return detail::nonlinearity_word(t.word(0), t.num_vars());
}

}  // namespace rmcover
