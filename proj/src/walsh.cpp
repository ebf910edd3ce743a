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

#include "rmcover/walsh.hpp"

#include <cstdlib>

namespace rmcover {

std::int64_t WalshSpectrum::energy() const {
  std::int64_t sum = 0;
  for (int v : values) sum += static_cast<std::int64_t>(v) * v;
  return sum;
}

int WalshSpectrum::max_abs() const {
  int best = 0;
  for (int v : values) best = std::max(best, std::abs(v));
  return best;
}

WalshSpectrum walsh_spectrum(const TruthTable& t) {
  WalshSpectrum out{t.num_vars(), std::vector<int>(t.size())};
  auto& v = out.values;
  for (std::uint32_t x = 0; x < t.size(); ++x) v[x] = t.get(x) ? -1 : 1;
  for (std::uint32_t half = 1; half < t.size(); half <<= 1) {
    for (std::uint32_t block = 0; block < t.size(); block += 2 * half) {
      for (std::uint32_t i = block; i < block + half; ++i) {
        const int a = v[i];
        const int b = v[i + half];
        v[i] = a + b;
        v[i + half] = a - b;
      }
    }
  }
  return out;
}

}  // namespace rmcover
