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
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rmcover {

/// Splits [0, total) into `shards` contiguous ranges and runs
/// fn(lo, hi, shard) for each, one thread per shard. Shard s always covers the
/// same range for a given (total, shards), so per-shard results can be merged
/// in shard order. The first exception thrown by a shard is rethrown.
template <class Fn>
void parallel_shards(std::uint64_t total, int shards, Fn&& fn) {
  shards = static_cast<int>(std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(shards, 1)), 1,
                                                      std::max<std::uint64_t>(total, 1)));
  const auto bound = [&](int s) { return total * static_cast<std::uint64_t>(s) / static_cast<std::uint64_t>(shards); };
  if (shards == 1) {
    fn(std::uint64_t{0}, total, 0);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> workers;
    workers.reserve(static_cast<std::size_t>(shards));
    for (int s = 0; s < shards; ++s) {
      workers.emplace_back([&, s] {
        try {
          fn(bound(s), bound(s + 1), s);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace rmcover
