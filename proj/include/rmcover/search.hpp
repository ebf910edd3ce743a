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

// Sampled search for 7-variable functions fun_i1 || (fun_i2(Ax + b) + g)
// with nl_2 = 42, using the Fh-set inclusions on the halves as a filter and
// the exact concatenation kernel as the confirmer.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "rmcover/affine.hpp"
#include "rmcover/quadratic.hpp"
#include "rmcover/truth_table.hpp"

namespace rmcover {

/// nl_2 of a 7-variable function, exact, via its two 6-variable halves.
/// With a threshold t the scan stops at the first codeword closer than t.
Nl2Result exact_nl2_7(const TruthTable& f, std::optional<int> threshold = {}, int threads = 1);

enum class PruneMode {
  /// Exact kernel only on condition-2 passes and sampled cross-checks.
  condition2_first,
  /// Exact kernel on every candidate.
  direct,
};

std::string to_string(PruneMode m);
PruneMode prune_mode_from_string(const std::string& s);

inline constexpr std::uint64_t kDefaultSearchSeed = 7;

struct SearchConfig {
  int i1 = 4;
  int i2 = 4;
  std::uint64_t seed = kDefaultSearchSeed;
  /// Number of (A, b, g) candidates.
  std::uint64_t budget = 100;
  PruneMode mode = PruneMode::condition2_first;
  int threads = 1;
  /// Early-exit threshold for the exact kernel.
  int threshold = 41;
  /// Every k-th candidate also gets the exact kernel without a threshold and
  /// the direct 2^21-form scan over the concatenation. 0 disables.
  std::uint64_t cross_check_every = 100;
  /// Candidate 0 is A = I, b = 0, g = 0 instead of a random draw.
  bool identity_first = true;

  /// Throws std::invalid_argument for i1, i2 outside {4, 6}, a zero budget
  /// or a threshold outside [1, 64].
  void validate() const;
};

/// Candidate k of a configuration. Depends only on (seed, k, identity_first).
struct SearchCandidate {
  AffineMap map;
  /// Homogeneous quadratic plus linear part, no constant.
  AnfPolynomial g;
};

SearchCandidate search_candidate(const SearchConfig& cfg, std::uint64_t index);
/// fun_i2(Ax + b) + g.
TruthTable candidate_half(int i2, const SearchCandidate& c);

struct SearchRecord {
  std::uint64_t index = 0;
  int i1 = 4;
  int i2 = 4;
  SearchCandidate candidate;
  bool condition2 = false;
  /// Set whenever the exact kernel ran. With exact = false the value is an
  /// upper bound below the threshold.
  std::optional<int> nl2;
  bool exact = false;
  /// Direct-scan value, when this candidate was cross-checked.
  std::optional<int> nl2_direct;
  /// UTC, ISO 8601. Not part of the deterministic content.
  std::string timestamp;

  nlohmann::json to_json() const;
};

struct SearchSummary {
  std::uint64_t candidates = 0;
  std::uint64_t condition2_passes = 0;
  std::uint64_t exact_runs = 0;
  std::uint64_t cross_checks = 0;
  /// Largest exactly computed nl_2; -1 if none.
  int max_nl2 = -1;
  /// Candidates confirmed at nl_2 = 42.
  std::vector<std::uint64_t> witnesses;

  nlohmann::json to_json() const;
};

/// Thrown when a candidate breaks the filter biconditional or the bound 42.
class SearchViolation : public std::runtime_error {
 public:
  SearchViolation(const std::string& what, nlohmann::json dump)
      : std::runtime_error(what), dump_(std::move(dump)) {}
  const nlohmann::json& dump() const { return dump_; }

 private:
  nlohmann::json dump_;
};

/// Evaluates one candidate. Throws SearchViolation on a violation.
SearchRecord evaluate_candidate(const SearchConfig& cfg, std::uint64_t index);

/// Runs the whole budget. Records reach `sink` in candidate order, whatever
/// the thread count.
SearchSummary witness_search(const SearchConfig& cfg, const std::function<void(const SearchRecord&)>& sink = {});

}  // namespace rmcover
