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

// Claim-by-claim recomputation of the RM(2,7) covering-radius argument:
// stated nl_2 values, NFh histogram entries, the concatenation
// bound, instance checks of the case analyses and the nl_2 = 42 criterion.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rmcover/quadratic.hpp"
#include "rmcover/truth_table.hpp"

namespace rmcover {

enum class ClaimStatus { confirmed, refuted, discrepancy, skipped };

/// "confirmed", "refuted", "discrepancy", "skipped-out-of-scope".
std::string to_string(ClaimStatus s);

struct ClaimResult {
  std::string id;
  ClaimStatus status = ClaimStatus::confirmed;
  nlohmann::json stated;
  nlohmann::json computed;
  std::string details;
};

nlohmann::json to_json(const ClaimResult& c);

/// max over forms g of nl(fun_1 + g) against the stated bound 22.
ClaimResult verify_observation_1(int threads = 1);

/// Representative direction of the nl_2 classifications for fun_1, fun_2,
/// fun_3..fun_7, x1x2x3x4x5x6 + fun_i and fun_9..fun_18, plus one skipped
/// record per completeness direction.
std::vector<ClaimResult> verify_observation_nl2_values(int threads = 1);

/// Every stated NFh entry of fun_3..fun_18 and x1x2x3x4x5x6 + fun_i.
std::vector<ClaimResult> verify_observation_5_6_7_profiles(int threads = 1);

/// The 6-variable bent example and the bent-function remarks built on the
/// profiles.
std::vector<ClaimResult> verify_remark_1(int threads = 1);

/// NFh_{f_i}(n2) > sum_{k >= n1} NFh_{f_j}(k) for {i, j} = {1, 2}.
bool lemma2_hypothesis(const NlProfile& p1, const NlProfile& p2, int n1, int n2);
bool lemma2_hypothesis(const TruthTable& f1, const TruthTable& f2, int n1, int n2);

/// Computes nl_2(f1 || f2) and checks it is below n1 + n2. Skipped when the
/// hypothesis is false.
ClaimResult lemma2_conclusion_check(const TruthTable& f1, const TruthTable& f2, int n1, int n2,
                                    const std::string& label = {});

/// One inclusion Fh_{f_lhs}(r) subset of union_{s in rs} Fh_{f_rhs}(s).
struct SubsetRelation {
  int lhs = 1;
  int rhs = 2;
  int r = 0;
  std::vector<int> rs;
  SubsetVerdict verdict;
};

/// The three inclusions Fh(16) in Fh(26), Fh(18) in Fh(24) + Fh(26),
/// Fh(20) in Fh(22) + Fh(24) + Fh(26), in both orders.
struct Condition2Report {
  std::vector<SubsetRelation> relations;

  bool holds() const;
  nlohmann::json to_json() const;
};

Condition2Report theorem1_condition2(std::span<const std::uint8_t> nls1, std::span<const std::uint8_t> nls2);
Condition2Report theorem1_condition2(const TruthTable& f1, const TruthTable& f2, int threads = 1);

/// Instance-level biconditional for halves of the fun_{i1} || (fun_{i2}(Ax+b) + g)
/// form: condition 2 holds iff nl_2(f1 || f2) = 42, and otherwise nl_2 <= 40.
ClaimResult theorem1_instance_check(const TruthTable& f1, const TruthTable& f2, const std::string& id);

/// Seeded instance checks of the three case analyses:
///   Prop1: one half in the nl_2 = 18 or 17 class gives nl_2(f) <= 40;
///   Prop2: both halves in nl_2 = 16 classes give nl_2(f) <= 42, and 42 only
///          for fun_4 / fun_6 classes;
///   Prop3: a 16-class half with a 15- or 14-class half gives nl_2(f) < 42.
std::vector<ClaimResult> proposition_spot_checks(std::uint64_t seed, int trials, int threads = 1);

inline constexpr std::uint64_t kDefaultVerifySeed = 20260101;

struct VerifyOptions {
  std::uint64_t seed = kDefaultVerifySeed;
  int trials = 100;
  int threads = 1;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<ClaimResult> claims;

  std::size_t count(ClaimStatus s) const;
  /// refuted > discrepancy > confirmed; skipped never raises the level.
  ClaimStatus worst() const;
  /// {"seed":..., "claims":[...], "summary":{...}}
  nlohmann::json to_json() const;
  /// id,status,stated,computed
  std::string to_csv() const;
};

/// Runs every claim. Claims are ordered by the fixed order of the checks, and
/// the numbers do not depend on the thread count.
VerifyReport verify_all(const VerifyOptions& options = {});

}  // namespace rmcover
