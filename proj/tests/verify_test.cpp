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

#include "rmcover/verify.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "rmcover/catalog.hpp"

namespace rmcover {
namespace {

const VerifyReport& full_report() {
  static const VerifyReport report = verify_all(VerifyOptions{kDefaultVerifySeed, 30, 1});
  return report;
}

std::map<std::string, const ClaimResult*> by_id(const VerifyReport& r) {
  std::map<std::string, const ClaimResult*> out;
  for (const auto& c : r.claims) out[c.id] = &c;
  return out;
}

TEST(VerifyAll, ClaimIdsAreUnique) {
  std::set<std::string> ids;
  for (const auto& c : full_report().claims) EXPECT_TRUE(ids.insert(c.id).second) << c.id;
}

TEST(VerifyAll, CoversEveryStatedValue) {
  const auto ids = by_id(full_report());
  std::vector<std::string> expected = {"Obs1", "Lemma1.fun_1", "Obs2.fun_2", "Obs5.1@16", "Obs5.1@28",
                                       "Obs5.2@26", "Obs5.3@>=26", "Obs5.4@28", "Obs5.5@>=26",
                                       "Obs6.fun_8@15", "Obs6.fun_8@27", "Remark1.bent", "Remark1.nl2",
                                       "Prop1.d(fun_2,fun_1)", "Prop1.spot", "Prop2.spot", "Prop3.spot",
                                       "Def1.sum-identity", "Def1.affine-invariance", "Thm1.bound"};
  for (int i = 3; i <= 7; ++i) {
    expected.push_back("Obs3.fun_" + std::to_string(i));
    expected.push_back("Obs4.x1x2x3x4x5x6+fun_" + std::to_string(i));
  }
  for (int i = 4; i <= 7; ++i) expected.push_back("Obs6.x1x2x3x4x5x6+fun_" + std::to_string(i) + "@27");
  for (int i = 9; i <= 18; ++i) {
    const std::string f = "fun_" + std::to_string(i);
    expected.push_back("Obs7.nl2." + f);
    for (const char* suffix : {"@14", "@16", "@>26", "@26>0"}) expected.push_back("Obs7." + f + suffix);
  }
  for (int a : {4, 6}) {
    for (int b : {4, 6}) expected.push_back("Thm1.cond2@(fun_" + std::to_string(a) + ",fun_" + std::to_string(b) + ")");
  }
  for (const auto& id : expected) EXPECT_TRUE(ids.count(id)) << id;
}

TEST(VerifyAll, KnownOutcomes) {
  const VerifyReport& r = full_report();
  std::set<std::string> refuted, discrepancy;
  for (const auto& c : r.claims) {
    if (c.status == ClaimStatus::refuted) refuted.insert(c.id);
    if (c.status == ClaimStatus::discrepancy) discrepancy.insert(c.id);
  }
  // These printed values disagree with recomputation (and with enumeration
  // of every RM(2,6) codeword in the quadratic tests).
  EXPECT_EQ(refuted, (std::set<std::string>{"Obs4.x1x2x3x4x5x6+fun_7", "Obs7.nl2.fun_10", "Obs7.fun_10@16",
                                             "Remark1.nl2"}));
  EXPECT_EQ(discrepancy, std::set<std::string>{"Obs5.2@26"});
  EXPECT_EQ(r.worst(), ClaimStatus::refuted);
}

TEST(VerifyAll, Fun4DiscrepancyCarriesBothValues) {
  const auto ids = by_id(full_report());
  const ClaimResult& c = *ids.at("Obs5.2@26");
  EXPECT_EQ(c.stated, 10244);
  EXPECT_EQ(c.computed, 1024);
  EXPECT_NE(c.details.find("forces 1024"), std::string::npos);
  for (int r : {16, 18, 20, 22, 24, 28}) {
    EXPECT_EQ(ids.at("Obs5.2@" + std::to_string(r))->status, ClaimStatus::confirmed) << r;
  }
}

TEST(VerifyAll, ThreadCountDoesNotChangeResults) {
  const VerifyReport a = verify_all(VerifyOptions{3, 10, 1});
  const VerifyReport b = verify_all(VerifyOptions{3, 10, 4});
  EXPECT_EQ(a.to_json(), b.to_json());
  EXPECT_EQ(a.to_csv(), b.to_csv());
}

TEST(VerifyAll, CsvHasOneRowPerClaim) {
  const VerifyReport& r = full_report();
  const std::string csv = r.to_csv();
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), r.claims.size() + 1);
  EXPECT_EQ(csv.rfind("id,status,stated,computed\n", 0), 0u);
  const nlohmann::json j = r.to_json();
  EXPECT_EQ(j["summary"]["discrepancy"], 1);
  EXPECT_EQ(j["claims"].size(), r.claims.size());
}

TEST(ClaimStatus, Names) {
  EXPECT_EQ(to_string(ClaimStatus::skipped), "skipped-out-of-scope");
  EXPECT_EQ(to_string(ClaimStatus::discrepancy), "discrepancy");
}

TEST(Lemma2, HypothesisComparesEntryAgainstTail) {
  NlProfile p1(6), p2(6);
  p1.add(16, 10);
  p1.add(28, 5);
  p2.add(16, 4);
  p2.add(28, 20);
  // p2(16) = 4 < p1 tail(28) = 5, but p1(16) = 10 < p2 tail(28) = 20 too.
  EXPECT_FALSE(lemma2_hypothesis(p1, p2, 28, 16));
  p2.add(16, 2);
  EXPECT_TRUE(lemma2_hypothesis(p1, p2, 28, 16));
}

TEST(Lemma2, ConclusionOnCatalogPair) {
  const ClaimResult c = lemma2_conclusion_check(fun(3), fun(8), 28, 15, "fun_3,fun_8");
  EXPECT_EQ(c.status, ClaimStatus::confirmed);
  EXPECT_EQ(c.id, "Lemma2@(fun_3,fun_8,28,15)");
  const ClaimResult vacuous = lemma2_conclusion_check(fun(1), fun(1), 0, 30, "x");
  EXPECT_EQ(vacuous.status, ClaimStatus::skipped);
}

TEST(Condition2, IdentityPairsFail) {
  for (int a : {4, 6}) {
    for (int b : {4, 6}) {
      const Condition2Report rep = theorem1_condition2(fun(a), fun(b));
      EXPECT_EQ(rep.relations.size(), 6u);
      EXPECT_FALSE(rep.holds());
      const ClaimResult c = theorem1_instance_check(fun(a), fun(b), "t");
      EXPECT_EQ(c.status, ClaimStatus::confirmed);
      EXPECT_LE(c.computed["nl2"].get<int>(), 40);
    }
  }
}

TEST(Condition2, InclusionsOnSyntheticSpectra) {
  // Every form sits in the target union on both sides.
  std::vector<std::uint8_t> a(8, 26), b(8, 26);
  EXPECT_TRUE(theorem1_condition2(a, b).holds());
  a[3] = 16;
  const Condition2Report rep = theorem1_condition2(a, b);
  EXPECT_TRUE(rep.holds());
  b[3] = 24;
  const Condition2Report broken = theorem1_condition2(a, b);
  EXPECT_FALSE(broken.holds());
  EXPECT_EQ(broken.relations[0].verdict.witness, 3u);
  EXPECT_EQ(broken.to_json()["holds"], false);
}

TEST(SpotChecks, DeterministicForSeed) {
  const auto a = proposition_spot_checks(42, 5);
  const auto b = proposition_spot_checks(42, 5);
  ASSERT_EQ(a.size(), 3u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(to_json(a[i]), to_json(b[i]));
    EXPECT_EQ(a[i].status, ClaimStatus::confirmed) << a[i].id;
  }
}

}  // namespace
}  // namespace rmcover
