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

#include "rmcover/search.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rmcover/catalog.hpp"

namespace rmcover {
namespace {

nlohmann::json without_timestamp(const SearchRecord& r) {
  nlohmann::json j = r.to_json();
  j.erase("timestamp");
  return j;
}

TEST(ExactNl2, DegreeTwoIsZero) {
  std::mt19937_64 rng(1);
  EXPECT_EQ(exact_nl2_7(random_degree2(7, rng)).value, 0);
  EXPECT_THROW(exact_nl2_7(TruthTable(6)), std::invalid_argument);
}

TEST(ExactNl2, RandomFunctionsMatchDirectScanAndStayBelow44) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 3; ++trial) {
    const TruthTable f = oracle::random_table(7, rng);
    const Nl2Result r = exact_nl2_7(f);
    EXPECT_TRUE(r.exact);
    EXPECT_LE(r.value, 44);
    EXPECT_EQ(r.value, second_order_nonlinearity(f));
    if (trial == 0) EXPECT_EQ(r.value, oracle::nl2_direct_7(f));
  }
}

TEST(ExactNl2, PinnedRegressionValues) {
  // fun_1 || fun_1 does not depend on x7.
  EXPECT_EQ(exact_nl2_7(concatenate(fun(1), fun(1))).value, 36);
  EXPECT_EQ(exact_nl2_7(concatenate(fun(4), fun(6))).value, 32);
}

TEST(ExactNl2, ThresholdAgreesWithFullRun) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const TruthTable f = oracle::random_table(7, rng);
    const int full = exact_nl2_7(f).value;
    for (int t : {10, full, full + 1, 41, 50}) {
      const Nl2Result r = exact_nl2_7(f, t, 2);
      if (r.exact) {
        EXPECT_EQ(r.value, full);
        EXPECT_GE(full, t);
      } else {
        EXPECT_LT(r.value, t);
        EXPECT_LT(full, t);
        EXPECT_GE(r.value, full);
      }
    }
  }
}

TEST(SearchConfig, Validation) {
  SearchConfig c;
  EXPECT_NO_THROW(c.validate());
  c.i1 = 5;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = SearchConfig{};
  c.budget = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = SearchConfig{};
  c.threshold = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  EXPECT_EQ(prune_mode_from_string("direct"), PruneMode::direct);
  EXPECT_THROW(prune_mode_from_string("fast"), std::invalid_argument);
}

TEST(Search, IdentityCandidateIsDefinite) {
  SearchConfig c;
  c.i1 = 4;
  c.i2 = 4;
  const SearchRecord a = evaluate_candidate(c, 0);
  EXPECT_EQ(a.candidate.map, AffineMap::identity(6));
  EXPECT_TRUE(a.candidate.g.empty());
  EXPECT_FALSE(a.condition2);
  ASSERT_TRUE(a.nl2.has_value());
  EXPECT_EQ(*a.nl2, 32);
  EXPECT_EQ(a.nl2_direct, 32);
  EXPECT_EQ(without_timestamp(a), without_timestamp(evaluate_candidate(c, 0)));
}

TEST(Search, CandidatesDependOnSeedAndIndex) {
  SearchConfig c;
  const SearchCandidate a = search_candidate(c, 5);
  const SearchCandidate b = search_candidate(c, 5);
  EXPECT_EQ(a.map, b.map);
  EXPECT_EQ(a.g, b.g);
  EXPECT_LE(a.g.degree(), 2);
  for (Monomial m : a.g.monomials()) EXPECT_NE(m, 0);
  c.seed = 8;
  EXPECT_FALSE(search_candidate(c, 5).map == a.map && search_candidate(c, 5).g == a.g);
}

TEST(Search, RecordStreamIndependentOfThreads) {
  SearchConfig c;
  c.i1 = 6;
  c.i2 = 4;
  c.budget = 12;
  c.seed = 99;
  c.cross_check_every = 5;
  std::vector<nlohmann::json> one, many;
  const SearchSummary s1 = witness_search(c, [&](const SearchRecord& r) { one.push_back(without_timestamp(r)); });
  c.threads = 3;
  const SearchSummary s3 = witness_search(c, [&](const SearchRecord& r) { many.push_back(without_timestamp(r)); });
  EXPECT_EQ(one, many);
  EXPECT_EQ(s1.to_json(), s3.to_json());
  EXPECT_EQ(s1.candidates, 12u);
  EXPECT_EQ(s1.cross_checks, 3u);
  for (std::size_t k = 0; k < one.size(); ++k) EXPECT_EQ(one[k]["candidate"], k);
}

TEST(Search, DirectModeBoundsEveryCandidate) {
  SearchConfig c;
  c.budget = 10;
  c.mode = PruneMode::direct;
  c.seed = 5;
  std::uint64_t seen = 0;
  witness_search(c, [&](const SearchRecord& r) {
    ++seen;
    ASSERT_TRUE(r.nl2.has_value());
    if (!r.condition2) EXPECT_LE(*r.nl2, 40);
  });
  EXPECT_EQ(seen, 10u);
}

TEST(Search, RecordCarriesFullCandidate) {
  SearchConfig c;
  c.seed = 11;
  const SearchRecord r = evaluate_candidate(c, 3);
  const nlohmann::json j = r.to_json();
  nlohmann::json witness = {{"A", j["A"]}, {"b", j["b"]}, {"g", j["g"]}};
  const EquivalenceWitness w = witness_from_json(witness, 6);
  EXPECT_EQ(w.map, r.candidate.map);
  EXPECT_EQ(w.g, r.candidate.g);
  EXPECT_TRUE(verify_witness(fun(c.i2), candidate_half(c.i2, r.candidate), w));
}

}  // namespace
}  // namespace rmcover
