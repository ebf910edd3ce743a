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

#include "rmcover/truth_table.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rmcover/affine.hpp"

namespace rmcover {
namespace {

TEST(TruthTable, VariableTablesFollowIndexConvention) {
  for (int n = 1; n <= 7; ++n) {
    for (int i = 1; i <= n; ++i) {
      const TruthTable t = TruthTable::variable(n, i);
      for (std::uint32_t x = 0; x < t.size(); ++x) EXPECT_EQ(t.get(x), ((x >> (i - 1)) & 1u) != 0);
    }
  }
}

TEST(TruthTable, RejectsBadSizes) {
  EXPECT_THROW(TruthTable(0), std::invalid_argument);
  EXPECT_THROW(TruthTable(8), std::invalid_argument);
  EXPECT_THROW(TruthTable::variable(3, 4), std::invalid_argument);
  EXPECT_THROW(TruthTable(3) ^= TruthTable(4), std::invalid_argument);
}

TEST(TruthTable, ComplementKeepsUnusedBitsClear) {
  const TruthTable t = ~TruthTable(3);
  EXPECT_EQ(t.word(0), 0xffu);
  EXPECT_EQ(weight(t), 8);
  EXPECT_EQ(weight(~TruthTable(7)), 128);
}

TEST(Anf, MoebiusMatchesSubsetSums) {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 7; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const TruthTable f = oracle::random_table(n, rng);
      const auto coeffs = oracle::anf_coefficients(f);
      const AnfPolynomial p = anf_from_truth_table(f);
      for (std::uint32_t m = 0; m < f.size(); ++m) EXPECT_EQ(p.contains(static_cast<Monomial>(m)), coeffs[m]);
      EXPECT_EQ(truth_table_from_anf(p), f);
      EXPECT_EQ(degree(f), oracle::degree(f));
    }
  }
}

TEST(Anf, ParseAndPrint) {
  const AnfPolynomial p = parse_anf("x1x2 + x3 + 1", 3);
  EXPECT_EQ(to_string(p), "x1x2+x3+1");
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(to_string(parse_anf("x2+x2", 3)), "0");
  EXPECT_EQ(to_string(parse_anf("x_1x_3", 3)), "x1x3");
  EXPECT_EQ(parse_anf("x1x7").num_vars(), 7);
  EXPECT_EQ(to_string(AnfPolynomial(4)), "0");
  EXPECT_THROW(parse_anf("x1y2", 3), std::invalid_argument);
  EXPECT_THROW(parse_anf("x4", 3), std::invalid_argument);
  EXPECT_THROW(AnfPolynomial(3, {1, 1}), std::invalid_argument);
}

TEST(Anf, MonomialsSortedByDegreeThenLex) {
  const AnfPolynomial p = parse_anf("x3+x1x2x3+1+x1x3+x1x2", 3);
  EXPECT_EQ(to_string(p), "x1x2x3+x1x2+x1x3+x3+1");
}

TEST(Hex, RoundTripAndLengthInference) {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 7; ++n) {
    const TruthTable f = oracle::random_table(n, rng);
    const std::string h = to_hex(f);
    EXPECT_EQ(parse_hex(h), f) << h;
    EXPECT_EQ(parse_hex(h, n), f);
  }
  EXPECT_EQ(to_hex(TruthTable::variable(3, 1)), "aa");
  EXPECT_EQ(to_hex(TruthTable::variable(7, 7)), "ffffffffffffffff0000000000000000");
  EXPECT_THROW(parse_hex("abc"), std::invalid_argument);
  EXPECT_THROW(parse_hex("zz"), std::invalid_argument);
  EXPECT_THROW(parse_hex("1f", 2), std::invalid_argument);
}

TEST(Concatenation, SplitInvertsConcatenate) {
  std::mt19937_64 rng(8);
  for (int n = 1; n <= 6; ++n) {
    const TruthTable a = oracle::random_table(n, rng);
    const TruthTable b = oracle::random_table(n, rng);
    const TruthTable c = concatenate(a, b);
    ASSERT_EQ(c.num_vars(), n + 1);
    for (std::uint32_t x = 0; x < a.size(); ++x) {
      EXPECT_EQ(c.get(x), a.get(x));
      EXPECT_EQ(c.get(x + a.size()), b.get(x));
    }
    const auto [s1, s2] = split(c);
    EXPECT_EQ(s1, a);
    EXPECT_EQ(s2, b);
  }
  EXPECT_THROW(concatenate(TruthTable(3), TruthTable(4)), std::invalid_argument);
  EXPECT_THROW(concatenate(TruthTable(7), TruthTable(7)), std::invalid_argument);
  EXPECT_THROW(split(TruthTable(1)), std::invalid_argument);
}

TEST(Distance, CountsDifferingPoints) {
  const TruthTable a = TruthTable::variable(4, 1);
  const TruthTable b = TruthTable::variable(4, 2);
  EXPECT_EQ(distance(a, b), 8);
  EXPECT_EQ(distance(a, a), 0);
  EXPECT_THROW(distance(a, TruthTable(5)), std::invalid_argument);
}

TEST(Affine, ApplyMatchesPointwiseComposition) {
  std::mt19937_64 rng(21);
  for (int n = 2; n <= 7; ++n) {
    AffineSampler sampler(static_cast<std::uint64_t>(n));
    for (int trial = 0; trial < 10; ++trial) {
      const TruthTable f = oracle::random_table(n, rng);
      const AffineMap m = sampler.next(n);
      std::vector<std::uint32_t> rows(m.linear.rows.begin(), m.linear.rows.begin() + n);
      EXPECT_EQ(apply_affine(f, m), oracle::compose(f, rows, m.translation));
    }
  }
  BitMatrix singular = BitMatrix::identity(3);
  singular.rows[2] = singular.rows[1];
  EXPECT_THROW(apply_affine(TruthTable(3), AffineMap{singular, 0}), std::invalid_argument);
}

TEST(Reduce, DropsDegreeAtMostTwoPart) {
  std::mt19937_64 rng(2);
  for (int n = 3; n <= 7; ++n) {
    const TruthTable f = oracle::random_table(n, rng);
    const TruthTable r = reduce_mod_rm2(f);
    EXPECT_LE(oracle::degree(f ^ r), 2);
    const AnfPolynomial p = anf_from_truth_table(r);
    for (Monomial m : p.monomials()) EXPECT_GE(std::popcount(static_cast<unsigned>(m)), 3);
  }
}

}  // namespace
}  // namespace rmcover
