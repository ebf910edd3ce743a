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

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rmcover {

inline constexpr int kMaxVars = 7;

/// A product of distinct variables. Bit i-1 is set iff x_i occurs; the empty
/// product (value 0) is the constant 1.
using Monomial = std::uint8_t;

/// Evaluation vector of an n-variable Boolean function, 1 <= n <= 7.
///
/// Entry x = sum_i x_i * 2^(i-1) holds f(x_1, ..., x_n), so x_1 is the least
/// significant coordinate. Bits live in one 64-bit word for n <= 6 (unused high
/// bits are kept zero) and in two words for n = 7, with the x_7 = 1 half in the
/// second word.
class TruthTable {
 public:
  TruthTable() = default;

  /// Zero function on n variables.
  explicit TruthTable(int n);

  static TruthTable from_words(int n, std::uint64_t lo, std::uint64_t hi = 0);
  static TruthTable constant(int n, bool value);
  /// The coordinate function x_i, 1 <= i <= n.
  static TruthTable variable(int n, int i);

  int num_vars() const { return n_; }
  std::uint32_t size() const { return 1u << n_; }
  int num_words() const { return n_ == 7 ? 2 : 1; }

  bool get(std::uint32_t x) const { return (w_[x >> 6] >> (x & 63)) & 1u; }
  void set(std::uint32_t x, bool value);

  std::uint64_t word(int k) const { return w_[k]; }
  std::span<const std::uint64_t> words() const {
    return {w_.data(), static_cast<std::size_t>(num_words())};
  }

  /// Pointwise sum over GF(2). Throws std::invalid_argument if n differs.
  TruthTable& operator^=(const TruthTable& other);
  friend TruthTable operator^(TruthTable a, const TruthTable& b) { return a ^= b; }
  TruthTable operator~() const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  int n_ = 1;
  std::array<std::uint64_t, 2> w_{};
};

/// Algebraic normal form: the set of monomials with coefficient 1.
class AnfPolynomial {
 public:
  AnfPolynomial() = default;
  explicit AnfPolynomial(int n);
  /// Throws std::invalid_argument on duplicates or variables beyond x_n.
  AnfPolynomial(int n, std::vector<Monomial> monomials);

  int num_vars() const { return n_; }
  /// Sorted by descending degree, then lexicographically by variable list.
  const std::vector<Monomial>& monomials() const { return monomials_; }
  bool contains(Monomial m) const;
  bool empty() const { return monomials_.empty(); }
  /// Largest monomial size; 0 for the zero polynomial and for constant 1.
  int degree() const;

  /// Symmetric difference, i.e. polynomial addition over GF(2).
  AnfPolynomial& operator+=(const AnfPolynomial& other);
  friend AnfPolynomial operator+(AnfPolynomial a, const AnfPolynomial& b) { return a += b; }

  friend bool operator==(const AnfPolynomial&, const AnfPolynomial&) = default;

 private:
  int n_ = 1;
  std::vector<Monomial> monomials_;
};

struct AffineMap;

bool monomial_less(Monomial a, Monomial b);

TruthTable truth_table_from_anf(const AnfPolynomial& p);
AnfPolynomial anf_from_truth_table(const TruthTable& t);

int weight(const TruthTable& t);
/// Hamming distance. Throws std::invalid_argument if the variable counts differ.
int distance(const TruthTable& f, const TruthTable& g);
int degree(const TruthTable& t);

/// (x_{n+1} + 1) f1 + x_{n+1} f2: f1 on the low half, f2 on the high half.
TruthTable concatenate(const TruthTable& f1, const TruthTable& f2);
std::pair<TruthTable, TruthTable> split(const TruthTable& f);

/// x -> f(Ax + b). Throws std::invalid_argument for a singular A or an n mismatch.
TruthTable apply_affine(const TruthTable& f, const AffineMap& m);

/// Truncation of the ANF to monomials of degree >= 3, i.e. a canonical
/// representative of f modulo RM(2, n).
TruthTable reduce_mod_rm2(const TruthTable& f);

// Text formats.

/// Lowercase hex, most significant nibble first. Length is ceil(2^n / 4).
std::string to_hex(const TruthTable& t);
/// n is inferred from the length (1 -> 2, 2 -> 3, 4 -> 4, 8 -> 5, 16 -> 6,
/// 32 -> 7) unless given explicitly.
TruthTable parse_hex(std::string_view text, int n = 0);

/// "x1x2x3+x4+1"; the zero polynomial prints as "0".
std::string to_string(const AnfPolynomial& p);
std::string to_string(Monomial m);
/// Terms joined by '+', whitespace ignored. Repeated terms cancel. When n is
/// 0 it is taken from the highest variable index (at least 1).
AnfPolynomial parse_anf(std::string_view text, int n = 0);

}  // namespace rmcover
