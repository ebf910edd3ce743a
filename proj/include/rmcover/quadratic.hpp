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

// Homogeneous quadratic forms and the nonlinearity of f + g as g ranges over
// all of them: second-order nonlinearity, NFh histograms and Fh sets.

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <iterator>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "rmcover/truth_table.hpp"

namespace rmcover {

inline constexpr int num_quadratic_pairs(int n) { return n * (n - 1) / 2; }
inline constexpr std::uint32_t num_quadratic_forms(int n) { return 1u << num_quadratic_pairs(n); }

/// Bit position of x_i x_j (1 <= i < j <= n) in a form index: pairs are
/// numbered (1,2), (1,3), ..., (1,n), (2,3), ..., (n-1,n).
int pair_bit(int n, int i, int j);

/// Truth tables of the n(n-1)/2 products x_i x_j, in pair_bit order.
struct QuadraticBasis {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;
  std::vector<TruthTable> tables;
};

/// Shared immutable basis for 2 <= n <= 7. Throws std::invalid_argument
/// otherwise.
const QuadraticBasis& quadratic_basis(int n);

/// sum_{i<j} a_ij x_i x_j, identified by its coefficient bits.
class QuadraticForm {
 public:
  QuadraticForm(int n, std::uint32_t index);

  static QuadraticForm from_anf(const AnfPolynomial& p);

  int num_vars() const { return n_; }
  std::uint32_t index() const { return index_; }
  bool coeff(int i, int j) const;
  /// 2 for a nonzero form, 0 for the zero form.
  int degree() const { return index_ == 0 ? 0 : 2; }

  TruthTable table() const;
  AnfPolynomial anf() const;

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  int n_;
  std::uint32_t index_;
};

/// Forward range over forms with index in [lo, hi), in index order.
class QuadraticRange {
 public:
  class iterator {
   public:
    using value_type = QuadraticForm;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(int n, std::uint32_t i) : n_(n), i_(i) {}
    QuadraticForm operator*() const { return {n_, i_}; }
    iterator& operator++() {
      ++i_;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++i_;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.i_ == b.i_; }

   private:
    int n_ = 0;
    std::uint32_t i_ = 0;
  };

  QuadraticRange(int n, std::uint32_t lo, std::uint32_t hi) : n_(n), lo_(lo), hi_(hi) {}
  iterator begin() const { return {n_, lo_}; }
  iterator end() const { return {n_, hi_}; }
  std::uint32_t size() const { return hi_ - lo_; }

 private:
  int n_;
  std::uint32_t lo_;
  std::uint32_t hi_;
};

/// All 2^(n(n-1)/2) forms; 2 <= n <= 7.
QuadraticRange enumerate_quadratics(int n);
/// Forms with index in [lo, hi), for sharding.
QuadraticRange enumerate_quadratics(int n, std::uint32_t lo, std::uint32_t hi);

/// Calls fn(g, f + g) for the forms g = k ^ (k >> 1), k in [lo, hi). Gray
/// order makes consecutive tables differ by a single x_i x_j.
template <class Fn>
void for_each_coset(const TruthTable& f, std::uint32_t lo, std::uint32_t hi, Fn&& fn) {
  if (lo >= hi) return;
  const QuadraticBasis& basis = quadratic_basis(f.num_vars());
  const std::uint32_t first = lo ^ (lo >> 1);
  TruthTable t = f ^ QuadraticForm(f.num_vars(), first).table();
  for (std::uint32_t k = lo;;) {
    fn(k ^ (k >> 1), static_cast<const TruthTable&>(t));
    if (++k == hi) break;
    t ^= basis.tables[static_cast<std::size_t>(std::countr_zero(k))];
  }
}

/// nl(f + g) for every form g, indexed by form index. Work is split into
/// `threads` contiguous shards.
std::vector<std::uint8_t> coset_nonlinearities(const TruthTable& f, int threads = 1);

/// NFh_f: r -> #{g homogeneous quadratic : nl(f + g) = r}.
class NlProfile {
 public:
  static constexpr int kMaxValue = 64;

  NlProfile() = default;
  explicit NlProfile(int n) : n_(n) {}

  static NlProfile from_nonlinearities(int n, std::span<const std::uint8_t> nls);

  int num_vars() const { return n_; }
  std::uint64_t count(int r) const;
  void add(int r, std::uint64_t c = 1);
  NlProfile& operator+=(const NlProfile& other);

  std::uint64_t sum() const;
  /// Smallest / largest r with a nonzero count; -1 for an empty profile.
  int min_value() const;
  int max_value() const;
  /// sum_{k >= r} count(k).
  std::uint64_t tail(int r) const;
  /// r values with nonzero count, ascending.
  std::vector<int> support() const;

  /// "r,count" per nonzero entry with a header row.
  std::string to_csv() const;
  /// {"n": n, "counts": {"r": count, ...}, "sum": total}; nonzero entries only.
  nlohmann::json to_json() const;

  friend bool operator==(const NlProfile&, const NlProfile&) = default;

 private:
  int n_ = 0;
  std::array<std::uint64_t, kMaxValue + 1> counts_{};
};

NlProfile nfh_profile(const TruthTable& f, int threads = 1);

/// Fh_f(r) as a bitset over form indices.
class FhSet {
 public:
  FhSet(int n, int r);

  static FhSet from_nonlinearities(int n, std::span<const std::uint8_t> nls, int r);

  int num_vars() const { return n_; }
  int value() const { return r_; }
  bool contains(std::uint32_t index) const { return (bits_[index >> 6] >> (index & 63)) & 1u; }
  void insert(std::uint32_t index) { bits_[index >> 6] |= 1ull << (index & 63); }
  std::uint64_t size() const;
  std::vector<std::uint32_t> members() const;
  std::span<const std::uint64_t> words() const { return bits_; }

  FhSet& operator|=(const FhSet& other);
  /// Smallest member not in `other`, if any.
  std::optional<std::uint32_t> first_not_in(const FhSet& other) const;

  /// Bit k of the bitset is form k; printed most significant nibble first.
  std::string to_hex() const;

 private:
  int n_;
  int r_;
  std::vector<std::uint64_t> bits_;
};

FhSet fh_set(const TruthTable& f, int r, int threads = 1);

struct SubsetVerdict {
  bool holds = true;
  /// A form in Fh_{f_i}(r) outside the union, when the inclusion fails.
  std::optional<std::uint32_t> witness;
};

/// Fh_{f_i}(r) subset of the union over s in rs of Fh_{f_j}(s).
SubsetVerdict fh_subset(std::span<const std::uint8_t> nls_i, int r, std::span<const std::uint8_t> nls_j,
                        std::span<const int> rs);
SubsetVerdict fh_subset(const TruthTable& f_i, int r, const TruthTable& f_j, std::span<const int> rs,
                        int threads = 1);

/// nl_2(f): min over forms g of nl(f + g), which is the distance from f to
/// RM(2, n) since nl already minimises over the affine part.
int second_order_nonlinearity(const TruthTable& f, int threads = 1);

/// max over forms g of nl(f + g).
int max_nl_over_quadratics(const TruthTable& f, int threads = 1);

/// Outcome of an nl_2 computation with an optional early-exit threshold t.
/// exact: value is nl_2. Otherwise value < t is the distance to one codeword
/// found before the scan finished, which proves nl_2 <= value.
struct Nl2Result {
  int value = 0;
  bool exact = true;
};

/// nl_2(f1 || f2) for n-variable halves, n <= 6.
///
/// An RM(2, n+1) codeword restricted to the two halves is (g + l1, g + l2)
/// with the same homogeneous part g and independent affine l1, l2, so
/// nl_2(f1 || f2) = min_g nl(f1 + g) + nl(f2 + g). Stops at the first form
/// whose sum drops below `threshold`. With several threads the reported
/// early-exit value is the one from the lowest shard, so it is deterministic.
Nl2Result concatenation_nl2(const TruthTable& f1, const TruthTable& f2, std::optional<int> threshold = {},
                            int threads = 1);

/// Uniform homogeneous quadratic form.
QuadraticForm random_quadratic_form(int n, std::mt19937_64& rng);
/// Uniform function of degree <= 2 (quadratic, linear and constant parts).
TruthTable random_degree2(int n, std::mt19937_64& rng);

}  // namespace rmcover
