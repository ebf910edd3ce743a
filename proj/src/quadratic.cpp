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

#include "rmcover/quadratic.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>

#include "rmcover/parallel.hpp"
#include "rmcover/walsh.hpp"

namespace rmcover {

namespace {

QuadraticBasis build_basis(int n) {
  QuadraticBasis basis;
  basis.n = n;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      basis.pairs.emplace_back(i, j);
      basis.tables.push_back(TruthTable::from_words(
          n, TruthTable::variable(n, i).word(0) & TruthTable::variable(n, j).word(0),
          TruthTable::variable(n, i).word(1) & TruthTable::variable(n, j).word(1)));
    }
  }
  return basis;
}

void check_form_vars(int n) {
  if (n < 2 || n > kMaxVars) throw std::invalid_argument("quadratic forms need 2 <= n <= 7");
}

}  // namespace

int pair_bit(int n, int i, int j) {
  if (i < 1 || i >= j || j > n) throw std::invalid_argument("pair_bit needs 1 <= i < j <= n");
  // Pairs with first index below i come first: (n-1) + (n-2) + ... + (n-i+1).
  return (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
}

const QuadraticBasis& quadratic_basis(int n) {
  static const std::array<QuadraticBasis, kMaxVars + 1> kBases = [] {
    std::array<QuadraticBasis, kMaxVars + 1> out;
    for (int n = 1; n <= kMaxVars; ++n) out[static_cast<std::size_t>(n)] = build_basis(n);
    return out;
  }();
  if (n < 1 || n > kMaxVars) throw std::invalid_argument("quadratic basis needs 1 <= n <= 7");
  return kBases[static_cast<std::size_t>(n)];
}

QuadraticForm::QuadraticForm(int n, std::uint32_t index) : n_(n), index_(index) {
  if (n < 1 || n > kMaxVars) throw std::invalid_argument("quadratic form needs 1 <= n <= 7");
  if (index >= num_quadratic_forms(n)) throw std::invalid_argument("quadratic form index out of range");
}

QuadraticForm QuadraticForm::from_anf(const AnfPolynomial& p) {
  std::uint32_t index = 0;
  for (Monomial m : p.monomials()) {
    if (std::popcount(m) != 2) throw std::invalid_argument("not a homogeneous quadratic: " + to_string(p));
    const int i = std::countr_zero(m) + 1;
    const int j = 64 - std::countl_zero(static_cast<std::uint64_t>(m));
    index |= 1u << pair_bit(p.num_vars(), i, j);
  }
  return {p.num_vars(), index};
}

bool QuadraticForm::coeff(int i, int j) const {
  if (i > j) std::swap(i, j);
  return (index_ >> pair_bit(n_, i, j)) & 1u;
}

TruthTable QuadraticForm::table() const {
  const QuadraticBasis& basis = quadratic_basis(n_);
  TruthTable t(n_);
  for (std::uint32_t rest = index_; rest != 0; rest &= rest - 1) {
    t ^= basis.tables[static_cast<std::size_t>(std::countr_zero(rest))];
  }
  return t;
}

AnfPolynomial QuadraticForm::anf() const {
  const QuadraticBasis& basis = quadratic_basis(n_);
  std::vector<Monomial> monomials;
  for (std::size_t k = 0; k < basis.pairs.size(); ++k) {
    if ((index_ >> k) & 1u) {
      const auto [i, j] = basis.pairs[k];
      monomials.push_back(static_cast<Monomial>((1u << (i - 1)) | (1u << (j - 1))));
    }
  }
  return AnfPolynomial(n_, std::move(monomials));
}

QuadraticRange enumerate_quadratics(int n) {
  check_form_vars(n);
  return {n, 0, num_quadratic_forms(n)};
}

QuadraticRange enumerate_quadratics(int n, std::uint32_t lo, std::uint32_t hi) {
  check_form_vars(n);
  if (lo > hi || hi > num_quadratic_forms(n)) throw std::invalid_argument("quadratic index range out of bounds");
  return {n, lo, hi};
}

std::vector<std::uint8_t> coset_nonlinearities(const TruthTable& f, int threads) {
  const int n = f.num_vars();
  const std::uint32_t total = num_quadratic_forms(n);
  std::vector<std::uint8_t> out(total);
  // Gray order is a bijection on [0, total), so shards write disjoint bytes.
  parallel_shards(total, threads, [&](std::uint64_t lo, std::uint64_t hi, int) {
    const auto l = static_cast<std::uint32_t>(lo);
    const auto h = static_cast<std::uint32_t>(hi);
    if (n == 7) {
      for_each_coset(f, l, h, [&](std::uint32_t g, const TruthTable& t) {
        out[g] = static_cast<std::uint8_t>(detail::nonlinearity_words7(t.word(0), t.word(1)));
      });
    } else if (n == 6) {
      for_each_coset(f, l, h, [&](std::uint32_t g, const TruthTable& t) {
        out[g] = static_cast<std::uint8_t>(detail::nonlinearity_word6(t.word(0)));
      });
    } else {
      for_each_coset(f, l, h, [&](std::uint32_t g, const TruthTable& t) {
        out[g] = static_cast<std::uint8_t>(detail::nonlinearity_word(t.word(0), n));
      });
    }
  });
  return out;
}

NlProfile NlProfile::from_nonlinearities(int n, std::span<const std::uint8_t> nls) {
  NlProfile p(n);
  for (std::uint8_t r : nls) ++p.counts_[r];
  return p;
}

std::uint64_t NlProfile::count(int r) const {
  return r < 0 || r > kMaxValue ? 0 : counts_[static_cast<std::size_t>(r)];
}

void NlProfile::add(int r, std::uint64_t c) {
  if (r < 0 || r > kMaxValue) throw std::out_of_range("nonlinearity value out of range");
  counts_[static_cast<std::size_t>(r)] += c;
}

NlProfile& NlProfile::operator+=(const NlProfile& other) {
  for (std::size_t r = 0; r < counts_.size(); ++r) counts_[r] += other.counts_[r];
  return *this;
}

std::uint64_t NlProfile::sum() const {
  std::uint64_t s = 0;
  for (auto c : counts_) s += c;
  return s;
}

int NlProfile::min_value() const {
  for (int r = 0; r <= kMaxValue; ++r) {
    if (count(r) != 0) return r;
  }
  return -1;
}

int NlProfile::max_value() const {
  for (int r = kMaxValue; r >= 0; --r) {
    if (count(r) != 0) return r;
  }
  return -1;
}

std::uint64_t NlProfile::tail(int r) const {
  std::uint64_t s = 0;
  for (int k = std::max(r, 0); k <= kMaxValue; ++k) s += count(k);
  return s;
}

std::vector<int> NlProfile::support() const {
  std::vector<int> out;
  for (int r = 0; r <= kMaxValue; ++r) {
    if (count(r) != 0) out.push_back(r);
  }
  return out;
}

std::string NlProfile::to_csv() const {
  std::string out = "r,count\n";
  for (int r : support()) out += std::to_string(r) + "," + std::to_string(count(r)) + "\n";
  return out;
}

nlohmann::json NlProfile::to_json() const {
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (int r : support()) counts[std::to_string(r)] = count(r);
  nlohmann::ordered_json j;
  j["n"] = n_;
  j["counts"] = counts;
  j["sum"] = sum();
  return nlohmann::json(j);
}

NlProfile nfh_profile(const TruthTable& f, int threads) {
  const auto nls = coset_nonlinearities(f, threads);
  return NlProfile::from_nonlinearities(f.num_vars(), nls);
}

FhSet::FhSet(int n, int r) : n_(n), r_(r), bits_((num_quadratic_forms(n) + 63) / 64) {}

FhSet FhSet::from_nonlinearities(int n, std::span<const std::uint8_t> nls, int r) {
  FhSet s(n, r);
  for (std::uint32_t g = 0; g < nls.size(); ++g) {
    if (nls[g] == r) s.insert(g);
  }
  return s;
}

std::uint64_t FhSet::size() const {
  std::uint64_t s = 0;
  for (auto w : bits_) s += static_cast<std::uint64_t>(std::popcount(w));
  return s;
}

std::vector<std::uint32_t> FhSet::members() const {
  std::vector<std::uint32_t> out;
  for (std::size_t k = 0; k < bits_.size(); ++k) {
    for (std::uint64_t rest = bits_[k]; rest != 0; rest &= rest - 1) {
      out.push_back(static_cast<std::uint32_t>(64 * k) + static_cast<std::uint32_t>(std::countr_zero(rest)));
    }
  }
  return out;
}

FhSet& FhSet::operator|=(const FhSet& other) {
  if (n_ != other.n_) throw std::invalid_argument("Fh sets over different n");
  for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] |= other.bits_[k];
  return *this;
}

std::optional<std::uint32_t> FhSet::first_not_in(const FhSet& other) const {
  if (n_ != other.n_) throw std::invalid_argument("Fh sets over different n");
  for (std::size_t k = 0; k < bits_.size(); ++k) {
    const std::uint64_t outside = bits_[k] & ~other.bits_[k];
    if (outside != 0) return static_cast<std::uint32_t>(64 * k) + static_cast<std::uint32_t>(std::countr_zero(outside));
  }
  return std::nullopt;
}

std::string FhSet::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::uint32_t total = num_quadratic_forms(n_);
  const std::uint32_t digits = std::max<std::uint32_t>(1, (total + 3) / 4);
  std::string out(digits, '0');
  for (std::uint32_t d = 0; d < digits; ++d) {
    const std::uint32_t bit = 4 * d;
    out[digits - 1 - d] = kDigits[(bits_[bit >> 6] >> (bit & 63)) & 0xf];
  }
  return out;
}

FhSet fh_set(const TruthTable& f, int r, int threads) {
  const auto nls = coset_nonlinearities(f, threads);
  return FhSet::from_nonlinearities(f.num_vars(), nls, r);
}

SubsetVerdict fh_subset(std::span<const std::uint8_t> nls_i, int r, std::span<const std::uint8_t> nls_j,
                        std::span<const int> rs) {
  if (nls_i.size() != nls_j.size()) throw std::invalid_argument("Fh subset test over different n");
  std::array<bool, NlProfile::kMaxValue + 1> allowed{};
  for (int s : rs) {
    if (s >= 0 && s <= NlProfile::kMaxValue) allowed[static_cast<std::size_t>(s)] = true;
  }
  for (std::uint32_t g = 0; g < nls_i.size(); ++g) {
    if (nls_i[g] == r && !allowed[nls_j[g]]) return {false, g};
  }
  return {true, std::nullopt};
}

SubsetVerdict fh_subset(const TruthTable& f_i, int r, const TruthTable& f_j, std::span<const int> rs,
                        int threads) {
  if (f_i.num_vars() != f_j.num_vars()) throw std::invalid_argument("Fh subset test over different n");
  const FhSet lhs = fh_set(f_i, r, threads);
  const auto nls_j = coset_nonlinearities(f_j, threads);
  FhSet rhs(f_j.num_vars(), -1);
  for (int s : rs) rhs |= FhSet::from_nonlinearities(f_j.num_vars(), nls_j, s);
  const auto outside = lhs.first_not_in(rhs);
  return {!outside.has_value(), outside};
}

int second_order_nonlinearity(const TruthTable& f, int threads) {
  const auto nls = coset_nonlinearities(f, threads);
  return *std::min_element(nls.begin(), nls.end());
}

int max_nl_over_quadratics(const TruthTable& f, int threads) {
  const auto nls = coset_nonlinearities(f, threads);
  return *std::max_element(nls.begin(), nls.end());
}

Nl2Result concatenation_nl2(const TruthTable& f1, const TruthTable& f2, std::optional<int> threshold,
                            int threads) {
  if (f1.num_vars() != f2.num_vars()) throw std::invalid_argument("concatenation halves differ in n");
  const int n = f1.num_vars();
  if (n > 6) throw std::invalid_argument("concatenation halves must have at most 6 variables");
  const std::uint32_t total = num_quadratic_forms(n);
  const QuadraticBasis& basis = quadratic_basis(n);
  const std::uint64_t u1 = f1.word(0);
  const std::uint64_t u2 = f2.word(0);
  const int limit = threshold.value_or(std::numeric_limits<int>::min());

  const int shards = static_cast<int>(std::clamp<std::uint32_t>(static_cast<std::uint32_t>(std::max(threads, 1)), 1, total));
  std::vector<int> best(static_cast<std::size_t>(shards), std::numeric_limits<int>::max());
  std::vector<char> hit(static_cast<std::size_t>(shards), 0);
  std::atomic<int> lowest_hit{shards};

  parallel_shards(total, shards, [&](std::uint64_t lo64, std::uint64_t hi64, int s) {
    const auto lo = static_cast<std::uint32_t>(lo64);
    const auto hi = static_cast<std::uint32_t>(hi64);
    const std::uint64_t g0 = QuadraticForm(n, lo ^ (lo >> 1)).table().word(0);
    std::uint64_t t1 = u1 ^ g0;
    std::uint64_t t2 = u2 ^ g0;
    int local = std::numeric_limits<int>::max();
    for (std::uint32_t k = lo; k < hi;) {
      const int d = n == 6 ? detail::nonlinearity_word6(t1) + detail::nonlinearity_word6(t2)
                           : detail::nonlinearity_word(t1, n) + detail::nonlinearity_word(t2, n);
      local = std::min(local, d);
      if (local < limit) {
        hit[static_cast<std::size_t>(s)] = 1;
        int expected = lowest_hit.load();
        while (s < expected && !lowest_hit.compare_exchange_weak(expected, s)) {
        }
        break;
      }
      if (++k == hi) break;
      if ((k & 1023u) == 0 && lowest_hit.load(std::memory_order_relaxed) < s) break;
      const std::uint64_t step = basis.tables[static_cast<std::size_t>(std::countr_zero(k))].word(0);
      t1 ^= step;
      t2 ^= step;
    }
    best[static_cast<std::size_t>(s)] = local;
  });

  const int winner = lowest_hit.load();
  if (winner < shards) return {best[static_cast<std::size_t>(winner)], false};
  return {*std::min_element(best.begin(), best.end()), true};
}

QuadraticForm random_quadratic_form(int n, std::mt19937_64& rng) {
  const std::uint32_t total = num_quadratic_forms(n);
  return {n, static_cast<std::uint32_t>(rng() & (total - 1))};
}

TruthTable random_degree2(int n, std::mt19937_64& rng) {
  TruthTable t = n >= 2 ? random_quadratic_form(n, rng).table() : TruthTable(n);
  const std::uint64_t affine = rng();
  for (int i = 1; i <= n; ++i) {
    if ((affine >> i) & 1u) t ^= TruthTable::variable(n, i);
  }
  if (affine & 1u) t = ~t;
  return t;
}

}  // namespace rmcover
