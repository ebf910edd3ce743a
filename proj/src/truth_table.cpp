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

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

#include "rmcover/affine.hpp"
#include "rmcover/bits.hpp"

namespace rmcover {

namespace {

void check_vars(int n) {
  if (n < 1 || n > kMaxVars) {
    throw std::invalid_argument("variable count must be in 1..7, got " + std::to_string(n));
  }
}

std::uint64_t low_mask(int n) { return n >= 6 ? ~0ull : (1ull << (1u << n)) - 1; }

// In-place binary Moebius transform; it is its own inverse.
void moebius(int n, std::array<std::uint64_t, 2>& w) {
  w[0] = bits::moebius(w[0], n);
  if (n == 7) w[1] = bits::moebius(w[1], n) ^ w[0];
}

}  // namespace

TruthTable::TruthTable(int n) : n_(n) { check_vars(n); }

TruthTable TruthTable::from_words(int n, std::uint64_t lo, std::uint64_t hi) {
  TruthTable t(n);
  t.w_[0] = lo & low_mask(n);
  t.w_[1] = n == 7 ? hi : 0;
  return t;
}

TruthTable TruthTable::constant(int n, bool value) {
  return value ? from_words(n, ~0ull, ~0ull) : TruthTable(n);
}

TruthTable TruthTable::variable(int n, int i) {
  check_vars(n);
  if (i < 1 || i > n) throw std::invalid_argument("variable index out of range");
  if (i == 7) return from_words(n, 0, ~0ull);
  const std::uint64_t w = ~bits::kLowHalfMask[i - 1];
  return from_words(n, w, w);
}

void TruthTable::set(std::uint32_t x, bool value) {
  const std::uint64_t bit = 1ull << (x & 63);
  if (value) {
    w_[x >> 6] |= bit;
  } else {
    w_[x >> 6] &= ~bit;
  }
}

TruthTable& TruthTable::operator^=(const TruthTable& other) {
  if (n_ != other.n_) throw std::invalid_argument("truth tables have different variable counts");
  w_[0] ^= other.w_[0];
  w_[1] ^= other.w_[1];
  return *this;
}

TruthTable TruthTable::operator~() const { return *this ^ constant(n_, true); }

bool monomial_less(Monomial a, Monomial b) {
  const int da = std::popcount(a);
  const int db = std::popcount(b);
  if (da != db) return da > db;
  if (a == b) return false;
  const unsigned diff = a ^ b;
  return (a & diff & (~diff + 1)) != 0;
}

AnfPolynomial::AnfPolynomial(int n) : n_(n) { check_vars(n); }

AnfPolynomial::AnfPolynomial(int n, std::vector<Monomial> monomials)
    : n_(n), monomials_(std::move(monomials)) {
  check_vars(n);
  for (Monomial m : monomials_) {
    if (m >> n) throw std::invalid_argument("monomial uses a variable beyond x" + std::to_string(n));
  }
  std::sort(monomials_.begin(), monomials_.end(), monomial_less);
  if (std::adjacent_find(monomials_.begin(), monomials_.end()) != monomials_.end()) {
    throw std::invalid_argument("duplicate monomial in ANF");
  }
}

bool AnfPolynomial::contains(Monomial m) const {
  return std::binary_search(monomials_.begin(), monomials_.end(), m, monomial_less);
}

int AnfPolynomial::degree() const {
  // Sorted by descending degree.
  return monomials_.empty() ? 0 : std::popcount(monomials_.front());
}

AnfPolynomial& AnfPolynomial::operator+=(const AnfPolynomial& other) {
  if (n_ != other.n_) throw std::invalid_argument("polynomials have different variable counts");
  std::vector<Monomial> out;
  std::set_symmetric_difference(monomials_.begin(), monomials_.end(), other.monomials_.begin(),
                                other.monomials_.end(), std::back_inserter(out), monomial_less);
  monomials_ = std::move(out);
  return *this;
}

TruthTable truth_table_from_anf(const AnfPolynomial& p) {
  std::array<std::uint64_t, 2> w{};
  for (Monomial m : p.monomials()) w[m >> 6] |= 1ull << (m & 63);
  moebius(p.num_vars(), w);
  return TruthTable::from_words(p.num_vars(), w[0], w[1]);
}

AnfPolynomial anf_from_truth_table(const TruthTable& t) {
  std::array<std::uint64_t, 2> w{t.word(0), t.word(1)};
  moebius(t.num_vars(), w);
  std::vector<Monomial> monomials;
  for (std::uint32_t m = 0; m < t.size(); ++m) {
    if ((w[m >> 6] >> (m & 63)) & 1u) monomials.push_back(static_cast<Monomial>(m));
  }
  return AnfPolynomial(t.num_vars(), std::move(monomials));
}

int weight(const TruthTable& t) { return std::popcount(t.word(0)) + std::popcount(t.word(1)); }

int distance(const TruthTable& f, const TruthTable& g) { return weight(f ^ g); }

int degree(const TruthTable& t) {
  std::array<std::uint64_t, 2> w{t.word(0), t.word(1)};
  moebius(t.num_vars(), w);
  int best = 0;
  for (int k = 0; k < t.num_words(); ++k) {
    for (std::uint64_t rest = w[k]; rest != 0; rest &= rest - 1) {
      best = std::max(best, std::popcount(static_cast<unsigned>(std::countr_zero(rest) + 64 * k)));
    }
  }
  return best;
}

TruthTable concatenate(const TruthTable& f1, const TruthTable& f2) {
  if (f1.num_vars() != f2.num_vars()) {
    throw std::invalid_argument("concatenation needs equal variable counts");
  }
  const int n = f1.num_vars();
  if (n > 6) throw std::invalid_argument("concatenation would exceed 7 variables");
  if (n == 6) return TruthTable::from_words(7, f1.word(0), f2.word(0));
  return TruthTable::from_words(n + 1, f1.word(0) | (f2.word(0) << (1u << n)));
}

std::pair<TruthTable, TruthTable> split(const TruthTable& f) {
  const int n = f.num_vars();
  if (n < 2) throw std::invalid_argument("split needs at least 2 variables");
  if (n == 7) return {TruthTable::from_words(6, f.word(0)), TruthTable::from_words(6, f.word(1))};
  const unsigned half = 1u << (n - 1);
  return {TruthTable::from_words(n - 1, f.word(0)), TruthTable::from_words(n - 1, f.word(0) >> half)};
}

TruthTable apply_affine(const TruthTable& f, const AffineMap& m) {
  if (m.num_vars() != f.num_vars()) throw std::invalid_argument("affine map and function differ in n");
  if (!is_invertible(m.linear)) throw std::invalid_argument("affine map has a singular matrix");
  TruthTable out(f.num_vars());
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    if (f.get(m(static_cast<std::uint8_t>(x)))) out.set(x, true);
  }
  return out;
}

TruthTable reduce_mod_rm2(const TruthTable& f) {
  std::array<std::uint64_t, 2> w{f.word(0), f.word(1)};
  moebius(f.num_vars(), w);
  w[0] &= ~bits::kDegreeAtMost2[0];
  w[1] &= ~bits::kDegreeAtMost2[1];
  moebius(f.num_vars(), w);
  return TruthTable::from_words(f.num_vars(), w[0], w[1]);
}

std::string to_hex(const TruthTable& t) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const int n = t.num_vars();
  const int digits = n <= 2 ? 1 : 1 << (n - 2);
  std::string out(static_cast<std::size_t>(digits), '0');
  for (int d = 0; d < digits; ++d) {
    const int bit = 4 * d;
    out[static_cast<std::size_t>(digits - 1 - d)] = kDigits[(t.word(bit >> 6) >> (bit & 63)) & 0xf];
  }
  return out;
}

TruthTable parse_hex(std::string_view text, int n) {
  if (n == 0) {
    switch (text.size()) {
      case 1: n = 2; break;
      case 2: n = 3; break;
      case 4: n = 4; break;
      case 8: n = 5; break;
      case 16: n = 6; break;
      case 32: n = 7; break;
      default:
        throw std::invalid_argument("hex truth table has unsupported length " +
                                    std::to_string(text.size()));
    }
  }
  check_vars(n);
  const std::size_t digits = n <= 2 ? 1 : std::size_t{1} << (n - 2);
  if (text.size() != digits) {
    throw std::invalid_argument("hex truth table for n=" + std::to_string(n) + " needs " +
                                std::to_string(digits) + " digits");
  }
  std::array<std::uint64_t, 2> w{};
  for (std::size_t d = 0; d < digits; ++d) {
    const char c = text[digits - 1 - d];
    std::uint64_t v;
    if (c >= '0' && c <= '9') {
      v = static_cast<std::uint64_t>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      v = static_cast<std::uint64_t>(c - 'a' + 10);
    } else {
      throw std::invalid_argument(std::string("invalid hex digit '") + c + "'");
    }
    const std::size_t bit = 4 * d;
    w[bit >> 6] |= v << (bit & 63);
  }
  if (n == 1 && w[0] > 3) throw std::invalid_argument("hex value too large for n=1");
  return TruthTable::from_words(n, w[0], w[1]);
}

std::string to_string(Monomial m) {
  if (m == 0) return "1";
  std::string out;
  for (int i = 0; i < kMaxVars; ++i) {
    if ((m >> i) & 1u) out += "x" + std::to_string(i + 1);
  }
  return out;
}

std::string to_string(const AnfPolynomial& p) {
  if (p.empty()) return "0";
  std::string out;
  for (Monomial m : p.monomials()) {
    if (!out.empty()) out += '+';
    out += to_string(m);
  }
  return out;
}

AnfPolynomial parse_anf(std::string_view text, int n) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.empty()) throw std::invalid_argument("empty ANF");

  std::array<std::uint64_t, 2> coeffs{};
  int highest = 0;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = std::min(compact.find('+', pos), compact.size());
    const std::string_view term(compact.data() + pos, end - pos);
    if (term.empty()) throw std::invalid_argument("empty term in ANF");
    if (term == "1") {
      coeffs[0] ^= 1;
    } else if (term != "0") {
      unsigned mask = 0;
      std::size_t i = 0;
      while (i < term.size()) {
        if (term[i] != 'x') throw std::invalid_argument("malformed ANF term '" + std::string(term) + "'");
        ++i;
        if (i < term.size() && term[i] == '_') ++i;
        int var = 0;
        const std::size_t start = i;
        while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) {
          var = var * 10 + (term[i] - '0');
          ++i;
          if (var > kMaxVars) break;
        }
        if (i == start || var < 1 || var > kMaxVars) {
          throw std::invalid_argument("bad variable in ANF term '" + std::string(term) + "'");
        }
        mask |= 1u << (var - 1);
        highest = std::max(highest, var);
      }
      coeffs[mask >> 6] ^= 1ull << (mask & 63);
    }
    if (end == compact.size()) break;
    pos = end + 1;
  }

  if (n == 0) n = std::max(highest, 1);
  check_vars(n);
  if (highest > n) {
    throw std::invalid_argument("ANF uses x" + std::to_string(highest) + " but n=" + std::to_string(n));
  }
  std::vector<Monomial> monomials;
  for (unsigned m = 0; m < 128; ++m) {
    if ((coeffs[m >> 6] >> (m & 63)) & 1u) monomials.push_back(static_cast<Monomial>(m));
  }
  return AnfPolynomial(n, std::move(monomials));
}

}  // namespace rmcover
