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

#include "rmcover/affine.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <vector>

#include "rmcover/bits.hpp"
#include "rmcover/quadratic.hpp"

namespace rmcover {

BitMatrix BitMatrix::identity(int n) {
  BitMatrix m{n, {}};
  for (int i = 0; i < n; ++i) m.rows[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(1u << i);
  return m;
}

BitMatrix BitMatrix::from_columns(int n, std::span<const std::uint8_t> columns) {
  BitMatrix m{n, {}};
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if ((columns[static_cast<std::size_t>(j)] >> i) & 1u) m.rows[static_cast<std::size_t>(i)] |= static_cast<std::uint8_t>(1u << j);
    }
  }
  return m;
}

std::uint8_t BitMatrix::column(int j) const {
  std::uint8_t c = 0;
  for (int i = 0; i < n; ++i) {
    if ((rows[static_cast<std::size_t>(i)] >> j) & 1u) c |= static_cast<std::uint8_t>(1u << i);
  }
  return c;
}

std::uint8_t BitMatrix::operator*(std::uint8_t x) const {
  std::uint8_t y = 0;
  for (int i = 0; i < n; ++i) {
    if (bits::parity(rows[static_cast<std::size_t>(i)] & x)) y |= static_cast<std::uint8_t>(1u << i);
  }
  return y;
}

int rank(const BitMatrix& a) {
  auto rows = a.rows;
  int r = 0;
  for (int col = 0; col < a.n && r < a.n; ++col) {
    const std::uint8_t bit = static_cast<std::uint8_t>(1u << col);
    int pivot = -1;
    for (int i = r; i < a.n; ++i) {
      if (rows[static_cast<std::size_t>(i)] & bit) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<std::size_t>(r)], rows[static_cast<std::size_t>(pivot)]);
    for (int i = 0; i < a.n; ++i) {
      if (i != r && (rows[static_cast<std::size_t>(i)] & bit)) rows[static_cast<std::size_t>(i)] ^= rows[static_cast<std::size_t>(r)];
    }
    ++r;
  }
  return r;
}

bool is_invertible(const BitMatrix& a) { return a.n >= 1 && rank(a) == a.n; }

AffineMap AffineSampler::next(int n) {
  if (n < 1 || n > kMaxVars) throw std::invalid_argument("affine map needs 1 <= n <= 7");
  const std::uint64_t mask = (1u << n) - 1;
  BitMatrix a{n, {}};
  do {
    ++attempts_;
    for (int i = 0; i < n; ++i) a.rows[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(rng_() & mask);
  } while (!is_invertible(a));
  ++accepted_;
  return {a, static_cast<std::uint8_t>(rng_() & mask)};
}

AffineMap random_affine_map(int n, std::uint64_t seed) { return AffineSampler(seed).next(n); }

namespace {

// Affine-invariant data about the derivatives of one function. Spectral
// multisets are interned into small integers through a dictionary shared by
// both sides of a search so they compare by value.
struct DerivativeTables {
  int n = 0;
  std::vector<int> single;           // [a] of D_a f
  std::vector<int> pair;             // [a][c] of D_a D_c f
  std::vector<std::uint8_t> triple;  // [a][c][e] weight of D_a D_c D_e f
};

class SpectrumDictionary {
 public:
  int intern(std::uint64_t word, int n) {
    const unsigned size = 1u << n;
    const std::uint64_t mask = n == 6 ? ~0ull : (1ull << size) - 1;
    std::vector<std::uint8_t> key(size);
    for (unsigned u = 0; u < size; ++u) {
      const int d = std::popcount(word ^ (bits::kLinear[u] & mask));
      key[u] = static_cast<std::uint8_t>(std::min(d, static_cast<int>(size) - d));
    }
    std::sort(key.begin(), key.end());
    const auto [it, inserted] = ids_.try_emplace(std::move(key), static_cast<int>(ids_.size()));
    return it->second;
  }

 private:
  std::map<std::vector<std::uint8_t>, int> ids_;
};

DerivativeTables derivative_tables(std::uint64_t f, int n, SpectrumDictionary& dict) {
  const unsigned size = 1u << n;
  DerivativeTables t;
  t.n = n;
  t.single.resize(size);
  t.pair.resize(size * size);
  t.triple.resize(size * size * size);
  for (unsigned a = 0; a < size; ++a) {
    const std::uint64_t da = bits::derivative(f, a);
    t.single[a] = dict.intern(da, n);
    for (unsigned c = 0; c < size; ++c) {
      const std::uint64_t dac = bits::derivative(da, c);
      t.pair[a * size + c] = dict.intern(dac, n);
      for (unsigned e = 0; e < size; ++e) {
        t.triple[(a * size + c) * size + e] = static_cast<std::uint8_t>(std::popcount(bits::derivative(dac, e)));
      }
    }
  }
  return t;
}

bool reduces_to_degree2(std::uint64_t w, int n) { return (bits::moebius(w, n) & ~bits::kDegreeAtMost2[0]) == 0; }

std::uint64_t compose_linear(std::uint64_t f, const BitMatrix& a) {
  std::uint64_t out = 0;
  const unsigned size = 1u << a.n;
  for (unsigned x = 0; x < size; ++x) {
    if ((f >> (a * static_cast<std::uint8_t>(x))) & 1u) out |= 1ull << x;
  }
  return out;
}

// Backtracking over the images of the basis vectors e_0..e_{n-1} of the f2
// side. image[s] is A s for every s in the span of the assigned columns.
class ColumnSearch {
 public:
  ColumnSearch(std::uint64_t f1, std::uint64_t f2, int n, const DerivativeTables& t1, const DerivativeTables& t2,
               std::uint64_t budget)
      : f1_(f1), f2_(f2), n_(n), size_(1u << n), t1_(t1), t2_(t2), budget_(budget),
        image_(size_, 0), in_span_(size_, false) {
    in_span_[0] = true;
    candidates_.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      for (unsigned v = 1; v < size_; ++v) {
        if (t1_.single[v] == t2_.single[1u << k]) candidates_[static_cast<std::size_t>(k)].push_back(static_cast<std::uint8_t>(v));
      }
    }
  }

  bool run() { return extend(0); }
  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }
  const EquivalenceWitness& witness() const { return *witness_; }

 private:
  bool extend(int k) {
    if (k == n_) return try_translations();
    const unsigned span = 1u << k;
    for (std::uint8_t v : candidates_[static_cast<std::size_t>(k)]) {
      if (in_span_[v]) continue;
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return false;
      }
      for (unsigned s = 0; s < span; ++s) image_[s | span] = image_[s] ^ v;
      if (!consistent(k)) continue;
      for (unsigned s = 0; s < span; ++s) in_span_[image_[s | span]] = true;
      if (extend(k + 1)) return true;
      for (unsigned s = 0; s < span; ++s) in_span_[image_[s | span]] = false;
      if (exhausted_) return false;
    }
    return false;
  }

  bool consistent(int k) const {
    const unsigned span = 1u << k;
    const unsigned full = span << 1;
    for (unsigned s = span; s < full; ++s) {
      if (t2_.single[s] != t1_.single[image_[s]]) return false;
    }
    for (unsigned s = span; s < full; ++s) {
      for (unsigned t = 1; t < full; ++t) {
        if (t2_.pair[s * size_ + t] != t1_.pair[image_[s] * size_ + image_[t]]) return false;
      }
    }
    for (unsigned s = span; s < full; ++s) {
      for (unsigned t = 1; t < full; ++t) {
        for (unsigned u = t + 1; u < full; ++u) {
          if (t2_.triple[(s * size_ + t) * size_ + u] !=
              t1_.triple[(image_[s] * size_ + image_[t]) * size_ + image_[u]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool try_translations() {
    std::vector<std::uint8_t> columns(static_cast<std::size_t>(n_));
    for (int j = 0; j < n_; ++j) columns[static_cast<std::size_t>(j)] = image_[1u << j];
    const BitMatrix a = BitMatrix::from_columns(n_, columns);
    // f1(Ax + b) = (f1 o A)(x + c) with b = Ac.
    const std::uint64_t composed = compose_linear(f1_, a);
    for (unsigned c = 0; c < size_; ++c) {
      const std::uint64_t h = f2_ ^ bits::translate(composed, c);
      if (reduces_to_degree2(h, n_)) {
        const auto g = anf_from_truth_table(TruthTable::from_words(n_, h));
        witness_ = EquivalenceWitness{AffineMap{a, static_cast<std::uint8_t>(a * static_cast<std::uint8_t>(c))}, g};
        return true;
      }
    }
    return false;
  }

  std::uint64_t f1_;
  std::uint64_t f2_;
  int n_;
  unsigned size_;
  const DerivativeTables& t1_;
  const DerivativeTables& t2_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<std::uint8_t> image_;
  std::vector<bool> in_span_;
  std::vector<std::vector<std::uint8_t>> candidates_;
  std::optional<EquivalenceWitness> witness_;
};

EquivalenceResult not_found(std::string reason, std::uint64_t nodes = 0) {
  return {EquivalenceVerdict::not_found, std::nullopt, nodes, std::move(reason)};
}

}  // namespace

EquivalenceResult equivalence_search(const TruthTable& f1, const TruthTable& f2, std::uint64_t budget) {
  if (f1.num_vars() != f2.num_vars()) throw std::invalid_argument("equivalence search needs equal n");
  const int n = f1.num_vars();
  if (n > 6) throw std::invalid_argument("equivalence search supports n <= 6");

  const TruthTable r1 = reduce_mod_rm2(f1);
  const TruthTable r2 = reduce_mod_rm2(f2);
  if (r1 == r2) {
    return {EquivalenceVerdict::found, EquivalenceWitness{AffineMap::identity(n), anf_from_truth_table(f1 ^ f2)}, 0, {}};
  }
  if (degree(r1) != degree(r2)) return not_found("degree modulo RM(2,n) differs");
  if (weight(f1) % 2 != weight(f2) % 2) return not_found("weight parity differs");
  if (nfh_profile(f1) != nfh_profile(f2)) return not_found("NFh profiles differ");

  SpectrumDictionary dict;
  const DerivativeTables t1 = derivative_tables(f1.word(0), n, dict);
  const DerivativeTables t2 = derivative_tables(f2.word(0), n, dict);
  auto s1 = t1.single;
  auto s2 = t2.single;
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  if (s1 != s2) return not_found("derivative spectra differ");

  ColumnSearch search(f1.word(0), f2.word(0), n, t1, t2, budget);
  if (search.run()) return {EquivalenceVerdict::found, search.witness(), search.nodes(), {}};
  if (search.exhausted()) return {EquivalenceVerdict::budget_exhausted, std::nullopt, search.nodes(), "node budget reached"};
  return not_found("search tree exhausted", search.nodes());
}

bool verify_witness(const TruthTable& f1, const TruthTable& f2, const EquivalenceWitness& w) {
  if (w.g.degree() > 2 || w.g.num_vars() != f1.num_vars()) return false;
  if (!is_invertible(w.map.linear)) return false;
  return (apply_affine(f1, w.map) ^ truth_table_from_anf(w.g)) == f2;
}

std::string to_string(EquivalenceVerdict v) {
  switch (v) {
    case EquivalenceVerdict::found: return "found";
    case EquivalenceVerdict::not_found: return "not-found";
    case EquivalenceVerdict::budget_exhausted: return "budget-exhausted";
  }
  return "unknown";
}

namespace {

std::string byte_hex(std::uint8_t v) {
  char buf[3];
  std::snprintf(buf, sizeof buf, "%02x", v);
  return buf;
}

std::uint8_t parse_byte_hex(const std::string& s) {
  std::size_t used = 0;
  const unsigned long v = std::stoul(s, &used, 16);
  if (used != s.size() || v > 0xff) throw std::invalid_argument("bad hex byte '" + s + "'");
  return static_cast<std::uint8_t>(v);
}

}  // namespace

nlohmann::json to_json(const AffineMap& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.num_vars(); ++i) rows.push_back(byte_hex(m.linear.rows[static_cast<std::size_t>(i)]));
  return {{"A", rows}, {"b", byte_hex(m.translation)}};
}

AffineMap affine_map_from_json(const nlohmann::json& j, int n) {
  const auto& rows = j.at("A");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) throw std::invalid_argument("affine map needs n rows");
  AffineMap m{BitMatrix{n, {}}, parse_byte_hex(j.at("b").get<std::string>())};
  for (int i = 0; i < n; ++i) m.linear.rows[static_cast<std::size_t>(i)] = parse_byte_hex(rows[static_cast<std::size_t>(i)].get<std::string>());
  if (!is_invertible(m.linear)) throw std::invalid_argument("affine map has a singular matrix");
  return m;
}

nlohmann::json to_json(const EquivalenceWitness& w) {
  auto j = to_json(w.map);
  j["g"] = to_string(w.g);
  return j;
}

EquivalenceWitness witness_from_json(const nlohmann::json& j, int n) {
  return {affine_map_from_json(j, n), parse_anf(j.at("g").get<std::string>(), n)};
}

}  // namespace rmcover
