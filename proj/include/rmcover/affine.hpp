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
#include <optional>
#include <random>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "rmcover/truth_table.hpp"

namespace rmcover {

/// Square matrix over GF(2) of size n <= 7. rows[i] bit j is the entry (i, j),
/// so (Ax)_i = parity(rows[i] & x).
struct BitMatrix {
  int n = 0;
  std::array<std::uint8_t, kMaxVars> rows{};

  static BitMatrix identity(int n);
  /// Builds the matrix whose j-th column is columns[j].
  static BitMatrix from_columns(int n, std::span<const std::uint8_t> columns);

  std::uint8_t column(int j) const;
  std::uint8_t operator*(std::uint8_t x) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;
};

int rank(const BitMatrix& a);
bool is_invertible(const BitMatrix& a);

/// x -> Ax + b.
struct AffineMap {
  BitMatrix linear;
  std::uint8_t translation = 0;

  static AffineMap identity(int n) { return {BitMatrix::identity(n), 0}; }

  int num_vars() const { return linear.n; }
  std::uint8_t operator()(std::uint8_t x) const { return static_cast<std::uint8_t>((linear * x) ^ translation); }

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// Rejection sampler for uniform invertible affine maps. attempts() counts
/// every matrix drawn, accepted or not.
class AffineSampler {
 public:
  explicit AffineSampler(std::uint64_t seed) : rng_(seed) {}

  AffineMap next(int n);
  std::uint64_t attempts() const { return attempts_; }
  std::uint64_t accepted() const { return accepted_; }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::uint64_t attempts_ = 0;
  std::uint64_t accepted_ = 0;
};

AffineMap random_affine_map(int n, std::uint64_t seed);

/// f2 = f1(Ax + b) + g with deg(g) <= 2.
struct EquivalenceWitness {
  AffineMap map;
  AnfPolynomial g;
};

enum class EquivalenceVerdict { found, not_found, budget_exhausted };

struct EquivalenceResult {
  EquivalenceVerdict verdict = EquivalenceVerdict::not_found;
  std::optional<EquivalenceWitness> witness;
  std::uint64_t nodes = 0;
  /// Which test settled a not-found verdict.
  std::string reason;
};

inline constexpr std::uint64_t kDefaultEquivalenceBudget = 100'000'000;

/// Decides whether f2 = f1(Ax + b) + g for some invertible A, vector b and
/// deg(g) <= 2, for n <= 6.
///
/// Affine invariants (degree, weight parity, NFh profile, derivative
/// spectra) are compared first; a mismatch proves inequivalence without
/// search. Otherwise the columns of A are chosen one at a time in ascending
/// order of candidate value, pruned by first, second and third derivative
/// invariants over the span built so far; b is tried last. not_found is only
/// returned after the search tree is exhausted. Throws std::invalid_argument
/// for n = 7 or mismatched variable counts.
EquivalenceResult equivalence_search(const TruthTable& f1, const TruthTable& f2,
                                     std::uint64_t budget = kDefaultEquivalenceBudget);

/// True iff substituting the witness into f1 reproduces f2 bit for bit.
bool verify_witness(const TruthTable& f1, const TruthTable& f2, const EquivalenceWitness& w);

std::string to_string(EquivalenceVerdict v);

/// {"A": [row hex...], "b": hex, "g": ANF}
nlohmann::json to_json(const EquivalenceWitness& w);
EquivalenceWitness witness_from_json(const nlohmann::json& j, int n);
nlohmann::json to_json(const AffineMap& m);
AffineMap affine_map_from_json(const nlohmann::json& j, int n);

}  // namespace rmcover
