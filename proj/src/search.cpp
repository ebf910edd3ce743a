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

#include <algorithm>
#include <chrono>
#include <ctime>
#include <mutex>

#include "rmcover/bits.hpp"
#include "rmcover/catalog.hpp"
#include "rmcover/parallel.hpp"
#include "rmcover/verify.hpp"

namespace rmcover {

namespace {

std::uint64_t splitmix(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

const std::vector<std::uint8_t>& left_nls(int i1) {
  static std::once_flag once;
  static std::vector<std::uint8_t> nls4;
  static std::vector<std::uint8_t> nls6;
  std::call_once(once, [] {
    nls4 = coset_nonlinearities(fun(4));
    nls6 = coset_nonlinearities(fun(6));
  });
  return i1 == 4 ? nls4 : nls6;
}

nlohmann::json dump(const SearchRecord& r, const std::string& problem) {
  nlohmann::json j = r.to_json();
  j["violation"] = problem;
  j["f1"] = to_hex(fun(r.i1));
  j["f2"] = to_hex(candidate_half(r.i2, r.candidate));
  return j;
}

}  // namespace

Nl2Result exact_nl2_7(const TruthTable& f, std::optional<int> threshold, int threads) {
  if (f.num_vars() != 7) throw std::invalid_argument("exact_nl2_7 needs a 7-variable function");
  const auto [f1, f2] = split(f);
  return concatenation_nl2(f1, f2, threshold, threads);
}

std::string to_string(PruneMode m) { return m == PruneMode::direct ? "direct" : "cond2-first"; }

PruneMode prune_mode_from_string(const std::string& s) {
  if (s == "direct") return PruneMode::direct;
  if (s == "cond2-first") return PruneMode::condition2_first;
  throw std::invalid_argument("unknown prune mode '" + s + "'");
}

void SearchConfig::validate() const {
  if ((i1 != 4 && i1 != 6) || (i2 != 4 && i2 != 6)) throw std::invalid_argument("i1 and i2 must be 4 or 6");
  if (budget == 0) throw std::invalid_argument("budget must be positive");
  if (threshold < 1 || threshold > 64) throw std::invalid_argument("threshold must be in [1, 64]");
}

SearchCandidate search_candidate(const SearchConfig& cfg, std::uint64_t index) {
  if (index == 0 && cfg.identity_first) return {AffineMap::identity(6), AnfPolynomial(6, {})};
  AffineSampler sampler(splitmix(cfg.seed, index));
  const AffineMap map = sampler.next(6);
  auto& rng = sampler.engine();
  TruthTable g = random_quadratic_form(6, rng).table();
  g ^= TruthTable::from_words(6, bits::kLinear[rng() & 63u]);
  return {map, anf_from_truth_table(g)};
}

TruthTable candidate_half(int i2, const SearchCandidate& c) {
  return apply_affine(fun(i2), c.map) ^ truth_table_from_anf(c.g);
}

nlohmann::json SearchRecord::to_json() const {
  nlohmann::ordered_json j;
  j["candidate"] = index;
  j["i1"] = i1;
  j["i2"] = i2;
  const nlohmann::json m = rmcover::to_json(candidate.map);
  j["A"] = m["A"];
  j["b"] = m["b"];
  j["g"] = to_string(candidate.g);
  j["condition2"] = condition2;
  j["nl2"] = nl2 ? nlohmann::json(*nl2) : nlohmann::json(nullptr);
  j["exact"] = exact;
  if (nl2_direct) j["nl2_direct"] = *nl2_direct;
  j["timestamp"] = timestamp;
  return nlohmann::json(j);
}

nlohmann::json SearchSummary::to_json() const {
  nlohmann::ordered_json j;
  j["candidates"] = candidates;
  j["condition2_passes"] = condition2_passes;
  j["exact_runs"] = exact_runs;
  j["cross_checks"] = cross_checks;
  j["max_nl2"] = max_nl2;
  j["witnesses"] = witnesses;
  return nlohmann::json(j);
}

SearchRecord evaluate_candidate(const SearchConfig& cfg, std::uint64_t index) {
  cfg.validate();
  SearchRecord rec;
  rec.index = index;
  rec.i1 = cfg.i1;
  rec.i2 = cfg.i2;
  rec.candidate = search_candidate(cfg, index);
  rec.timestamp = utc_now();

  const TruthTable f1 = fun(cfg.i1);
  const TruthTable f2 = candidate_half(cfg.i2, rec.candidate);
  const auto nls2 = coset_nonlinearities(f2);
  rec.condition2 = theorem1_condition2(left_nls(cfg.i1), nls2).holds();

  const bool cross = cfg.cross_check_every != 0 && index % cfg.cross_check_every == 0;
  if (cross) {
    const Nl2Result full = concatenation_nl2(f1, f2);
    rec.nl2 = full.value;
    rec.exact = true;
    rec.nl2_direct = second_order_nonlinearity(concatenate(f1, f2));
    if (*rec.nl2_direct != full.value) throw SearchViolation("kernels disagree", dump(rec, "kernels disagree"));
  } else if (rec.condition2 || cfg.mode == PruneMode::direct) {
    // On a pass, any early exit below 42 is already a violation.
    const int t = rec.condition2 ? std::min(cfg.threshold, 42) : cfg.threshold;
    const Nl2Result r = concatenation_nl2(f1, f2, t);
    rec.nl2 = r.value;
    rec.exact = r.exact;
  }

  if (rec.nl2) {
    const int v = *rec.nl2;
    if (v > 42) throw SearchViolation("nl_2 above 42", dump(rec, "nl_2 above 42"));
    if (rec.condition2 && v != 42) {
      throw SearchViolation("condition 2 holds but nl_2 != 42", dump(rec, "condition 2 holds but nl_2 != 42"));
    }
    if (!rec.condition2 && v > 40) {
      throw SearchViolation("condition 2 fails but nl_2 > 40", dump(rec, "condition 2 fails but nl_2 > 40"));
    }
  }
  return rec;
}

SearchSummary witness_search(const SearchConfig& cfg, const std::function<void(const SearchRecord&)>& sink) {
  cfg.validate();
  SearchSummary summary;
  constexpr std::uint64_t kChunk = 256;
  for (std::uint64_t start = 0; start < cfg.budget; start += kChunk) {
    const std::uint64_t count = std::min(kChunk, cfg.budget - start);
    std::vector<SearchRecord> records(count);
    parallel_shards(count, cfg.threads, [&](std::uint64_t lo, std::uint64_t hi, int) {
      for (std::uint64_t k = lo; k < hi; ++k) records[k] = evaluate_candidate(cfg, start + k);
    });
    for (const auto& r : records) {
      ++summary.candidates;
      if (r.condition2) ++summary.condition2_passes;
      if (r.nl2) ++summary.exact_runs;
      if (r.nl2_direct) ++summary.cross_checks;
      if (r.nl2 && r.exact) summary.max_nl2 = std::max(summary.max_nl2, *r.nl2);
      if (r.nl2 && r.exact && *r.nl2 == 42) summary.witnesses.push_back(r.index);
      if (sink) sink(r);
    }
  }
  return summary;
}

}  // namespace rmcover
