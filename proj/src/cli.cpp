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

#include "rmcover/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <bitset>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "rmcover/affine.hpp"
#include "rmcover/catalog.hpp"
#include "rmcover/quadratic.hpp"
#include "rmcover/search.hpp"
#include "rmcover/verify.hpp"

namespace rmcover::cli {

namespace {

bool is_hex(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isxdigit(c) != 0; });
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

enum class Format { plain, json, csv };

struct Common {
  std::string format = "plain";
  std::string out;
  int threads = 1;
  int n = 0;

  Format fmt() const { return format == "json" ? Format::json : format == "csv" ? Format::csv : Format::plain; }
};

void add_common(CLI::App* cmd, Common& c, bool with_n = true) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"plain", "json", "csv"}));
  cmd->add_option("--out", c.out, "Write the report to this file instead of stdout");
  cmd->add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1, 256));
  if (with_n) cmd->add_option("--n", c.n, "Number of variables for ANF inputs")->check(CLI::Range(1, 7));
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
  } else {
    write_atomic(c.out, text);
  }
}

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

int exit_for(ClaimStatus worst) {
  switch (worst) {
    case ClaimStatus::refuted: return kRefuted;
    case ClaimStatus::discrepancy: return kDiscrepancy;
    default: return kOk;
  }
}

}  // namespace

TruthTable parse_function(std::string_view spec_in, int n_override) {
  const std::string spec = strip_spaces(spec_in);
  if (spec.empty()) throw std::invalid_argument("empty function specifier");
  if (spec.size() > 2 && spec[0] == '0' && (spec[1] == 'x' || spec[1] == 'X')) {
    return parse_hex(std::string_view(spec).substr(2), n_override);
  }
  if ((spec.size() == 16 || spec.size() == 32) && is_hex(spec)) {
    const int n = spec.size() == 16 ? 6 : 7;
    if (n_override != 0 && n_override != n) {
      throw std::invalid_argument(std::to_string(spec.size()) + " hex digits give n = " + std::to_string(n));
    }
    return parse_hex(spec, n);
  }

  std::bitset<128> monomials;
  int needed = 1;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t end = std::min(spec.find('+', start), spec.size());
    const std::string term = spec.substr(start, end - start);
    if (term.empty()) throw std::invalid_argument("empty term in '" + spec + "'");
    if (const auto named = find_named(term)) {
      needed = std::max(needed, named->anf.num_vars());
      for (Monomial m : named->anf.monomials()) monomials.flip(m);
    } else if (term.starts_with("fun_") || term.starts_with("bent")) {
      throw std::invalid_argument("unknown catalog name '" + term + "'");
    } else {
      const AnfPolynomial p = parse_anf(term);
      needed = std::max(needed, p.num_vars());
      for (Monomial m : p.monomials()) monomials.flip(m);
    }
    start = end + 1;
  }
  const int n = n_override != 0 ? n_override : needed;
  if (n < needed) throw std::invalid_argument("--n " + std::to_string(n) + " is smaller than the variables used");
  std::vector<Monomial> list;
  for (unsigned m = 0; m < 128; ++m) {
    if (monomials[m]) list.push_back(static_cast<Monomial>(m));
  }
  return truth_table_from_anf(AnfPolynomial(n, std::move(list)));
}

void write_atomic(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string());
    f << content;
    f.flush();
    if (!f) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename onto " + path + ": " + ec.message());
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boolean function analysis for RM(2, n) covering-radius questions", "rmcover"};
  app.require_subcommand(1);

  // verify-all
  Common va;
  VerifyOptions vopts;
  auto* cmd_verify = app.add_subcommand("verify-all", "Recompute every stated claim and report per-claim status");
  add_common(cmd_verify, va, false);
  cmd_verify->add_option("--seed", vopts.seed, "Seed for the randomized spot checks");
  cmd_verify->add_option("--trials", vopts.trials, "Instances per randomized check")->check(CLI::Range(1, 1000000));

  // nl2
  Common nc;
  std::string nl2_spec;
  int nl2_threshold = 0;
  auto* cmd_nl2 = app.add_subcommand("nl2", "Second-order nonlinearity");
  add_common(cmd_nl2, nc);
  cmd_nl2->add_option("function", nl2_spec, "Function (hex, ANF or catalog name)")->required();
  cmd_nl2->add_option("--threshold", nl2_threshold, "Stop at the first codeword closer than this (n = 7 only)");

  // profile
  Common pc;
  std::string profile_spec;
  auto* cmd_profile = app.add_subcommand("profile", "NFh histogram: number of forms g with nl(f + g) = r");
  add_common(cmd_profile, pc);
  cmd_profile->add_option("function", profile_spec, "Function")->required();

  // fh
  Common fc;
  std::string fh_spec;
  int fh_r = 0;
  auto* cmd_fh = app.add_subcommand("fh", "Fh set: forms g with nl(f + g) = r");
  add_common(cmd_fh, fc);
  cmd_fh->add_option("function", fh_spec, "Function")->required();
  cmd_fh->add_option("--r", fh_r, "Nonlinearity value")->required()->check(CLI::Range(0, 64));

  // equiv
  Common ec;
  std::string eq1, eq2;
  std::uint64_t eq_budget = kDefaultEquivalenceBudget;
  auto* cmd_equiv = app.add_subcommand("equiv", "Search for f2 = f1(Ax + b) + g with deg g <= 2");
  add_common(cmd_equiv, ec);
  cmd_equiv->add_option("f1", eq1, "First function")->required();
  cmd_equiv->add_option("f2", eq2, "Second function")->required();
  cmd_equiv->add_option("--budget", eq_budget, "Node budget");

  // concat-check
  Common cc;
  std::string cc1, cc2;
  int cc_n1 = -1, cc_n2 = -1;
  auto* cmd_concat = app.add_subcommand("concat-check", "nl_2 of f1 || f2 with the concatenation bound");
  add_common(cmd_concat, cc);
  cmd_concat->add_option("f1", cc1, "Half with x_{n+1} = 0")->required();
  cmd_concat->add_option("f2", cc2, "Half with x_{n+1} = 1")->required();
  auto* opt_n1 = cmd_concat->add_option("--n1", cc_n1, "Tail start for the bound hypothesis");
  auto* opt_n2 = cmd_concat->add_option("--n2", cc_n2, "Profile entry for the bound hypothesis");
  opt_n1->needs(opt_n2);
  opt_n2->needs(opt_n1);

  // search
  Common sc;
  SearchConfig scfg;
  std::string mode = "cond2-first";
  auto* cmd_search = app.add_subcommand("search", "Sample fun_i1 || (fun_i2(Ax + b) + g) candidates for nl_2 = 42");
  add_common(cmd_search, sc, false);
  cmd_search->add_option("--i1", scfg.i1, "Left half fun_i1")->check(CLI::IsMember({4, 6}));
  cmd_search->add_option("--i2", scfg.i2, "Right half fun_i2")->check(CLI::IsMember({4, 6}));
  cmd_search->add_option("--seed", scfg.seed, "Seed");
  cmd_search->add_option("--budget", scfg.budget, "Number of candidates")->check(CLI::PositiveNumber);
  cmd_search->add_option("--threshold", scfg.threshold, "Early-exit threshold of the exact kernel")
      ->check(CLI::Range(1, 64));
  cmd_search->add_option("--mode", mode, "cond2-first or direct")->check(CLI::IsMember({"cond2-first", "direct"}));
  cmd_search->add_option("--cross-check-every", scfg.cross_check_every, "Full cross-check period, 0 = never");
  std::string summary_out;
  cmd_search->add_option("--summary", summary_out, "Write the summary here; records go to --out");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (cmd_verify->parsed()) {
      vopts.threads = va.threads;
      const VerifyReport report = verify_all(vopts);
      std::string text;
      if (va.fmt() == Format::json) {
        text = json_text(report.to_json());
      } else if (va.fmt() == Format::csv) {
        text = report.to_csv();
      } else {
        std::ostringstream s;
        s << "seed " << report.seed << "\n";
        for (const auto& c : report.claims) s << to_string(c.status) << " " << c.id << "\n";
        s << "confirmed " << report.count(ClaimStatus::confirmed) << ", refuted " << report.count(ClaimStatus::refuted)
          << ", discrepancy " << report.count(ClaimStatus::discrepancy) << ", skipped "
          << report.count(ClaimStatus::skipped) << "\n";
        text = s.str();
      }
      emit(va, text, out);
      return exit_for(report.worst());
    }

    if (cmd_nl2->parsed()) {
      const TruthTable f = parse_function(nl2_spec, nc.n);
      Nl2Result r;
      if (f.num_vars() == 7) {
        r = exact_nl2_7(f, nl2_threshold > 0 ? std::optional<int>(nl2_threshold) : std::nullopt, nc.threads);
      } else if (f.num_vars() >= 2) {
        r.value = second_order_nonlinearity(f, nc.threads);
      } else {
        r.value = 0;  // every 1-variable function has degree <= 1
      }
      std::string text;
      if (nc.fmt() == Format::json) {
        nlohmann::ordered_json j;
        j["function"] = to_hex(f);
        j["n"] = f.num_vars();
        j["nl2"] = r.value;
        j["exact"] = r.exact;
        text = json_text(nlohmann::json(j));
      } else if (nc.fmt() == Format::csv) {
        text = "function,n,nl2,exact\n" + to_hex(f) + "," + std::to_string(f.num_vars()) + "," +
               std::to_string(r.value) + "," + (r.exact ? "true" : "false") + "\n";
      } else {
        text = (r.exact ? "" : "<=") + std::to_string(r.value) + "\n";
      }
      emit(nc, text, out);
      return kOk;
    }

    if (cmd_profile->parsed()) {
      const TruthTable f = parse_function(profile_spec, pc.n);
      const NlProfile p = nfh_profile(f, pc.threads);
      std::string text;
      if (pc.fmt() == Format::json) {
        text = json_text(p.to_json());
      } else if (pc.fmt() == Format::csv) {
        text = p.to_csv();
      } else {
        for (int r : p.support()) text += std::to_string(r) + " " + std::to_string(p.count(r)) + "\n";
      }
      emit(pc, text, out);
      return kOk;
    }

    if (cmd_fh->parsed()) {
      const TruthTable f = parse_function(fh_spec, fc.n);
      const FhSet s = fh_set(f, fh_r, fc.threads);
      std::string text;
      if (fc.fmt() == Format::json) {
        nlohmann::ordered_json j;
        j["r"] = fh_r;
        j["size"] = s.size();
        j["members"] = s.members();
        text = json_text(nlohmann::json(j));
      } else if (fc.fmt() == Format::csv) {
        text = "form\n";
        for (auto m : s.members()) text += std::to_string(m) + "\n";
      } else {
        text = std::to_string(s.size()) + "\n" + s.to_hex() + "\n";
      }
      emit(fc, text, out);
      return kOk;
    }

    if (cmd_equiv->parsed()) {
      const TruthTable f1 = parse_function(eq1, ec.n);
      const TruthTable f2 = parse_function(eq2, ec.n);
      if (f1.num_vars() != f2.num_vars()) throw std::invalid_argument("f1 and f2 have different n");
      const EquivalenceResult r = equivalence_search(f1, f2, eq_budget);
      std::string text;
      if (ec.fmt() == Format::json) {
        nlohmann::ordered_json j;
        j["verdict"] = to_string(r.verdict);
        j["nodes"] = r.nodes;
        j["reason"] = r.reason;
        j["witness"] = r.witness ? to_json(*r.witness) : nlohmann::json(nullptr);
        text = json_text(nlohmann::json(j));
      } else if (ec.fmt() == Format::csv) {
        text = "verdict,nodes\n" + to_string(r.verdict) + "," + std::to_string(r.nodes) + "\n";
      } else {
        text = to_string(r.verdict) + "\n";
        if (r.witness) text += to_json(*r.witness).dump() + "\n";
        else if (!r.reason.empty()) text += r.reason + "\n";
      }
      emit(ec, text, out);
      return kOk;
    }

    if (cmd_concat->parsed()) {
      const TruthTable f1 = parse_function(cc1, cc.n);
      const TruthTable f2 = parse_function(cc2, cc.n);
      if (f1.num_vars() != f2.num_vars()) throw std::invalid_argument("f1 and f2 have different n");
      if (f1.num_vars() < 2 || f1.num_vars() > 6) throw std::invalid_argument("halves must have 2 <= n <= 6");
      const Nl2Result r = concatenation_nl2(f1, f2, std::nullopt, cc.threads);
      nlohmann::ordered_json j;
      j["f1"] = to_hex(f1);
      j["f2"] = to_hex(f2);
      j["nl2"] = r.value;
      int code = kOk;
      if (f1.num_vars() == 6) j["condition2"] = theorem1_condition2(f1, f2, cc.threads).holds();
      if (cc_n1 >= 0) {
        const bool hyp = lemma2_hypothesis(nfh_profile(f1, cc.threads), nfh_profile(f2, cc.threads), cc_n1, cc_n2);
        j["hypothesis"] = hyp;
        if (hyp) {
          const bool ok = r.value < cc_n1 + cc_n2;
          j["bound"] = cc_n1 + cc_n2;
          j["conclusion"] = ok ? "confirmed" : "refuted";
          if (!ok) code = kRefuted;
        }
      }
      std::string text;
      if (cc.fmt() == Format::json) {
        text = json_text(nlohmann::json(j));
      } else if (cc.fmt() == Format::csv) {
        std::string head, row;
        for (const auto& [k, v] : j.items()) {
          head += (head.empty() ? "" : ",") + k;
          row += (row.empty() ? "" : ",") + (v.is_string() ? v.get<std::string>() : v.dump());
        }
        text = head + "\n" + row + "\n";
      } else {
        for (const auto& [k, v] : j.items()) text += k + " " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
      }
      emit(cc, text, out);
      return code;
    }

    if (cmd_search->parsed()) {
      scfg.mode = prune_mode_from_string(mode);
      scfg.threads = sc.threads;
      std::string jsonl;
      auto flush_records = [&] {
        if (!sc.out.empty()) write_atomic(sc.out, jsonl);
      };
      try {
        const SearchSummary s = witness_search(scfg, [&](const SearchRecord& r) { jsonl += r.to_json().dump() + "\n"; });
        flush_records();
        nlohmann::ordered_json j;
        j["i1"] = scfg.i1;
        j["i2"] = scfg.i2;
        j["seed"] = scfg.seed;
        j["mode"] = to_string(scfg.mode);
        j["summary"] = s.to_json();
        std::string text;
        if (sc.fmt() == Format::json) {
          text = json_text(nlohmann::json(j));
        } else if (sc.fmt() == Format::csv) {
          text = "candidates,condition2_passes,exact_runs,cross_checks,max_nl2,witnesses\n" +
                 std::to_string(s.candidates) + "," + std::to_string(s.condition2_passes) + "," +
                 std::to_string(s.exact_runs) + "," + std::to_string(s.cross_checks) + "," +
                 std::to_string(s.max_nl2) + "," + std::to_string(s.witnesses.size()) + "\n";
        } else {
          text = "seed " + std::to_string(scfg.seed) + "\ncandidates " + std::to_string(s.candidates) +
                 "\ncondition2_passes " + std::to_string(s.condition2_passes) + "\nexact_runs " +
                 std::to_string(s.exact_runs) + "\ncross_checks " + std::to_string(s.cross_checks) + "\nmax_nl2 " +
                 std::to_string(s.max_nl2) + "\nwitnesses " + std::to_string(s.witnesses.size()) + "\n";
        }
        if (!summary_out.empty()) {
          write_atomic(summary_out, text);
        } else {
          out << text;
          if (sc.out.empty()) out << jsonl;
        }
        return kOk;
      } catch (const SearchViolation& v) {
        flush_records();
        err << "violation: " << v.what() << "\n" << v.dump().dump(2) << "\n";
        return kRefuted;
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace rmcover::cli
