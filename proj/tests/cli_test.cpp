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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rmcover/catalog.hpp"

namespace rmcover::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream f(std::string(RMCOVER_GOLDEN_DIR) + "/" + name, std::ios::binary);
  EXPECT_TRUE(f.good()) << name;
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

TEST(Cli, Nl2OfCatalogName) {
  const Outcome o = invoke({"nl2", "fun_1"});
  EXPECT_EQ(o.code, kOk);
  EXPECT_EQ(o.out, "18\n");
}

TEST(Cli, Nl2OfZeroHex) {
  EXPECT_EQ(invoke({"nl2", "0000000000000000"}).out, "0\n");
}

TEST(Cli, GoldenOutputs) {
  EXPECT_EQ(invoke({"nl2", "fun_1"}).out, golden("nl2_fun_1.txt"));
  EXPECT_EQ(invoke({"profile", "fun_3", "--format", "csv"}).out, golden("profile_fun_3.csv"));
  EXPECT_EQ(invoke({"profile", "fun_6", "--format", "json"}).out, golden("profile_fun_6.json"));
  EXPECT_EQ(invoke({"concat-check", "fun_3", "fun_8", "--n1", "28", "--n2", "15"}).out,
            golden("concat_fun_3_fun_8.txt"));
  EXPECT_EQ(invoke({"equiv", "fun_4", "fun_6"}).out, golden("equiv_fun_4_fun_6.txt"));
  EXPECT_EQ(invoke({"nl2", "x1x2x3+x4x5", "--format", "json"}).out, golden("nl2_anf.json"));
}

TEST(Cli, ProfileCsvRows) {
  const std::string out = invoke({"profile", "fun_3", "--format", "csv"}).out;
  EXPECT_NE(out.find("16,448\n"), std::string::npos);
  EXPECT_NE(out.find("28,64\n"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({"nl2"}).code, kUsage);
  EXPECT_EQ(invoke({"nl2", "fun_99"}).code, kUsage);
  EXPECT_EQ(invoke({"nl2", "x1x9"}).code, kUsage);
  EXPECT_EQ(invoke({"nl2", "fun_1", "--format", "xml"}).code, kUsage);
  EXPECT_EQ(invoke({"equiv", "fun_1", "x1x2x3x4x5x6x7"}).code, kUsage);
  EXPECT_EQ(invoke({"search", "--i1", "5"}).code, kUsage);
  const Outcome o = invoke({"concat-check", "fun_1", "x1x2"});
  EXPECT_EQ(o.code, kUsage);
  EXPECT_NE(o.err.find("different n"), std::string::npos);
}

TEST(Cli, HelpExitsCleanly) {
  const Outcome o = invoke({"--help"});
  EXPECT_EQ(o.code, kOk);
  EXPECT_NE(o.out.find("verify-all"), std::string::npos);
}

TEST(ParseFunction, Forms) {
  EXPECT_EQ(parse_function("fun_4"), fun(4));
  EXPECT_EQ(parse_function("x1x2x3x4x5x6+fun_3"), named_table("fun_8"));
  EXPECT_EQ(parse_function("fun_3 + x1x2"), fun(3) ^ truth_table_from_anf(parse_anf("x1x2", 6)));
  EXPECT_EQ(parse_function("x1x2").num_vars(), 2);
  EXPECT_EQ(parse_function("x1x2", 5).num_vars(), 5);
  EXPECT_EQ(parse_function("fun_1", 7).num_vars(), 7);
  EXPECT_EQ(parse_function("ffffffffffffffff0000000000000000"), TruthTable::variable(7, 7));
  EXPECT_EQ(parse_function("0x96"), truth_table_from_anf(parse_anf("x1+x2+x3", 3)));
  // Short hex without the prefix is read as ANF: "1" is the constant.
  EXPECT_EQ(parse_function("1"), TruthTable::constant(1, true));
  EXPECT_THROW(parse_function("fun_1", 5), std::invalid_argument);
  EXPECT_THROW(parse_function("0000000000000000", 7), std::invalid_argument);
  EXPECT_THROW(parse_function("x1++x2"), std::invalid_argument);
  EXPECT_THROW(parse_function(""), std::invalid_argument);
}

TEST(Cli, VerifyAllExitCodeIsWorstVerdict) {
  const std::string path = (std::filesystem::temp_directory_path() / "rmcover_verify.json").string();
  const Outcome o = invoke({"verify-all", "--format", "json", "--out", path, "--trials", "3"});
  EXPECT_EQ(o.code, kRefuted);
  EXPECT_TRUE(o.out.empty());
  std::ifstream f(path);
  const nlohmann::json j = nlohmann::json::parse(f);
  EXPECT_EQ(j["summary"]["discrepancy"], 1);
  EXPECT_GT(j["summary"]["refuted"].get<int>(), 0);
  std::filesystem::remove(path);
}

TEST(Cli, SearchWritesJsonl) {
  const std::string path = (std::filesystem::temp_directory_path() / "rmcover_search.jsonl").string();
  const Outcome o = invoke({"search", "--i1", "4", "--i2", "6", "--seed", "3", "--budget", "4", "--out", path});
  EXPECT_EQ(o.code, kOk);
  EXPECT_NE(o.out.find("candidates 4\n"), std::string::npos);
  std::ifstream f(path);
  std::string line;
  int lines = 0;
  while (std::getline(f, line)) {
    const nlohmann::json r = nlohmann::json::parse(line);
    EXPECT_EQ(r["candidate"], lines);
    EXPECT_TRUE(r.contains("A") && r.contains("b") && r.contains("g") && r.contains("timestamp"));
    ++lines;
  }
  EXPECT_EQ(lines, 4);
  std::filesystem::remove(path);
}

TEST(Cli, AtomicWriteReplacesTarget) {
  const auto path = std::filesystem::temp_directory_path() / "rmcover_atomic.txt";
  write_atomic(path.string(), "one\n");
  write_atomic(path.string(), "two\n");
  std::ifstream f(path);
  std::string s;
  std::getline(f, s);
  EXPECT_EQ(s, "two");
  std::filesystem::remove(path);
  EXPECT_THROW(write_atomic("/nonexistent-dir/x/y.txt", "z"), std::runtime_error);
}

}  // namespace
}  // namespace rmcover::cli
