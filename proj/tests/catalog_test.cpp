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

#include "rmcover/catalog.hpp"

#include <gtest/gtest.h>

#include <map>

namespace rmcover {
namespace {

// Reference table in subscript notation, independent of the catalog source.
const std::map<std::string, std::string> kReference = {
    {"fun_1", "x_1x_2x_3+x_1x_4x_5+x_2x_4x_6+x_3x_5x_6+x_4x_5x_6"},
    {"fun_3", "x_1x_2x_6+x_1x_3x_5+x_2x_3x_4"},
    {"fun_4", "x_1x_2x_3x_4+x_1x_2x_6+x_1x_4x_5+x_2x_3x_5"},
    {"fun_5", "x_1x_2x_3x_4+x_1x_3x_5+x_1x_4x_6+x_2x_3x_5+x_2x_3x_6+x_2x_4x_5"},
    {"fun_6", "x_1x_2x_3x_6+x_1x_2x_4x_5+x_1x_3x_5+x_1x_4x_5+x_1x_4x_6+x_2x_3x_4"},
    {"fun_7", "x_1x_2x_3x_4x_5+x_1x_3x_5+x_1x_4x_6+x_2x_3x_5+x_2x_3x_6+x_2x_4x_5"},
    {"fun_9", "x_1x_2x_3x_4+x_1x_5x_6+x_2x_3x_6+x_2x_4x_5"},
    {"fun_10", "x_1x_2x_3x_6+x_1x_2x_4x_5+x_1x_4x_5+x_1x_5x_6+x_2x_3x_5"},
    {"fun_11", "x_1x_2x_3x_6+x_1x_2x_4x_5+x_1x_5x_6+x_2x_4x_6+x_3x_4x_5"},
    {"fun_12", "x_1x_2x_5x_6+x_1x_3x_4x_6+x_2x_3x_4x_5+x_1x_2x_4+x_1x_3x_4+x_1x_3x_5+x_2x_3x_6"},
    {"fun_13", "x_1x_2x_5x_6+x_1x_3x_4x_6+x_2x_3x_4x_5+x_1x_3x_4+x_1x_4x_5+x_2x_3x_6"},
    {"fun_14", "x_1x_2x_3x_4x_5+x_1x_2x_6+x_1x_3x_5+x_2x_3x_4"},
    {"fun_15", "x_1x_2x_3x_4x_5+x_1x_2x_5+x_1x_4x_6+x_2x_3x_6"},
    {"fun_16", "x_1x_2x_3x_4x_5+x_1x_2x_3x_6+x_1x_2x_6+x_1x_3x_5+x_2x_3x_4"},
    {"fun_17", "x_1x_2x_3x_4x_5+x_1x_2x_5x_6+x_1x_3x_4x_6+x_1x_2x_4+x_1x_3x_5+x_3x_4x_6"},
    {"fun_18", "x_1x_2x_3x_4x_5+x_1x_2x_5x_6+x_1x_3x_4x_6+x_1x_2x_4+x_1x_3x_4+x_1x_3x_5+x_2x_5x_6+x_3x_4x_6"},
    {"bent_6", "x_1x_3x_4+x_1x_2x_5+x_1x_6+x_2x_4+x_3x_4+x_3x_5"},
};

std::string strip_underscores(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c != '_') out += c;
  }
  return out;
}

TEST(Catalog, DefinitionsMatchReferenceTokenForToken) {
  for (const auto& [id, text] : kReference) {
    const NamedFunction& f = named(id);
    EXPECT_EQ(f.definition, strip_underscores(text)) << id;
    EXPECT_EQ(f.anf, parse_anf(text, 6)) << id;
  }
}

TEST(Catalog, CompositeEntries) {
  const AnfPolynomial top = parse_anf("x1x2x3x4x5x6", 6);
  EXPECT_EQ(named("fun_2").definition, "x1x2x3x4x5x6+fun_1");
  EXPECT_EQ(named("fun_2").anf, named("fun_1").anf + top);
  EXPECT_EQ(named("fun_8").definition, "x1x2x3x4x5x6+fun_3");
  EXPECT_EQ(named("fun_8").anf, named("fun_3").anf + top);
  for (int i = 3; i <= 7; ++i) {
    const std::string id = "x1x2x3x4x5x6+fun_" + std::to_string(i);
    EXPECT_EQ(named(id).anf, named("fun_" + std::to_string(i)).anf + top);
    EXPECT_EQ(named_table(id), fun_with_top(i));
  }
  EXPECT_EQ(named_table("fun_8"), named_table("x1x2x3x4x5x6+fun_3"));
}

TEST(Catalog, OrderAndSize) {
  const auto all = catalog();
  ASSERT_EQ(all.size(), 24u);
  for (int i = 1; i <= 18; ++i) EXPECT_EQ(all[static_cast<std::size_t>(i - 1)].id, "fun_" + std::to_string(i));
  EXPECT_EQ(all[18].id, "x1x2x3x4x5x6+fun_3");
  EXPECT_EQ(all[23].id, "bent_6");
  for (const auto& f : all) EXPECT_EQ(f.anf.num_vars(), 6);
}

TEST(Catalog, LookupErrors) {
  EXPECT_FALSE(find_named("fun_19").has_value());
  EXPECT_THROW(named("fun_0"), std::invalid_argument);
  EXPECT_THROW(fun(0), std::invalid_argument);
  EXPECT_THROW(fun(19), std::invalid_argument);
  EXPECT_EQ(fun(7), named_table("fun_7"));
}

}  // namespace
}  // namespace rmcover
