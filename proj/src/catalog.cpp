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

#include <stdexcept>
#include <vector>

namespace rmcover {

namespace {

constexpr std::string_view kTop = "x1x2x3x4x5x6";

struct Definition {
  std::string_view id;
  std::string_view text;
};

constexpr Definition kDefinitions[] = {
    {"fun_1", "x1x2x3+x1x4x5+x2x4x6+x3x5x6+x4x5x6"},
    {"fun_2", "x1x2x3x4x5x6+fun_1"},
    {"fun_3", "x1x2x6+x1x3x5+x2x3x4"},
    {"fun_4", "x1x2x3x4+x1x2x6+x1x4x5+x2x3x5"},
    {"fun_5", "x1x2x3x4+x1x3x5+x1x4x6+x2x3x5+x2x3x6+x2x4x5"},
    {"fun_6", "x1x2x3x6+x1x2x4x5+x1x3x5+x1x4x5+x1x4x6+x2x3x4"},
    {"fun_7", "x1x2x3x4x5+x1x3x5+x1x4x6+x2x3x5+x2x3x6+x2x4x5"},
    {"fun_8", "x1x2x3x4x5x6+fun_3"},
    {"fun_9", "x1x2x3x4+x1x5x6+x2x3x6+x2x4x5"},
    {"fun_10", "x1x2x3x6+x1x2x4x5+x1x4x5+x1x5x6+x2x3x5"},
    {"fun_11", "x1x2x3x6+x1x2x4x5+x1x5x6+x2x4x6+x3x4x5"},
    {"fun_12", "x1x2x5x6+x1x3x4x6+x2x3x4x5+x1x2x4+x1x3x4+x1x3x5+x2x3x6"},
    {"fun_13", "x1x2x5x6+x1x3x4x6+x2x3x4x5+x1x3x4+x1x4x5+x2x3x6"},
    {"fun_14", "x1x2x3x4x5+x1x2x6+x1x3x5+x2x3x4"},
    {"fun_15", "x1x2x3x4x5+x1x2x5+x1x4x6+x2x3x6"},
    {"fun_16", "x1x2x3x4x5+x1x2x3x6+x1x2x6+x1x3x5+x2x3x4"},
    {"fun_17", "x1x2x3x4x5+x1x2x5x6+x1x3x4x6+x1x2x4+x1x3x5+x3x4x6"},
    {"fun_18", "x1x2x3x4x5+x1x2x5x6+x1x3x4x6+x1x2x4+x1x3x4+x1x3x5+x2x5x6+x3x4x6"},
    {"x1x2x3x4x5x6+fun_3", "x1x2x3x4x5x6+fun_3"},
    {"x1x2x3x4x5x6+fun_4", "x1x2x3x4x5x6+fun_4"},
    {"x1x2x3x4x5x6+fun_5", "x1x2x3x4x5x6+fun_5"},
    {"x1x2x3x4x5x6+fun_6", "x1x2x3x4x5x6+fun_6"},
    {"x1x2x3x4x5x6+fun_7", "x1x2x3x4x5x6+fun_7"},
    {"bent_6", "x1x3x4+x1x2x5+x1x6+x2x4+x3x4+x3x5"},
};

// Definitions may reference earlier entries by id; everything else is ANF.
AnfPolynomial expand(std::string_view text, const std::vector<NamedFunction>& earlier) {
  AnfPolynomial out(6);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('+', pos), text.size());
    const std::string_view term = text.substr(pos, end - pos);
    bool resolved = false;
    for (const auto& e : earlier) {
      if (e.id == term) {
        out += e.anf;
        resolved = true;
        break;
      }
    }
    if (!resolved) out += parse_anf(term, 6);
    pos = end + 1;
  }
  return out;
}

std::vector<NamedFunction> build() {
  std::vector<NamedFunction> out;
  for (const auto& d : kDefinitions) {
    NamedFunction f{std::string(d.id), std::string(d.text), expand(d.text, out)};
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

std::span<const NamedFunction> catalog() {
  static const std::vector<NamedFunction> kCatalog = build();
  return kCatalog;
}

std::optional<NamedFunction> find_named(std::string_view id) {
  for (const auto& f : catalog()) {
    if (f.id == id) return f;
  }
  return std::nullopt;
}

const NamedFunction& named(std::string_view id) {
  for (const auto& f : catalog()) {
    if (f.id == id) return f;
  }
  throw std::invalid_argument("unknown catalog function '" + std::string(id) + "'");
}

TruthTable named_table(std::string_view id) { return named(id).table(); }

TruthTable fun(int i) {
  if (i < 1 || i > 18) throw std::invalid_argument("fun_i needs 1 <= i <= 18");
  return named_table("fun_" + std::to_string(i));
}

TruthTable fun_with_top(int i) {
  return fun(i) ^ truth_table_from_anf(parse_anf(kTop, 6));
}

}  // namespace rmcover
