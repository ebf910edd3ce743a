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

// Named 6-variable functions used throughout the covering-radius analysis of
// RM(2,7). Definitions are stored exactly as written in the source tables.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "rmcover/truth_table.hpp"

namespace rmcover {

struct NamedFunction {
  /// "fun_1" .. "fun_18", "x1x2x3x4x5x6+fun_i" or "bent_6".
  std::string id;
  /// As printed, possibly referring to earlier entries ("x1x2x3x4x5x6+fun_3").
  std::string definition;
  AnfPolynomial anf;

  TruthTable table() const { return truth_table_from_anf(anf); }
};

/// All entries in a fixed order: fun_1..fun_18, then the five
/// x1x2x3x4x5x6+fun_i composites (i = 3..7), then bent_6.
std::span<const NamedFunction> catalog();

std::optional<NamedFunction> find_named(std::string_view id);
/// Throws std::invalid_argument for unknown ids.
const NamedFunction& named(std::string_view id);
TruthTable named_table(std::string_view id);

/// fun_i for 1 <= i <= 18.
TruthTable fun(int i);
/// x1x2x3x4x5x6 + fun_i.
TruthTable fun_with_top(int i);

}  // namespace rmcover
