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

// Command-line front end.

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "rmcover/truth_table.hpp"

namespace rmcover::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kRefuted = 2, kDiscrepancy = 3 };

/// Resolves a function argument. Accepted forms:
///   16 or 32 hex digits, or 0x followed by hex digits (a truth table);
///   otherwise '+'-separated terms, each a catalog id (fun_4, bent_6) or a
///   monomial such as x1x3 or 1.
/// n comes from the hex length, or from the largest variable / catalog entry
/// used; n_override > 0 replaces it. Throws std::invalid_argument.
TruthTable parse_function(std::string_view spec, int n_override = 0);

/// Writes `content` to `path` through a temporary file and a rename.
void write_atomic(const std::string& path, const std::string& content);

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace rmcover::cli
