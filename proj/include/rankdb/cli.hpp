// Copyright 2026-present the rankdb authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rankdb::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  kUserError = 1,
  kViolation = 2,
};

/// Runs one command line (without the program name) and returns its exit
/// code. Results go to `out`, diagnostics to `err`; `in` feeds the REPL.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);

/// Splits a REPL line on whitespace. Double quotes group words and are
/// removed; single-quoted query literals are kept verbatim, quotes included.
std::vector<std::string> split_words(const std::string& line);

}  // namespace rankdb::cli
