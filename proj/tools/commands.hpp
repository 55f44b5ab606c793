// Copyright 2026 The fsi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FSI_TOOLS_COMMANDS_HPP
#define FSI_TOOLS_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "fsi/phase_search.hpp"
#include "fsi/reference_data.hpp"

namespace fsi::cli {

enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitIo = 3, kExitNumerical = 4 };

inline constexpr const char* kVersion = "1.0.0";

/// Parses "0.25" (radians) or "45deg".
double parse_angle(const std::string& text);
/// Comma-separated list of angles.
std::vector<double> parse_angle_list(const std::string& text);
/// Comma-separated list of reals.
std::vector<double> parse_real_list(const std::string& text);

/// Worker cap from FSI_THREADS (default: hardware concurrency, at least 1).
unsigned worker_count();

/// Computed and reference values for one ternary-optimum row.
struct Table2Row {
  TernaryReference reference;
  TernaryOptimum computed;
  DiscriminationSummary at_reference_phases;
  bool pe_ok = false;
  bool mi_ok = false;
  bool phases_ok = false;
};

std::vector<Table2Row> compute_table2(unsigned threads, double coarse = 5e-3);

/// Runs the CLI. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fsi::cli

#endif  // FSI_TOOLS_COMMANDS_HPP
