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

// Tabular output shared by every CLI command: a list of metadata key/value
// pairs followed by named tables, serialized as CSV (metadata as '#' comment
// lines) or as JSON (metadata under "meta").

#ifndef FSI_TOOLS_REPORT_HPP
#define FSI_TOOLS_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fsi::cli {

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  friend bool operator==(const Table&, const Table&) = default;
};

struct Document {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<Table> tables;

  const Table* find(const std::string& name) const;
  friend bool operator==(const Document&, const Document&) = default;
};

std::string format_double(double v);
std::string to_csv(const Document& doc);
std::string to_json(const Document& doc);
/// Inverse of to_json.
Document from_json(const std::string& text);

}  // namespace fsi::cli

#endif  // FSI_TOOLS_REPORT_HPP
