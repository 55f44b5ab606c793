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

#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace fsi::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell_text(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  return csv_field(std::get<std::string>(c));
}

ordered_json cell_json(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  if (const auto* d = std::get_if<double>(&c)) {
    if (!std::isfinite(*d)) return nullptr;
    return *d;
  }
  return std::get<std::string>(c);
}

Cell json_cell(const ordered_json& j) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_float()) return j.get<double>();
  if (j.is_null()) return std::nan("");
  return j.get<std::string>();
}

}  // namespace

const Table* Document::find(const std::string& name) const {
  for (const auto& t : tables) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_csv(const Document& doc) {
  std::ostringstream out;
  for (const auto& [k, v] : doc.meta) out << "# " << k << ": " << v << '\n';
  bool first = true;
  for (const auto& t : doc.tables) {
    if (!first) out << '\n';
    first = false;
    out << "# table: " << t.name << '\n';
    for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << csv_field(t.columns[c]);
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << cell_text(row[c]);
      out << '\n';
    }
  }
  return out.str();
}

std::string to_json(const Document& doc) {
  ordered_json root;
  root["meta"] = ordered_json::object();
  for (const auto& [k, v] : doc.meta) root["meta"][k] = v;
  root["tables"] = ordered_json::array();
  for (const auto& t : doc.tables) {
    ordered_json jt;
    jt["name"] = t.name;
    jt["columns"] = t.columns;
    jt["rows"] = ordered_json::array();
    for (const auto& row : t.rows) {
      ordered_json jr = ordered_json::array();
      for (const auto& c : row) jr.push_back(cell_json(c));
      jt["rows"].push_back(std::move(jr));
    }
    root["tables"].push_back(std::move(jt));
  }
  return root.dump(2) + "\n";
}

Document from_json(const std::string& text) {
  const ordered_json root = ordered_json::parse(text);
  Document doc;
  for (const auto& [k, v] : root.at("meta").items()) doc.meta.emplace_back(k, v.get<std::string>());
  for (const auto& jt : root.at("tables")) {
    Table t;
    t.name = jt.at("name").get<std::string>();
    t.columns = jt.at("columns").get<std::vector<std::string>>();
    for (const auto& jr : jt.at("rows")) {
      std::vector<Cell> row;
      for (const auto& c : jr) row.push_back(json_cell(c));
      t.rows.push_back(std::move(row));
    }
    doc.tables.push_back(std::move(t));
  }
  return doc;
}

}  // namespace fsi::cli
