// Copyright (c) 2026 the floquet toolkit developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "result_table.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace floqcli {

namespace {

bool needs_quoting(const std::string& field) {
  return field.find_first_of(",\"\n\r") != std::string::npos;
}

std::string csv_escape(const std::string& field) {
  if (!needs_quoting(field)) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string ResultTable::format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void ResultTable::set_provenance(const std::string& key, const std::string& value) {
  provenance_.emplace_back(key, value);
}

void ResultTable::set_provenance(const std::string& key, double value) {
  provenance_.emplace_back(key, format_double(value));
}

void ResultTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) {
    throw std::invalid_argument("ResultTable: row width does not match the columns");
  }
  rows_.push_back(std::move(row));
}

void ResultTable::write_csv(std::ostream& os) const {
  for (const auto& [key, value] : provenance_) {
    os << "# " << key << ": " << value << "\n";
  }
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (c) os << ',';
    os << csv_escape(columns_[c]);
  }
  os << "\n";
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ',';
      if (const double* d = std::get_if<double>(&row[c])) {
        os << format_double(*d);
      } else {
        os << csv_escape(std::get<std::string>(row[c]));
      }
    }
    os << "\n";
  }
}

void ResultTable::write_json(std::ostream& os) const {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json prov;
  for (const auto& [key, value] : provenance_) prov[key] = value;
  doc["provenance"] = std::move(prov);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : rows_) {
    nlohmann::ordered_json obj;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (const double* d = std::get_if<double>(&row[c])) {
        obj[columns_[c]] = *d;
      } else {
        obj[columns_[c]] = std::get<std::string>(row[c]);
      }
    }
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  os << doc.dump(2) << "\n";
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

}  // namespace floqcli
