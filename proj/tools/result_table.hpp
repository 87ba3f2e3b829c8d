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

#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace floqcli {

/// Column-labeled numeric/text rows plus a provenance block. Output is
/// byte-deterministic for identical content: doubles are printed with 17
/// significant digits and key order is fixed.
class ResultTable {
 public:
  using Cell = std::variant<double, std::string>;

  explicit ResultTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void set_provenance(const std::string& key, const std::string& value);
  void set_provenance(const std::string& key, double value);
  void add_row(std::vector<Cell> row);

  std::size_t row_count() const { return rows_.size(); }

  /// RFC 4180 CSV with "# key: value" provenance comment lines on top.
  void write_csv(std::ostream& os) const;
  /// {"provenance": {...}, "rows": [{column: value, ...}, ...]}.
  void write_json(std::ostream& os) const;

  static std::string format_double(double v);

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
  std::vector<std::pair<std::string, std::string>> provenance_;
};

/// FNV-1a 64-bit, used to fingerprint the effective configuration.
std::uint64_t fnv1a64(std::string_view data);

}  // namespace floqcli
