// Copyright 2026 The qwalk Authors
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

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

namespace qwalk {

using Cell = std::variant<std::int64_t, double, std::string>;

/// A named, column-ordered table destined for one output file.
struct Table {
  std::string name;  // file stem
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class OutputFormat { Csv, Json };
std::string_view to_string(OutputFormat f);
OutputFormat parse_output_format(std::string_view name);

/// 17 significant digits, shortest exponent form ("%.17g").
std::string format_double(double v);

/// Header line plus one line per row, comma separated, LF endings.
std::string to_csv(const Table& t);
/// {"columns": [...], "rows": [[...], ...]}.
nlohmann::json to_json(const Table& t);

/// Writes each table to out_dir/<name>.csv or .json and returns the paths in
/// table order. Throws std::runtime_error on I/O failure.
std::vector<std::filesystem::path> emit_results(const std::vector<Table>& tables,
                                                OutputFormat format,
                                                const std::filesystem::path& out_dir);

/// Writes `contents` verbatim; throws std::runtime_error on failure.
void write_file(const std::filesystem::path& path, std::string_view contents);

/// Lowercase hex SHA-256 of a file's bytes / of a buffer.
std::string sha256_file(const std::filesystem::path& path);
std::string sha256_hex(std::string_view bytes);

}  // namespace qwalk
