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

#include "qwalk/table.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace qwalk {

std::string_view to_string(OutputFormat f) { return f == OutputFormat::Csv ? "csv" : "json"; }

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown output format '" + std::string(name) + "'");
}

std::string format_double(double v) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", v);
  return buf.data();
}

namespace {

std::string cell_text(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  return std::get<std::string>(c);
}

}  // namespace

std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    if (c) out += ',';
    out += t.columns[c];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    if (row.size() != t.columns.size()) {
      throw std::invalid_argument("table '" + t.name + "': row width does not match header");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += cell_text(row[c]);
    }
    out += '\n';
  }
  return out;
}

nlohmann::json to_json(const Table& t) {
  auto rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    auto r = nlohmann::json::array();
    for (const auto& c : row) std::visit([&](const auto& v) { r.push_back(v); }, c);
    rows.push_back(std::move(r));
  }
  return {{"columns", t.columns}, {"rows", std::move(rows)}};
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!f) throw std::runtime_error("write to '" + path.string() + "' failed");
}

std::vector<std::filesystem::path> emit_results(const std::vector<Table>& tables,
                                                OutputFormat format,
                                                const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create '" + out_dir.string() + "': " + ec.message());
  std::vector<std::filesystem::path> paths;
  for (const auto& t : tables) {
    const auto path = out_dir / (t.name + "." + std::string(to_string(format)));
    write_file(path, format == OutputFormat::Csv ? to_csv(t) : to_json(t).dump(1) + "\n");
    paths.push_back(path);
  }
  return paths;
}

std::string sha256_hex(std::string_view bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), md.data(), &len) != 1) {
    throw std::runtime_error("sha256: digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 0xf];
  }
  return out;
}

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read '" + path.string() + "'");
  const std::string bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  return sha256_hex(bytes);
}

}  // namespace qwalk
