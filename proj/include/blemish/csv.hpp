// Copyright 2026 The Blemish Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "blemish/dataset.hpp"

namespace blemish {

using SchemaMap = std::map<std::string, ColumnSchema, std::less<>>;

struct RawField {
  std::string text;
  bool quoted = false;
};

// Untyped RFC-4180 table: header plus data rows of equal arity.
struct RawTable {
  std::vector<std::string> header;
  std::vector<std::vector<RawField>> rows;
};

struct ReadOptions {
  SchemaMap overrides;
  std::string null_token;
  // Schema used for all-null columns instead of failing inference.
  std::optional<ColumnSchema> all_null_fallback;
};

// Throws kParse on ragged rows, duplicate or empty header names, or an
// unterminated quote.
RawTable parse_csv_text(std::string_view text);

Dataset parse_dataset(std::string_view text, const ReadOptions& options);
Dataset read_csv(const std::filesystem::path& path, const ReadOptions& options);

std::string render_csv(const Dataset& dataset, std::string_view null_token);
// Same layout, but cell (r, c) is written with the bytes of source field
// (origin[r], c) whenever that field parses to the same cell. Rows without an
// origin, and all rows when the headers differ, render as above.
std::string render_csv(const Dataset& dataset, std::string_view null_token,
                       const RawTable& source,
                       std::span<const std::optional<std::size_t>> origin);
void write_csv(const Dataset& dataset, const std::filesystem::path& path,
               std::string_view null_token);

// Tokens equal to null_token are skipped. Throws kInference when nothing is
// left.
ColumnSchema infer_schema(std::span<const std::string> raw_column,
                          std::string_view null_token = "");
ColumnSchema infer_schema_non_null(std::span<const std::string_view> tokens);

// Throws kType when the token does not parse under the schema. Datetime
// tokens in the schema's alternate format parse with Timestamp::alternate set.
Cell parse_cell(std::string_view token, const ColumnSchema& schema);
// Null cells render as null_token.
std::string render_cell(const Cell& cell, const ColumnSchema& schema,
                        std::string_view null_token = "");

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

// Schema override document: {"col": "boolean"} or
// {"col": {"kind": "datetime", "datetime_format": "%d/%m/%Y"}}.
SchemaMap parse_schema_overrides(std::string_view json_text);
SchemaMap load_schema_overrides(const std::filesystem::path& path);

}  // namespace blemish
