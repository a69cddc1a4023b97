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

#include "blemish/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "blemish/datetime.hpp"
#include "blemish/error.hpp"

namespace blemish {
namespace {

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

std::string_view strip_plus(std::string_view token) {
  if (token.size() > 1 && token.front() == '+' && token[1] != '-') token.remove_prefix(1);
  return token;
}

std::optional<std::int64_t> parse_int(std::string_view token) {
  token = strip_plus(token);
  std::int64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end || token.empty()) return std::nullopt;
  return value;
}

std::optional<double> parse_number(std::string_view token) {
  token = strip_plus(token);
  double value = 0.0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end || token.empty() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::optional<bool> parse_bool(std::string_view token) {
  if (iequals(token, "true") || token == "1") return true;
  if (iequals(token, "false") || token == "0") return false;
  return std::nullopt;
}

std::string render_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  std::string out(buf, ptr);
  if (out.find_first_of(".eEn") == std::string::npos) out += ".0";
  return out;
}

bool needs_quotes(std::string_view token) {
  return token.find_first_of(",\"\r\n") != std::string_view::npos;
}

void append_field(std::string& out, std::string_view token, bool force_quotes) {
  if (!force_quotes && !needs_quotes(token)) {
    out += token;
    return;
  }
  out += '"';
  for (char c : token) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
}

ColumnSchema parse_schema_value(const std::string& name, const nlohmann::json& value) {
  std::string kind_text;
  std::string format;
  if (value.is_string()) {
    kind_text = value.get<std::string>();
  } else if (value.is_object() && value.contains("kind") && value["kind"].is_string()) {
    kind_text = value["kind"].get<std::string>();
    if (value.contains("datetime_format")) {
      if (!value["datetime_format"].is_string()) {
        throw Error(ErrorKind::kParse, "schema for '" + name + "': datetime_format must be a string");
      }
      format = value["datetime_format"].get<std::string>();
    }
  } else {
    throw Error(ErrorKind::kParse, "schema for '" + name + "' must be a kind string or object");
  }
  const auto kind = parse_column_kind(kind_text);
  if (!kind) throw Error(ErrorKind::kParse, "schema for '" + name + "': unknown kind '" + kind_text + "'");
  if (*kind == ColumnKind::kDatetime) {
    return ColumnSchema::datetime(format.empty() ? std::string(datetime::kIsoFormats[0]) : format);
  }
  if (!format.empty()) {
    throw Error(ErrorKind::kParse, "schema for '" + name + "': datetime_format on non-datetime kind");
  }
  return ColumnSchema::of(*kind);
}

}  // namespace

RawTable parse_csv_text(std::string_view text) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  std::vector<std::vector<RawField>> records;
  std::size_t pos = 0;
  const std::size_t n = text.size();
  while (pos < n) {
    std::vector<RawField> record;
    bool end_of_record = false;
    while (!end_of_record) {
      RawField field;
      if (pos < n && text[pos] == '"') {
        field.quoted = true;
        ++pos;
        bool closed = false;
        while (pos < n) {
          if (text[pos] == '"') {
            if (pos + 1 < n && text[pos + 1] == '"') {
              field.text += '"';
              pos += 2;
            } else {
              ++pos;
              closed = true;
              break;
            }
          } else {
            field.text += text[pos++];
          }
        }
        if (!closed) {
          throw Error(ErrorKind::kParse, "unterminated quoted field in record " +
                                             std::to_string(records.size()));
        }
        if (pos < n && text[pos] != ',' && text[pos] != '\n' && text[pos] != '\r') {
          throw Error(ErrorKind::kParse, "unexpected character after closing quote in record " +
                                             std::to_string(records.size()));
        }
      } else {
        const std::size_t start = pos;
        while (pos < n && text[pos] != ',' && text[pos] != '\n' && text[pos] != '\r') {
          if (text[pos] == '"') {
            throw Error(ErrorKind::kParse, "stray quote in unquoted field in record " +
                                               std::to_string(records.size()));
          }
          ++pos;
        }
        field.text.assign(text.substr(start, pos - start));
      }
      record.push_back(std::move(field));
      if (pos >= n) {
        end_of_record = true;
      } else if (text[pos] == ',') {
        ++pos;
      } else {
        if (text[pos] == '\r' && pos + 1 < n && text[pos + 1] == '\n') ++pos;
        ++pos;
        end_of_record = true;
      }
    }
    records.push_back(std::move(record));
  }
  if (records.empty()) throw Error(ErrorKind::kParse, "missing header row");

  RawTable table;
  std::set<std::string> seen;
  for (auto& field : records.front()) {
    if (field.text.empty()) throw Error(ErrorKind::kParse, "empty column name in header");
    if (!seen.insert(field.text).second) {
      throw Error(ErrorKind::kParse, "duplicate column name '" + field.text + "' in header");
    }
    table.header.push_back(std::move(field.text));
  }
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != table.header.size()) {
      throw Error(ErrorKind::kParse, "ragged row " + std::to_string(r) + ": " +
                                         std::to_string(records[r].size()) + " fields, header has " +
                                         std::to_string(table.header.size()));
    }
    table.rows.push_back(std::move(records[r]));
  }
  return table;
}

ColumnSchema infer_schema_non_null(std::span<const std::string_view> tokens) {
  if (tokens.empty()) throw Error(ErrorKind::kInference, "all cells null; schema override required");

  bool all_bool = true, saw_true = false, saw_false = false;
  for (auto t : tokens) {
    if (iequals(t, "true")) {
      saw_true = true;
    } else if (iequals(t, "false")) {
      saw_false = true;
    } else if (t != "0" && t != "1") {
      all_bool = false;
      break;
    }
  }
  if (all_bool && saw_true && saw_false) return ColumnSchema::of(ColumnKind::kBoolean);

  for (auto format : datetime::kIsoFormats) {
    if (std::all_of(tokens.begin(), tokens.end(),
                    [&](std::string_view t) { return datetime::parse(t, format).has_value(); })) {
      return ColumnSchema::datetime(std::string(format));
    }
  }

  std::set<std::int64_t> distinct;
  bool all_int = true;
  for (auto t : tokens) {
    auto v = parse_int(t);
    if (!v) {
      all_int = false;
      break;
    }
    distinct.insert(*v);
  }
  if (all_int) {
    const std::size_t limit = std::max<std::size_t>(2, std::min<std::size_t>(20, tokens.size() / 20));
    return ColumnSchema::of(distinct.size() <= limit ? ColumnKind::kCategoricalInt
                                                     : ColumnKind::kDiscreteInt);
  }

  if (std::all_of(tokens.begin(), tokens.end(),
                  [](std::string_view t) { return parse_number(t).has_value(); })) {
    return ColumnSchema::of(ColumnKind::kContinuous);
  }
  return ColumnSchema::of(ColumnKind::kCategoricalString);
}

ColumnSchema infer_schema(std::span<const std::string> raw_column, std::string_view null_token) {
  std::vector<std::string_view> tokens;
  tokens.reserve(raw_column.size());
  for (const auto& t : raw_column) {
    if (t != null_token) tokens.push_back(t);
  }
  return infer_schema_non_null(tokens);
}

Cell parse_cell(std::string_view token, const ColumnSchema& schema) {
  auto fail = [&]() -> Cell {
    throw Error(ErrorKind::kType, "token '" + std::string(token) + "' is not a valid " +
                                      std::string(to_string(schema.kind)));
  };
  switch (schema.kind) {
    case ColumnKind::kContinuous:
      if (auto v = parse_number(token)) return *v;
      return fail();
    case ColumnKind::kDiscreteInt:
    case ColumnKind::kCategoricalInt:
      if (auto v = parse_int(token)) return *v;
      return fail();
    case ColumnKind::kCategoricalString:
      return std::string(token);
    case ColumnKind::kBoolean:
      if (auto v = parse_bool(token)) return *v;
      return fail();
    case ColumnKind::kDatetime:
      if (auto v = datetime::parse(token, schema.datetime_format)) return Timestamp{*v, false};
      if (auto v = datetime::parse(token, datetime::alternate_format(schema.datetime_format))) {
        return Timestamp{*v, true};
      }
      return fail();
  }
  return fail();
}

std::string render_cell(const Cell& cell, const ColumnSchema& schema, std::string_view null_token) {
  struct Visitor {
    const ColumnSchema& schema;
    std::string_view null_token;
    std::string operator()(Null) const { return std::string(null_token); }
    std::string operator()(double v) const { return render_double(v); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(const std::string& v) const { return v; }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const Timestamp& t) const {
      return t.alternate ? datetime::format(t.seconds, datetime::alternate_format(schema.datetime_format))
                         : datetime::format(t.seconds, schema.datetime_format);
    }
  };
  return std::visit(Visitor{schema, null_token}, cell);
}

Dataset parse_dataset(std::string_view text, const ReadOptions& options) {
  RawTable raw = parse_csv_text(text);
  for (const auto& [name, schema] : options.overrides) {
    if (std::find(raw.header.begin(), raw.header.end(), name) == raw.header.end()) {
      throw Error(ErrorKind::kValidation, "schema override for unknown column '" + name + "'");
    }
  }
  const auto is_null_field = [&](const RawField& f) {
    return !f.quoted && f.text == options.null_token;
  };

  std::vector<Column> columns;
  columns.reserve(raw.header.size());
  for (std::size_t c = 0; c < raw.header.size(); ++c) {
    Column column;
    column.name = raw.header[c];
    if (auto it = options.overrides.find(column.name); it != options.overrides.end()) {
      column.schema = it->second;
    } else {
      std::vector<std::string_view> tokens;
      for (const auto& row : raw.rows) {
        if (!is_null_field(row[c])) tokens.push_back(row[c].text);
      }
      if (tokens.empty() && options.all_null_fallback) {
        column.schema = *options.all_null_fallback;
      } else {
        try {
          column.schema = infer_schema_non_null(tokens);
        } catch (const Error& e) {
          throw Error(e.kind(), "column '" + column.name + "': " + e.what());
        }
      }
    }
    column.cells.reserve(raw.rows.size());
    for (std::size_t r = 0; r < raw.rows.size(); ++r) {
      const RawField& field = raw.rows[r][c];
      if (is_null_field(field)) {
        column.cells.emplace_back(Null{});
        continue;
      }
      try {
        column.cells.push_back(parse_cell(field.text, column.schema));
      } catch (const Error& e) {
        throw Error(ErrorKind::kType, "type error at (row " + std::to_string(r + 1) +
                                          ", column " + column.name + "): " + e.what());
      }
    }
    columns.push_back(std::move(column));
  }
  if (columns.empty()) throw Error(ErrorKind::kParse, "header has no columns");
  return Dataset(std::move(columns));
}

Dataset read_csv(const std::filesystem::path& path, const ReadOptions& options) {
  return parse_dataset(read_file(path), options);
}

std::string render_csv(const Dataset& dataset, std::string_view null_token) {
  std::string out;
  const auto& columns = dataset.columns();
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c) out += ',';
    append_field(out, columns[c].name, false);
  }
  out += '\n';
  for (std::size_t r = 0; r < dataset.row_count(); ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) out += ',';
      const Cell& cell = columns[c].cells[r];
      if (is_null(cell)) {
        out += null_token;
        continue;
      }
      const std::string token = render_cell(cell, columns[c].schema, null_token);
      append_field(out, token, token == null_token);
    }
    out += '\n';
  }
  return out;
}

std::string render_csv(const Dataset& dataset, std::string_view null_token,
                       const RawTable& source,
                       std::span<const std::optional<std::size_t>> origin) {
  if (source.header != dataset.column_names()) return render_csv(dataset, null_token);
  std::string out;
  const auto& columns = dataset.columns();
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c) out += ',';
    append_field(out, columns[c].name, false);
  }
  out += '\n';
  for (std::size_t r = 0; r < dataset.row_count(); ++r) {
    const std::vector<RawField>* src = nullptr;
    if (r < origin.size() && origin[r] && *origin[r] < source.rows.size()) src = &source.rows[*origin[r]];
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) out += ',';
      const Cell& cell = columns[c].cells[r];
      if (src) {
        const RawField& field = (*src)[c];
        const bool field_null = !field.quoted && field.text == null_token;
        bool same = false;
        if (field_null) {
          same = is_null(cell);
        } else if (!is_null(cell)) {
          try {
            same = parse_cell(field.text, columns[c].schema) == cell;
          } catch (const Error&) {
            same = false;
          }
        }
        if (same) {
          append_field(out, field.text, field.quoted);
          continue;
        }
      }
      if (is_null(cell)) {
        out += null_token;
        continue;
      }
      const std::string token = render_cell(cell, columns[c].schema, null_token);
      append_field(out, token, token == null_token);
    }
    out += '\n';
  }
  return out;
}

void write_csv(const Dataset& dataset, const std::filesystem::path& path,
               std::string_view null_token) {
  write_file(path, render_csv(dataset, null_token));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::kIo, "read failure on '" + path.string() + "'");
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, "cannot open '" + path.string() + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw Error(ErrorKind::kIo, "write failure on '" + path.string() + "'");
}

SchemaMap parse_schema_overrides(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("schema file: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::kParse, "schema file must be a JSON object");
  SchemaMap out;
  for (const auto& [name, value] : doc.items()) out.emplace(name, parse_schema_value(name, value));
  return out;
}

SchemaMap load_schema_overrides(const std::filesystem::path& path) {
  return parse_schema_overrides(read_file(path));
}

}  // namespace blemish
