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

#include "blemish/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "blemish/error.hpp"

namespace blemish {

Dataset::Dataset(std::vector<Column> columns) : columns_(std::move(columns)) {
  std::set<std::string_view> seen;
  row_count_ = columns_.empty() ? 0 : columns_.front().cells.size();
  for (const auto& column : columns_) {
    if (column.name.empty()) throw Error(ErrorKind::kValidation, "empty column name");
    if (!seen.insert(column.name).second) {
      throw Error(ErrorKind::kValidation, "duplicate column name '" + column.name + "'");
    }
    if (column.cells.size() != row_count_) {
      throw Error(ErrorKind::kValidation, "column '" + column.name + "' has " +
                                              std::to_string(column.cells.size()) +
                                              " cells, expected " + std::to_string(row_count_));
    }
    if (column.schema.kind == ColumnKind::kDatetime && column.schema.datetime_format.empty()) {
      throw Error(ErrorKind::kValidation,
                  "datetime column '" + column.name + "' has no datetime_format");
    }
    for (std::size_t row = 0; row < column.cells.size(); ++row) {
      if (!conforms(column.cells[row], column.schema)) {
        throw Error(ErrorKind::kType, "cell (" + std::to_string(row) + ", " + column.name +
                                          ") does not conform to " +
                                          std::string(to_string(column.schema.kind)));
      }
    }
  }
}

const Column& Dataset::column(std::string_view name) const {
  return columns_[column_index(name)];
}

std::optional<std::size_t> Dataset::find_column(std::string_view name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t Dataset::column_index(std::string_view name) const {
  if (auto index = find_column(name)) return *index;
  throw Error(ErrorKind::kValidation, "unknown column '" + std::string(name) + "'");
}

std::vector<std::string> Dataset::column_names() const {
  std::vector<std::string> names;
  names.reserve(columns_.size());
  for (const auto& column : columns_) names.push_back(column.name);
  return names;
}

const Cell& Dataset::cell(std::size_t row, std::size_t column) const {
  return columns_.at(column).cells.at(row);
}

void Dataset::set_cell(std::size_t row, std::size_t column, Cell value) {
  auto& target = columns_.at(column);
  if (!conforms(value, target.schema)) {
    throw Error(ErrorKind::kType, "value " + debug_string(value) + " does not conform to " +
                                      std::string(to_string(target.schema.kind)) +
                                      " column '" + target.name + "'");
  }
  target.cells.at(row) = std::move(value);
}

std::vector<Cell> Dataset::row(std::size_t row) const {
  std::vector<Cell> out;
  out.reserve(columns_.size());
  for (const auto& column : columns_) out.push_back(column.cells.at(row));
  return out;
}

void Dataset::append_row(std::vector<Cell> cells) {
  if (cells.size() != columns_.size()) {
    throw Error(ErrorKind::kValidation, "row arity " + std::to_string(cells.size()) +
                                            " does not match " +
                                            std::to_string(columns_.size()) + " columns");
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!conforms(cells[i], columns_[i].schema)) {
      throw Error(ErrorKind::kType, "appended cell does not conform to column '" +
                                        columns_[i].name + "'");
    }
  }
  for (std::size_t i = 0; i < cells.size(); ++i) columns_[i].cells.push_back(std::move(cells[i]));
  ++row_count_;
}

void Dataset::truncate(std::size_t row_count) {
  if (row_count >= row_count_) return;
  for (auto& column : columns_) column.cells.resize(row_count);
  row_count_ = row_count;
}

ColumnStats compute_stats(std::span<const Cell> cells, const ColumnSchema& schema) {
  ColumnStats stats;
  std::vector<Cell> values;
  values.reserve(cells.size());
  for (const auto& cell : cells) {
    if (is_null(cell)) {
      ++stats.null_count;
    } else {
      values.push_back(cell);
    }
  }
  stats.non_null_count = values.size();
  if (values.empty()) throw Error(ErrorKind::kStats, "no non-null cells");

  if (schema.is_numeric()) {
    NumericStats numeric;
    numeric.min = *numeric_value(values.front());
    numeric.max = numeric.min;
    double sum = 0.0;
    for (const auto& cell : values) {
      const double v = *numeric_value(cell);
      numeric.min = std::min(numeric.min, v);
      numeric.max = std::max(numeric.max, v);
      sum += v;
    }
    const double n = static_cast<double>(values.size());
    numeric.mean = std::clamp(sum / n, numeric.min, numeric.max);
    double squares = 0.0;
    for (const auto& cell : values) {
      const double d = *numeric_value(cell) - numeric.mean;
      squares += d * d;
    }
    numeric.std = std::sqrt(squares / n);
    stats.numeric = numeric;
  }

  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  stats.distinct = std::move(values);
  return stats;
}

ColumnStats column_stats(const Dataset& dataset, std::string_view column) {
  const auto& target = dataset.column(column);
  try {
    return compute_stats(target.cells, target.schema);
  } catch (const Error& e) {
    throw Error(e.kind(), "column '" + target.name + "': " + e.what());
  }
}

}  // namespace blemish
