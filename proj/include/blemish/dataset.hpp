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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "blemish/cell.hpp"

namespace blemish {

struct Column {
  std::string name;
  ColumnSchema schema;
  std::vector<Cell> cells;

  friend bool operator==(const Column&, const Column&) = default;
};

// Columnar table with explicit null cells. Every column holds exactly
// row_count() cells, names are unique and non-empty, and every non-null cell
// conforms to its column schema; mutators enforce all three.
class Dataset {
 public:
  Dataset() = default;
  explicit Dataset(std::vector<Column> columns);

  std::size_t row_count() const { return row_count_; }
  std::size_t column_count() const { return columns_.size(); }

  const std::vector<Column>& columns() const { return columns_; }
  const Column& column(std::size_t index) const { return columns_.at(index); }
  // Throws kValidation for an unknown name.
  const Column& column(std::string_view name) const;
  std::optional<std::size_t> find_column(std::string_view name) const;
  std::size_t column_index(std::string_view name) const;
  std::vector<std::string> column_names() const;

  const Cell& cell(std::size_t row, std::size_t column) const;
  void set_cell(std::size_t row, std::size_t column, Cell value);

  std::vector<Cell> row(std::size_t row) const;
  void append_row(std::vector<Cell> cells);
  void truncate(std::size_t row_count);

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  std::vector<Column> columns_;
  std::size_t row_count_ = 0;
};

struct NumericStats {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double std = 0.0;  // population form
};

struct ColumnStats {
  // Present for continuous, discrete-int and categorical-int columns.
  std::optional<NumericStats> numeric;
  std::vector<Cell> distinct;  // sorted, null excluded
  std::size_t null_count = 0;
  std::size_t non_null_count = 0;
};

ColumnStats compute_stats(std::span<const Cell> cells, const ColumnSchema& schema);
ColumnStats column_stats(const Dataset& dataset, std::string_view column);

}  // namespace blemish
