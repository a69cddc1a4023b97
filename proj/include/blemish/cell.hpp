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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace blemish {

struct Null {
  friend bool operator==(Null, Null) = default;
  friend auto operator<=>(Null, Null) = default;
};

// Seconds since 1970-01-01T00:00:00 (no time zone). `alternate` marks a cell
// that is rendered in the column's alternate format instead of its declared
// one; the instant itself is unaffected.
struct Timestamp {
  std::int64_t seconds = 0;
  bool alternate = false;

  friend bool operator==(const Timestamp&, const Timestamp&) = default;
  friend auto operator<=>(const Timestamp&, const Timestamp&) = default;
};

using Cell = std::variant<Null, double, std::int64_t, std::string, bool, Timestamp>;

inline bool is_null(const Cell& cell) { return std::holds_alternative<Null>(cell); }

// Numeric view of a double or integer cell; nullopt for every other kind.
std::optional<double> numeric_value(const Cell& cell);

// Human-readable rendering for diagnostics (not the CSV rendering).
std::string debug_string(const Cell& cell);

enum class ColumnKind {
  kContinuous,
  kDiscreteInt,
  kCategoricalInt,
  kCategoricalString,
  kBoolean,
  kDatetime,
};

std::string_view to_string(ColumnKind kind);
std::optional<ColumnKind> parse_column_kind(std::string_view text);

struct ColumnSchema {
  ColumnKind kind = ColumnKind::kCategoricalString;
  // Non-empty iff kind == kDatetime.
  std::string datetime_format;

  static ColumnSchema of(ColumnKind kind) { return ColumnSchema{kind, {}}; }
  static ColumnSchema datetime(std::string format) {
    return ColumnSchema{ColumnKind::kDatetime, std::move(format)};
  }

  bool is_numeric() const {
    return kind == ColumnKind::kContinuous || kind == ColumnKind::kDiscreteInt ||
           kind == ColumnKind::kCategoricalInt;
  }

  friend bool operator==(const ColumnSchema&, const ColumnSchema&) = default;
};

// True when a non-null cell holds the alternative its schema requires, or the
// cell is null.
bool conforms(const Cell& cell, const ColumnSchema& schema);

}  // namespace blemish
