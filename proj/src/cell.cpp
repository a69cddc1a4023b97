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

#include "blemish/cell.hpp"

#include <string>

namespace blemish {

std::optional<double> numeric_value(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return static_cast<double>(*i);
  return std::nullopt;
}

std::string debug_string(const Cell& cell) {
  struct Visitor {
    std::string operator()(Null) const { return "null"; }
    std::string operator()(double v) const { return std::to_string(v); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(const std::string& v) const { return '"' + v + '"'; }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const Timestamp& t) const {
      return "@" + std::to_string(t.seconds) + (t.alternate ? "(alt)" : "");
    }
  };
  return std::visit(Visitor{}, cell);
}

std::string_view to_string(ColumnKind kind) {
  switch (kind) {
    case ColumnKind::kContinuous: return "continuous";
    case ColumnKind::kDiscreteInt: return "discrete-int";
    case ColumnKind::kCategoricalInt: return "categorical-int";
    case ColumnKind::kCategoricalString: return "categorical-string";
    case ColumnKind::kBoolean: return "boolean";
    case ColumnKind::kDatetime: return "datetime";
  }
  return "unknown";
}

std::optional<ColumnKind> parse_column_kind(std::string_view text) {
  for (auto kind : {ColumnKind::kContinuous, ColumnKind::kDiscreteInt,
                    ColumnKind::kCategoricalInt, ColumnKind::kCategoricalString,
                    ColumnKind::kBoolean, ColumnKind::kDatetime}) {
    if (to_string(kind) == text) return kind;
  }
  return std::nullopt;
}

bool conforms(const Cell& cell, const ColumnSchema& schema) {
  if (is_null(cell)) return true;
  switch (schema.kind) {
    case ColumnKind::kContinuous: return std::holds_alternative<double>(cell);
    case ColumnKind::kDiscreteInt:
    case ColumnKind::kCategoricalInt: return std::holds_alternative<std::int64_t>(cell);
    case ColumnKind::kCategoricalString: return std::holds_alternative<std::string>(cell);
    case ColumnKind::kBoolean: return std::holds_alternative<bool>(cell);
    case ColumnKind::kDatetime: return std::holds_alternative<Timestamp>(cell);
  }
  return false;
}

}  // namespace blemish
