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

#include "blemish/noise.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>

#include "blemish/error.hpp"

namespace blemish {
namespace {

// Redraws when a replacement equals the prior value.
constexpr int kMaxRedraws = 64;

double round_half_up(double x) { return std::floor(x + 0.5); }

NumericStats original_numeric(const Dataset& dataset, const ContaminationManifest& manifest,
                              const std::string& column) {
  const auto& schema = dataset.column(column).schema;
  const auto stats = compute_stats(original_column(dataset, manifest, column), schema);
  return *stats.numeric;
}

std::vector<Cell> original_distinct(const Dataset& dataset, const ContaminationManifest& manifest,
                                    const std::string& column) {
  auto cells = original_column(dataset, manifest, column);
  std::erase_if(cells, [](const Cell& c) { return is_null(c); });
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

std::string synthetic_label_prefix(const std::vector<Cell>& distinct) {
  std::string prefix = "noise_";
  for (;;) {
    const bool collides = std::any_of(distinct.begin(), distinct.end(), [&](const Cell& c) {
      const auto* s = std::get_if<std::string>(&c);
      return s && s->starts_with(prefix) && all_digits(std::string_view(*s).substr(prefix.size()));
    });
    if (!collides) return prefix;
    prefix += '_';
  }
}

Contaminated noise_continuous(const Dataset& dataset, const ContaminationSpec& spec,
                              const ContaminationManifest& manifest) {
  const std::size_t c = detail::require_column(dataset, spec.column);
  detail::require_kind(dataset, c, {ColumnKind::kContinuous}, Family::kNoise);
  const NumericStats stats = original_numeric(dataset, manifest, spec.column);
  auto selection = detail::select_cells(dataset, spec, manifest, Family::kNoise);

  const double lo = stats.min, hi = stats.max;
  const double mid = (lo + hi) / 2.0;
  const double sd = (hi - lo) / 6.0;
  detail::CellEditor editor(dataset, spec, selection);
  editor.params()["degenerate"] = lo == hi;
  for (std::size_t row : selection.rows) {
    const double prior = *numeric_value(editor.current(row));
    double v = clamped_normal(selection.stream, mid, sd, lo, hi);
    for (int attempt = 0; v == prior && lo < hi && attempt < kMaxRedraws; ++attempt) {
      v = clamped_normal(selection.stream, mid, sd, lo, hi);
    }
    if (v == prior && lo < hi) v = prior != mid ? mid : hi;
    editor.replace(row, v);
  }
  return std::move(editor).finish(manifest);
}

Contaminated noise_discrete_int(const Dataset& dataset, const ContaminationSpec& spec,
                                const ContaminationManifest& manifest) {
  const std::size_t c = detail::require_column(dataset, spec.column);
  detail::require_kind(dataset, c, {ColumnKind::kDiscreteInt}, Family::kNoise);
  const NumericStats stats = original_numeric(dataset, manifest, spec.column);
  auto selection = detail::select_cells(dataset, spec, manifest, Family::kNoise);

  const double lo = stats.min, hi = stats.max;
  const double mid = (lo + hi) / 2.0;
  const double sd = (hi - lo) / 6.0;
  auto draw = [&] {
    const double x = round_half_up(clamped_normal(selection.stream, mid, sd, lo, hi));
    return static_cast<std::int64_t>(std::clamp(x, lo, hi));
  };
  detail::CellEditor editor(dataset, spec, selection);
  editor.params()["degenerate"] = lo == hi;
  for (std::size_t row : selection.rows) {
    const auto prior = std::get<std::int64_t>(editor.current(row));
    std::int64_t v = draw();
    for (int attempt = 0; v == prior && lo < hi && attempt < kMaxRedraws; ++attempt) v = draw();
    if (v == prior && lo < hi) v = static_cast<double>(prior) < mid ? prior + 1 : prior - 1;
    editor.replace(row, v);
  }
  return std::move(editor).finish(manifest);
}

Contaminated noise_categorical_int(const Dataset& dataset, const ContaminationSpec& spec,
                                   const ContaminationManifest& manifest) {
  const std::size_t c = detail::require_column(dataset, spec.column);
  detail::require_kind(dataset, c, {ColumnKind::kCategoricalInt}, Family::kNoise);
  const auto distinct = original_distinct(dataset, manifest, spec.column);
  if (distinct.size() < 2) {
    throw Error(ErrorKind::kDomain, "categorical-int noise needs at least 2 distinct values, got " +
                                        std::to_string(distinct.size()));
  }
  auto selection = detail::select_cells(dataset, spec, manifest, Family::kNoise);

  const auto d = static_cast<double>(distinct.size());
  const double center = (d - 1.0) / 2.0;
  const double sd = (d - 1.0) / 6.0;
  auto draw_index = [&] {
    const double x = round_half_up(normal(selection.stream, center, sd));
    return static_cast<std::size_t>(std::clamp(x, 0.0, d - 1.0));
  };
  detail::CellEditor editor(dataset, spec, selection);
  for (std::size_t row : selection.rows) {
    const Cell prior = editor.current(row);
    std::size_t i = draw_index();
    for (int attempt = 0; distinct[i] == prior && attempt < kMaxRedraws; ++attempt) i = draw_index();
    if (distinct[i] == prior) i = static_cast<double>(i) <= center ? i + 1 : i - 1;
    editor.replace(row, distinct[i]);
  }
  return std::move(editor).finish(manifest);
}

Contaminated noise_categorical_string(const Dataset& dataset, const ContaminationSpec& spec,
                                      const ContaminationManifest& manifest) {
  const std::size_t c = detail::require_column(dataset, spec.column);
  detail::require_kind(dataset, c, {ColumnKind::kCategoricalString}, Family::kNoise);
  const auto distinct = original_distinct(dataset, manifest, spec.column);
  auto selection = detail::select_cells(dataset, spec, manifest, Family::kNoise);

  const std::string prefix = synthetic_label_prefix(distinct);
  const double sd = std::max(1.0, static_cast<double>(distinct.size()) / 3.0);
  detail::CellEditor editor(dataset, spec, selection);
  editor.params()["label_prefix"] = prefix;
  for (std::size_t row : selection.rows) {
    const double j = std::abs(round_half_up(normal(selection.stream, 0.0, sd)));
    editor.replace(row, prefix + std::to_string(static_cast<long long>(j)));
  }
  return std::move(editor).finish(manifest);
}

Contaminated add_noise(const Dataset& dataset, const ContaminationSpec& spec,
                       const ContaminationManifest& manifest) {
  const std::size_t c = detail::require_column(dataset, spec.column);
  switch (dataset.column(c).schema.kind) {
    case ColumnKind::kContinuous: return noise_continuous(dataset, spec, manifest);
    case ColumnKind::kDiscreteInt: return noise_discrete_int(dataset, spec, manifest);
    case ColumnKind::kCategoricalInt: return noise_categorical_int(dataset, spec, manifest);
    case ColumnKind::kCategoricalString: return noise_categorical_string(dataset, spec, manifest);
    default:
      detail::require_kind(dataset, c,
                           {ColumnKind::kContinuous, ColumnKind::kDiscreteInt,
                            ColumnKind::kCategoricalInt, ColumnKind::kCategoricalString},
                           Family::kNoise);
  }
  throw Error(ErrorKind::kDomain, "unsupported column kind for noise");
}

}  // namespace blemish
