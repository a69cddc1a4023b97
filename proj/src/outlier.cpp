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

#include "blemish/outlier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "blemish/error.hpp"

namespace blemish {
namespace {

struct Boundary {
  double mean = 0.0;
  double sigma = 0.0;

  bool outside(double v) const { return std::abs(v - mean) > 3.0 * sigma; }
};

Boundary three_sigma(const Dataset& dataset, const ContaminationManifest& manifest,
                     const std::string& column) {
  const auto& schema = dataset.column(column).schema;
  const auto stats = compute_stats(original_column(dataset, manifest, column), schema);
  if (stats.non_null_count < 2) {
    throw Error(ErrorKind::kDegenerate, "3-sigma outliers need at least 2 non-null cells");
  }
  if (stats.numeric->std == 0.0) {
    throw Error(ErrorKind::kDegenerate, "standard deviation is 0; no value lies beyond 3 sigma");
  }
  return Boundary{stats.numeric->mean, stats.numeric->std};
}

// mean + s * (3 + u) * sigma with u in (0, 1].
double draw_outlier(RandomStream& stream, const Boundary& b, double& sign) {
  sign = stream.coin() ? 1.0 : -1.0;
  const double u = stream.uniform_open_closed();
  return b.mean + sign * (3.0 * b.sigma + u * b.sigma);
}

std::vector<Cell> original_distinct(const Dataset& dataset, const ContaminationManifest& manifest,
                                    const std::string& column) {
  auto cells = original_column(dataset, manifest, column);
  std::erase_if(cells, [](const Cell& c) { return is_null(c); });
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

}  // namespace

std::string outlier_label_for(const std::vector<Cell>& distinct) {
  auto taken = [&](const std::string& label) {
    return std::binary_search(distinct.begin(), distinct.end(), Cell{label});
  };
  std::string label = kOutlierLabel;
  for (int suffix = 1; taken(label); ++suffix) {
    label = std::string(kOutlierLabel) + "_" + std::to_string(suffix);
  }
  return label;
}

Contaminated outlier_continuous(const Dataset& dataset, const ContaminationSpec& spec,
                                const ContaminationManifest& manifest) {
  const std::size_t c = detail::require_column(dataset, spec.column);
  detail::require_kind(dataset, c, {ColumnKind::kContinuous}, Family::kOutlier);
  const Boundary b = three_sigma(dataset, manifest, spec.column);
  auto selection = detail::select_cells(dataset, spec, manifest, Family::kOutlier);

  detail::CellEditor editor(dataset, spec, selection);
  editor.params()["mean"] = b.mean;
  editor.params()["sigma"] = b.sigma;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  for (std::size_t row : selection.rows) {
    const double prior = *numeric_value(editor.current(row));
    double sign = 1.0;
    double v = draw_outlier(selection.stream, b, sign);
    // Guards against the offset vanishing in floating point when |mean| >> sigma.
    while (!b.outside(v) || v == prior) v = std::nextafter(v, sign * kInf);
    editor.replace(row, v);
  }
  return std::move(editor).finish(manifest);
}

Contaminated outlier_int(const Dataset& dataset, const ContaminationSpec& spec,
                         const ContaminationManifest& manifest) {
  const std::size_t c = detail::require_column(dataset, spec.column);
  detail::require_kind(dataset, c, {ColumnKind::kDiscreteInt}, Family::kOutlier);
  const Boundary b = three_sigma(dataset, manifest, spec.column);
  auto selection = detail::select_cells(dataset, spec, manifest, Family::kOutlier);

  detail::CellEditor editor(dataset, spec, selection);
  editor.params()["mean"] = b.mean;
  editor.params()["sigma"] = b.sigma;
  for (std::size_t row : selection.rows) {
    const auto prior = std::get<std::int64_t>(editor.current(row));
    double sign = 1.0;
    const double raw = draw_outlier(selection.stream, b, sign);
    double rounded = sign > 0 ? std::ceil(raw) : std::floor(raw);
    while (!b.outside(rounded)) rounded += sign;
    if (std::abs(rounded) >= 9.2e18) {
      throw Error(ErrorKind::kDomain, "outlier value exceeds the 64-bit integer range");
    }
    auto v = static_cast<std::int64_t>(rounded);
    if (v == prior) v += static_cast<std::int64_t>(sign);
    editor.replace(row, v);
  }
  return std::move(editor).finish(manifest);
}

Contaminated outlier_categorical_string(const Dataset& dataset, const ContaminationSpec& spec,
                                        const ContaminationManifest& manifest) {
  const std::size_t c = detail::require_column(dataset, spec.column);
  detail::require_kind(dataset, c, {ColumnKind::kCategoricalString}, Family::kOutlier);
  const std::string label = outlier_label_for(original_distinct(dataset, manifest, spec.column));
  auto selection = detail::select_cells(dataset, spec, manifest, Family::kOutlier);

  detail::CellEditor editor(dataset, spec, selection);
  editor.params()["label"] = label;
  for (std::size_t row : selection.rows) editor.replace(row, label);
  return std::move(editor).finish(manifest);
}

Contaminated outlier_categorical_int(const Dataset& dataset, const ContaminationSpec& spec,
                                     const ContaminationManifest& manifest) {
  const std::size_t c = detail::require_column(dataset, spec.column);
  detail::require_kind(dataset, c, {ColumnKind::kCategoricalInt}, Family::kOutlier);
  const auto distinct = original_distinct(dataset, manifest, spec.column);
  if (distinct.empty()) throw Error(ErrorKind::kStats, "no non-null cells");
  const auto unseen = std::get<std::int64_t>(distinct.back()) + 1;
  auto selection = detail::select_cells(dataset, spec, manifest, Family::kOutlier);

  detail::CellEditor editor(dataset, spec, selection);
  editor.params()["label"] = unseen;
  for (std::size_t row : selection.rows) editor.replace(row, unseen);
  return std::move(editor).finish(manifest);
}

Contaminated add_outliers(const Dataset& dataset, const ContaminationSpec& spec,
                          const ContaminationManifest& manifest) {
  const std::size_t c = detail::require_column(dataset, spec.column);
  switch (dataset.column(c).schema.kind) {
    case ColumnKind::kContinuous: return outlier_continuous(dataset, spec, manifest);
    case ColumnKind::kDiscreteInt: return outlier_int(dataset, spec, manifest);
    case ColumnKind::kCategoricalInt: return outlier_categorical_int(dataset, spec, manifest);
    case ColumnKind::kCategoricalString: return outlier_categorical_string(dataset, spec, manifest);
    default:
      detail::require_kind(dataset, c,
                           {ColumnKind::kContinuous, ColumnKind::kDiscreteInt,
                            ColumnKind::kCategoricalInt, ColumnKind::kCategoricalString},
                           Family::kOutlier);
  }
  throw Error(ErrorKind::kDomain, "unsupported column kind for outliers");
}

}  // namespace blemish
