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

#include "blemish/temporal.hpp"

#include "blemish/datetime.hpp"
#include "blemish/error.hpp"

namespace blemish {
namespace {

std::int64_t positive_param(const nlohmann::json& params, const char* key, std::int64_t fallback) {
  if (!params.is_object() || !params.contains(key)) return fallback;
  const auto& value = params[key];
  if (!value.is_number_integer() || value.get<std::int64_t>() < 1) {
    throw Error(ErrorKind::kValidation, std::string(key) + " must be an integer >= 1");
  }
  return value.get<std::int64_t>();
}

}  // namespace

Contaminated invert_boolean(const Dataset& dataset, const ContaminationSpec& spec,
                            const ContaminationManifest& manifest) {
  const std::size_t c = detail::require_column(dataset, spec.column);
  detail::require_kind(dataset, c, {ColumnKind::kBoolean}, Family::kBoolean);
  auto selection = detail::select_cells(dataset, spec, manifest, Family::kBoolean);
  detail::CellEditor editor(dataset, spec, selection);
  for (std::size_t row : selection.rows) editor.replace(row, !std::get<bool>(editor.current(row)));
  return std::move(editor).finish(manifest);
}

Contaminated datetime_shift(const Dataset& dataset, const ContaminationSpec& spec,
                            const ContaminationManifest& manifest) {
  const std::size_t c = detail::require_column(dataset, spec.column);
  detail::require_kind(dataset, c, {ColumnKind::kDatetime}, Family::kDatetimeShift);
  const auto& format = dataset.column(c).schema.datetime_format;

  std::int64_t unit = datetime::kSecondsPerDay;
  std::int64_t max_shift = positive_param(spec.params, "max_shift_days", 30);
  if (spec.params.is_object() && spec.params.contains("max_shift_seconds")) {
    if (format.find("%S") == std::string::npos) {
      throw Error(ErrorKind::kDomain, "second-granularity shifts need %S in the datetime format");
    }
    unit = 1;
    max_shift = positive_param(spec.params, "max_shift_seconds", 1);
  }
  auto selection = detail::select_cells(dataset, spec, manifest, Family::kDatetimeShift);
  detail::CellEditor editor(dataset, spec, selection);
  editor.params()["unit_seconds"] = unit;
  editor.params()["max_shift"] = max_shift;
  for (std::size_t row : selection.rows) {
    Timestamp ts = std::get<Timestamp>(editor.current(row));
    // Index 0..2m-1 maps onto -m..-1, 1..m.
    const auto index = static_cast<std::int64_t>(
        selection.stream.uniform_index(static_cast<std::uint64_t>(2 * max_shift)));
    std::int64_t delta = index < max_shift ? index - max_shift : index - max_shift + 1;
    if (!datetime::in_range(ts.seconds + delta * unit)) delta = -delta;
    ts.seconds += delta * unit;
    editor.replace(row, ts);
  }
  return std::move(editor).finish(manifest);
}

Contaminated datetime_misformat(const Dataset& dataset, const ContaminationSpec& spec,
                                const ContaminationManifest& manifest) {
  const std::size_t c = detail::require_column(dataset, spec.column);
  detail::require_kind(dataset, c, {ColumnKind::kDatetime}, Family::kDatetimeMisformat);
  const auto& declared = dataset.column(c).schema.datetime_format;
  const std::string alternate = datetime::alternate_format(declared);
  auto selection = detail::select_cells(dataset, spec, manifest, Family::kDatetimeMisformat,
                                        detail::family_eligibility(Family::kDatetimeMisformat));
  detail::CellEditor editor(dataset, spec, selection);
  editor.params()["alternate_format"] = alternate;
  for (std::size_t row : selection.rows) {
    Timestamp ts = std::get<Timestamp>(editor.current(row));
    if (datetime::parse(datetime::format(ts.seconds, alternate), declared)) {
      throw Error(ErrorKind::kDomain, "alternate format '" + alternate +
                                          "' also parses under the declared format");
    }
    ts.alternate = true;
    editor.replace(row, ts);
  }
  return std::move(editor).finish(manifest);
}

}  // namespace blemish
