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

#include "blemish/label.hpp"

#include <algorithm>

#include "blemish/error.hpp"

namespace blemish {
namespace {

std::vector<Cell> label_domain(const Dataset& dataset, const ContaminationManifest& manifest,
                               const std::string& column) {
  detail::require_column(dataset, column);
  auto cells = original_column(dataset, manifest, column);
  std::erase_if(cells, [](const Cell& c) { return is_null(c); });
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

}  // namespace

Contaminated flip_binary(const Dataset& dataset, const ContaminationSpec& spec,
                         const ContaminationManifest& manifest) {
  const auto domain = label_domain(dataset, manifest, spec.column);
  if (domain.size() != 2) {
    throw Error(ErrorKind::kArity, "binary flip needs exactly 2 classes, found " +
                                       std::to_string(domain.size()));
  }
  auto selection = detail::select_cells(dataset, spec, manifest, Family::kLabel);
  detail::CellEditor editor(dataset, spec, selection);
  editor.params()["strategy"] = "binary";
  for (std::size_t row : selection.rows) {
    const Cell& prior = editor.current(row);
    editor.replace(row, prior == domain[0] ? domain[1] : domain[0]);
  }
  return std::move(editor).finish(manifest);
}

Contaminated flip_multiclass(const Dataset& dataset, const ContaminationSpec& spec,
                             const ContaminationManifest& manifest) {
  const auto domain = label_domain(dataset, manifest, spec.column);
  if (domain.size() < 2) {
    throw Error(ErrorKind::kArity, "label flip needs at least 2 classes, found " +
                                       std::to_string(domain.size()));
  }
  auto selection = detail::select_cells(dataset, spec, manifest, Family::kLabel);
  detail::CellEditor editor(dataset, spec, selection);
  editor.params()["strategy"] = "multiclass";
  std::vector<Cell> others;
  for (std::size_t row : selection.rows) {
    const Cell prior = editor.current(row);
    others.clear();
    std::copy_if(domain.begin(), domain.end(), std::back_inserter(others),
                 [&](const Cell& c) { return c != prior; });
    editor.replace(row, others[selection.stream.uniform_index(others.size())]);
  }
  return std::move(editor).finish(manifest);
}

Contaminated flip_labels(const Dataset& dataset, const ContaminationSpec& spec,
                         const ContaminationManifest& manifest) {
  const std::string strategy = spec.params.is_object() ? spec.params.value("strategy", "auto") : "auto";
  if (strategy == "binary") return flip_binary(dataset, spec, manifest);
  if (strategy == "multiclass") return flip_multiclass(dataset, spec, manifest);
  if (strategy != "auto") {
    throw Error(ErrorKind::kValidation, "unknown label strategy '" + strategy + "'");
  }
  const auto domain = label_domain(dataset, manifest, spec.column);
  return domain.size() == 2 ? flip_binary(dataset, spec, manifest)
                            : flip_multiclass(dataset, spec, manifest);
}

}  // namespace blemish
