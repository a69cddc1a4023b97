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

#include "blemish/missing.hpp"

namespace blemish {

Contaminated inject_missing(const Dataset& dataset, const ContaminationSpec& spec,
                            const ContaminationManifest& manifest) {
  auto selection = detail::select_cells(dataset, spec, manifest, Family::kMissing);
  detail::CellEditor editor(dataset, spec, selection);
  for (std::size_t row : selection.rows) editor.replace(row, Null{});
  return std::move(editor).finish(manifest);
}

}  // namespace blemish
