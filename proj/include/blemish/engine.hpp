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
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "blemish/dataset.hpp"
#include "blemish/manifest.hpp"
#include "blemish/sampling.hpp"

namespace blemish {

// One requested injection. `column` is the feature for column-scoped
// families, the label column for label flips, and the target attribute for
// targeted duplication (empty for random duplication).
struct ContaminationSpec {
  Family family = Family::kMissing;
  std::string column;
  Mode mode = Mode::kNew;
  double fraction = 0.0;
  std::uint64_t seed = 0;
  nlohmann::json params = nlohmann::json::object();
};

Scope scope_of(const ContaminationSpec& spec);

struct Contaminated {
  Dataset dataset;
  ContaminationManifest manifest;
};

// Mode arithmetic for one spec, without touching the data.
struct Plan {
  Family family = Family::kMissing;
  Scope scope;
  Mode mode = Mode::kNew;
  std::size_t n_rows = 0;
  std::size_t reference_rows = 0;  // basis of the fraction
  std::size_t existing = 0;
  std::size_t target_total = 0;
  std::size_t k = 0;
  std::size_t eligible = 0;  // eligible cells, or the source pool for duplicates
  bool with_replacement = false;

  std::size_t shortfall() const {
    if (with_replacement) return (k > 0 && eligible == 0) ? k : 0;
    return k > eligible ? k - eligible : 0;
  }
};

// Throws kValidation for a bad fraction or unknown column and kMode for mode
// violations. Capacity shortfall is reported, not thrown.
Plan plan(const Dataset& dataset, const ContaminationSpec& spec,
          const ContaminationManifest& manifest);

// Dispatches on family and column kind. The returned manifest is sealed.
Contaminated contaminate(const Dataset& dataset, const ContaminationSpec& spec,
                         const ContaminationManifest& manifest);

// Applies specs in order with duplicate specs moved last (stable), recording
// into one manifest.
Contaminated apply_all(const Dataset& dataset, std::span<const ContaminationSpec> specs,
                       const ContaminationManifest& manifest);

// Starting manifest for a clean dataset: schema and null token, no entries.
ContaminationManifest empty_manifest(const Dataset& dataset, std::string null_token = "");

// Renders the dataset with the manifest's null token, stores the resulting
// fingerprint in the manifest and returns the CSV bytes.
std::string seal(Contaminated& result);
// As above, keeping the source bytes of every cell the contamination left
// unchanged. Rows appended by duplication reuse the bytes of their source row.
std::string seal(Contaminated& result, const RawTable& source);

namespace detail {

void validate_fraction(double fraction);
std::size_t require_column(const Dataset& dataset, const std::string& column);
void require_kind(const Dataset& dataset, std::size_t column,
                  std::initializer_list<ColumnKind> kinds, Family family);

using Eligibility = std::function<bool(const Cell&)>;

struct Selection {
  std::size_t column = 0;
  Plan plan;
  std::vector<std::size_t> rows;
  RandomStream stream{0};
};

// Shared selection rule for cell-editing families: k from the mode arithmetic,
// drawn among non-null cells not yet recorded for (scope, family) that pass
// `eligible`.
Selection select_cells(const Dataset& dataset, const ContaminationSpec& spec,
                       const ContaminationManifest& manifest, Family family,
                       const Eligibility& eligible = {});

// Extra per-family eligibility beyond "non-null and not yet recorded".
Eligibility family_eligibility(Family family);

struct DuplicatePlan {
  Plan plan;
  std::size_t original_rows = 0;
  std::vector<std::size_t> pool;  // source rows
};

DuplicatePlan plan_duplicate(const Dataset& dataset, const ContaminationSpec& spec,
                             const ContaminationManifest& manifest);

// Copies the dataset, applies replacements on one column, and records the
// manifest entry with priors.
class CellEditor {
 public:
  CellEditor(const Dataset& dataset, const ContaminationSpec& spec, Selection& selection);

  const Cell& current(std::size_t row) const;
  void replace(std::size_t row, Cell value);
  nlohmann::json& params() { return entry_.params; }

  Contaminated finish(const ContaminationManifest& manifest) &&;

 private:
  Dataset dataset_;
  std::size_t column_;
  std::size_t reference_rows_;
  ManifestEntry entry_;
};

}  // namespace detail
}  // namespace blemish
