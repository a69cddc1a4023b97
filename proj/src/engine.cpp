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

#include "blemish/engine.hpp"

#include <algorithm>

#include "blemish/csv.hpp"
#include "blemish/duplicate.hpp"
#include "blemish/error.hpp"
#include "blemish/label.hpp"
#include "blemish/missing.hpp"
#include "blemish/noise.hpp"
#include "blemish/outlier.hpp"
#include "blemish/temporal.hpp"

namespace blemish {
namespace {

struct Eligible {
  Plan plan;
  std::size_t column = 0;
  std::vector<std::size_t> rows;
};

Eligible eligible_cells(const Dataset& dataset, const ContaminationSpec& spec,
                        const ContaminationManifest& manifest, Family family,
                        const detail::Eligibility& extra) {
  detail::validate_fraction(spec.fraction);
  Eligible out;
  out.column = detail::require_column(dataset, spec.column);
  Plan& p = out.plan;
  p.family = family;
  p.mode = spec.mode;
  p.scope = is_dataset_scoped(family) ? Scope::dataset() : Scope::of_column(spec.column);

  if (family == Family::kLabel) {
    for (const auto& entry : manifest.entries) {
      if (entry.family == Family::kLabel && edited_column(entry) != spec.column) {
        throw Error(ErrorKind::kMode, "label contamination already recorded for column '" +
                                          edited_column(entry).value_or("?") + "'");
      }
    }
  }

  const auto existing = contaminated_rows(manifest, p.scope, family);
  if (spec.mode == Mode::kNew && !existing.empty()) {
    throw Error(ErrorKind::kMode, "mode=new but (" + describe(p.scope) + ", " +
                                      std::string(to_string(family)) +
                                      ") is already contaminated; use extended mode");
  }
  p.n_rows = dataset.row_count();
  p.reference_rows = p.n_rows;
  p.existing = existing.size();
  p.k = target_additional_count(p.n_rows, p.existing, spec.fraction);
  p.target_total = p.existing + p.k;

  const auto& cells = dataset.column(out.column).cells;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    if (is_null(cells[r])) continue;
    if (std::binary_search(existing.begin(), existing.end(), r)) continue;
    if (extra && !extra(cells[r])) continue;
    out.rows.push_back(r);
  }
  p.eligible = out.rows.size();
  return out;
}

}  // namespace

Scope scope_of(const ContaminationSpec& spec) {
  return is_dataset_scoped(spec.family) ? Scope::dataset() : Scope::of_column(spec.column);
}

Plan plan(const Dataset& dataset, const ContaminationSpec& spec,
          const ContaminationManifest& manifest) {
  if (spec.family == Family::kDuplicate) return detail::plan_duplicate(dataset, spec, manifest).plan;
  return eligible_cells(dataset, spec, manifest, spec.family,
                        detail::family_eligibility(spec.family))
      .plan;
}

namespace {

Contaminated dispatch(const Dataset& dataset, const ContaminationSpec& spec,
                      const ContaminationManifest& manifest) {
  switch (spec.family) {
    case Family::kMissing: return inject_missing(dataset, spec, manifest);
    case Family::kNoise: return add_noise(dataset, spec, manifest);
    case Family::kOutlier: return add_outliers(dataset, spec, manifest);
    case Family::kLabel: return flip_labels(dataset, spec, manifest);
    case Family::kDuplicate: return duplicate_rows(dataset, spec, manifest);
    case Family::kBoolean: return invert_boolean(dataset, spec, manifest);
    case Family::kDatetimeShift: return datetime_shift(dataset, spec, manifest);
    case Family::kDatetimeMisformat: return datetime_misformat(dataset, spec, manifest);
  }
  throw Error(ErrorKind::kValidation, "unknown family");
}

}  // namespace

Contaminated contaminate(const Dataset& dataset, const ContaminationSpec& spec,
                         const ContaminationManifest& manifest) {
  Contaminated result;
  try {
    result = dispatch(dataset, spec, manifest);
  } catch (const Error& e) {
    const std::string where = spec.column.empty() ? "dataset" : spec.column;
    throw Error(e.kind(), "[" + std::string(to_string(spec.family)) + ", " + where + "] " + e.what());
  }
  seal(result);
  return result;
}

Contaminated apply_all(const Dataset& dataset, std::span<const ContaminationSpec> specs,
                       const ContaminationManifest& manifest) {
  std::vector<ContaminationSpec> ordered(specs.begin(), specs.end());
  std::stable_partition(ordered.begin(), ordered.end(), [](const ContaminationSpec& s) {
    return s.family != Family::kDuplicate;
  });
  Contaminated state{dataset, manifest};
  for (const auto& spec : ordered) state = contaminate(state.dataset, spec, state.manifest);
  return state;
}

ContaminationManifest empty_manifest(const Dataset& dataset, std::string null_token) {
  ContaminationManifest m;
  m.fingerprint.rows = dataset.row_count();
  m.fingerprint.columns = dataset.column_names();
  m.null_token = std::move(null_token);
  m.schema = schema_of(dataset);
  return m;
}

std::string seal(Contaminated& result) {
  std::string bytes = render_csv(result.dataset, result.manifest.null_token);
  result.manifest.fingerprint = fingerprint_of(result.dataset, bytes);
  result.manifest.schema = schema_of(result.dataset);
  return bytes;
}

std::string seal(Contaminated& result, const RawTable& source) {
  std::vector<std::optional<std::size_t>> origin(result.dataset.row_count());
  for (std::size_t r = 0; r < origin.size() && r < source.rows.size(); ++r) origin[r] = r;
  for (const auto& entry : result.manifest.entries) {
    if (entry.family != Family::kDuplicate) continue;
    for (std::size_t i = 0; i < entry.rows.size() && i < entry.sources.size(); ++i) {
      if (entry.rows[i] < origin.size() && entry.sources[i] < origin.size()) {
        origin[entry.rows[i]] = origin[entry.sources[i]];
      }
    }
  }
  std::string bytes = render_csv(result.dataset, result.manifest.null_token, source, origin);
  result.manifest.fingerprint = fingerprint_of(result.dataset, bytes);
  result.manifest.schema = schema_of(result.dataset);
  return bytes;
}

namespace detail {

void validate_fraction(double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw Error(ErrorKind::kValidation,
                "fraction must be in (0, 1], got " + std::to_string(fraction));
  }
}

std::size_t require_column(const Dataset& dataset, const std::string& column) {
  if (column.empty()) throw Error(ErrorKind::kValidation, "a column is required");
  return dataset.column_index(column);
}

void require_kind(const Dataset& dataset, std::size_t column,
                  std::initializer_list<ColumnKind> kinds, Family family) {
  const auto kind = dataset.column(column).schema.kind;
  if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) {
    throw Error(ErrorKind::kDomain, std::string(to_string(family)) + " does not apply to " +
                                        std::string(to_string(kind)) + " column '" +
                                        dataset.column(column).name + "'");
  }
}

Eligibility family_eligibility(Family family) {
  if (family == Family::kDatetimeMisformat) {
    return [](const Cell& cell) {
      const auto* ts = std::get_if<Timestamp>(&cell);
      return ts && !ts->alternate;
    };
  }
  return {};
}

Selection select_cells(const Dataset& dataset, const ContaminationSpec& spec,
                       const ContaminationManifest& manifest, Family family,
                       const Eligibility& eligible) {
  Eligible candidates = eligible_cells(dataset, spec, manifest, family, eligible);
  Selection selection;
  selection.column = candidates.column;
  selection.plan = candidates.plan;
  if (selection.plan.shortfall() > 0) {
    throw Error(ErrorKind::kCapacity,
                "need " + std::to_string(selection.plan.k) + " rows but only " +
                    std::to_string(selection.plan.eligible) + " are eligible (shortfall " +
                    std::to_string(selection.plan.shortfall()) + ")");
  }
  selection.stream = derive_substream(spec.seed, spec.column, to_string(family));
  selection.rows = sample_from(candidates.rows, selection.plan.k, selection.stream);
  return selection;
}

CellEditor::CellEditor(const Dataset& dataset, const ContaminationSpec& spec,
                       Selection& selection)
    : dataset_(dataset), column_(selection.column), reference_rows_(selection.plan.reference_rows) {
  entry_.scope = selection.plan.scope;
  entry_.family = selection.plan.family;
  entry_.rows = selection.rows;
  entry_.seed = spec.seed;
  entry_.params = spec.params.is_object() ? spec.params : nlohmann::json::object();
  entry_.params["mode"] = std::string(to_string(spec.mode));
  entry_.params["fraction"] = spec.fraction;
  if (entry_.family == Family::kLabel) entry_.params["label_column"] = spec.column;
}

const Cell& CellEditor::current(std::size_t row) const { return dataset_.cell(row, column_); }

void CellEditor::replace(std::size_t row, Cell value) {
  const Cell& prior = dataset_.cell(row, column_);
  PriorValue record_prior{row, std::nullopt};
  if (!is_null(prior)) record_prior.token = render_cell(prior, dataset_.column(column_).schema);
  entry_.original_values.push_back(std::move(record_prior));
  dataset_.set_cell(row, column_, std::move(value));
}

Contaminated CellEditor::finish(const ContaminationManifest& manifest) && {
  if (entry_.original_values.size() != entry_.rows.size()) {
    throw Error(ErrorKind::kIntegrity, "edited cells do not match selected rows");
  }
  entry_.achieved_fraction = reference_rows_ ? static_cast<double>(entry_.rows.size()) /
                                                   static_cast<double>(reference_rows_)
                                             : 0.0;
  return Contaminated{std::move(dataset_), record(manifest, std::move(entry_))};
}

}  // namespace detail
}  // namespace blemish
