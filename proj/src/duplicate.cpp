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

#include "blemish/duplicate.hpp"

#include <numeric>

#include "blemish/csv.hpp"
#include "blemish/error.hpp"

namespace blemish {
namespace {

std::optional<std::string> target_token(const nlohmann::json& params) {
  if (!params.is_object() || !params.contains("value")) return std::nullopt;
  const auto& value = params["value"];
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

}  // namespace

namespace detail {

DuplicatePlan plan_duplicate(const Dataset& dataset, const ContaminationSpec& spec,
                             const ContaminationManifest& manifest) {
  validate_fraction(spec.fraction);
  std::vector<const ManifestEntry*> prior;
  for (const auto& entry : manifest.entries) {
    if (entry.family == Family::kDuplicate) prior.push_back(&entry);
  }
  if (spec.mode == Mode::kNew && !prior.empty()) {
    throw Error(ErrorKind::kMode,
                "mode=new but duplicates are already recorded; use extended mode");
  }

  const bool targeted = !spec.column.empty();
  const auto token = target_token(spec.params);
  if (targeted && !token) {
    throw Error(ErrorKind::kValidation, "targeted duplication needs a value");
  }
  if (!prior.empty()) {
    const auto& first = prior.front()->params;
    const std::string recorded_column = first.value("target_column", "");
    const std::string recorded_value = first.value("target_value", "");
    if (recorded_column != spec.column || (targeted && recorded_value != *token)) {
      throw Error(ErrorKind::kMode, "duplicate target differs from the recorded one");
    }
  }

  DuplicatePlan out;
  out.original_rows = prior.empty() ? dataset.row_count()
                                    : prior.front()->params.value("original_rows", std::size_t{0});
  if (out.original_rows == 0 || out.original_rows > dataset.row_count()) {
    throw Error(ErrorKind::kCapacity, "cannot duplicate rows of an empty dataset");
  }

  if (targeted) {
    const std::size_t c = require_column(dataset, spec.column);
    std::optional<Cell> wanted;
    try {
      wanted = parse_cell(*token, dataset.column(c).schema);
    } catch (const Error&) {
    }
    for (std::size_t r = 0; wanted && r < out.original_rows; ++r) {
      if (dataset.cell(r, c) == *wanted) out.pool.push_back(r);
    }
    if (out.pool.empty()) {
      throw Error(ErrorKind::kEmptyTarget,
                  "no rows with " + spec.column + " = '" + *token + "'");
    }
  } else {
    out.pool.resize(out.original_rows);
    std::iota(out.pool.begin(), out.pool.end(), std::size_t{0});
  }

  Plan& p = out.plan;
  p.family = Family::kDuplicate;
  p.scope = Scope::dataset();
  p.mode = spec.mode;
  p.n_rows = dataset.row_count();
  p.reference_rows = prior.empty() ? out.pool.size()
                                   : prior.front()->params.value("reference_rows", std::size_t{0});
  for (const auto* entry : prior) p.existing += entry->rows.size();
  p.k = target_additional_count(p.reference_rows, p.existing, spec.fraction);
  p.target_total = p.existing + p.k;
  p.eligible = out.pool.size();
  p.with_replacement = true;
  return out;
}

}  // namespace detail

Contaminated duplicate_rows(const Dataset& dataset, const ContaminationSpec& spec,
                            const ContaminationManifest& manifest) {
  const auto dp = detail::plan_duplicate(dataset, spec, manifest);
  auto stream = derive_substream(spec.seed, spec.column, to_string(Family::kDuplicate));

  Dataset out = dataset;
  ManifestEntry entry;
  entry.scope = Scope::dataset();
  entry.family = Family::kDuplicate;
  entry.seed = spec.seed;
  entry.params = spec.params.is_object() ? spec.params : nlohmann::json::object();
  entry.params.erase("value");
  entry.params["mode"] = std::string(to_string(spec.mode));
  entry.params["fraction"] = spec.fraction;
  entry.params["original_rows"] = dp.original_rows;
  entry.params["reference_rows"] = dp.plan.reference_rows;
  if (!spec.column.empty()) {
    entry.params["target_column"] = spec.column;
    entry.params["target_value"] = *target_token(spec.params);
  }
  const std::size_t n = dataset.row_count();
  for (std::size_t j = 0; j < dp.plan.k; ++j) {
    const std::size_t source = dp.pool[stream.uniform_index(dp.pool.size())];
    out.append_row(dataset.row(source));
    entry.rows.push_back(n + j);
    entry.sources.push_back(source);
  }
  entry.achieved_fraction =
      static_cast<double>(dp.plan.k) / static_cast<double>(dp.plan.reference_rows);
  return Contaminated{std::move(out), record(manifest, std::move(entry))};
}

Contaminated duplicate_random(const Dataset& dataset, const ContaminationSpec& spec,
                              const ContaminationManifest& manifest) {
  ContaminationSpec random = spec;
  random.column.clear();
  return duplicate_rows(dataset, random, manifest);
}

Contaminated duplicate_targeted(const Dataset& dataset, const ContaminationSpec& spec,
                                const ContaminationManifest& manifest) {
  if (spec.column.empty()) {
    throw Error(ErrorKind::kValidation, "targeted duplication needs a column");
  }
  return duplicate_rows(dataset, spec, manifest);
}

}  // namespace blemish
