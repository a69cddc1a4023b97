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

#include "blemish/manifest.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "blemish/error.hpp"
#include "blemish/sha256.hpp"

namespace blemish {
namespace {

constexpr int kFormatVersion = 1;
constexpr double kFractionTolerance = 1e-12;

using Json = nlohmann::json;

std::string entry_label(std::size_t index, const ManifestEntry& entry) {
  return "entry " + std::to_string(index) + " (" + std::string(to_string(entry.family)) + ", " +
         describe(entry.scope) + ")";
}

std::string key_of(const Scope& scope, Family family) {
  return (scope.column ? "c:" + *scope.column : std::string("d:")) + "/" +
         std::string(to_string(family));
}

Cell prior_cell(const PriorValue& prior, const ColumnSchema& schema) {
  if (!prior.token) return Null{};
  return parse_cell(*prior.token, schema);
}

// Restores one entry's priors (or removes its appended rows) in place.
void undo_entry(Dataset& work, const ManifestEntry& entry) {
  if (entry.family == Family::kDuplicate) {
    if (!entry.rows.empty()) work.truncate(entry.rows.front());
    return;
  }
  const auto column = edited_column(entry);
  if (!column) return;
  const std::size_t c = work.column_index(*column);
  const auto& schema = work.column(c).schema;
  for (const auto& prior : entry.original_values) {
    if (prior.row < work.row_count()) work.set_cell(prior.row, c, prior_cell(prior, schema));
  }
}

const Json& require(const Json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) {
    throw Error(ErrorKind::kParse, std::string("manifest: missing field '") + key + "'");
  }
  return object.at(key);
}

template <typename T>
T get_as(const Json& value, const char* what) {
  try {
    return value.get<T>();
  } catch (const Json::exception&) {
    throw Error(ErrorKind::kParse, std::string("manifest: field '") + what + "' has wrong type");
  }
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::kMissing: return "missing";
    case Family::kNoise: return "noise";
    case Family::kOutlier: return "outlier";
    case Family::kLabel: return "label";
    case Family::kDuplicate: return "duplicate";
    case Family::kBoolean: return "boolean";
    case Family::kDatetimeShift: return "datetime-shift";
    case Family::kDatetimeMisformat: return "datetime-misformat";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view tag) {
  for (auto family : {Family::kMissing, Family::kNoise, Family::kOutlier, Family::kLabel,
                      Family::kDuplicate, Family::kBoolean, Family::kDatetimeShift,
                      Family::kDatetimeMisformat}) {
    if (to_string(family) == tag) return family;
  }
  return std::nullopt;
}

bool is_dataset_scoped(Family family) {
  return family == Family::kLabel || family == Family::kDuplicate;
}

std::string_view to_string(Mode mode) { return mode == Mode::kNew ? "new" : "extended"; }

std::optional<Mode> parse_mode(std::string_view text) {
  if (text == "new") return Mode::kNew;
  if (text == "extended") return Mode::kExtended;
  return std::nullopt;
}

std::string describe(const Scope& scope) {
  return scope.column ? "column '" + *scope.column + "'" : std::string("dataset");
}

std::optional<std::string> edited_column(const ManifestEntry& entry) {
  if (entry.family == Family::kDuplicate) return std::nullopt;
  if (entry.scope.column) return entry.scope.column;
  if (entry.family == Family::kLabel && entry.params.contains("label_column") &&
      entry.params["label_column"].is_string()) {
    return entry.params["label_column"].get<std::string>();
  }
  return std::nullopt;
}

Fingerprint fingerprint_of(const Dataset& dataset, std::string_view csv_bytes) {
  return Fingerprint{dataset.row_count(), dataset.column_names(), sha256_hex(csv_bytes)};
}

SchemaMap schema_of(const Dataset& dataset) {
  SchemaMap out;
  for (const auto& column : dataset.columns()) out.emplace(column.name, column.schema);
  return out;
}

std::size_t round_half_up_count(double fraction, std::size_t n) {
  return static_cast<std::size_t>(std::floor(fraction * static_cast<double>(n) + 0.5 + 1e-9));
}

std::size_t target_additional_count(std::size_t n_rows, std::size_t existing,
                                    double target_fraction) {
  if (!(target_fraction > 0.0 && target_fraction <= 1.0)) {
    throw Error(ErrorKind::kValidation, "fraction must be in (0, 1]");
  }
  if (existing > n_rows) {
    throw Error(ErrorKind::kIntegrity, "existing contamination exceeds row count");
  }
  const std::size_t target = round_half_up_count(target_fraction, n_rows);
  if (target < existing) {
    throw Error(ErrorKind::kMode, "target below existing contamination: target " +
                                      std::to_string(target) + " rows, already " +
                                      std::to_string(existing));
  }
  return target - existing;
}

ContaminationManifest record(ContaminationManifest manifest, ManifestEntry entry) {
  if (!std::is_sorted(entry.rows.begin(), entry.rows.end()) ||
      std::adjacent_find(entry.rows.begin(), entry.rows.end()) != entry.rows.end()) {
    throw Error(ErrorKind::kIntegrity, "entry rows must be sorted and duplicate-free");
  }
  const auto existing = contaminated_rows(manifest, entry.scope, entry.family);
  std::vector<std::size_t> overlap;
  std::set_intersection(existing.begin(), existing.end(), entry.rows.begin(), entry.rows.end(),
                        std::back_inserter(overlap));
  if (!overlap.empty()) {
    throw Error(ErrorKind::kIntegrity,
                "row " + std::to_string(overlap.front()) + " already recorded for (" +
                    describe(entry.scope) + ", " + std::string(to_string(entry.family)) + ")");
  }
  manifest.entries.push_back(std::move(entry));
  return manifest;
}

std::vector<std::size_t> contaminated_rows(const ContaminationManifest& manifest,
                                           const Scope& scope, Family family) {
  std::vector<std::size_t> out;
  for (const auto& entry : manifest.entries) {
    if (entry.family == family && entry.scope == scope) {
      out.insert(out.end(), entry.rows.begin(), entry.rows.end());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VerifyReport verify(const Dataset& dataset, const Fingerprint& actual,
                    const ContaminationManifest& manifest) {
  VerifyReport report;
  report.rows_match = actual.rows == manifest.fingerprint.rows;
  report.columns_match = actual.columns == manifest.fingerprint.columns;
  report.hash_match = actual.sha256 == manifest.fingerprint.sha256;
  if (!report.rows_match) {
    report.violations.push_back("fingerprint: row count " + std::to_string(actual.rows) +
                                " != recorded " + std::to_string(manifest.fingerprint.rows));
  }
  if (!report.columns_match) report.violations.push_back("fingerprint: column names differ");
  if (!report.hash_match) report.violations.push_back("fingerprint: content hash differs");

  for (const auto& column : dataset.columns()) {
    auto it = manifest.schema.find(column.name);
    if (it != manifest.schema.end() && it->second != column.schema) {
      report.violations.push_back("schema of column '" + column.name + "' differs from manifest");
    }
  }

  std::map<std::string, std::set<std::size_t>> seen;
  for (std::size_t i = 0; i < manifest.entries.size(); ++i) {
    const auto& entry = manifest.entries[i];
    if (!std::is_sorted(entry.rows.begin(), entry.rows.end()) ||
        std::adjacent_find(entry.rows.begin(), entry.rows.end()) != entry.rows.end()) {
      report.violations.push_back(entry_label(i, entry) + ": rows not sorted and unique");
    }
    auto& rows = seen[key_of(entry.scope, entry.family)];
    for (std::size_t row : entry.rows) {
      if (!rows.insert(row).second) {
        report.violations.push_back(entry_label(i, entry) + ": row " + std::to_string(row) +
                                    " recorded twice for the same (scope, family)");
      }
    }
  }

  Dataset work = dataset;
  report.entries.resize(manifest.entries.size());
  for (std::size_t i = manifest.entries.size(); i-- > 0;) {
    const auto& entry = manifest.entries[i];
    EntryCheck& check = report.entries[i];
    check.index = i;
    check.family = entry.family;
    check.scope = entry.scope;
    check.rows = entry.rows.size();
    check.recorded_fraction = entry.achieved_fraction;
    const std::size_t before = report.violations.size();
    auto flag = [&](const std::string& message) {
      report.violations.push_back(entry_label(i, entry) + ": " + message);
    };

    if (entry.family == Family::kDuplicate) {
      const std::size_t m = work.row_count();
      const std::size_t k = entry.rows.size();
      bool tail = k <= m;
      for (std::size_t j = 0; tail && j < k; ++j) tail = entry.rows[j] == m - k + j;
      if (!tail) {
        flag("appended rows are not the trailing rows of the dataset");
      } else if (entry.sources.size() != k) {
        flag("sources do not match appended rows");
      } else {
        for (std::size_t j = 0; j < k; ++j) {
          const std::size_t src = entry.sources[j];
          if (src >= m - k) {
            flag("source row " + std::to_string(src) + " is not an original row");
          } else if (work.row(entry.rows[j]) != work.row(src)) {
            flag("appended row " + std::to_string(entry.rows[j]) + " differs from source row " +
                 std::to_string(src));
          }
        }
        work.truncate(m - k);
      }
      const auto reference = entry.params.value("reference_rows", std::size_t{0});
      check.recomputed_fraction =
          reference ? static_cast<double>(k) / static_cast<double>(reference) : 0.0;
    } else {
      const auto column = edited_column(entry);
      const auto c = column ? work.find_column(*column) : std::nullopt;
      if (!c) {
        flag("edited column missing from dataset");
      } else {
        const std::size_t n = work.row_count();
        const auto& schema = work.column(*c).schema;
        std::vector<std::size_t> prior_rows;
        for (const auto& p : entry.original_values) prior_rows.push_back(p.row);
        if (prior_rows != entry.rows) flag("original_values do not cover exactly the recorded rows");
        const bool degenerate = entry.params.value("degenerate", false);
        for (const auto& prior : entry.original_values) {
          if (prior.row >= n) {
            flag("row " + std::to_string(prior.row) + " beyond row count " + std::to_string(n));
            continue;
          }
          const Cell& current = work.cell(prior.row, *c);
          Cell original;
          try {
            original = prior_cell(prior, schema);
          } catch (const Error&) {
            flag("prior value of row " + std::to_string(prior.row) + " does not parse");
            continue;
          }
          const std::string where = "row " + std::to_string(prior.row);
          switch (entry.family) {
            case Family::kMissing:
              if (!is_null(current)) flag(where + " should be null");
              break;
            case Family::kDatetimeMisformat: {
              const auto* ts = std::get_if<Timestamp>(&current);
              if (!ts || !ts->alternate) flag(where + " is not in the alternate format");
              break;
            }
            default:
              if (!(entry.family == Family::kNoise && degenerate) && current == original) {
                flag(where + " equals its prior value");
              }
              break;
          }
          work.set_cell(prior.row, *c, std::move(original));
        }
        check.recomputed_fraction =
            n ? static_cast<double>(entry.rows.size()) / static_cast<double>(n) : 0.0;
      }
    }
    if (std::abs(check.recomputed_fraction - check.recorded_fraction) > kFractionTolerance) {
      flag("achieved_fraction " + std::to_string(check.recorded_fraction) + " != recomputed " +
           std::to_string(check.recomputed_fraction));
    }
    check.violations = report.violations.size() - before;
  }
  return report;
}

VerifyReport verify(const Dataset& dataset, const ContaminationManifest& manifest) {
  return verify(dataset, fingerprint_of(dataset, render_csv(dataset, manifest.null_token)),
                manifest);
}

Dataset reconstruct_original(const Dataset& dataset, const ContaminationManifest& manifest) {
  Dataset work = dataset;
  for (auto it = manifest.entries.rbegin(); it != manifest.entries.rend(); ++it) {
    undo_entry(work, *it);
  }
  return work;
}

std::vector<Cell> original_column(const Dataset& dataset, const ContaminationManifest& manifest,
                                  std::string_view column) {
  const auto& source = dataset.column(column);
  std::vector<Cell> cells = source.cells;
  for (auto it = manifest.entries.rbegin(); it != manifest.entries.rend(); ++it) {
    if (it->family == Family::kDuplicate) {
      if (!it->rows.empty() && it->rows.front() < cells.size()) cells.resize(it->rows.front());
      continue;
    }
    if (edited_column(*it) != std::optional<std::string>(std::string(column))) continue;
    for (const auto& prior : it->original_values) {
      if (prior.row < cells.size()) cells[prior.row] = prior_cell(prior, source.schema);
    }
  }
  return cells;
}

Json to_json(const ContaminationManifest& manifest) {
  Json schema = Json::object();
  for (const auto& [name, s] : manifest.schema) {
    Json entry = {{"kind", std::string(to_string(s.kind))}};
    if (s.kind == ColumnKind::kDatetime) entry["datetime_format"] = s.datetime_format;
    schema[name] = std::move(entry);
  }
  Json entries = Json::array();
  for (const auto& e : manifest.entries) {
    Json originals = Json::array();
    for (const auto& p : e.original_values) {
      originals.push_back(Json::array({p.row, p.token ? Json(*p.token) : Json(nullptr)}));
    }
    Json entry = {
        {"family", std::string(to_string(e.family))},
        {"scope", e.scope.is_dataset() ? "dataset" : "column"},
        {"rows", e.rows},
        {"achieved_fraction", e.achieved_fraction},
        {"seed", e.seed},
        {"params", e.params},
        {"original_values", std::move(originals)},
    };
    if (e.scope.column) entry["column"] = *e.scope.column;
    if (e.family == Family::kDuplicate) entry["sources"] = e.sources;
    entries.push_back(std::move(entry));
  }
  return Json{
      {"format_version", kFormatVersion},
      {"fingerprint",
       {{"rows", manifest.fingerprint.rows},
        {"columns", manifest.fingerprint.columns},
        {"sha256", manifest.fingerprint.sha256}}},
      {"null_token", manifest.null_token},
      {"schema", std::move(schema)},
      {"entries", std::move(entries)},
  };
}

ContaminationManifest manifest_from_json(const Json& json) {
  ContaminationManifest m;
  const auto& fp = require(json, "fingerprint");
  m.fingerprint.rows = get_as<std::size_t>(require(fp, "rows"), "fingerprint.rows");
  m.fingerprint.columns =
      get_as<std::vector<std::string>>(require(fp, "columns"), "fingerprint.columns");
  m.fingerprint.sha256 = get_as<std::string>(require(fp, "sha256"), "fingerprint.sha256");
  if (json.contains("null_token")) m.null_token = get_as<std::string>(json["null_token"], "null_token");
  if (json.contains("schema")) {
    const auto& schema = json["schema"];
    if (!schema.is_object()) throw Error(ErrorKind::kParse, "manifest: schema must be an object");
    for (const auto& [name, value] : schema.items()) {
      const auto kind_text = get_as<std::string>(require(value, "kind"), "schema.kind");
      const auto kind = parse_column_kind(kind_text);
      if (!kind) throw Error(ErrorKind::kParse, "manifest: unknown column kind '" + kind_text + "'");
      ColumnSchema s = ColumnSchema::of(*kind);
      if (*kind == ColumnKind::kDatetime) {
        s.datetime_format =
            get_as<std::string>(require(value, "datetime_format"), "schema.datetime_format");
      }
      m.schema.emplace(name, std::move(s));
    }
  }
  const auto& entries = require(json, "entries");
  if (!entries.is_array()) throw Error(ErrorKind::kParse, "manifest: entries must be an array");
  for (const auto& e : entries) {
    ManifestEntry entry;
    const auto tag = get_as<std::string>(require(e, "family"), "family");
    const auto family = parse_family(tag);
    if (!family) throw Error(ErrorKind::kParse, "manifest: unknown family '" + tag + "'");
    entry.family = *family;
    const auto scope = get_as<std::string>(require(e, "scope"), "scope");
    if (scope == "column") {
      entry.scope = Scope::of_column(get_as<std::string>(require(e, "column"), "column"));
    } else if (scope != "dataset") {
      throw Error(ErrorKind::kParse, "manifest: unknown scope '" + scope + "'");
    }
    entry.rows = get_as<std::vector<std::size_t>>(require(e, "rows"), "rows");
    entry.achieved_fraction = get_as<double>(require(e, "achieved_fraction"), "achieved_fraction");
    entry.seed = get_as<std::uint64_t>(require(e, "seed"), "seed");
    if (e.contains("params")) entry.params = e["params"];
    if (e.contains("original_values")) {
      for (const auto& pair : e["original_values"]) {
        if (!pair.is_array() || pair.size() != 2) {
          throw Error(ErrorKind::kParse, "manifest: original_values items must be [row, value]");
        }
        PriorValue prior;
        prior.row = get_as<std::size_t>(pair[0], "original_values.row");
        if (!pair[1].is_null()) prior.token = get_as<std::string>(pair[1], "original_values.value");
        entry.original_values.push_back(std::move(prior));
      }
    }
    if (e.contains("sources")) entry.sources = get_as<std::vector<std::size_t>>(e["sources"], "sources");
    m.entries.push_back(std::move(entry));
  }
  return m;
}

std::string dump_manifest(const ContaminationManifest& manifest) {
  return to_json(manifest).dump(2) + "\n";
}

ContaminationManifest load_manifest(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  Json json;
  try {
    json = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kParse, "manifest '" + path.string() + "': " + e.what());
  }
  return manifest_from_json(json);
}

void save_manifest(const ContaminationManifest& manifest, const std::filesystem::path& path) {
  write_file(path, dump_manifest(manifest));
}

}  // namespace blemish
