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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "blemish/csv.hpp"
#include "blemish/dataset.hpp"

namespace blemish {

enum class Family {
  kMissing,
  kNoise,
  kOutlier,
  kLabel,
  kDuplicate,
  kBoolean,
  kDatetimeShift,
  kDatetimeMisformat,
};

std::string_view to_string(Family family);
std::optional<Family> parse_family(std::string_view tag);
bool is_dataset_scoped(Family family);

enum class Mode { kNew, kExtended };

std::string_view to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view text);

// A column name, or the whole dataset.
struct Scope {
  std::optional<std::string> column;

  static Scope dataset() { return {}; }
  static Scope of_column(std::string name) { return Scope{std::move(name)}; }
  bool is_dataset() const { return !column.has_value(); }

  friend bool operator==(const Scope&, const Scope&) = default;
};

std::string describe(const Scope& scope);

struct PriorValue {
  std::size_t row = 0;
  std::optional<std::string> token;  // CSV rendering; nullopt for null

  friend bool operator==(const PriorValue&, const PriorValue&) = default;
};

struct ManifestEntry {
  Scope scope;
  Family family = Family::kMissing;
  std::vector<std::size_t> rows;  // sorted, unique
  double achieved_fraction = 0.0;
  std::uint64_t seed = 0;
  nlohmann::json params = nlohmann::json::object();
  std::vector<PriorValue> original_values;
  // Duplicate family only: source row of each appended row, parallel to rows.
  std::vector<std::size_t> sources;

  friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

// Column whose cells the entry edited: the scope column, the label column for
// label entries, nullopt for duplicates.
std::optional<std::string> edited_column(const ManifestEntry& entry);

struct Fingerprint {
  std::size_t rows = 0;
  std::vector<std::string> columns;
  std::string sha256;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint_of(const Dataset& dataset, std::string_view csv_bytes);

struct ContaminationManifest {
  Fingerprint fingerprint;
  std::string null_token;
  SchemaMap schema;
  std::vector<ManifestEntry> entries;

  friend bool operator==(const ContaminationManifest&, const ContaminationManifest&) = default;
};

SchemaMap schema_of(const Dataset& dataset);

// floor(fraction * n + 1/2), with a 1e-9 allowance for binary representation
// error so that e.g. 0.15 * 10 gives 2.
std::size_t round_half_up_count(double fraction, std::size_t n);

// Rows still to contaminate to reach target_fraction of n_rows. Throws kMode
// when the target is below what is already recorded.
std::size_t target_additional_count(std::size_t n_rows, std::size_t existing,
                                    double target_fraction);

// Appends the entry. Throws kIntegrity when rows are unsorted, repeated, or
// overlap rows already recorded for the same (scope, family).
ContaminationManifest record(ContaminationManifest manifest, ManifestEntry entry);

std::vector<std::size_t> contaminated_rows(const ContaminationManifest& manifest,
                                           const Scope& scope, Family family);

struct EntryCheck {
  std::size_t index = 0;
  Family family = Family::kMissing;
  Scope scope;
  std::size_t rows = 0;
  double recorded_fraction = 0.0;
  double recomputed_fraction = 0.0;
  std::size_t violations = 0;
};

struct VerifyReport {
  bool rows_match = false;
  bool columns_match = false;
  bool hash_match = false;
  std::vector<EntryCheck> entries;
  std::vector<std::string> violations;

  bool fingerprint_match() const { return rows_match && columns_match && hash_match; }
  // Row count or column names differ: the manifest describes another file.
  bool shape_mismatch() const { return !rows_match || !columns_match; }
  bool pass() const { return fingerprint_match() && violations.empty(); }
};

// Replays the manifest backwards over the dataset: each entry's rows must show
// that family's effect (null for missing, changed from the prior otherwise,
// alternate rendering for misformat, exact copies for duplicates) before the
// prior values are restored for the next older entry.
VerifyReport verify(const Dataset& dataset, const Fingerprint& actual,
                    const ContaminationManifest& manifest);
// Fingerprints the dataset by rendering it with the manifest's null token.
VerifyReport verify(const Dataset& dataset, const ContaminationManifest& manifest);

// Undoes every entry, yielding the dataset as it was before contamination.
Dataset reconstruct_original(const Dataset& dataset, const ContaminationManifest& manifest);
// Same for one column only.
std::vector<Cell> original_column(const Dataset& dataset,
                                  const ContaminationManifest& manifest,
                                  std::string_view column);

nlohmann::json to_json(const ContaminationManifest& manifest);
ContaminationManifest manifest_from_json(const nlohmann::json& json);
// Canonical rendering: sorted keys, two-space indent, trailing newline.
std::string dump_manifest(const ContaminationManifest& manifest);
ContaminationManifest load_manifest(const std::filesystem::path& path);
void save_manifest(const ContaminationManifest& manifest, const std::filesystem::path& path);

}  // namespace blemish
