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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "blemish/engine.hpp"

namespace blemish {

struct GridCell {
  Family family = Family::kMissing;
  std::vector<std::string> columns;
  bool all_features = false;
  double fraction = 0.0;
  Mode mode = Mode::kNew;
  nlohmann::json params = nlohmann::json::object();
};

struct BatchConfig {
  std::filesystem::path input;
  std::filesystem::path out_dir;
  std::uint64_t seed = 0;
  std::string null_token;
  std::optional<std::filesystem::path> schema;
  std::string label_column;
  std::vector<GridCell> grid;
};

// Relative paths resolve against base_dir. Throws kParse or kValidation.
BatchConfig parse_batch_config(const nlohmann::json& json,
                               const std::filesystem::path& base_dir);
BatchConfig load_batch_config(const std::filesystem::path& path);

struct BatchJob {
  ContaminationSpec spec;
  std::string column_token;  // column name, label column, or "dataset"
  std::string stem;          // <family>_<column>_<fraction>
};

// "all-features" expands to every column except the label column. Unknown
// columns are kept so that the job fails on its own.
std::vector<BatchJob> expand_grid(const BatchConfig& config, const Dataset& dataset);

// Shortest round-trip decimal, e.g. 0.3 -> "0.3".
std::string fraction_token(double fraction);

struct IndexEntry {
  std::string family;
  std::string column;
  double fraction = 0.0;
  std::string csv_path;
  std::string manifest_path;
};

struct BatchFailure {
  std::string stem;
  std::string message;
};

struct BatchOutcome {
  std::vector<IndexEntry> outputs;
  std::vector<BatchFailure> failures;
};

// Writes one CSV and manifest per job plus index.json into out_dir. Jobs run
// on up to `threads` workers; results do not depend on scheduling.
BatchOutcome run_batch(const BatchConfig& config, unsigned threads = 0);

nlohmann::json index_to_json(const std::vector<IndexEntry>& outputs);

}  // namespace blemish
