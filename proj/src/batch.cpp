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

#include "blemish/batch.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <set>
#include <thread>

#include "blemish/csv.hpp"
#include "blemish/error.hpp"

namespace blemish {
namespace {

using Json = nlohmann::json;

const Json& require(const Json& object, const char* key) {
  if (!object.contains(key)) {
    throw Error(ErrorKind::kValidation, std::string("batch config: missing '") + key + "'");
  }
  return object.at(key);
}

template <typename T>
T get_as(const Json& value, const std::string& what) {
  try {
    return value.get<T>();
  } catch (const Json::exception&) {
    throw Error(ErrorKind::kValidation, "batch config: '" + what + "' has wrong type");
  }
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  return path.is_absolute() ? path : base / path;
}

std::string sanitize(std::string token) {
  for (char& c : token) {
    if (c == '/' || c == '\\' || c == ' ' || c == ':') c = '_';
  }
  return token;
}

}  // namespace

std::string fraction_token(double fraction) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, fraction);
  return std::string(buf, ptr);
}

BatchConfig parse_batch_config(const Json& json, const std::filesystem::path& base_dir) {
  if (!json.is_object()) throw Error(ErrorKind::kValidation, "batch config must be a JSON object");
  BatchConfig config;
  config.input = resolve(base_dir, get_as<std::string>(require(json, "input"), "input"));
  config.out_dir = resolve(base_dir, get_as<std::string>(require(json, "out_dir"), "out_dir"));
  config.seed = get_as<std::uint64_t>(require(json, "seed"), "seed");
  if (json.contains("null_token")) config.null_token = get_as<std::string>(json["null_token"], "null_token");
  if (json.contains("schema") && !json["schema"].is_null()) {
    config.schema = resolve(base_dir, get_as<std::string>(json["schema"], "schema"));
  }
  if (json.contains("label_column")) {
    config.label_column = get_as<std::string>(json["label_column"], "label_column");
  }
  const auto& grid = require(json, "grid");
  if (!grid.is_array()) throw Error(ErrorKind::kValidation, "batch config: 'grid' must be an array");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& item = grid[i];
    const std::string where = "grid[" + std::to_string(i) + "]";
    if (!item.is_object()) throw Error(ErrorKind::kValidation, "batch config: " + where + " must be an object");
    GridCell cell;
    const auto tag = get_as<std::string>(require(item, "family"), where + ".family");
    const auto family = parse_family(tag);
    if (!family) throw Error(ErrorKind::kValidation, "batch config: unknown family '" + tag + "'");
    cell.family = *family;
    cell.fraction = get_as<double>(require(item, "fraction"), where + ".fraction");
    if (item.contains("columns")) {
      const auto& columns = item["columns"];
      if (columns.is_string() && columns.get<std::string>() == "all-features") {
        cell.all_features = true;
      } else {
        cell.columns = get_as<std::vector<std::string>>(columns, where + ".columns");
      }
    }
    if (item.contains("params")) {
      if (!item["params"].is_object()) {
        throw Error(ErrorKind::kValidation, "batch config: " + where + ".params must be an object");
      }
      cell.params = item["params"];
    }
    if (item.contains("mode")) {
      const auto text = get_as<std::string>(item["mode"], where + ".mode");
      const auto mode = parse_mode(text);
      if (!mode) throw Error(ErrorKind::kValidation, "batch config: unknown mode '" + text + "'");
      cell.mode = *mode;
    }
    config.grid.push_back(std::move(cell));
  }
  return config;
}

BatchConfig load_batch_config(const std::filesystem::path& path) {
  Json json;
  try {
    json = Json::parse(read_file(path));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kParse, "batch config '" + path.string() + "': " + e.what());
  }
  return parse_batch_config(json, path.parent_path());
}

std::vector<BatchJob> expand_grid(const BatchConfig& config, const Dataset& dataset) {
  std::vector<BatchJob> jobs;
  auto add = [&](const GridCell& cell, const std::string& column, const std::string& token) {
    BatchJob job;
    job.spec.family = cell.family;
    job.spec.column = column;
    job.spec.mode = cell.mode;
    job.spec.fraction = cell.fraction;
    job.spec.seed = config.seed;
    job.spec.params = cell.params;
    job.column_token = token;
    job.stem = std::string(to_string(cell.family)) + "_" + sanitize(token) + "_" +
               fraction_token(cell.fraction);
    jobs.push_back(std::move(job));
  };
  for (const auto& cell : config.grid) {
    if (cell.family == Family::kLabel) {
      add(cell, config.label_column, config.label_column.empty() ? "label" : config.label_column);
      continue;
    }
    std::vector<std::string> columns = cell.columns;
    if (cell.all_features) {
      columns.clear();
      for (const auto& name : dataset.column_names()) {
        if (name != config.label_column) columns.push_back(name);
      }
    }
    if (cell.family == Family::kDuplicate && columns.empty()) {
      add(cell, "", "dataset");
      continue;
    }
    for (const auto& column : columns) add(cell, column, column);
  }
  return jobs;
}

Json index_to_json(const std::vector<IndexEntry>& outputs) {
  Json out = Json::array();
  for (const auto& e : outputs) {
    out.push_back({{"family", e.family},
                   {"column", e.column},
                   {"fraction", e.fraction},
                   {"csv_path", e.csv_path},
                   {"manifest_path", e.manifest_path}});
  }
  return out;
}

BatchOutcome run_batch(const BatchConfig& config, unsigned threads) {
  ReadOptions options;
  options.null_token = config.null_token;
  if (config.schema) options.overrides = load_schema_overrides(*config.schema);
  const std::string input_bytes = read_file(config.input);
  const RawTable source = parse_csv_text(input_bytes);
  const Dataset dataset = parse_dataset(input_bytes, options);
  const auto jobs = expand_grid(config, dataset);

  std::error_code ec;
  std::filesystem::create_directories(config.out_dir, ec);
  if (ec) throw Error(ErrorKind::kIo, "cannot create '" + config.out_dir.string() + "': " + ec.message());

  std::vector<std::optional<IndexEntry>> done(jobs.size());
  std::vector<std::optional<std::string>> failed(jobs.size());
  std::set<std::string> stems;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (!stems.insert(jobs[i].stem).second) failed[i] = "output name collides with an earlier grid cell";
  }

  const auto base = empty_manifest(dataset, config.null_token);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      if (failed[i]) continue;
      const auto& job = jobs[i];
      try {
        Contaminated result = contaminate(dataset, job.spec, base);
        const std::string bytes = seal(result, source);
        const std::string csv_name = job.stem + ".csv";
        const std::string manifest_name = job.stem + ".manifest.json";
        write_file(config.out_dir / csv_name, bytes);
        save_manifest(result.manifest, config.out_dir / manifest_name);
        done[i] = IndexEntry{std::string(to_string(job.spec.family)), job.column_token,
                             job.spec.fraction, csv_name, manifest_name};
      } catch (const Error& e) {
        failed[i] = std::string(to_string(e.kind())) + ": " + e.what();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, jobs.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  BatchOutcome outcome;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (done[i]) outcome.outputs.push_back(*done[i]);
    if (failed[i]) outcome.failures.push_back({jobs[i].stem, *failed[i]});
  }
  write_file(config.out_dir / "index.json", index_to_json(outcome.outputs).dump(2) + "\n");
  return outcome;
}

}  // namespace blemish
