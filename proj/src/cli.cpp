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

#include "blemish/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "blemish/batch.hpp"
#include "blemish/csv.hpp"
#include "blemish/engine.hpp"
#include "blemish/error.hpp"
#include "blemish/manifest.hpp"
#include "blemish/sha256.hpp"

namespace blemish::cli {
namespace {

using Json = nlohmann::json;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kValidation:
    case ErrorKind::kParse:
    case ErrorKind::kType:
    case ErrorKind::kInference: return kExitValidation;
    case ErrorKind::kIo: return kExitIo;
    case ErrorKind::kFingerprint: return kExitFingerprint;
    default: return kExitCapacity;
  }
}

struct SpecFlags {
  std::string input;
  std::string output;
  std::string manifest;
  std::string family;
  std::string column;
  std::string label_column;
  std::string value;
  double fraction = 0.0;
  std::string mode = "new";
  std::uint64_t seed = 0;
  std::string schema;
  std::optional<std::string> null_token;
  std::string strategy;
  std::optional<std::int64_t> max_shift_days;
  std::optional<std::int64_t> max_shift_seconds;
  std::vector<std::string> extra_params;
};

void add_spec_flags(CLI::App& cmd, SpecFlags& f, bool with_output) {
  cmd.add_option("--input", f.input, "Input CSV")->required();
  if (with_output) cmd.add_option("--output", f.output, "Contaminated CSV to write")->required();
  cmd.add_option("--manifest", f.manifest, "Manifest sidecar (read if present, then updated)")
      ->required();
  cmd.add_option("--family", f.family,
                 "missing|noise|outlier|label|duplicate|boolean|datetime-shift|datetime-misformat")
      ->required();
  cmd.add_option("--column", f.column, "Target column (targeted duplication: match column)");
  cmd.add_option("--label-column", f.label_column, "Label column for the label family");
  cmd.add_option("--value", f.value, "Match value for targeted duplication");
  cmd.add_option("--fraction", f.fraction, "Target fraction in (0, 1]")->required();
  cmd.add_option("--mode", f.mode, "new|extended")->capture_default_str();
  cmd.add_option("--seed", f.seed, "64-bit seed")->required();
  cmd.add_option("--schema", f.schema, "Schema override JSON");
  cmd.add_option("--null-token", f.null_token, "Token read and written for null cells");
  cmd.add_option("--strategy", f.strategy, "Label strategy: auto|binary|multiclass");
  cmd.add_option("--max-shift-days", f.max_shift_days, "Datetime shift bound in days");
  cmd.add_option("--max-shift-seconds", f.max_shift_seconds, "Datetime shift bound in seconds");
  cmd.add_option("--param", f.extra_params, "Extra family parameter KEY=VALUE");
}

ContaminationSpec build_spec(const SpecFlags& f) {
  ContaminationSpec spec;
  const auto family = parse_family(f.family);
  if (!family) throw Error(ErrorKind::kValidation, "unknown family '" + f.family + "'");
  spec.family = *family;
  const auto mode = parse_mode(f.mode);
  if (!mode) throw Error(ErrorKind::kValidation, "unknown mode '" + f.mode + "'");
  spec.mode = *mode;
  detail::validate_fraction(f.fraction);
  spec.fraction = f.fraction;
  spec.seed = f.seed;

  for (const auto& kv : f.extra_params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorKind::kValidation, "--param expects KEY=VALUE, got '" + kv + "'");
    }
    const std::string key = kv.substr(0, eq);
    const std::string text = kv.substr(eq + 1);
    Json value = Json::parse(text, nullptr, false);
    spec.params[key] = value.is_discarded() ? Json(text) : value;
  }
  if (!f.strategy.empty()) spec.params["strategy"] = f.strategy;
  if (f.max_shift_days) spec.params["max_shift_days"] = *f.max_shift_days;
  if (f.max_shift_seconds) spec.params["max_shift_seconds"] = *f.max_shift_seconds;

  if (spec.family == Family::kLabel) {
    if (!f.column.empty()) {
      throw Error(ErrorKind::kValidation, "label is dataset-scoped; name the label with --label-column");
    }
    if (f.label_column.empty()) throw Error(ErrorKind::kValidation, "label family needs --label-column");
    spec.column = f.label_column;
  } else if (spec.family == Family::kDuplicate) {
    spec.column = f.column;
    if (!f.column.empty() && f.value.empty() && !spec.params.contains("value")) {
      throw Error(ErrorKind::kValidation, "targeted duplication needs --value");
    }
    if (!f.value.empty()) {
      if (f.column.empty()) throw Error(ErrorKind::kValidation, "--value needs --column");
      spec.params["value"] = f.value;
    }
  } else {
    if (f.column.empty()) {
      throw Error(ErrorKind::kValidation, std::string(to_string(spec.family)) + " needs --column");
    }
    spec.column = f.column;
  }
  return spec;
}

struct LoadedInput {
  RawTable source;
  Dataset dataset;
  ContaminationManifest manifest;
};

LoadedInput load_input(const std::string& input, const std::string& manifest_path,
                       const std::string& schema_path, const std::optional<std::string>& null_token) {
  const std::string bytes = read_file(input);
  LoadedInput out;
  if (!manifest_path.empty() && std::filesystem::exists(manifest_path)) {
    out.manifest = load_manifest(manifest_path);
    out.source = parse_csv_text(bytes);
    const Fingerprint& fp = out.manifest.fingerprint;
    if (out.source.rows.size() != fp.rows || out.source.header != fp.columns) {
      throw Error(ErrorKind::kFingerprint, "manifest '" + manifest_path + "' describes a different file");
    }
    if (sha256_hex(bytes) != fp.sha256) {
      throw Error(ErrorKind::kFingerprint,
                  "input content differs from the file recorded in '" + manifest_path + "'");
    }
    ReadOptions options;
    options.overrides = out.manifest.schema;
    options.null_token = out.manifest.null_token;
    out.dataset = parse_dataset(bytes, options);
    return out;
  }
  ReadOptions options;
  options.null_token = null_token.value_or("");
  if (!schema_path.empty()) options.overrides = load_schema_overrides(schema_path);
  out.source = parse_csv_text(bytes);
  out.dataset = parse_dataset(bytes, options);
  out.manifest = empty_manifest(out.dataset, options.null_token);
  return out;
}

void print_error(std::ostream& err, const Error& e) {
  err << "blemish: " << to_string(e.kind()) << ": " << e.what() << "\n";
}

int cmd_contaminate(const SpecFlags& f, std::ostream& out) {
  const ContaminationSpec spec = build_spec(f);
  LoadedInput loaded = load_input(f.input, f.manifest, f.schema, f.null_token);
  Contaminated result = contaminate(loaded.dataset, spec, loaded.manifest);
  const std::string bytes = seal(result, loaded.source);
  write_file(f.output, bytes);
  save_manifest(result.manifest, f.manifest);
  const auto& entry = result.manifest.entries.back();
  out << "family=" << to_string(spec.family) << " scope=" << describe(entry.scope)
      << " rows_touched=" << entry.rows.size() << " row_count=" << result.dataset.row_count()
      << " achieved_fraction=" << entry.achieved_fraction << "\n";
  return kExitOk;
}

int cmd_plan(const SpecFlags& f, std::ostream& out) {
  const ContaminationSpec spec = build_spec(f);
  LoadedInput loaded = load_input(f.input, f.manifest, f.schema, f.null_token);
  const Plan p = plan(loaded.dataset, spec, loaded.manifest);
  out << "family=" << to_string(p.family) << "\n"
      << "scope=" << describe(p.scope) << "\n"
      << "mode=" << to_string(p.mode) << "\n"
      << "rows=" << p.n_rows << "\n"
      << "reference_rows=" << p.reference_rows << "\n"
      << "existing=" << p.existing << "\n"
      << "target_total=" << p.target_total << "\n"
      << "k=" << p.k << "\n";
  if (p.mode == Mode::kExtended) out << "top_up=" << p.k << "\n";
  out << (p.with_replacement ? "source_pool=" : "eligible=") << p.eligible << "\n";
  if (p.shortfall() > 0) {
    out << "shortfall=" << p.shortfall() << "\n";
    return kExitCapacity;
  }
  return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& manifest_path, std::ostream& out) {
  const std::string bytes = read_file(input);
  const ContaminationManifest manifest = load_manifest(manifest_path);
  RawTable raw;
  try {
    raw = parse_csv_text(bytes);
  } catch (const Error& e) {
    out << "violation: input is not readable CSV: " << e.what() << "\nFAIL\n";
    return kExitFailed;
  }
  const Fingerprint actual{raw.rows.size(), raw.header, sha256_hex(bytes)};
  const bool shape_ok = actual.rows == manifest.fingerprint.rows &&
                        actual.columns == manifest.fingerprint.columns;
  out << "fingerprint rows: " << (actual.rows == manifest.fingerprint.rows ? "match" : "MISMATCH")
      << "\nfingerprint columns: "
      << (actual.columns == manifest.fingerprint.columns ? "match" : "MISMATCH")
      << "\nfingerprint sha256: " << (actual.sha256 == manifest.fingerprint.sha256 ? "match" : "MISMATCH")
      << "\n";
  if (!shape_ok) {
    out << "FAIL (manifest describes a different file)\n";
    return kExitFingerprint;
  }
  Dataset dataset;
  try {
    ReadOptions options;
    options.overrides = manifest.schema;
    options.null_token = manifest.null_token;
    dataset = parse_dataset(bytes, options);
  } catch (const Error& e) {
    out << "violation: " << e.what() << "\nFAIL\n";
    return kExitFailed;
  }
  const VerifyReport report = verify(dataset, actual, manifest);
  for (const auto& check : report.entries) {
    out << "entry " << check.index << " " << to_string(check.family) << " " << describe(check.scope)
        << " rows=" << check.rows << " fraction=" << check.recorded_fraction
        << " recomputed=" << check.recomputed_fraction << " "
        << (check.violations ? "VIOLATION" : "ok") << "\n";
  }
  for (const auto& v : report.violations) out << "violation: " << v << "\n";
  out << (report.pass() ? "PASS" : "FAIL") << "\n";
  return report.pass() ? kExitOk : kExitFailed;
}

Json stats_json(const Column& column, std::size_t rows) {
  Json j = {{"kind", std::string(to_string(column.schema.kind))}, {"rows", rows}};
  try {
    const ColumnStats stats = compute_stats(column.cells, column.schema);
    j["null_count"] = stats.null_count;
    j["null_fraction"] = rows ? static_cast<double>(stats.null_count) / static_cast<double>(rows) : 0.0;
    j["distinct_count"] = stats.distinct.size();
    if (stats.numeric) {
      j["min"] = stats.numeric->min;
      j["max"] = stats.numeric->max;
      j["mean"] = stats.numeric->mean;
      j["std"] = stats.numeric->std;
    }
  } catch (const Error& e) {
    j["error"] = std::string(to_string(e.kind())) + ": " + e.what();
    j["null_count"] = rows;
    j["null_fraction"] = rows ? 1.0 : 0.0;
  }
  return j;
}

int cmd_stats(const std::string& input, const std::string& column, bool as_json,
              const std::string& schema_path, const std::optional<std::string>& null_token,
              std::ostream& out, std::ostream& err) {
  ReadOptions options;
  options.null_token = null_token.value_or("");
  options.all_null_fallback = ColumnSchema::of(ColumnKind::kCategoricalString);
  if (!schema_path.empty()) options.overrides = load_schema_overrides(schema_path);
  const Dataset dataset = read_csv(input, options);

  std::vector<const Column*> selected;
  if (column.empty()) {
    for (const auto& c : dataset.columns()) selected.push_back(&c);
  } else {
    selected.push_back(&dataset.column(column));
  }
  Json doc = Json::object();
  bool failed = false;
  for (const Column* c : selected) {
    doc[c->name] = stats_json(*c, dataset.row_count());
    if (doc[c->name].contains("error")) {
      failed = true;
      err << "blemish: column '" << c->name << "': " << doc[c->name]["error"].get<std::string>() << "\n";
    }
  }
  if (as_json) {
    out << doc.dump(2) << "\n";
  } else {
    out << std::left << std::setw(24) << "column" << std::setw(20) << "kind" << std::setw(8) << "nulls"
        << std::setw(10) << "null_frac" << std::setw(10) << "distinct" << std::setw(14) << "min"
        << std::setw(14) << "max" << std::setw(14) << "mean" << "std\n";
    for (const Column* c : selected) {
      const Json& j = doc[c->name];
      out << std::setw(24) << c->name << std::setw(20) << j["kind"].get<std::string>() << std::setw(8)
          << j["null_count"].get<std::size_t>() << std::setw(10)
          << std::setprecision(4) << j["null_fraction"].get<double>();
      if (j.contains("error")) {
        out << "error: " << j["error"].get<std::string>() << "\n";
        continue;
      }
      out << std::setw(10) << j["distinct_count"].get<std::size_t>();
      if (j.contains("min")) {
        out << std::setprecision(6) << std::setw(14) << j["min"].get<double>() << std::setw(14)
            << j["max"].get<double>() << std::setw(14) << j["mean"].get<double>()
            << j["std"].get<double>();
      }
      out << "\n";
    }
  }
  return (failed && !column.empty()) ? kExitCapacity : kExitOk;
}

int cmd_batch(const std::string& config_path, unsigned threads, std::ostream& out, std::ostream& err) {
  const BatchConfig config = load_batch_config(config_path);
  const BatchOutcome outcome = run_batch(config, threads);
  for (const auto& failure : outcome.failures) {
    err << "blemish: batch cell " << failure.stem << " failed: " << failure.message << "\n";
  }
  out << "outputs=" << outcome.outputs.size() << " failures=" << outcome.failures.size()
      << " index=" << (config.out_dir / "index.json").string() << "\n";
  return outcome.failures.empty() ? kExitOk : kExitFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inject controlled, manifest-tracked errors into tabular datasets", "blemish"};
  app.require_subcommand(1);

  SpecFlags contaminate_flags;
  auto* contaminate = app.add_subcommand("contaminate", "Apply one contamination");
  add_spec_flags(*contaminate, contaminate_flags, true);

  SpecFlags plan_flags;
  auto* plan_cmd = app.add_subcommand("plan", "Dry run: print the mode arithmetic");
  add_spec_flags(*plan_cmd, plan_flags, false);

  std::string batch_config;
  unsigned batch_threads = 0;
  auto* batch = app.add_subcommand("batch", "Run a contamination grid from a JSON config");
  batch->add_option("config", batch_config, "Batch config JSON")->required();
  batch->add_option("--threads", batch_threads, "Worker threads (0: hardware concurrency)");

  std::string verify_input, verify_manifest;
  auto* verify_cmd = app.add_subcommand("verify", "Check a CSV against its manifest");
  verify_cmd->add_option("--input", verify_input, "Contaminated CSV")->required();
  verify_cmd->add_option("--manifest", verify_manifest, "Manifest sidecar")->required();

  std::string stats_input, stats_column, stats_schema;
  std::optional<std::string> stats_null;
  bool stats_json_flag = false;
  auto* stats = app.add_subcommand("stats", "Per-column schema and statistics");
  stats->add_option("--input", stats_input, "Input CSV")->required();
  stats->add_option("--column", stats_column, "Only this column");
  stats->add_option("--schema", stats_schema, "Schema override JSON");
  stats->add_option("--null-token", stats_null, "Null token");
  stats->add_flag("--json", stats_json_flag, "Emit JSON keyed by column");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*contaminate) return cmd_contaminate(contaminate_flags, out);
    if (*plan_cmd) return cmd_plan(plan_flags, out);
    if (*batch) return cmd_batch(batch_config, batch_threads, out, err);
    if (*verify_cmd) return cmd_verify(verify_input, verify_manifest, out);
    if (*stats) {
      return cmd_stats(stats_input, stats_column, stats_json_flag, stats_schema, stats_null, out, err);
    }
  } catch (const Error& e) {
    print_error(err, e);
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "blemish: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitValidation;
}

}  // namespace blemish::cli
