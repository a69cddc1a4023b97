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

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "blemish/csv.hpp"
#include "blemish/dataset.hpp"
#include "blemish/datetime.hpp"
#include "blemish/engine.hpp"
#include "blemish/sampling.hpp"

namespace blemish::testing {

inline Column continuous(std::string name, const std::vector<double>& values) {
  return Column{std::move(name), ColumnSchema::of(ColumnKind::kContinuous),
                std::vector<Cell>(values.begin(), values.end())};
}

inline Column integers(std::string name, ColumnKind kind, const std::vector<std::int64_t>& values) {
  return Column{std::move(name), ColumnSchema::of(kind),
                std::vector<Cell>(values.begin(), values.end())};
}

inline Column strings(std::string name, const std::vector<std::string>& values) {
  return Column{std::move(name), ColumnSchema::of(ColumnKind::kCategoricalString),
                std::vector<Cell>(values.begin(), values.end())};
}

inline Column booleans(std::string name, const std::vector<bool>& values) {
  Column c{std::move(name), ColumnSchema::of(ColumnKind::kBoolean), {}};
  for (bool v : values) c.cells.emplace_back(v);
  return c;
}

inline Column dates(std::string name, const std::vector<std::string>& iso) {
  Column c{std::move(name), ColumnSchema::datetime("%Y-%m-%d"), {}};
  for (const auto& s : iso) c.cells.emplace_back(Timestamp{*datetime::parse(s, "%Y-%m-%d"), false});
  return c;
}

inline ContaminationSpec spec_for(Family family, std::string column, double fraction,
                                  std::uint64_t seed = 42, Mode mode = Mode::kNew) {
  ContaminationSpec spec;
  spec.family = family;
  spec.column = std::move(column);
  spec.fraction = fraction;
  spec.seed = seed;
  spec.mode = mode;
  return spec;
}

inline Contaminated apply(const Dataset& ds, const ContaminationSpec& spec) {
  return contaminate(ds, spec, empty_manifest(ds));
}

inline std::size_t changed_cells(const Dataset& before, const Dataset& after, std::size_t column) {
  std::size_t n = 0;
  for (std::size_t r = 0; r < before.row_count(); ++r) {
    if (before.cell(r, column) != after.cell(r, column)) ++n;
  }
  return n;
}

inline std::size_t changed_cells_all(const Dataset& before, const Dataset& after) {
  std::size_t n = 0;
  for (std::size_t c = 0; c < before.column_count(); ++c) n += changed_cells(before, after, c);
  return n;
}

// Mixed-kind fixture: feature i has kind i % 6 in the order continuous,
// discrete-int, categorical-int, categorical-string, boolean, datetime, and
// "label" is a binary 0/1 column.
inline Dataset mixed_fixture(std::size_t rows, std::size_t features, std::uint64_t seed) {
  RandomStream rng(seed);
  std::vector<Column> cols;
  const std::int64_t base_day = *datetime::parse("2015-01-01", "%Y-%m-%d");
  for (std::size_t f = 0; f < features; ++f) {
    std::string name = "f" + std::string(f < 10 ? "0" : "") + std::to_string(f);
    Column c{name, ColumnSchema::of(ColumnKind::kContinuous), {}};
    switch (f % 6) {
      case 0:
        for (std::size_t r = 0; r < rows; ++r) c.cells.emplace_back(normal(rng, 50.0, 12.0));
        break;
      case 1:
        c.schema = ColumnSchema::of(ColumnKind::kDiscreteInt);
        for (std::size_t r = 0; r < rows; ++r)
          c.cells.emplace_back(static_cast<std::int64_t>(rng.uniform_index(500)));
        break;
      case 2:
        c.schema = ColumnSchema::of(ColumnKind::kCategoricalInt);
        for (std::size_t r = 0; r < rows; ++r)
          c.cells.emplace_back(static_cast<std::int64_t>(rng.uniform_index(5)));
        break;
      case 3: {
        c.schema = ColumnSchema::of(ColumnKind::kCategoricalString);
        static const char* kCities[] = {"lisbon", "porto", "braga", "faro", "evora", "leiria"};
        for (std::size_t r = 0; r < rows; ++r) c.cells.emplace_back(std::string(kCities[rng.uniform_index(6)]));
        break;
      }
      case 4:
        c.schema = ColumnSchema::of(ColumnKind::kBoolean);
        for (std::size_t r = 0; r < rows; ++r) c.cells.emplace_back(rng.coin());
        break;
      default:
        c.schema = ColumnSchema::datetime("%Y-%m-%d");
        for (std::size_t r = 0; r < rows; ++r) {
          const auto day = static_cast<std::int64_t>(rng.uniform_index(3000));
          c.cells.emplace_back(Timestamp{base_day + day * datetime::kSecondsPerDay, false});
        }
    }
    cols.push_back(std::move(c));
  }
  Column label{"label", ColumnSchema::of(ColumnKind::kCategoricalInt), {}};
  for (std::size_t r = 0; r < rows; ++r) label.cells.emplace_back(static_cast<std::int64_t>(rng.coin()));
  cols.push_back(std::move(label));
  return Dataset(std::move(cols));
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    RandomStream rng(static_cast<std::uint64_t>(
        std::filesystem::file_time_type::clock::now().time_since_epoch().count()));
    do {
      path_ = std::filesystem::temp_directory_path() / ("blemish-" + std::to_string(rng.next_u64()));
    } while (std::filesystem::exists(path_));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace blemish::testing
