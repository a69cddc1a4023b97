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

#include <vector>

#include "doctest.h"

#include "blemish/duplicate.hpp"
#include "blemish/error.hpp"
#include "support.hpp"

using namespace blemish;
using namespace blemish::testing;

namespace {

Dataset numbered(std::size_t n) {
  std::vector<double> x;
  std::vector<std::string> s;
  for (std::size_t i = 0; i < n; ++i) {
    x.push_back(static_cast<double>(i));
    s.push_back("r" + std::to_string(i));
  }
  return Dataset({continuous("x", x), strings("s", s)});
}

void check_copies(const Dataset& before, const Contaminated& out) {
  const ManifestEntry& e = out.manifest.entries.back();
  REQUIRE(e.sources.size() == e.rows.size());
  for (std::size_t r = 0; r < before.row_count(); ++r) CHECK(out.dataset.row(r) == before.row(r));
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    CHECK(out.dataset.row(e.rows[i]) == out.dataset.row(e.sources[i]));
  }
}

}  // namespace

TEST_CASE("random duplication appends copies") {
  const Dataset ds = numbered(10);
  const Contaminated out = apply(ds, spec_for(Family::kDuplicate, "", 0.3));
  CHECK(out.dataset.row_count() == 13);
  CHECK(out.manifest.entries[0].rows == std::vector<std::size_t>{10, 11, 12});
  CHECK(out.manifest.entries[0].scope.is_dataset());
  check_copies(ds, out);
  CHECK(apply(numbered(4), spec_for(Family::kDuplicate, "", 1.0)).dataset.row_count() == 8);
}

TEST_CASE("targeted duplication draws from the matching subset") {
  std::vector<std::int64_t> cls;
  for (int i = 0; i < 100; ++i) cls.push_back(i < 20 ? 1 : 0);
  const Dataset ds({integers("class", ColumnKind::kCategoricalInt, cls), numbered(100).column(0)});
  ContaminationSpec spec = spec_for(Family::kDuplicate, "class", 0.5);
  spec.params["value"] = "1";
  const Contaminated out = apply(ds, spec);
  CHECK(out.dataset.row_count() == 110);
  std::size_t minority = 0;
  for (const Cell& c : out.dataset.column(0).cells) minority += c == Cell{std::int64_t{1}};
  CHECK(minority == 30);
  for (std::size_t r = 100; r < 110; ++r) CHECK(out.dataset.cell(r, 0) == Cell{std::int64_t{1}});
  check_copies(ds, out);
  CHECK(out.manifest.entries[0].params["reference_rows"] == 20);
}

TEST_CASE("targeted value absent is an empty-target error") {
  const Dataset ds({strings("c", {"a", "b"})});
  ContaminationSpec spec = spec_for(Family::kDuplicate, "c", 0.5);
  spec.params["value"] = "z";
  try {
    apply(ds, spec);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kEmptyTarget);
  }
}

TEST_CASE("extended duplication tops up against the original row count") {
  const Dataset ds = numbered(100);
  const Contaminated first = apply(ds, spec_for(Family::kDuplicate, "", 0.1, 1));
  const Contaminated second = contaminate(
      first.dataset, spec_for(Family::kDuplicate, "", 0.3, 2, Mode::kExtended), first.manifest);
  CHECK(second.dataset.row_count() == 130);
  CHECK(second.manifest.entries[1].rows.size() == 20);
  CHECK(second.manifest.entries[1].rows.front() == 110);
  for (std::size_t s : second.manifest.entries[1].sources) CHECK(s < 100);
  check_copies(first.dataset, second);
  CHECK(verify(second.dataset, second.manifest).pass());
}

TEST_CASE("empty dataset cannot be duplicated") {
  const Dataset ds({continuous("x", {})});
  CHECK_THROWS_AS(apply(ds, spec_for(Family::kDuplicate, "", 0.5)), Error);
}

TEST_CASE("duplicates run after cell edits in apply_all") {
  const Dataset ds = numbered(50);
  const std::vector<ContaminationSpec> specs = {spec_for(Family::kDuplicate, "", 0.2),
                                                spec_for(Family::kMissing, "s", 0.2)};
  const Contaminated out = apply_all(ds, specs, empty_manifest(ds));
  REQUIRE(out.manifest.entries.size() == 2);
  CHECK(out.manifest.entries[0].family == Family::kMissing);
  CHECK(out.manifest.entries[0].achieved_fraction == 0.2);
  CHECK(out.dataset.row_count() == 60);
  CHECK(verify(out.dataset, out.manifest).pass());
}
