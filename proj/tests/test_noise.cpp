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

#include <algorithm>
#include <cmath>
#include <map>
#include <regex>
#include <set>
#include <vector>

#include "doctest.h"

#include "blemish/error.hpp"
#include "blemish/noise.hpp"
#include "support.hpp"

using namespace blemish;
using namespace blemish::testing;

namespace {

// Column of n values spread over [lo, hi] with both ends present.
std::vector<double> spread(std::size_t n, double lo, double hi) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return v;
}

std::vector<Cell> injected(const Contaminated& out, std::size_t column) {
  std::vector<Cell> cells;
  for (std::size_t r : out.manifest.entries.back().rows) cells.push_back(out.dataset.cell(r, column));
  return cells;
}

}  // namespace

TEST_CASE("continuous noise stays in [min, max]") {
  const Dataset ds({continuous("x", spread(101, 0.0, 6.0))});
  const Contaminated out = apply(ds, spec_for(Family::kNoise, "x", 1.0));
  for (const Cell& c : injected(out, 0)) {
    const double v = std::get<double>(c);
    CHECK_UNARY(v >= 0.0);
    CHECK_UNARY(v <= 6.0);
  }
  CHECK(changed_cells(ds, out.dataset, 0) == 101);
}

TEST_CASE("constant continuous column yields the constant") {
  const Dataset ds({continuous("x", {5, 5, 5, 5})});
  const Contaminated out = apply(ds, spec_for(Family::kNoise, "x", 1.0));
  for (const Cell& c : injected(out, 0)) CHECK(std::get<double>(c) == 5.0);
  CHECK(out.manifest.entries[0].params["degenerate"] == true);
  CHECK(verify(out.dataset, out.manifest).pass());
}

TEST_CASE("continuous noise follows Normal(3, 1) on min=0, max=6") {
  const Dataset ds({continuous("x", spread(100000, 0.0, 6.0))});
  const Contaminated out = apply(ds, spec_for(Family::kNoise, "x", 1.0, 3));
  double sum = 0.0;
  std::size_t clamped = 0;
  const auto cells = injected(out, 0);
  for (const Cell& c : cells) {
    const double v = std::get<double>(c);
    sum += v;
    clamped += (v == 0.0 || v == 6.0);
  }
  CHECK(std::abs(sum / static_cast<double>(cells.size()) - 3.0) <= 0.02);
  const double unclamped = 1.0 - static_cast<double>(clamped) / static_cast<double>(cells.size());
  CHECK(std::abs(unclamped - (normal_cdf(3.0) - normal_cdf(-3.0))) <= 1e-3);
}

TEST_CASE("discrete-int noise yields integers in range") {
  std::vector<std::int64_t> v;
  for (int i = 0; i < 90; ++i) v.push_back(1 + i % 9);
  const Dataset ds({integers("n", ColumnKind::kDiscreteInt, v)});
  const Contaminated out = apply(ds, spec_for(Family::kNoise, "n", 1.0));
  for (const Cell& c : injected(out, 0)) {
    const auto x = std::get<std::int64_t>(c);
    CHECK(x >= 1);
    CHECK(x <= 9);
  }
  const Dataset k({integers("n", ColumnKind::kDiscreteInt, {2, 2})});
  for (const Cell& c : injected(apply(k, spec_for(Family::kNoise, "n", 1.0)), 0)) {
    CHECK(std::get<std::int64_t>(c) == 2);
  }
}

TEST_CASE("discrete-int noise histogram peaks at the midpoint") {
  std::vector<std::int64_t> v;
  for (int i = 0; i < 100000; ++i) v.push_back(i % 2 == 0 ? 0 : 6);
  const Dataset ds({integers("n", ColumnKind::kDiscreteInt, v)});
  const Contaminated out = apply(ds, spec_for(Family::kNoise, "n", 1.0, 21));
  std::map<std::int64_t, int> hist;
  for (const Cell& c : injected(out, 0)) ++hist[std::get<std::int64_t>(c)];
  const auto mode = std::max_element(hist.begin(), hist.end(),
                                     [](const auto& a, const auto& b) { return a.second < b.second; });
  CHECK(mode->first == 3);
}

TEST_CASE("categorical-int noise with two classes swaps") {
  const Dataset ds({integers("c", ColumnKind::kCategoricalInt, {1, 2, 1, 1, 2, 1})});
  const Contaminated out = apply(ds, spec_for(Family::kNoise, "c", 1.0));
  for (std::size_t r = 0; r < ds.row_count(); ++r) {
    CHECK(out.dataset.cell(r, 0) == Cell{std::get<std::int64_t>(ds.cell(r, 0)) == 1 ? std::int64_t{2} : std::int64_t{1}});
  }
}

TEST_CASE("categorical-int noise favours the middle class for extreme priors") {
  std::vector<std::int64_t> v;
  for (int i = 0; i < 100000; ++i) v.push_back(i % 10 == 0 ? 20 : (i % 2 == 0 ? 10 : 30));
  const Dataset ds({integers("c", ColumnKind::kCategoricalInt, v)});
  const Contaminated out = apply(ds, spec_for(Family::kNoise, "c", 1.0, 5));
  std::map<std::int64_t, int> hist;
  for (std::size_t r = 0; r < ds.row_count(); ++r) {
    const auto prior = std::get<std::int64_t>(ds.cell(r, 0));
    const auto now = std::get<std::int64_t>(out.dataset.cell(r, 0));
    CHECK(now != prior);
    CHECK((now == 10 || now == 20 || now == 30));
    if (prior != 20) ++hist[now];
  }
  CHECK(hist[20] > hist[10]);
  CHECK(hist[20] > hist[30]);
}

TEST_CASE("categorical-int noise needs two classes") {
  const Dataset ds({integers("c", ColumnKind::kCategoricalInt, {4, 4, 4})});
  try {
    apply(ds, spec_for(Family::kNoise, "c", 0.5));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kDomain);
  }
}

TEST_CASE("categorical-string noise emits unseen synthetic labels") {
  const Dataset ds({strings("s", {"a", "b", "c", "a", "b", "c", "a", "b", "c", "a"})});
  const Contaminated out = apply(ds, spec_for(Family::kNoise, "s", 1.0));
  const std::regex pattern("noise_[0-9]+");
  for (const Cell& c : injected(out, 0)) {
    const auto& s = std::get<std::string>(c);
    CHECK(std::regex_match(s, pattern));
    CHECK((s != "a" && s != "b" && s != "c"));
  }
}

TEST_CASE("synthetic label frequencies follow |round(N(0, 1))| for three classes") {
  std::vector<std::string> v;
  for (int i = 0; i < 100000; ++i) v.push_back(std::string(1, static_cast<char>('a' + i % 3)));
  const Dataset ds({strings("s", v)});
  const Contaminated out = apply(ds, spec_for(Family::kNoise, "s", 1.0, 8));
  std::map<std::string, int> hist;
  for (const Cell& c : injected(out, 0)) ++hist[std::get<std::string>(c)];
  // round-half-up of x is j = 0 for x in [-0.5, 0.5) and |j| = 1 for
  // x in [-1.5, -0.5) or [0.5, 1.5).
  const double p0 = normal_cdf(0.5) - normal_cdf(-0.5);
  const double p1 = 2.0 * (normal_cdf(1.5) - normal_cdf(0.5));
  const double p2 = 2.0 * (normal_cdf(2.5) - normal_cdf(1.5));
  CHECK(std::abs(hist["noise_0"] / 1e5 - p0) <= 0.01);
  CHECK(std::abs(hist["noise_1"] / 1e5 - p1) <= 0.01);
  CHECK(std::abs(hist["noise_2"] / 1e5 - p2) <= 0.01);
}

TEST_CASE("single-class string column draws with sd 1") {
  const Dataset ds({strings("s", {"only", "only", "only", "only"})});
  const Contaminated out = apply(ds, spec_for(Family::kNoise, "s", 1.0));
  CHECK(changed_cells(ds, out.dataset, 0) == 4);
}

TEST_CASE("synthetic prefix avoids colliding domains") {
  CHECK(synthetic_label_prefix({Cell{std::string("a")}}) == "noise_");
  CHECK(synthetic_label_prefix({Cell{std::string("noise_3")}}) == "noise__");
  CHECK(synthetic_label_prefix({Cell{std::string("noise_x")}}) == "noise_");
  const Dataset ds({strings("s", {"noise_0", "noise_1", "noise_2", "z"})});
  const Contaminated out = apply(ds, spec_for(Family::kNoise, "s", 1.0));
  std::set<std::string> domain{"noise_0", "noise_1", "noise_2", "z"};
  for (const Cell& c : injected(out, 0)) CHECK(domain.count(std::get<std::string>(c)) == 0);
}

TEST_CASE("noise uses the original range after earlier contamination") {
  const Dataset ds({continuous("x", spread(1000, 0.0, 6.0))});
  Contaminated out = apply(ds, spec_for(Family::kOutlier, "x", 0.2));
  out = contaminate(out.dataset, spec_for(Family::kNoise, "x", 0.5), out.manifest);
  for (const Cell& c : injected(out, 0)) {
    const double v = std::get<double>(c);
    CHECK_UNARY(v >= 0.0);
    CHECK_UNARY(v <= 6.0);
  }
}

TEST_CASE("noise on boolean columns is a domain error") {
  const Dataset ds({booleans("b", {true, false})});
  try {
    apply(ds, spec_for(Family::kNoise, "b", 0.5));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kDomain);
  }
}
