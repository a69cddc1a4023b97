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

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "blemish/batch.hpp"
#include "blemish/cli.hpp"
#include "blemish/csv.hpp"
#include "support.hpp"

using namespace blemish;
using namespace blemish::testing;
using nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> contaminate_args(const TempDir& dir, const std::string& in,
                                          const std::string& out, std::vector<std::string> extra) {
  std::vector<std::string> args = {"contaminate",        "--input", dir.file(in), "--output",
                                   dir.file(out),        "--manifest", dir.file(out + ".json")};
  args.insert(args.end(), extra.begin(), extra.end());
  return args;
}

std::string hundred_rows_csv() {
  std::string text = "age,city,label\n";
  for (int i = 0; i < 100; ++i) {
    text += std::to_string(20 + i % 50) + "." + std::to_string(i % 10) + "," +
            (i % 3 == 0 ? "lisbon" : "porto") + "," + std::to_string(i % 2) + "\n";
  }
  return text;
}

}  // namespace

TEST_CASE("contaminate writes the CSV and manifest") {
  TempDir dir;
  write_file(dir.file("in.csv"), hundred_rows_csv());
  const Run r = run(contaminate_args(dir, "in.csv", "out.csv",
                                     {"--family", "missing", "--column", "age", "--fraction", "0.3",
                                      "--mode", "new", "--seed", "42"}));
  REQUIRE(r.code == 0);
  const Dataset out = read_csv(dir.file("out.csv"), {});
  std::size_t nulls = 0;
  for (const Cell& c : out.column("age").cells) nulls += is_null(c);
  CHECK(nulls == 30);
  CHECK(run({"verify", "--input", dir.file("out.csv"), "--manifest", dir.file("out.csv.json")}).code == 0);
}

TEST_CASE("repeated runs are byte-identical") {
  TempDir dir;
  write_file(dir.file("in.csv"), hundred_rows_csv());
  const std::vector<std::string> flags = {"--family", "noise", "--column", "age", "--fraction", "0.3",
                                          "--seed", "9"};
  REQUIRE(run(contaminate_args(dir, "in.csv", "a.csv", flags)).code == 0);
  REQUIRE(run(contaminate_args(dir, "in.csv", "b.csv", flags)).code == 0);
  CHECK(read_file(dir.file("a.csv")) == read_file(dir.file("b.csv")));
  CHECK(read_file(dir.file("a.csv.json")) == read_file(dir.file("b.csv.json")));
}

TEST_CASE("exit-code taxonomy") {
  TempDir dir;
  write_file(dir.file("in.csv"), hundred_rows_csv());
  auto base = [&](std::vector<std::string> extra) {
    return run(contaminate_args(dir, "in.csv", "out.csv", std::move(extra)));
  };
  CHECK(base({"--family", "missing", "--column", "nope", "--fraction", "0.3", "--seed", "1"}).code == 2);
  CHECK(base({"--family", "missing", "--column", "age", "--fraction", "1.3", "--seed", "1"}).code == 2);
  CHECK(base({"--family", "bogus", "--column", "age", "--fraction", "0.3", "--seed", "1"}).code == 2);
  CHECK(base({"--family", "missing", "--fraction", "0.3", "--seed", "1"}).code == 2);
  CHECK(run({"contaminate", "--bogus"}).code == 2);

  const Run io = run({"contaminate", "--input", dir.file("absent.csv"), "--output", dir.file("o.csv"),
                      "--manifest", dir.file("o.json"), "--family", "missing", "--column", "age",
                      "--fraction", "0.3", "--seed", "1"});
  CHECK(io.code == 4);

  const Run err = base({"--family", "outlier", "--column", "label", "--fraction", "0.3", "--seed", "1"});
  CHECK(err.code == 0);
  const Run ctx = run(contaminate_args(dir, "in.csv", "ctx.csv",
                                       {"--family", "noise", "--column", "nope", "--fraction", "0.3", "--seed", "1"}));
  CHECK(ctx.code == 2);
  CHECK(ctx.err.find("noise") != std::string::npos);
  CHECK(ctx.err.find("nope") != std::string::npos);
}

TEST_CASE("extended mode through the CLI") {
  TempDir dir;
  write_file(dir.file("in.csv"), hundred_rows_csv());
  REQUIRE(run(contaminate_args(dir, "in.csv", "a.csv",
                               {"--family", "missing", "--column", "age", "--fraction", "0.1", "--seed", "1"}))
              .code == 0);
  // The manifest sidecar of the first output feeds the second run.
  std::filesystem::copy_file(dir.file("a.csv.json"), dir.file("b.csv.json"));
  const Run low = run(contaminate_args(dir, "a.csv", "b.csv",
                                       {"--family", "missing", "--column", "age", "--fraction", "0.05",
                                        "--mode", "extended", "--seed", "2"}));
  CHECK(low.code == 3);
  const Run plan = run({"plan", "--input", dir.file("a.csv"), "--manifest", dir.file("b.csv.json"),
                        "--family", "missing", "--column", "age", "--fraction", "0.3", "--mode",
                        "extended", "--seed", "2"});
  CHECK(plan.code == 0);
  CHECK(plan.out.find("top_up=20") != std::string::npos);
  const Run up = run(contaminate_args(dir, "a.csv", "b.csv",
                                      {"--family", "missing", "--column", "age", "--fraction", "0.3",
                                       "--mode", "extended", "--seed", "2"}));
  REQUIRE(up.code == 0);
  const auto m = json::parse(read_file(dir.file("b.csv.json")));
  CHECK(m["entries"].size() == 2);
  CHECK(m["entries"][1]["rows"].size() == 20);
  CHECK(run({"verify", "--input", dir.file("b.csv"), "--manifest", dir.file("b.csv.json")}).code == 0);
}

TEST_CASE("manifest bound to another file exits 5") {
  TempDir dir;
  write_file(dir.file("in.csv"), hundred_rows_csv());
  write_file(dir.file("small.csv"), "age,city,label\n1.0,x,0\n");
  REQUIRE(run(contaminate_args(dir, "in.csv", "a.csv",
                               {"--family", "missing", "--column", "age", "--fraction", "0.1", "--seed", "1"}))
              .code == 0);
  CHECK(run({"verify", "--input", dir.file("small.csv"), "--manifest", dir.file("a.csv.json")}).code == 5);
  std::filesystem::copy_file(dir.file("a.csv.json"), dir.file("s.csv.json"));
  CHECK(run(contaminate_args(dir, "small.csv", "s.csv",
                             {"--family", "missing", "--column", "age", "--fraction", "0.5", "--seed", "1"}))
            .code == 5);
}

TEST_CASE("hand-edited CSV fails verification with exit 1") {
  TempDir dir;
  write_file(dir.file("in.csv"), hundred_rows_csv());
  REQUIRE(run(contaminate_args(dir, "in.csv", "a.csv",
                               {"--family", "noise", "--column", "city", "--fraction", "0.2", "--seed", "1"}))
              .code == 0);
  std::string text = read_file(dir.file("a.csv"));
  const auto pos = text.find("lisbon");
  REQUIRE(pos != std::string::npos);
  text[pos] = 'L';
  write_file(dir.file("a.csv"), text);
  const Run r = run({"verify", "--input", dir.file("a.csv"), "--manifest", dir.file("a.csv.json")});
  CHECK(r.code == 1);
  CHECK(r.out.find("violation") != std::string::npos);
}

TEST_CASE("plan reports k and shortfall") {
  TempDir dir;
  write_file(dir.file("in.csv"), hundred_rows_csv());
  const Run r = run({"plan", "--input", dir.file("in.csv"), "--manifest", dir.file("none.json"),
                     "--family", "missing", "--column", "age", "--fraction", "0.3", "--seed", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("k=30\n") != std::string::npos);
  CHECK_FALSE(std::filesystem::exists(dir.file("none.json")));

  std::string sparse = "x\n";
  for (int i = 0; i < 10; ++i) sparse += i < 8 ? "\n" : "1.5\n";
  write_file(dir.file("sparse.csv"), sparse);
  const Run s = run({"plan", "--input", dir.file("sparse.csv"), "--manifest", dir.file("none.json"),
                     "--family", "missing", "--column", "x", "--fraction", "0.5", "--seed", "1",
                     "--schema", dir.file("schema.json")});
  CHECK(s.code == 4);
  write_file(dir.file("schema.json"), R"({"x": "continuous"})");
  const Run t = run({"plan", "--input", dir.file("sparse.csv"), "--manifest", dir.file("none.json"),
                     "--family", "missing", "--column", "x", "--fraction", "0.5", "--seed", "1",
                     "--schema", dir.file("schema.json")});
  CHECK(t.code == 3);
  CHECK(t.out.find("shortfall=3") != std::string::npos);
}

TEST_CASE("stats output") {
  TempDir dir;
  write_file(dir.file("in.csv"), "k,e,s\n7,,a\n7,,b\n7,,a\n");
  const Run table = run({"stats", "--input", dir.file("in.csv")});
  CHECK(table.code == 0);
  CHECK(table.out.find("k") != std::string::npos);
  CHECK(table.err.find("'e'") != std::string::npos);

  const Run j = run({"stats", "--input", dir.file("in.csv"), "--json"});
  const auto doc = json::parse(j.out);
  CHECK(doc.is_object());
  CHECK(doc["k"]["std"] == 0.0);
  CHECK(doc["k"]["distinct_count"] == 1);
  CHECK(doc["e"].contains("error"));
  CHECK(doc["s"]["distinct_count"] == 2);
  CHECK(run({"stats", "--input", dir.file("in.csv"), "--column", "k"}).code == 0);
}

TEST_CASE("label and duplicate flags") {
  TempDir dir;
  write_file(dir.file("in.csv"), hundred_rows_csv());
  const Run label = run(contaminate_args(
      dir, "in.csv", "l.csv", {"--family", "label", "--label-column", "label", "--fraction", "0.3", "--seed", "3"}));
  CHECK(label.code == 0);
  const Run bad = run(contaminate_args(
      dir, "in.csv", "l2.csv", {"--family", "label", "--column", "label", "--fraction", "0.3", "--seed", "3"}));
  CHECK(bad.code == 2);
  const Run dup = run(contaminate_args(dir, "in.csv", "d.csv",
                                       {"--family", "duplicate", "--column", "city", "--value", "lisbon",
                                        "--fraction", "0.5", "--seed", "3"}));
  CHECK(dup.code == 0);
  CHECK(read_csv(dir.file("d.csv"), {}).row_count() == 117);
  const Run absent = run(contaminate_args(dir, "in.csv", "d2.csv",
                                          {"--family", "duplicate", "--column", "city", "--value", "faro",
                                           "--fraction", "0.5", "--seed", "3"}));
  CHECK(absent.code == 3);
}

TEST_CASE("null token round trip through the CLI") {
  TempDir dir;
  write_file(dir.file("in.csv"), "a,b\n1.5,NA\n2.5,x\n3.5,y\n4.5,z\n");
  REQUIRE(run(contaminate_args(dir, "in.csv", "o.csv",
                               {"--family", "missing", "--column", "a", "--fraction", "0.5", "--seed", "3",
                                "--null-token", "NA"}))
              .code == 0);
  const std::string text = read_file(dir.file("o.csv"));
  CHECK(text.find(",,") == std::string::npos);
  ReadOptions options;
  options.null_token = "NA";
  const Dataset ds = read_csv(dir.file("o.csv"), options);
  std::size_t nulls = 0;
  for (const Cell& c : ds.column("a").cells) nulls += is_null(c);
  CHECK(nulls == 2);
  CHECK(run({"verify", "--input", dir.file("o.csv"), "--manifest", dir.file("o.csv.json")}).code == 0);
}

TEST_CASE("batch runs a grid and writes an index") {
  TempDir dir;
  write_csv(mixed_fixture(120, 6, 4), dir.file("in.csv"), "");
  const json config = {{"input", "in.csv"},
                       {"out_dir", "out"},
                       {"seed", 5},
                       {"label_column", "label"},
                       {"grid",
                        {{{"family", "missing"}, {"columns", "all-features"}, {"fraction", 0.3}},
                         {{"family", "label"}, {"columns", {"label"}}, {"fraction", 0.3}},
                         {{"family", "noise"}, {"columns", {"f00", "nope"}}, {"fraction", 0.3}}}}};
  write_file(dir.file("config.json"), config.dump());
  const Run r = run({"batch", dir.file("config.json")});
  CHECK(r.code == 1);
  CHECK(r.err.find("nope") != std::string::npos);
  const auto index = json::parse(read_file((dir.path() / "out" / "index.json").string()));
  REQUIRE(index.is_array());
  CHECK(index.size() == 8);
  for (const auto& entry : index) {
    const auto csv = dir.path() / "out" / entry["csv_path"].get<std::string>();
    const auto manifest = dir.path() / "out" / entry["manifest_path"].get<std::string>();
    CHECK(std::filesystem::exists(csv));
    CHECK(run({"verify", "--input", csv.string(), "--manifest", manifest.string()}).code == 0);
  }
  CHECK(std::filesystem::exists(dir.path() / "out" / "missing_f03_0.3.csv"));
  CHECK(std::filesystem::exists(dir.path() / "out" / "label_label_0.3.csv"));
}

TEST_CASE("empty grid writes an empty index") {
  TempDir dir;
  write_csv(mixed_fixture(10, 2, 4), dir.file("in.csv"), "");
  write_file(dir.file("config.json"),
             json({{"input", "in.csv"}, {"out_dir", "out"}, {"seed", 1}, {"label_column", "label"},
                   {"grid", json::array()}})
                 .dump());
  CHECK(run({"batch", dir.file("config.json")}).code == 0);
  CHECK(json::parse(read_file((dir.path() / "out" / "index.json").string())) == json::array());
}

TEST_CASE("batch cells equal individual invocations") {
  TempDir dir;
  write_csv(mixed_fixture(200, 4, 8), dir.file("in.csv"), "");
  const json config = {{"input", "in.csv"},
                       {"out_dir", "out"},
                       {"seed", 77},
                       {"label_column", "label"},
                       {"grid",
                        {{{"family", "outlier"}, {"columns", {"f00", "f02"}}, {"fraction", 0.3}},
                         {{"family", "label"}, {"columns", {"label"}}, {"fraction", 0.3}}}}};
  write_file(dir.file("config.json"), config.dump());
  REQUIRE(run({"batch", dir.file("config.json")}).code == 0);
  REQUIRE(run(contaminate_args(dir, "in.csv", "single.csv",
                               {"--family", "outlier", "--column", "f02", "--fraction", "0.3", "--seed", "77"}))
              .code == 0);
  CHECK(read_file(dir.file("single.csv")) == read_file((dir.path() / "out" / "outlier_f02_0.3.csv").string()));
  CHECK(read_file(dir.file("single.csv.json")) ==
        read_file((dir.path() / "out" / "outlier_f02_0.3.manifest.json").string()));
  REQUIRE(run(contaminate_args(dir, "in.csv", "lab.csv",
                               {"--family", "label", "--label-column", "label", "--fraction", "0.3", "--seed", "77"}))
              .code == 0);
  CHECK(read_file(dir.file("lab.csv")) == read_file((dir.path() / "out" / "label_label_0.3.csv").string()));
}

TEST_CASE("batch config errors") {
  TempDir dir;
  write_file(dir.file("bad.json"), "{not json");
  CHECK(run({"batch", dir.file("bad.json")}).code == 2);
  write_file(dir.file("nofamily.json"),
             json({{"input", "in.csv"}, {"out_dir", "out"}, {"seed", 1}, {"label_column", "y"},
                   {"grid", {{{"family", "zap"}, {"columns", {"a"}}, {"fraction", 0.3}}}}})
                 .dump());
  CHECK(run({"batch", dir.file("nofamily.json")}).code == 2);
  CHECK(run({"batch", dir.file("absent.json")}).code == 4);
  CHECK(fraction_token(0.3) == "0.3");
  CHECK(fraction_token(0.05) == "0.05");
  CHECK(fraction_token(1.0) == "1");
}

TEST_CASE("untouched cells keep their input bytes") {
  TempDir dir;
  std::string text = "x,flag,s\n";
  for (int i = 0; i < 40; ++i) {
    text += std::to_string(i) + ".2500," + (i % 2 ? "TRUE" : "False") + ",\"q" + std::to_string(i % 3) + "\"\n";
  }
  write_file(dir.file("in.csv"), text);
  REQUIRE(run(contaminate_args(dir, "in.csv", "o.csv",
                               {"--family", "missing", "--column", "x", "--fraction", "0.25", "--seed", "4"}))
              .code == 0);
  const RawTable before = parse_csv_text(text);
  const RawTable after = parse_csv_text(read_file(dir.file("o.csv")));
  std::size_t changed = 0;
  for (std::size_t r = 0; r < before.rows.size(); ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      if (before.rows[r][c].text != after.rows[r][c].text || before.rows[r][c].quoted != after.rows[r][c].quoted)
        ++changed;
    }
  }
  CHECK(changed == 10);

  REQUIRE(run(contaminate_args(dir, "in.csv", "d.csv",
                               {"--family", "duplicate", "--fraction", "0.5", "--seed", "4"}))
              .code == 0);
  const std::string dup = read_file(dir.file("d.csv"));
  CHECK(dup.starts_with(text));
  const auto m = json::parse(read_file(dir.file("d.csv.json")));
  const RawTable copies = parse_csv_text(dup);
  const auto& e = m["entries"][0];
  for (std::size_t i = 0; i < e["rows"].size(); ++i) {
    const auto& row = copies.rows[e["rows"][i].get<std::size_t>()];
    const auto& src = copies.rows[e["sources"][i].get<std::size_t>()];
    for (std::size_t c = 0; c < 3; ++c) CHECK(row[c].text == src[c].text);
  }
  CHECK(run({"verify", "--input", dir.file("d.csv"), "--manifest", dir.file("d.csv.json")}).code == 0);
}
