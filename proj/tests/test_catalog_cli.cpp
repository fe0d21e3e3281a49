// Copyright 2026-present the rankdb authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "rankdb/catalog.hpp"
#include "rankdb/cli.hpp"

using namespace rankdb;

namespace {

const std::filesystem::path kData = RANKDB_DATA_DIR;

const char* kConfig = R"(# small config
[lattice]
kind = lukasiewicz

[domain MONEY]
kind = number
similarity = ramp
k = 100

[domain CITY]
kind = text
similarity = table
pair = Vestal Endicott 0.7
pair = "New York" Vestal 0.1

[attribute PRICE]
domain = MONEY

[attribute CITY]
domain = CITY
)";

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  int code = rankdb::cli::run(args, out, err, in);
  return {code, out.str(), err.str()};
}

std::string config() { return (kData / "example.cfg").string(); }

}  // namespace

TEST(Config, Parses) {
  Catalog c = parse_config(kConfig);
  EXPECT_EQ(c.domains.size(), 2u);
  EXPECT_EQ(c.bindings.at("PRICE"), "MONEY");
  EXPECT_NEAR(c.domains.at("CITY")->similarity(Value::text("New York"), Value::text("Vestal")).value(),
              0.1, 1e-12);
  EXPECT_EQ(c.scheme_for({"PRICE", "CITY"}).names(), (std::vector<std::string>{"CITY", "PRICE"}));
  EXPECT_THROW(c.scheme_for({"AGE"}), SchemaError);
}

TEST(Config, Rejects) {
  auto bad = [](const std::string& text) { EXPECT_THROW(parse_config(text), Error) << text; };
  bad("[domain A]\nkind = text\n[domain A]\nkind = text\n");
  bad("[domain A]\nkind = text\ncolour = red\n");
  bad("[domains]\n");
  bad("[attribute X]\ndomain = NOPE\n");
  bad("[domain A]\nkind = text\nsimilarity = table\npair = a b 1.5\n");
  bad("[lattice]\nkind = chain\n");
  bad("[domain A]\nkind = text\nsimilarity = ramp\nk = 3\n");
  try {
    parse_config("[lattice]\nkind = lukasiewicz\nbogus\n", {}, "x.cfg");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Csv, ParsesAndRoundTrips) {
  Catalog c = parse_config(kConfig);
  auto d = parse_table_csv("rank,CITY,PRICE\n0.9,Vestal,10\n0.6,\"New York\",30.5\n", c);
  EXPECT_EQ(d.size(), 2u);
  EXPECT_EQ(parse_table_csv(write_table_csv(d), c), d);
  auto rows = sorted_rows(d);
  EXPECT_EQ(rows.front().first.values[0], Value::text("Vestal"));
  EXPECT_THROW(parse_table_csv("rank,CITY,PRICE\n1.2,Vestal,10\n", c), FormatError);
  EXPECT_THROW(parse_table_csv("CITY,rank\nVestal,1\n", c), FormatError);
  EXPECT_THROW(parse_table_csv("rank,CITY,PRICE\n1,Vestal,ten\n", c), Error);
  EXPECT_THROW(parse_table_csv("rank,CITY,PRICE\n1,Vestal,10\n0.5,Vestal,10\n", c), FormatError);
  EXPECT_THROW(parse_table_csv("rank,AGE\n1,3\n", c), Error);
}

TEST(Csv, ShippedTables) {
  Catalog c = load_config(kData / "example.cfg");
  const auto& h = c.tables.at("houses");
  EXPECT_EQ(h.size(), 8u);
  EXPECT_NEAR(sorted_rows(h).front().second.value(), 0.93, 1e-12);
  EXPECT_EQ(c.tables.at("customers").size(), 3u);
  for (const char* cfg : {"example_strict.cfg", "example_chain.cfg"}) {
    Catalog other = load_config(kData / cfg);
    EXPECT_EQ(other.tables.size(), 3u) << cfg;
  }
}

TEST(Cli, Query) {
  auto r = invoke({"-c", config(), "query", "project [LOCATION] houses"});
  EXPECT_EQ(r.code, cli::kSuccess) << r.err;
  EXPECT_NE(r.out.find("Vestal"), std::string::npos);
  EXPECT_NE(r.out.find("0.93"), std::string::npos);
  EXPECT_NE(r.out.find("(3 rows)"), std::string::npos);

  auto j = invoke({"-c", config(), "--format", "jsonl", "query", "project [LOCATION] houses"});
  EXPECT_EQ(j.code, cli::kSuccess);
  EXPECT_NE(j.out.find("\"rank\""), std::string::npos);
}

TEST(Cli, SimBoundVerify) {
  auto s = invoke({"-c", config(), "sim", "houses", "houses_alt"});
  EXPECT_EQ(s.code, cli::kSuccess) << s.err;
  EXPECT_NE(s.out.find("0.98"), std::string::npos);

  const std::string q = "project [AGENT, NAME] (join (houses, customers) on PRICE ~ BUDGET)";
  auto b = invoke({"-c", config(), "bound", q, "--assume", "houses=0.98"});
  EXPECT_EQ(b.code, cli::kSuccess) << b.err;
  EXPECT_NE(b.out.find("0.98"), std::string::npos);

  const std::string alt = "houses=" + (kData / "houses_alt.csv").string();
  auto v = invoke({"-c", config(), "verify", q, "--alt", alt});
  EXPECT_EQ(v.code, cli::kSuccess) << v.out << v.err;
  auto lie = invoke({"-c", config(), "verify", q, "--alt", alt, "--assume", "houses=1"});
  EXPECT_EQ(lie.code, cli::kViolation) << lie.out << lie.err;
}

TEST(Cli, UserErrors) {
  EXPECT_EQ(invoke({"-c", config(), "query", "union (houses"}).code, cli::kUserError);
  EXPECT_EQ(invoke({"-c", config(), "query", "nowhere"}).code, cli::kUserError);
  EXPECT_EQ(invoke({"-c", "/nonexistent.cfg", "query", "houses"}).code, cli::kUserError);
  EXPECT_EQ(invoke({"frobnicate"}).code, cli::kUserError);
  auto r = invoke({"-c", config(), "bound", "houses", "--assume", "houses=2"});
  EXPECT_EQ(r.code, cli::kUserError);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, Repl) {
  auto r = invoke({"-c", config(), "repl"},
               "tables\nquery project [LOCATION] houses\nquery union (\nsim houses houses_alt\nquit\n");
  EXPECT_EQ(r.code, cli::kSuccess);
  EXPECT_NE(r.out.find("houses_alt"), std::string::npos);
  EXPECT_NE(r.out.find("0.98"), std::string::npos);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, Check) {
  auto r = invoke({"check", "--iterations", "20", "--suite", "adjointness"});
  EXPECT_EQ(r.code, cli::kSuccess) << r.out << r.err;
  EXPECT_NE(r.out.find("adjointness"), std::string::npos);
}

TEST(Cli, SplitWords) {
  EXPECT_EQ(cli::split_words("query select h where A ~ 'New York'"),
            (std::vector<std::string>{"query", "select", "h", "where", "A", "~", "'New York'"}));
}
