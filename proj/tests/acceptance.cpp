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

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rankdb/catalog.hpp"
#include "rankdb/checks.hpp"
#include "rankdb/query.hpp"
#include "rankdb/similarity.hpp"

using namespace rankdb;

namespace {

const std::filesystem::path kData = RANKDB_DATA_DIR;
const char* kMatching = "project [AGENT, NAME] (join (houses, customers) on PRICE ~ BUDGET)";

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void time_limit(Outcome& o, double elapsed, double limit) {
  if (elapsed >= limit) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "took %.3f s, limit %.1f s", elapsed, limit);
    o.fail(buf);
  }
}

void absorb(Outcome& o, const checks::Results& rs, std::size_t min_instances) {
  for (const auto& r : rs) {
    if (!r.ok()) o.fail(checks::format_result(r));
    else if (r.instances < min_instances)
      o.fail(r.suite + "/" + r.name + ": only " + std::to_string(r.instances) + " instances");
  }
}

checks::CheckOptions options() {
  checks::CheckOptions opt;
  opt.seed = 1;
  opt.iterations = 1000;
  return opt;
}

Outcome table_similarity_fixture() {
  Outcome o;
  Catalog c = load_config(kData / "example.cfg");
  load_table(c, "houses_alt", kData / "houses_alt.csv");
  auto t0 = std::chrono::steady_clock::now();
  TruthDegree e = table_similarity(c.tables.at("houses"), c.tables.at("houses_alt"));
  double elapsed = seconds_since(t0);
  if (std::fabs(e.value() - 0.98) > 1e-12) o.fail("E = " + format_degree(e));
  time_limit(o, elapsed, 0.1);
  if (o.pass) o.detail = "E = " + format_degree(e);
  return o;
}

Outcome matching_bound() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  auto e = parse_query(kMatching);
  for (const char* cfg : {"example.cfg", "example_strict.cfg", "example_chain.cfg"}) {
    Catalog c = load_config(kData / cfg);
    TableCatalog alt = c.tables;
    alt.at("houses") = alt.at("houses_alt");
    std::map<std::string, TruthDegree> as{{"houses", c.lattice.parse("0.98")},
                                          {"customers", c.lattice.top()}};
    VerifyReport r = verify_bound(*e, c.tables, alt, as, c.lattice);
    if (std::fabs(r.bound.value.value() - 0.98) > 1e-12)
      o.fail(std::string(cfg) + ": bound " + format_degree(r.bound.value));
    if (r.actual.value() < 0.98 - 1e-12 || !r.holds)
      o.fail(std::string(cfg) + ": actual " + format_degree(r.actual));
    if (r.bound.guarantee != Guarantee::rank_based)
      o.fail(std::string(cfg) + ": guarantee " + to_string(r.bound.guarantee));
  }
  time_limit(o, seconds_since(t0), 1.0);
  if (o.pass) o.detail = "bound 0.98 holds on 3 configs";
  return o;
}

Outcome projection_fixture() {
  Outcome o;
  Catalog c = load_config(kData / "example.cfg");
  RankedDataTable p = evaluate(*parse_query("project [LOCATION] houses"), c.tables);
  const std::map<std::string, double> want{{"Vestal", 0.93}, {"Endicott", 0.89}, {"Binghamton", 0.86}};
  if (p.size() != want.size()) o.fail(std::to_string(p.size()) + " rows");
  if (!c.lattice.is_bot(p.default_rank())) o.fail("nonzero default");
  for (const auto& [t, r] : p.rows()) {
    auto it = want.find(t.values.at(0).as_text());
    if (it == want.end()) o.fail("unexpected " + t.values[0].as_text());
    else if (std::fabs(r.value() - it->second) > 1e-12)
      o.fail(it->first + " ranked " + format_degree(r));
  }
  if (o.pass) o.detail = "Vestal 0.93, Endicott 0.89, Binghamton 0.86";
  return o;
}

Outcome suites(std::initializer_list<checks::Results (*)(const checks::CheckOptions&)> runs,
               std::size_t min_instances, double limit) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  std::size_t total = 0, checks_run = 0;
  for (auto run : runs) {
    auto rs = run(options());
    absorb(o, rs, min_instances);
    for (const auto& r : rs) total += r.instances;
    checks_run += rs.size();
  }
  double elapsed = seconds_since(t0);
  if (limit > 0) time_limit(o, elapsed, limit);
  if (o.pass) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%zu checks, %zu instances, %.2f s", checks_run, total, elapsed);
    o.detail = buf;
  }
  return o;
}

}  // namespace

int main() {
  using Criterion = std::pair<const char*, std::function<Outcome()>>;
  const std::vector<Criterion> criteria{
      {"table similarity of the two listings is 0.98", table_similarity_fixture},
      {"matching-query bound 0.98 is met on every config", matching_bound},
      {"projection onto LOCATION", projection_fixture},
      {"adjointness", [] { return suites({checks::adjointness}, 1, 5.0); }},
      {"preservation inequalities", [] { return suites({checks::preservation}, 1000, 60.0); }},
      {"oracle equivalence", [] { return suites({checks::oracle_equivalence}, 1000, 0); }},
      {"hedged specialization and quasiorder laws",
       [] { return suites({checks::specialization, checks::hedged_laws}, 500, 0); }},
      {"boolean degeneration", [] { return suites({checks::boolean_degeneration}, 200, 0); }},
      {"parser round-trip and bound properties",
       [] { return suites({checks::parser_roundtrip, checks::bound_properties}, 1, 0); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str());
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
