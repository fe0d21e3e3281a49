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

#include "fixtures.hpp"
#include "rankdb/query.hpp"

using namespace rankdb;
using namespace fixtures;

namespace {

const ResiduatedLattice L = ResiduatedLattice::chain(100);

TableCatalog catalog() {
  RelationScheme cust({{"BUDGET", money(L)}, {"NAME", names(L)}});
  return {
      {"houses", table(city_price(L), L,
                       {{{{"CITY", T("Vestal")}, {"PRICE", N(10)}}, "0.9"},
                        {{{"CITY", T("Endicott")}, {"PRICE", N(30)}}, "0.6"}})},
      {"customers", table(cust, L, {{{{"BUDGET", N(40)}, {"NAME", T("Grant")}}, "1"}})},
      {"a", kv(L, {{"x", "0.9"}, {"y", "0.6"}})},
      {"b", kv(L, {{"x", "0.8"}, {"z", "0.5"}})},
  };
}

TruthDegree D(const char* s) { return L.parse(s); }

}  // namespace

TEST(Parser, Shapes) {
  auto e = parse_query("project [CITY] (select houses where CITY ~ 'Vestal')");
  auto want = expr::project({"CITY"}, expr::select(expr::table("houses"), "CITY", expr::text("Vestal")));
  EXPECT_EQ(*e, *want);
  EXPECT_EQ(*parse_query("((houses))"), *expr::table("houses"));
  EXPECT_EQ(*parse_query("join (houses, customers) on PRICE ~ BUDGET"),
            *expr::join(expr::table("houses"), expr::table("customers"), "PRICE", "BUDGET"));
  EXPECT_EQ(*parse_query("select houses where AGENT ~ 'O''Brien'"),
            *expr::select(expr::table("houses"), "AGENT", expr::text("O'Brien")));
  EXPECT_EQ(*parse_query("select houses where PRICE ~ 250000"),
            *expr::select(expr::table("houses"), "PRICE", expr::number("250000")));
}

TEST(Parser, PrintsCanonically) {
  auto e = parse_query("  project\n[ CITY ,PRICE ]\n\t( houses )  ");
  EXPECT_EQ(print_query(*e), "project [CITY, PRICE] houses");
  EXPECT_EQ(print_query(*parse_query("select (select houses where A ~ 1) where B ~ 'x'")),
            "select select houses where A ~ 1 where B ~ 'x'");
  EXPECT_EQ(print_query(*parse_query("union (shift 0.5 (project [X] a), b)")),
            "union (shift 0.5 project [X] a, b)");
  for (const char* text : {"union (shift 0.25 (project [X] a), project [X] (shift 0.5 b))",
                           "selectc houses where CITY ~ 'Vestal'",
                           "select (cross (houses, customers)) where PRICE ~ BUDGET",
                           "residuum (a, otimes (a, b))"}) {
    auto once = parse_query(text);
    EXPECT_EQ(*parse_query(print_query(*once)), *once) << text;
    EXPECT_EQ(print_query(*parse_query(print_query(*once))), print_query(*once)) << text;
  }
}

TEST(Parser, Errors) {
  try {
    parse_query("union (a,\n  b");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_GT(e.column(), 1);
  }
  EXPECT_THROW(parse_query("shift 1.5 a"), ParseError);
  EXPECT_THROW(parse_query("project [] a"), ParseError);
  EXPECT_THROW(parse_query("a b"), ParseError);
  EXPECT_THROW(parse_query("shift 0.33 a", ResiduatedLattice::chain(4)), ParseError);
  EXPECT_NO_THROW(parse_query("shift 0.25 a", ResiduatedLattice::chain(4)));
}

TEST(Eval, MatchesOperators) {
  auto c = catalog();
  EXPECT_EQ(evaluate(*parse_query("select houses where CITY ~ 'Vestal'"), c),
            select_sim(c.at("houses"), "CITY", T("Vestal")));
  EXPECT_EQ(evaluate(*parse_query("join (houses, customers) on PRICE ~ BUDGET"), c),
            join_sim(c.at("houses"), c.at("customers"), "PRICE", "BUDGET"));
  EXPECT_EQ(evaluate(*parse_query("otimes (a, b)"), c), kv(L, {{"x", "0.7"}}));
  EXPECT_EQ(evaluate(*parse_query("shift 0.8 a"), c), kv(L, {{"x", "1"}, {"y", "0.8"}}, "0.2"));
  EXPECT_EQ(derive_scheme(*parse_query("cross (houses, customers)"), schemes_of(c)).names(),
            (std::vector<std::string>{"BUDGET", "CITY", "NAME", "PRICE"}));
}

TEST(Eval, Errors) {
  auto c = catalog();
  try {
    evaluate(*parse_query("project [CITY] nowhere"), c);
    FAIL();
  } catch (const EvalError& e) {
    EXPECT_NE(e.node().find("nowhere"), std::string::npos);
  }
  try {
    evaluate(*parse_query("select (shift 0.5 houses) where CITY ~ 'Vestal'"), c);
    FAIL();
  } catch (const EvalError& e) {
    EXPECT_EQ(e.kind(), std::optional<OpErrorKind>(OpErrorKind::nonzero_default_unsupported));
  }
  EXPECT_THROW(evaluate(*parse_query("cross (a, a)"), c), EvalError);
  EXPECT_THROW(evaluate(*parse_query("select houses where CITY ~ 3"), c), EvalError);
}

TEST(Bound, Rules) {
  std::map<std::string, TruthDegree> as{{"a", D("0.9")}, {"b", D("0.8")}};
  auto bound = [&](const char* q) { return propagate_bound(*parse_query(q), as, L); };
  EXPECT_EQ(bound("a").value, D("0.9"));
  EXPECT_EQ(bound("union (a, b)").value, D("0.8"));
  EXPECT_EQ(bound("meet (a, b)").value, D("0.8"));
  EXPECT_EQ(bound("otimes (a, b)").value, D("0.7"));
  EXPECT_EQ(bound("shift 0.3 a").value, D("0.9"));
  EXPECT_EQ(bound("project [K] a").value, D("0.9"));
  EXPECT_EQ(bound("cross (a, b)").value, D("0.7"));
  EXPECT_EQ(bound("union (a, a)").value, D("0.9"));
  EXPECT_EQ(bound("a").guarantee, Guarantee::rank_based);
  EXPECT_EQ(bound("nowhere").value, L.top());
  EXPECT_FALSE(bound("otimes (a, b)").trace.empty());
}

TEST(Bound, ClosureNeedsTransitiveScheme) {
  auto c = catalog();
  auto schemes = schemes_of(c);
  std::map<std::string, TruthDegree> as{{"houses", D("0.9")}};
  auto e = parse_query("selectc houses where CITY ~ 'Vestal'");
  EXPECT_EQ(propagate_bound(*e, as, L, &schemes).guarantee, Guarantee::none);
  EXPECT_EQ(propagate_bound(*e, as, L).guarantee, Guarantee::none);

  auto finite = std::make_shared<const Domain>("K", ValueKind::text, L, IdentitySimilarity{},
                                               std::vector<Value>{T("x"), T("y")});
  SchemeCatalog ok{{"k", RelationScheme({{"K", finite}})}};
  auto ke = parse_query("selectc k where K ~ 'x'");
  auto kb = propagate_bound(*ke, {{"k", D("0.9")}}, L, &ok);
  EXPECT_EQ(kb.guarantee, Guarantee::tuple_based);
  EXPECT_EQ(kb.value, D("0.9"));
}

TEST(Bound, VerifyOnPerturbedTables) {
  auto c = catalog();
  auto alt = c;
  alt.at("houses") = table(city_price(L), L,
                           {{{{"CITY", T("Vestal")}, {"PRICE", N(10)}}, "0.8"},
                            {{{"CITY", T("Endicott")}, {"PRICE", N(30)}}, "0.6"}});
  auto e = parse_query("project [CITY] (join (houses, customers) on PRICE ~ BUDGET)");
  auto r = verify_bound(*e, c, alt, {}, L);
  EXPECT_EQ(r.bound.value, D("0.9"));
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(L.leq(r.bound.value, r.actual));
  auto lie = verify_bound(*e, c, alt, {{"houses", L.top()}}, L);
  EXPECT_FALSE(lie.holds);
}
