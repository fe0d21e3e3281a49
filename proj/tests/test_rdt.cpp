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

using namespace rankdb;
using namespace fixtures;

namespace {

const ResiduatedLattice L = ResiduatedLattice::chain(100);

RankedDataTable houses() {
  return table(city_price(L), L,
               {{{{"CITY", T("Vestal")}, {"PRICE", N(10)}}, "0.9"},
                {{{"CITY", T("Endicott")}, {"PRICE", N(30)}}, "0.6"}});
}

RankedDataTable customers() {
  RelationScheme s({{"BUDGET", money(L)}, {"NAME", names(L)}});
  return table(s, L, {{{{"BUDGET", N(40)}, {"NAME", T("Grant")}}, "1"}});
}

}  // namespace

TEST(Rdt, CanonicalForm) {
  auto d = kv(L, {{"x", "0.9"}, {"y", "0"}});
  EXPECT_EQ(d.size(), 1u);
  EXPECT_EQ(d.rank_of(Tuple{{T("x")}}), L.parse("0.9"));
  EXPECT_EQ(d.rank_of(Tuple{{T("q")}}), L.bot());
  auto shifted = a_shift(L.parse("0.8"), d);
  EXPECT_EQ(shifted.rank_of(Tuple{{T("q")}}), L.parse("0.2"));
  EXPECT_THROW(d.rank_of(Tuple{{T("x"), T("y")}}), OpError);
  EXPECT_THROW(RankedDataTable::from_rows(keys(L), L,
                                          {{Tuple{{T("x")}}, L.top()}, {Tuple{{T("x")}}, L.top()}}),
               Error);
}

TEST(Rdt, Pointwise) {
  auto d1 = kv(L, {{"x", "0.9"}, {"y", "0.6"}});
  auto d2 = kv(L, {{"x", "0.8"}, {"z", "0.5"}});
  EXPECT_EQ(combine(Combine::union_, d1, d2), kv(L, {{"x", "0.9"}, {"y", "0.6"}, {"z", "0.5"}}));
  EXPECT_EQ(combine(Combine::otimes, d1, d2), kv(L, {{"x", "0.7"}}));
  EXPECT_EQ(combine(Combine::meet, d1, d2), kv(L, {{"x", "0.8"}}));
  EXPECT_EQ(combine(Combine::meet, d1, d1), d1);
  EXPECT_EQ(combine(Combine::residuum, d1, d2),
            kv(L, {{"x", "0.9"}, {"y", "0.4"}}, "1"));
  RelationScheme other({{"J", names(L)}});
  EXPECT_THROW(combine(Combine::union_, d1, RankedDataTable(other, L)), OpError);
  auto c4 = ResiduatedLattice::chain(4);
  EXPECT_THROW(combine(Combine::union_, d1, RankedDataTable(keys(c4), c4)), Error);
}

TEST(Rdt, Shift) {
  auto d = kv(L, {{"x", "0.9"}, {"y", "0.6"}});
  EXPECT_EQ(a_shift(L.parse("0.8"), d), kv(L, {{"x", "1"}, {"y", "0.8"}}, "0.2"));
  EXPECT_EQ(a_shift(L.top(), d), d);
  auto all = a_shift(L.bot(), d);
  EXPECT_TRUE(all.empty());
  EXPECT_TRUE(L.is_top(all.default_rank()));
}

TEST(Rdt, Project) {
  auto d = houses();
  std::vector<std::string> city_only{"CITY"};
  auto p = project(city_only, d);
  RelationScheme cs({{"CITY", city(L)}});
  EXPECT_EQ(p, table(cs, L, {{{{"CITY", T("Vestal")}}, "0.9"}, {{{"CITY", T("Endicott")}}, "0.6"}}));

  RelationScheme ab({{"A", names(L)}, {"B", money(L)}});
  auto two = table(ab, L, {{{{"A", T("a")}, {"B", N(1)}}, "0.4"}, {{{"A", T("a")}, {"B", N(2)}}, "0.7"}});
  std::vector<std::string> a_only{"A"};
  RelationScheme as({{"A", names(L)}});
  EXPECT_EQ(project(a_only, two), table(as, L, {{{{"A", T("a")}}, "0.7"}}));
  std::vector<std::string> bad{"Q"};
  EXPECT_THROW(project(bad, d), OpError);
}

TEST(Rdt, ProjectShiftedOverInfiniteDomain) {
  auto shifted = a_shift(L.parse("0.8"), houses());
  std::vector<std::string> city_only{"CITY"};
  auto p = project(city_only, shifted);
  EXPECT_EQ(p.default_rank(), L.parse("0.2"));
  EXPECT_EQ(p.rank_of(Tuple{{T("Vestal")}}), L.top());
  EXPECT_EQ(p.rank_of(Tuple{{T("Endicott")}}), L.parse("0.8"));
}

TEST(Rdt, Select) {
  auto d = houses();
  EXPECT_EQ(select_sim(d, "CITY", T("Vestal")),
            table(city_price(L), L,
                  {{{{"CITY", T("Vestal")}, {"PRICE", N(10)}}, "0.9"},
                   {{{"CITY", T("Endicott")}, {"PRICE", N(30)}}, "0.3"}}));
  EXPECT_TRUE(select_sim(d, "CITY", T("Owego")).empty());
  auto vestal = table(city_price(L), L, {{{{"CITY", T("Vestal")}, {"PRICE", N(10)}}, "0.9"}});
  EXPECT_EQ(select_sim(vestal, "CITY", T("Vestal")), vestal);
  EXPECT_THROW(select_sim(a_shift(L.parse("0.5"), d), "CITY", T("Vestal")), OpError);
  EXPECT_THROW(select_sim(d, "NOPE", T("Vestal")), OpError);
}

TEST(Rdt, SelectAttributes) {
  RelationScheme s({{"P", money(L)}, {"Q", money(L)}});
  auto d = table(s, L, {{{{"P", N(10)}, {"Q", N(10)}}, "0.9"}, {{{"P", N(10)}, {"Q", N(40)}}, "0.9"}});
  EXPECT_EQ(select_attr(d, "P", "Q"),
            table(s, L, {{{{"P", N(10)}, {"Q", N(10)}}, "0.9"}, {{{"P", N(10)}, {"Q", N(40)}}, "0.6"}}));
  EXPECT_EQ(select_attr(d, "P", "P"), d);
  RelationScheme mixed({{"P", money(L)}, {"C", city(L)}});
  EXPECT_THROW(select_attr(RankedDataTable(mixed, L), "P", "C"), OpError);
}

TEST(Rdt, Cartesian) {
  auto d1 = kv(L, {{"x", "0.9"}});
  RelationScheme js({{"J", names(L)}});
  auto d2 = table(js, L, {{{{"J", T("p")}}, "0.7"}});
  auto prod = cartesian(d1, d2);
  ASSERT_EQ(prod.size(), 1u);
  EXPECT_EQ(prod.rows().begin()->second, L.parse("0.6"));
  EXPECT_TRUE(cartesian(d1, RankedDataTable(js, L)).empty());
  EXPECT_THROW(cartesian(d1, d1), OpError);

  auto crisp1 = kv(L, {{"x", "1"}, {"y", "1"}});
  auto crisp2 = table(js, L, {{{{"J", T("p")}}, "1"}, {{{"J", T("q")}}, "1"}, {{{"J", T("r")}}, "1"}});
  auto six = cartesian(crisp1, crisp2);
  EXPECT_EQ(six.size(), 6u);
  for (const auto& [t, r] : six.rows()) EXPECT_TRUE(L.is_top(r));
}

TEST(Rdt, Join) {
  auto j = join_sim(houses(), customers(), "PRICE", "BUDGET");
  RelationScheme s = houses().scheme().concat(customers().scheme());
  auto row = [&](const char* c, double p, const char* rank) {
    return std::pair<std::map<std::string, Value>, const char*>{
        {{"CITY", T(c)}, {"PRICE", N(p)}, {"NAME", T("Grant")}, {"BUDGET", N(40)}}, rank};
  };
  EXPECT_EQ(j, table(s, L, {row("Vestal", 10, "0.6"), row("Endicott", 30, "0.5")}));
  EXPECT_EQ(j, select_attr(cartesian(houses(), customers()), "PRICE", "BUDGET"));
}

TEST(Rdt, ClosureSelection) {
  RelationScheme cs({{"CITY", city(L, "0.8")}});
  auto x = table(cs, L, {{{{"CITY", T("Vestal")}}, "1"}});
  auto r = select_closure(x, "CITY", T("Vestal"), CandidateMode::support);
  EXPECT_EQ(r, x);

  RelationScheme finite({{"CITY", std::make_shared<const Domain>(
                                      "CITY", ValueKind::text, L,
                                      TableSimilarity{{{T("Vestal"), T("Endicott"), L.parse("0.8")}}},
                                      std::vector<Value>{T("Vestal"), T("Endicott")})}});
  auto y = table(finite, L, {{{{"CITY", T("Vestal")}}, "1"}});
  auto full = select_closure(y, "CITY", T("Vestal"), CandidateMode::full);
  // rank(Endicott) = 1 (x) 0.8 (x) (Endicott ~ Vestal) = 0.6
  EXPECT_EQ(full.rank_of(Tuple{{T("Endicott")}}), L.parse("0.6"));
  EXPECT_EQ(full.rank_of(Tuple{{T("Vestal")}}), L.top());
  EXPECT_TRUE(select_closure(RankedDataTable(finite, L), "CITY", T("Vestal"), CandidateMode::full).empty());

  auto id = kv(L, {{"x", "0.9"}, {"y", "0.5"}});
  EXPECT_EQ(select_closure(id, "K", T("x")), select_sim(id, "K", T("x")));
  EXPECT_THROW(select_closure(id, "K", T("x"), CandidateMode::full), OpError);
}
