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
#include "rankdb/similarity.hpp"

using namespace rankdb;
using namespace fixtures;

namespace {
const ResiduatedLattice L = ResiduatedLattice::chain(100);

RankedDataTable one(double price) {
  return table(city_price(L), L, {{{{"CITY", T("Vestal")}, {"PRICE", N(price)}}, "0.9"}});
}
}  // namespace

TEST(Similarity, RankBased) {
  auto d1 = kv(L, {{"x", "0.9"}, {"y", "0.6"}});
  auto d2 = kv(L, {{"x", "0.8"}, {"y", "0.7"}});
  auto c = compare(d1, d2);
  EXPECT_EQ(c.forward, L.parse("0.9"));
  EXPECT_EQ(c.backward, L.parse("0.9"));
  EXPECT_EQ(c.similarity, L.parse("0.9"));
  EXPECT_TRUE(L.is_top(table_similarity(d1, d1)));
  EXPECT_TRUE(L.is_top(subsethood(RankedDataTable(keys(L), L), d1)));
  EXPECT_EQ(subsethood(d1, RankedDataTable(keys(L), L)), L.parse("0.1"));
}

TEST(Similarity, TupleBasedForgivesNearMisses) {
  auto a = one(10), b = one(11);
  EXPECT_EQ(table_similarity(a, b), L.parse("0.1"));
  EXPECT_EQ(table_similarity(a, b, ComparisonConfig::tuple_based()), L.parse("0.99"));
  EXPECT_EQ(table_similarity(a, b, ComparisonConfig::hedged(Hedge::identity)), L.parse("0.99"));
  EXPECT_EQ(table_similarity(a, b, ComparisonConfig::hedged(Hedge::globalization)), L.parse("0.1"));
  EXPECT_TRUE(L.leq(table_similarity(a, b), table_similarity(a, b, ComparisonConfig::tuple_based())));
}

TEST(Similarity, NonzeroDefaults) {
  auto d = kv(L, {{"x", "0.9"}});
  auto s = a_shift(L.parse("0.5"), d);
  EXPECT_EQ(subsethood(d, s), L.top());
  EXPECT_EQ(subsethood(s, d), L.parse("0.5"));
  EXPECT_THROW(subsethood(s, d, ComparisonConfig::tuple_based()), OpError);
}

TEST(Similarity, FullEnumerationAgrees) {
  auto dom = std::make_shared<const Domain>("D", ValueKind::text, L, IdentitySimilarity{},
                                            std::vector<Value>{T("x"), T("y"), T("z")});
  RelationScheme s({{"K", dom}});
  auto d1 = table(s, L, {{{{"K", T("x")}}, "0.9"}, {{{"K", T("y")}}, "0.6"}});
  auto d2 = a_shift(L.parse("0.7"), table(s, L, {{{{"K", T("x")}}, "0.8"}}));
  ComparisonConfig full;
  full.enumeration = Enumeration::full;
  EXPECT_EQ(table_similarity(d1, d2), table_similarity(d1, d2, full));
}

TEST(Similarity, Modes) {
  EXPECT_EQ(parse_comparison_mode("tuple"), ComparisonMode::tuple_based);
  EXPECT_EQ(to_string(ComparisonMode::rank_based), "rank");
  EXPECT_THROW(parse_comparison_mode("fuzzy"), Error);
}
