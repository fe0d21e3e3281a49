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
#include "rankdb/testkit.hpp"

using namespace rankdb;
using namespace fixtures;
namespace tk = rankdb::testkit;

TEST(Testkit, GenIsDeterministic) {
  tk::GenSpec spec;
  spec.seed = 42;
  spec.attributes = 3;
  spec.values_per_domain = 4;
  spec.rows = 10;
  EXPECT_EQ(tk::gen_rdt(spec), tk::gen_rdt(spec));
  auto d = tk::gen_rdt(spec);
  EXPECT_LE(d.size(), 10u);
  EXPECT_EQ(d.scheme().size(), 3u);
  spec.attributes = 4;
  EXPECT_THROW(tk::gen_rdt(spec), Error);
}

TEST(Testkit, Transitivize) {
  auto L = ResiduatedLattice::lukasiewicz();
  std::vector<Value> vs{T("a"), T("b"), T("c")};
  TableSimilarity t;
  t.pairs.push_back({T("a"), T("b"), L.parse("0.9")});
  t.pairs.push_back({T("b"), T("c"), L.parse("0.9")});
  auto closed = tk::transitivize(vs, t, L);
  Domain d("D", ValueKind::text, L, closed, vs);
  EXPECT_NEAR(d.similarity(T("a"), T("c")).value(), 0.8, 1e-12);
  EXPECT_EQ(validate_similarity(d).transitive, std::optional<bool>(true));
  EXPECT_TRUE(tk::satisfies_tr(d, Hedge::identity));
}

TEST(Testkit, GeneratedDomainsHaveRequestedStyle) {
  tk::Rng rng(7);
  auto L = ResiduatedLattice::chain(10);
  for (int i = 0; i < 50; ++i) {
    auto sep = tk::random_domain(rng, L, "S", ValueKind::text, 4, tk::SimilarityStyle::separating);
    EXPECT_TRUE(validate_similarity(*sep).separating);
    auto tr = tk::random_domain(rng, L, "T", ValueKind::text, 4, tk::SimilarityStyle::transitive);
    EXPECT_EQ(validate_similarity(*tr).transitive, std::optional<bool>(true));
    EXPECT_TRUE(tr->enumerable());
  }
}

TEST(Testkit, OracleAgreesOnFixedPlan) {
  auto L = ResiduatedLattice::chain(100);
  auto c3 = std::make_shared<const Domain>(
      "CITY", ValueKind::text, L, TableSimilarity{{{T("Vestal"), T("Endicott"), L.parse("0.7")}}},
      std::vector<Value>{T("Vestal"), T("Endicott"), T("Owego")});
  auto m3 = std::make_shared<const Domain>("MONEY", ValueKind::number, L, RampSimilarity{100},
                                           std::vector<Value>{N(10), N(20), N(30)});
  RelationScheme s({{"CITY", c3}, {"PRICE", m3}});
  TableCatalog c{{"houses", table(s, L,
                                  {{{{"CITY", T("Vestal")}, {"PRICE", N(10)}}, "0.9"},
                                   {{{"CITY", T("Endicott")}, {"PRICE", N(30)}}, "0.6"}})}};
  auto fc = tk::materialize(c);
  for (const char* q : {"select houses where CITY ~ 'Vestal'", "project [CITY] houses",
                        "union (houses, select houses where PRICE ~ 20)"}) {
    auto e = parse_query(q);
    EXPECT_EQ(tk::diff(evaluate(*e, c), tk::oracle_eval(*e, fc, L)), std::nullopt) << q;
  }
}

TEST(Testkit, RandomPlansEvaluate) {
  tk::Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    auto w = tk::random_world(rng, tk::WorldSpec{});
    auto c = tk::random_catalog(rng, w);
    auto e = tk::random_plan(rng, w, tk::PlanSpec{});
    auto got = evaluate(*e, c);
    EXPECT_EQ(tk::diff(got, tk::oracle_eval(*e, tk::materialize(c), w.lattice)), std::nullopt)
        << print_query(*e);
  }
}
