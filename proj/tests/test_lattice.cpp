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

#include "rankdb/lattice.hpp"

using namespace rankdb;

namespace {

const ResiduatedLattice kLuk = ResiduatedLattice::lukasiewicz();
const ResiduatedLattice kGoedel = ResiduatedLattice::goedel();
const ResiduatedLattice kProduct = ResiduatedLattice::product();

double v(const ResiduatedLattice& L, const char* a) { return L.parse(a).value(); }

}  // namespace

TEST(Lattice, LukasiewiczTnorm) {
  EXPECT_NEAR(kLuk.tnorm(kLuk.parse("0.93"), kLuk.parse("0.98")).value(), 0.91, 1e-12);
  EXPECT_TRUE(kLuk.is_bot(kLuk.tnorm(kLuk.degree(0.3), kLuk.degree(0.5))));
  for (const auto* L : {&kLuk, &kGoedel, &kProduct}) {
    TruthDegree a = L->degree(0.37);
    EXPECT_EQ(L->tnorm(a, L->top()), a) << L->name();
    EXPECT_EQ(L->tnorm(L->top(), a), a) << L->name();
  }
}

TEST(Lattice, GoedelAndProduct) {
  EXPECT_EQ(kGoedel.tnorm(kGoedel.degree(0.4), kGoedel.degree(0.7)), kGoedel.degree(0.4));
  EXPECT_TRUE(kGoedel.is_top(kGoedel.residuum(kGoedel.degree(0.2), kGoedel.degree(0.9))));
  EXPECT_EQ(kGoedel.residuum(kGoedel.degree(0.9), kGoedel.degree(0.2)), kGoedel.degree(0.2));
  EXPECT_NEAR(kProduct.residuum(kProduct.degree(0.8), kProduct.degree(0.2)).value(), 0.25, 1e-12);
  EXPECT_TRUE(kProduct.is_top(kProduct.residuum(kProduct.bot(), kProduct.bot())));
  EXPECT_NEAR(kProduct.tnorm(kProduct.degree(0.5), kProduct.degree(0.4)).value(), 0.2, 1e-12);
}

TEST(Lattice, Residuum) {
  EXPECT_NEAR(kLuk.residuum(kLuk.parse("0.9"), kLuk.parse("0.7")).value(), 0.8, 1e-12);
  EXPECT_TRUE(kLuk.is_top(kLuk.residuum(kLuk.degree(0.3), kLuk.degree(0.3))));
  for (const auto* L : {&kLuk, &kGoedel, &kProduct}) {
    EXPECT_TRUE(L->is_top(L->residuum(L->degree(0.2), L->degree(0.6)))) << L->name();
  }
}

TEST(Lattice, Biresiduum) {
  EXPECT_NEAR(kLuk.biresiduum(kLuk.parse("0.89"), kLuk.parse("0.91")).value(), 0.98, 1e-12);
  EXPECT_NEAR(kLuk.biresiduum(kLuk.parse("0.5"), kLuk.bot()).value(), 0.5, 1e-12);
  EXPECT_TRUE(kLuk.is_top(kLuk.biresiduum(kLuk.degree(0.4), kLuk.degree(0.4))));
  auto c = ResiduatedLattice::chain(100);
  EXPECT_EQ(c.biresiduum(c.parse("0.89"), c.parse("0.91")), c.parse("0.98"));
}

TEST(Lattice, ChainIsExact) {
  auto c2 = ResiduatedLattice::chain(2);
  auto carrier = c2.carrier();
  ASSERT_EQ(carrier.size(), 3u);
  EXPECT_EQ(carrier[1].value(), 0.5);
  EXPECT_TRUE(c2.is_bot(c2.tnorm(carrier[1], carrier[1])));
  auto c = ResiduatedLattice::chain(100);
  EXPECT_EQ(c.tnorm(c.parse("0.93"), c.parse("0.98")), c.parse("0.91"));
  EXPECT_EQ(c.residuum(c.parse("0.9"), c.parse("0.7")), c.parse("0.8"));
  EXPECT_EQ(c.parse("0.25").steps(), 25);
  EXPECT_EQ(c.parse("1").steps(), 100);
  EXPECT_EQ(c.parse("1.000").steps(), 100);
}

TEST(Lattice, ParseRejects) {
  auto c = ResiduatedLattice::chain(4);
  EXPECT_THROW(c.parse("0.3"), LatticeError);
  EXPECT_THROW(kLuk.parse("1.2"), LatticeError);
  EXPECT_THROW(kLuk.parse("-0.1"), LatticeError);
  EXPECT_THROW(kLuk.parse("abc"), LatticeError);
  EXPECT_THROW(kLuk.parse(""), LatticeError);
  EXPECT_THROW(kLuk.parse("1e-3"), LatticeError);
  EXPECT_THROW(ResiduatedLattice::chain(0), LatticeError);
  EXPECT_THROW(c.degree(0.3), LatticeError);
  EXPECT_EQ(c.degree(0.75).steps(), 3);
}

TEST(Lattice, Fractions) {
  auto c = ResiduatedLattice::chain(3);
  EXPECT_EQ(c.parse("1/3").steps(), 1);
  EXPECT_EQ(c.parse("2/6").steps(), 1);
  EXPECT_THROW(c.parse("1/2"), LatticeError);
  EXPECT_THROW(c.parse("4/3"), LatticeError);
  EXPECT_THROW(c.parse("1/0"), LatticeError);
  EXPECT_NEAR(kLuk.parse("1/3").value(), 1.0 / 3.0, 1e-15);
}

TEST(Lattice, Serialization) {
  auto c3 = ResiduatedLattice::chain(3);
  EXPECT_EQ(serialize_degree(c3.parse("1/3")), "1/3");
  EXPECT_EQ(serialize_degree(c3.top()), "1");
  EXPECT_EQ(serialize_degree(c3.bot()), "0");
  auto c8 = ResiduatedLattice::chain(8);
  EXPECT_EQ(serialize_degree(c8.from_steps(3)), "0.375");
  auto c100 = ResiduatedLattice::chain(100);
  EXPECT_EQ(serialize_degree(c100.parse("0.93")), "0.93");
  TruthDegree odd = kLuk.degree(0.1 + 0.2);
  EXPECT_EQ(kLuk.parse(serialize_degree(odd)), odd);
  EXPECT_EQ(format_degree(kLuk.parse("0.98")), "0.98");
  EXPECT_EQ(format_degree(c3.parse("1/3")), "0.333333333333");
}

TEST(Lattice, MixingLatticesIsAnError) {
  auto c = ResiduatedLattice::chain(4);
  auto d = ResiduatedLattice::chain(5);
  EXPECT_THROW(c.tnorm(c.top(), d.top()), LatticeError);
  EXPECT_THROW(kLuk.meet(kLuk.top(), kGoedel.top()), LatticeError);
}

TEST(Lattice, Names) {
  EXPECT_EQ(ResiduatedLattice::chain(20).name(), "chain(20)");
  EXPECT_EQ(parse_lattice_kind("godel"), LatticeKind::goedel);
  EXPECT_EQ(parse_lattice_kind("lukasiewicz"), LatticeKind::lukasiewicz);
  EXPECT_THROW(parse_lattice_kind("boolean"), LatticeError);
  EXPECT_EQ(ResiduatedLattice::make(LatticeKind::chain, 7), ResiduatedLattice::chain(7));
}

TEST(Hedge, Values) {
  EXPECT_EQ(apply_hedge(kLuk, Hedge::identity, kLuk.degree(0.7)), kLuk.degree(0.7));
  EXPECT_TRUE(kLuk.is_top(apply_hedge(kLuk, Hedge::globalization, kLuk.top())));
  EXPECT_TRUE(kLuk.is_bot(apply_hedge(kLuk, Hedge::globalization, kLuk.degree(0.999))));
  EXPECT_EQ(parse_hedge("globalization"), Hedge::globalization);
  EXPECT_THROW(parse_hedge("very"), Error);
  EXPECT_EQ(v(kLuk, "0.5"), 0.5);
}
