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

#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "rankdb/rdt.hpp"
#include "rankdb/schema.hpp"

namespace fixtures {

using namespace rankdb;

inline DomainPtr city(const ResiduatedLattice& L, const char* ve = "0.7") {
  TableSimilarity t;
  t.pairs.push_back({Value::text("Vestal"), Value::text("Endicott"), L.parse(ve)});
  return std::make_shared<const Domain>("CITY", ValueKind::text, L, t);
}

inline DomainPtr money(const ResiduatedLattice& L, double k = 100) {
  return std::make_shared<const Domain>("MONEY", ValueKind::number, L, RampSimilarity{k});
}

inline DomainPtr names(const ResiduatedLattice& L) {
  return std::make_shared<const Domain>("NAMES", ValueKind::text, L);
}

/// {CITY, PRICE}, the scheme of the small houses examples.
inline RelationScheme city_price(const ResiduatedLattice& L) {
  return RelationScheme({{"CITY", city(L)}, {"PRICE", money(L)}});
}

inline RankedDataTable table(const RelationScheme& s, const ResiduatedLattice& L,
                             std::vector<std::pair<std::map<std::string, Value>, const char*>> rows,
                             const char* def = "0") {
  RankedDataTable::Rows out;
  for (auto& [assignment, rank] : rows) out.emplace(rankdb::make_tuple(s, assignment), L.parse(rank));
  return RankedDataTable(s, L, std::move(out), L.parse(def));
}

inline Value T(const char* s) { return Value::text(s); }
inline Value N(double x) { return Value::number(x); }

/// One text attribute K with identity similarity, tuples named x, y, z.
inline RelationScheme keys(const ResiduatedLattice& L) {
  return RelationScheme({{"K", names(L)}});
}

inline RankedDataTable kv(const ResiduatedLattice& L,
                          std::vector<std::pair<const char*, const char*>> rows,
                          const char* def = "0") {
  RelationScheme s = keys(L);
  std::vector<std::pair<std::map<std::string, Value>, const char*>> r;
  for (auto [k, rank] : rows) r.push_back({{{"K", T(k)}}, rank});
  return table(s, L, std::move(r), def);
}

}  // namespace fixtures
