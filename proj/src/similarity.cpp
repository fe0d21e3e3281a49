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

#include "rankdb/similarity.hpp"

#include <set>

namespace rankdb {

std::string to_string(ComparisonMode mode) {
  switch (mode) {
    case ComparisonMode::rank_based:
      return "rank";
    case ComparisonMode::tuple_based:
      return "tuple";
    case ComparisonMode::hedged:
      return "hedged";
  }
  return "?";
}

ComparisonMode parse_comparison_mode(std::string_view name) {
  if (name == "rank" || name == "rank_based") return ComparisonMode::rank_based;
  if (name == "tuple" || name == "tuple_based") return ComparisonMode::tuple_based;
  if (name == "hedged") return ComparisonMode::hedged;
  throw Error("unknown comparison mode '" + std::string(name) + "'");
}

namespace {

void require_comparable(const RankedDataTable& d1, const RankedDataTable& d2) {
  if (!(d1.lattice() == d2.lattice())) {
    throw OpError(OpErrorKind::lattice_mismatch,
                  d1.lattice().name() + " vs " + d2.lattice().name());
  }
  if (!(d1.scheme() == d2.scheme())) {
    throw OpError(OpErrorKind::scheme_mismatch,
                  d1.scheme().to_string() + " vs " + d2.scheme().to_string());
  }
}

TruthDegree rank_subsethood(const RankedDataTable& d1,
                            const RankedDataTable& d2, Enumeration how) {
  const auto& L = d1.lattice();
  TruthDegree acc = L.top();
  if (how == Enumeration::full) {
    for (const auto& t : enumerate_tuples(d1.scheme())) {
      acc = L.meet(acc, L.residuum(d1.rank_of(t), d2.rank_of(t)));
    }
    return acc;
  }
  std::size_t support = 0;
  for (const auto& [t, r] : d1.rows()) {
    acc = L.meet(acc, L.residuum(r, d2.rank_of(t)));
    ++support;
  }
  for (const auto& [t, r] : d2.rows()) {
    if (d1.rows().contains(t)) continue;
    acc = L.meet(acc, L.residuum(d1.default_rank(), r));
    ++support;
  }
  // Every tuple outside both supports contributes the same default term.
  if (!covers_universe(d1.scheme(), support)) {
    acc = L.meet(acc, L.residuum(d1.default_rank(), d2.default_rank()));
  }
  return acc;
}

TruthDegree hedged_subsethood(const RankedDataTable& d1,
                              const RankedDataTable& d2, Hedge hedge,
                              Enumeration how) {
  const auto& L = d1.lattice();
  for (const auto* d : {&d1, &d2}) {
    if (!L.is_bot(d->default_rank())) {
      throw OpError(OpErrorKind::nonzero_default_unsupported,
                    "tuple-based comparison needs default rank 0");
    }
  }
  const auto& scheme = d1.scheme();
  // Off-support t' add D2(t') = 0; off-support t add 0 -> x = 1.
  std::vector<Tuple> outer;
  if (how == Enumeration::full) {
    outer = enumerate_tuples(scheme);
  } else {
    for (const auto& [t, r] : d1.rows()) outer.push_back(t);
  }
  TruthDegree acc = L.top();
  for (const auto& t : outer) {
    TruthDegree r = d1.rank_of(t);
    if (L.is_bot(r)) continue;
    TruthDegree best = L.bot();
    for (const auto& [u, ru] : d2.rows()) {
      TruthDegree close = apply_hedge(L, hedge, tuple_similarity(scheme, t, u, L));
      best = L.join(best, L.tnorm(ru, close));
      if (L.is_top(best)) break;
    }
    acc = L.meet(acc, L.residuum(r, best));
    if (L.is_bot(acc)) break;
  }
  return acc;
}

}  // namespace

TruthDegree subsethood(const RankedDataTable& d1, const RankedDataTable& d2,
                       const ComparisonConfig& cfg) {
  require_comparable(d1, d2);
  switch (cfg.mode) {
    case ComparisonMode::rank_based:
      return rank_subsethood(d1, d2, cfg.enumeration);
    case ComparisonMode::tuple_based:
      return hedged_subsethood(d1, d2, Hedge::identity, cfg.enumeration);
    case ComparisonMode::hedged:
      return hedged_subsethood(d1, d2, cfg.hedge, cfg.enumeration);
  }
  return d1.lattice().bot();
}

TruthDegree table_similarity(const RankedDataTable& d1,
                             const RankedDataTable& d2,
                             const ComparisonConfig& cfg) {
  return compare(d1, d2, cfg).similarity;
}

Comparison compare(const RankedDataTable& d1, const RankedDataTable& d2,
                   const ComparisonConfig& cfg) {
  TruthDegree fwd = subsethood(d1, d2, cfg);
  TruthDegree bwd = subsethood(d2, d1, cfg);
  return Comparison{fwd, bwd, d1.lattice().meet(fwd, bwd)};
}

}  // namespace rankdb
