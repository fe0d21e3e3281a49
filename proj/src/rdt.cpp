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

#include "rankdb/rdt.hpp"

#include <algorithm>
#include <limits>

namespace rankdb {

namespace {

void require_same_lattice(const ResiduatedLattice& a,
                          const ResiduatedLattice& b) {
  if (!(a == b)) {
    throw OpError(OpErrorKind::lattice_mismatch, a.name() + " vs " + b.name());
  }
}

void require_zero_default(const RankedDataTable& d, const char* op) {
  if (!d.lattice().is_bot(d.default_rank())) {
    throw OpError(OpErrorKind::nonzero_default_unsupported,
                  std::string(op) + " needs a table with default rank 0, got " +
                      format_degree(d.default_rank()));
  }
}

const Domain& conforming_domain(const RankedDataTable& d, std::string_view y,
                                const Value& value) {
  const Domain& dom = *d.scheme().attribute(y).domain;
  if (value.kind() != dom.value_kind()) {
    throw OpError(OpErrorKind::type_mismatch,
                  "'" + value.to_string() + "' is not a " +
                      to_string(dom.value_kind()) + " value of " +
                      std::string(y));
  }
  return dom;
}

}  // namespace

RankedDataTable::RankedDataTable(RelationScheme scheme,
                                 ResiduatedLattice lattice)
    : scheme_(std::move(scheme)), lattice_(lattice), default_(lattice.bot()) {}

RankedDataTable::RankedDataTable(RelationScheme scheme,
                                 ResiduatedLattice lattice, Rows rows,
                                 std::optional<TruthDegree> default_rank)
    : scheme_(std::move(scheme)),
      lattice_(lattice),
      default_(default_rank.value_or(lattice.bot())),
      rows_(std::move(rows)) {
  if (!lattice_.owns(default_)) {
    throw OpError(OpErrorKind::lattice_mismatch, "default rank");
  }
  for (auto it = rows_.begin(); it != rows_.end();) {
    check_tuple(scheme_, it->first);
    if (!lattice_.owns(it->second)) {
      throw OpError(OpErrorKind::lattice_mismatch,
                    "rank of " + format_tuple(it->first));
    }
    if (it->second == default_) {
      it = rows_.erase(it);
    } else {
      ++it;
    }
  }
}

RankedDataTable RankedDataTable::from_rows(
    RelationScheme scheme, ResiduatedLattice lattice,
    std::vector<std::pair<Tuple, TruthDegree>> rows) {
  Rows map;
  for (auto& [t, r] : rows) {
    std::string shown = format_tuple(t);
    if (!map.emplace(std::move(t), r).second) {
      throw Error("duplicate tuple " + shown);
    }
  }
  return RankedDataTable(std::move(scheme), lattice, std::move(map));
}

TruthDegree RankedDataTable::rank_of(const Tuple& t) const {
  if (t.values.size() != scheme_.size()) {
    throw OpError(OpErrorKind::scheme_mismatch,
                  format_tuple(t) + " is not a tuple over " + scheme_.to_string());
  }
  auto it = rows_.find(t);
  return it == rows_.end() ? default_ : it->second;
}

bool operator==(const RankedDataTable& a, const RankedDataTable& b) {
  return a.scheme_ == b.scheme_ && a.lattice_ == b.lattice_ &&
         a.default_ == b.default_ && a.rows_ == b.rows_;
}

std::string to_string(Combine op) {
  switch (op) {
    case Combine::union_:
      return "union";
    case Combine::meet:
      return "meet";
    case Combine::otimes:
      return "otimes";
    case Combine::residuum:
      return "residuum";
  }
  return "?";
}

RankedDataTable combine(Combine op, const RankedDataTable& d1,
                        const RankedDataTable& d2) {
  require_same_lattice(d1.lattice(), d2.lattice());
  if (!(d1.scheme() == d2.scheme())) {
    throw OpError(OpErrorKind::scheme_mismatch,
                  d1.scheme().to_string() + " vs " + d2.scheme().to_string());
  }
  const auto& L = d1.lattice();
  auto apply = [&](const TruthDegree& a, const TruthDegree& b) {
    switch (op) {
      case Combine::union_:
        return L.join(a, b);
      case Combine::meet:
        return L.meet(a, b);
      case Combine::otimes:
        return L.tnorm(a, b);
      case Combine::residuum:
        return L.residuum(a, b);
    }
    return L.bot();
  };
  RankedDataTable::Rows rows;
  for (const auto& [t, r] : d1.rows()) rows.emplace(t, apply(r, d2.rank_of(t)));
  for (const auto& [t, r] : d2.rows()) {
    if (!d1.rows().contains(t)) rows.emplace(t, apply(d1.default_rank(), r));
  }
  return RankedDataTable(d1.scheme(), L, std::move(rows),
                         apply(d1.default_rank(), d2.default_rank()));
}

RankedDataTable a_shift(const TruthDegree& a, const RankedDataTable& d) {
  const auto& L = d.lattice();
  if (!L.owns(a)) {
    throw OpError(OpErrorKind::lattice_mismatch,
                  "shift degree is not an element of " + L.name());
  }
  RankedDataTable::Rows rows;
  for (const auto& [t, r] : d.rows()) rows.emplace(t, L.residuum(a, r));
  return RankedDataTable(d.scheme(), L, std::move(rows),
                         L.residuum(a, d.default_rank()));
}

bool covers_universe(const RelationScheme& scheme, std::size_t count) {
  std::size_t total = 1;
  for (const auto& a : scheme.attributes()) {
    if (!a.domain->enumerable()) return false;
    std::size_t n = a.domain->universe().size();
    if (n != 0 && total > std::numeric_limits<std::size_t>::max() / n) {
      return false;
    }
    total *= n;
  }
  return count >= total;
}

RankedDataTable project(std::span<const std::string> attributes,
                        const RankedDataTable& d) {
  const auto& L = d.lattice();
  RelationScheme target = d.scheme().restrict(attributes);
  std::vector<Attribute> dropped;
  for (const auto& a : d.scheme().attributes()) {
    if (!target.contains(a.name)) dropped.push_back(a);
  }
  RelationScheme rest(std::move(dropped));

  struct Group {
    TruthDegree sup;
    std::size_t extensions;
  };
  std::map<Tuple, Group> groups;
  for (const auto& [t, r] : d.rows()) {
    Tuple key = tuple_restrict(d.scheme(), t, target);
    auto [it, inserted] = groups.try_emplace(std::move(key), Group{r, 1});
    if (!inserted) {
      it->second.sup = L.join(it->second.sup, r);
      ++it->second.extensions;
    }
  }
  RankedDataTable::Rows rows;
  for (auto& [key, g] : groups) {
    TruthDegree rank = covers_universe(rest, g.extensions)
                           ? g.sup
                           : L.join(g.sup, d.default_rank());
    rows.emplace(key, rank);
  }
  return RankedDataTable(std::move(target), L, std::move(rows),
                         d.default_rank());
}

RankedDataTable select_sim(const RankedDataTable& d, std::string_view y,
                           const Value& value) {
  const Domain& dom = conforming_domain(d, y, value);
  require_zero_default(d, "similarity selection");
  const auto& L = d.lattice();
  std::size_t col = *d.scheme().index_of(y);
  RankedDataTable::Rows rows;
  for (const auto& [t, r] : d.rows()) {
    rows.emplace(t, L.tnorm(r, dom.similarity(t.values[col], value)));
  }
  return RankedDataTable(d.scheme(), L, std::move(rows));
}

RankedDataTable select_attr(const RankedDataTable& d, std::string_view p,
                            std::string_view q) {
  const Attribute& ap = d.scheme().attribute(p);
  const Attribute& aq = d.scheme().attribute(q);
  if (ap.domain->id() != aq.domain->id()) {
    throw OpError(OpErrorKind::missing_similarity,
                  std::string(p) + " (" + ap.domain->id() + ") and " +
                      std::string(q) + " (" + aq.domain->id() +
                      ") do not share a domain");
  }
  require_zero_default(d, "attribute selection");
  const auto& L = d.lattice();
  std::size_t ip = *d.scheme().index_of(p);
  std::size_t iq = *d.scheme().index_of(q);
  RankedDataTable::Rows rows;
  for (const auto& [t, r] : d.rows()) {
    rows.emplace(t, L.tnorm(r, ap.domain->similarity(t.values[ip], t.values[iq])));
  }
  return RankedDataTable(d.scheme(), L, std::move(rows));
}

RankedDataTable cartesian(const RankedDataTable& d1,
                          const RankedDataTable& d2) {
  require_same_lattice(d1.lattice(), d2.lattice());
  RelationScheme joint = d1.scheme().concat(d2.scheme());
  require_zero_default(d1, "cartesian product");
  require_zero_default(d2, "cartesian product");
  const auto& L = d1.lattice();

  // Column i of the result comes from (left?, index).
  std::vector<std::pair<bool, std::size_t>> source;
  for (const auto& a : joint.attributes()) {
    if (auto i = d1.scheme().index_of(a.name)) {
      source.emplace_back(true, *i);
    } else {
      source.emplace_back(false, *d2.scheme().index_of(a.name));
    }
  }
  RankedDataTable::Rows rows;
  for (const auto& [s, rs] : d1.rows()) {
    for (const auto& [t, rt] : d2.rows()) {
      Tuple st;
      st.values.reserve(source.size());
      for (auto [left, i] : source) {
        st.values.push_back(left ? s.values[i] : t.values[i]);
      }
      rows.emplace(std::move(st), L.tnorm(rs, rt));
    }
  }
  return RankedDataTable(std::move(joint), L, std::move(rows));
}

RankedDataTable join_sim(const RankedDataTable& d1, const RankedDataTable& d2,
                         std::string_view p, std::string_view q) {
  return select_attr(cartesian(d1, d2), p, q);
}

RankedDataTable select_closure(const RankedDataTable& d, std::string_view y,
                               const Value& value, CandidateMode mode) {
  const Domain& dom = conforming_domain(d, y, value);
  require_zero_default(d, "closure selection");
  const auto& L = d.lattice();
  std::size_t col = *d.scheme().index_of(y);

  std::vector<Tuple> candidates;
  if (mode == CandidateMode::full) {
    candidates = enumerate_tuples(d.scheme());
  } else {
    for (const auto& [t, r] : d.rows()) candidates.push_back(t);
  }
  RankedDataTable::Rows rows;
  for (auto& t : candidates) {
    TruthDegree match = dom.similarity(t.values[col], value);
    if (L.is_bot(match)) continue;
    TruthDegree sup = L.bot();
    for (const auto& [u, r] : d.rows()) {
      TruthDegree close = L.tnorm(r, tuple_similarity(d.scheme(), u, t, L));
      sup = L.join(sup, L.tnorm(close, match));
    }
    rows.emplace(std::move(t), sup);
  }
  return RankedDataTable(d.scheme(), L, std::move(rows));
}

}  // namespace rankdb
