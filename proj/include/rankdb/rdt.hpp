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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rankdb/lattice.hpp"
#include "rankdb/schema.hpp"

namespace rankdb {

/// A ranked data table: an L-set of tuples over a relation scheme.
///
/// Only finitely many tuples are stored; every other tuple of Tupl(T) has
/// default_rank(). The default is 0 for everything except the results of
/// shifts and componentwise residua. Rows whose rank equals the default are
/// never stored, so two tables are equal iff their representations are.
class RankedDataTable {
 public:
  using Rows = std::map<Tuple, TruthDegree>;

  /// Empty table with default rank 0.
  RankedDataTable(RelationScheme scheme, ResiduatedLattice lattice);

  /// Validates every tuple against the scheme and every rank against the
  /// lattice, then drops rows whose rank equals the default.
  RankedDataTable(RelationScheme scheme, ResiduatedLattice lattice, Rows rows,
                  std::optional<TruthDegree> default_rank = std::nullopt);

  /// Like the Rows constructor but rejects a tuple listed twice.
  static RankedDataTable from_rows(
      RelationScheme scheme, ResiduatedLattice lattice,
      std::vector<std::pair<Tuple, TruthDegree>> rows);

  const RelationScheme& scheme() const { return scheme_; }
  const ResiduatedLattice& lattice() const { return lattice_; }
  const TruthDegree& default_rank() const { return default_; }
  const Rows& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  /// D(t). Throws OpError(scheme_mismatch) for a tuple of the wrong arity.
  TruthDegree rank_of(const Tuple& t) const;

  friend bool operator==(const RankedDataTable& a, const RankedDataTable& b);

 private:
  RelationScheme scheme_;
  ResiduatedLattice lattice_;
  TruthDegree default_;
  Rows rows_;
};

enum class Combine { union_, meet, otimes, residuum };

std::string to_string(Combine op);

/// Pointwise join, meet, tnorm or residuum of two tables on one scheme.
RankedDataTable combine(Combine op, const RankedDataTable& d1,
                        const RankedDataTable& d2);

/// (a -> D)(t) = a -> D(t) for every tuple, including the default.
RankedDataTable a_shift(const TruthDegree& a, const RankedDataTable& d);

/// (pi_R D)(r) = sup over extensions s of D(rs).
///
/// Off-support extensions contribute the default. When every projected-away
/// domain is enumerable and all extensions of r are stored, the default is
/// left out, which makes the result exact on finite universes.
RankedDataTable project(std::span<const std::string> attributes,
                        const RankedDataTable& d);

/// (sigma_{y~d} D)(t) = D(t) (x) (t(y) ~ d). Needs default rank 0.
RankedDataTable select_sim(const RankedDataTable& d, std::string_view y,
                           const Value& value);

/// (sigma_{p~q} D)(t) = D(t) (x) (t(p) ~ t(q)); p and q share a domain.
RankedDataTable select_attr(const RankedDataTable& d, std::string_view p,
                            std::string_view q);

/// (D1 x D2)(st) = D1(s) (x) D2(t) over disjoint schemes.
RankedDataTable cartesian(const RankedDataTable& d1, const RankedDataTable& d2);

/// select_attr(cartesian(d1, d2), p, q).
RankedDataTable join_sim(const RankedDataTable& d1, const RankedDataTable& d2,
                         std::string_view p, std::string_view q);

/// Which tuples select_closure ranks: the stored support of the input, or
/// every tuple of the (finite) universe.
enum class CandidateMode { support, full };

/// Selection compatible with tuple similarity:
///   rank(t) = sup over stored t' of D(t') (x) (t' ~ t) (x) (t(y) ~ d).
RankedDataTable select_closure(const RankedDataTable& d, std::string_view y,
                               const Value& value,
                               CandidateMode mode = CandidateMode::support);

/// Whether every tuple over the scheme is accounted for by `count` distinct
/// stored tuples (only possible over enumerable domains).
bool covers_universe(const RelationScheme& scheme, std::size_t count);

}  // namespace rankdb
