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

// Random instances and definition-level oracles for the property suites.
//
// Everything here works on small finite universes so that the oracles can
// enumerate Tupl(T) outright. Generation is deterministic given the seed.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rankdb/lattice.hpp"
#include "rankdb/query.hpp"
#include "rankdb/rdt.hpp"
#include "rankdb/schema.hpp"
#include "rankdb/similarity.hpp"

namespace rankdb::testkit {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }
  double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
  bool chance(double p) { return unit() < p; }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(v.size()) - 1))];
  }
  /// An independent generator derived from this one.
  Rng split() { return Rng(next() ^ 0x9e3779b97f4a7c15ULL); }

 private:
  std::mt19937_64 engine_;
};

enum class SimilarityStyle {
  identity,
  random,      // reflexive, symmetric, arbitrary degrees
  separating,  // random with every off-diagonal degree below 1
  transitive,  // random, then closed under the tnorm
};

/// Random degree of a chain or unit-interval lattice; nonzero if asked.
TruthDegree random_degree(Rng& rng, const ResiduatedLattice& L,
                          bool nonzero = false);

/// A finite domain with `values` elements. Text domains hold "v0", "v1",
/// ...; numeric ones hold 0, 1, ... and use a ramp when style is random.
DomainPtr random_domain(Rng& rng, const ResiduatedLattice& L, std::string id,
                        ValueKind kind, std::size_t values,
                        SimilarityStyle style);

/// Table similarity closed under max-tnorm composition.
TableSimilarity transitivize(const std::vector<Value>& values,
                             const TableSimilarity& sim,
                             const ResiduatedLattice& L);

/// Exhaustive check of (u~v)* (x) (v~w)* <= (u~w)* over the universe.
bool satisfies_tr(const Domain& d, Hedge h);

struct GenSpec {
  std::uint32_t chain_size = 4;
  std::size_t attributes = 2;         // at most 3
  std::size_t values_per_domain = 2;  // at most 4
  std::size_t rows = 3;
  SimilarityStyle style = SimilarityStyle::random;
  std::uint64_t seed = 1;
};

/// Table with exactly spec.rows distinct tuples and nonzero chain ranks.
/// Throws Error when the universe has fewer tuples than requested.
RankedDataTable gen_rdt(const GenSpec& spec);

/// Random table over a finite scheme with up to max_rows rows.
RankedDataTable random_table(Rng& rng, const RelationScheme& scheme,
                             const ResiduatedLattice& L, std::size_t max_rows);

/// A nearby table: some ranks nudged, some rows added or dropped.
RankedDataTable perturb(Rng& rng, const RankedDataTable& d,
                        std::size_t max_rows);

/// Two disjoint schemes over small domains; left_key and right_key share a
/// domain so the schemes can be joined.
struct World {
  ResiduatedLattice lattice;
  RelationScheme left;
  RelationScheme right;
  std::string left_key;
  std::string right_key;
  std::size_t max_rows;
};

struct WorldSpec {
  std::uint32_t chain_size = 20;
  std::size_t max_values = 4;
  std::size_t max_rows = 6;
  SimilarityStyle style = SimilarityStyle::random;
};

World random_world(Rng& rng, const WorldSpec& spec);

/// A random value of the attribute's (finite) domain.
Value random_value(Rng& rng, const Attribute& a);

/// Catalog with tables L1, L2 over world.left and R1, R2 over world.right.
TableCatalog random_catalog(Rng& rng, const World& world);

/// Same table names, each table perturbed.
TableCatalog perturb_catalog(Rng& rng, const TableCatalog& c,
                             std::size_t max_rows);

struct PlanSpec {
  int max_depth = 5;
  bool allow_closure = true;
  bool allow_shift = true;      // shift and residuum (nonzero defaults)
  bool allow_unsafe_defaults = false;  // selections over nonzero defaults
};

/// Random well-schemed plan over the catalog produced by random_catalog.
ExprPtr random_plan(Rng& rng, const World& world, const PlanSpec& spec);

// ---------------------------------------------------------------------------
// Oracles. They enumerate the whole universe and transcribe the defining
// formulas; they share no code with the relational operations.

/// Rank of every tuple of the universe.
struct FullTable {
  RelationScheme scheme;
  std::map<Tuple, TruthDegree> ranks;
};

/// Every tuple of the universe via rank_of.
FullTable materialize(const RankedDataTable& d);

using FullCatalog = std::map<std::string, FullTable>;

FullCatalog materialize(const TableCatalog& c);

/// Evaluates a plan by brute force. Closure selections range over the whole
/// universe.
FullTable oracle_eval(const QueryExpr& e, const FullCatalog& catalog,
                      const ResiduatedLattice& L);

enum class Measure { S, E, S_tuple, E_tuple, S_hedged, E_hedged };

TruthDegree oracle_measure(Measure m, const FullTable& d1, const FullTable& d2,
                           const ResiduatedLattice& L,
                           Hedge hedge = Hedge::identity);

/// Empty when engine and oracle agree on every tuple, otherwise the first
/// disagreement.
std::optional<std::string> diff(const RankedDataTable& engine,
                                const FullTable& oracle);

std::string dump(const RankedDataTable& d);

}  // namespace rankdb::testkit
