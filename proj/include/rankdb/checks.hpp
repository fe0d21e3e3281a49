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

// Seeded property suites over random finite instances. Each check reports
// how many instances it ran and the first violation it found, with the seed
// and instance number needed to replay it.

#include <cstdint>
#include <string>
#include <vector>

namespace rankdb::checks {

struct CheckOptions {
  std::uint64_t seed = 1;
  /// Base instance count; suites scale it (see each suite).
  std::size_t iterations = 1000;
};

struct CheckResult {
  std::string suite;
  std::string name;
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::string first_failure;
  double seconds = 0;

  bool ok() const { return violations == 0 && instances > 0; }
};

using Results = std::vector<CheckResult>;

/// Residuation on chain(n), n in {1, 2, 5, 12}, exhaustively, and on
/// 10 * iterations random triples per unit-interval lattice (tolerance 1e-9).
Results adjointness(const CheckOptions& opt);
/// Modus ponens, residuum monotonicity, currying, monoid laws, biresiduum
/// and hedge axioms.
Results lattice_laws(const CheckOptions& opt);
/// Tuple similarity laws, ramp antitonicity and transitive closure.
Results schema_laws(const CheckOptions& opt);
/// Algebraic laws of the relational operations.
Results rdt_laws(const CheckOptions& opt);
/// Preservation inequalities for every operation on chain(20), one result
/// per inequality, `iterations` instances each.
Results preservation(const CheckOptions& opt);
/// Engine against the brute-force oracle per operation, per measure and on
/// random plans, `iterations` instances each.
Results oracle_equivalence(const CheckOptions& opt);
/// Hedged comparison against its special cases and the ordering of the
/// measures, iterations / 2 instances.
Results specialization(const CheckOptions& opt);
/// Quasiorder and equivalence laws of the hedged measures on transitive
/// similarities, iterations / 2 table triples.
Results hedged_laws(const CheckOptions& opt);
/// chain(1) with identity similarities against a plain set-based relational
/// algebra, iterations / 5 instances.
Results boolean_degeneration(const CheckOptions& opt);
/// Printing and reparsing a fixed corpus plus max(50, iterations / 10)
/// random plans.
Results parser_roundtrip(const CheckOptions& opt);
/// Soundness and monotonicity of bound propagation and agreement of scheme
/// derivation with evaluation, `iterations` instances each.
Results bound_properties(const CheckOptions& opt);
/// CSV export followed by import.
Results io_roundtrip(const CheckOptions& opt);

struct Suite {
  const char* name;
  Results (*run)(const CheckOptions&);
};

const std::vector<Suite>& suites();

/// One line per result: status, suite/name, instances, time, first failure.
std::string format_result(const CheckResult& r);

}  // namespace rankdb::checks
