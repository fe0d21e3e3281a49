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

#include <string>
#include <string_view>

#include "rankdb/lattice.hpp"
#include "rankdb/rdt.hpp"

namespace rankdb {

enum class ComparisonMode { rank_based, tuple_based, hedged };

/// Where infima and suprema over Tupl(T) are taken. `support` is exact: off
/// support, rank-based terms are constant and tuple-based terms vanish.
/// `full` walks the whole universe and needs enumerable domains.
enum class Enumeration { support, full };

struct ComparisonConfig {
  ComparisonMode mode = ComparisonMode::rank_based;
  /// Only read in hedged mode.
  Hedge hedge = Hedge::identity;
  Enumeration enumeration = Enumeration::support;

  static ComparisonConfig rank_based() { return {}; }
  static ComparisonConfig tuple_based() {
    return {ComparisonMode::tuple_based, Hedge::identity, Enumeration::support};
  }
  static ComparisonConfig hedged(Hedge h) {
    return {ComparisonMode::hedged, h, Enumeration::support};
  }
};

std::string to_string(ComparisonMode mode);
ComparisonMode parse_comparison_mode(std::string_view name);

/// Degree to which d1 is included in d2.
///
///   rank_based:  inf_t D1(t) -> D2(t)
///   tuple_based: inf_t D1(t) -> sup_t' D2(t') (x) (t ~ t')
///   hedged:      inf_t D1(t) -> sup_t' D2(t') (x) (t ~ t')*
///
/// Tuple-based modes need default rank 0 on both sides.
TruthDegree subsethood(const RankedDataTable& d1, const RankedDataTable& d2,
                       const ComparisonConfig& cfg = {});

/// subsethood(d1, d2) meet subsethood(d2, d1).
TruthDegree table_similarity(const RankedDataTable& d1,
                             const RankedDataTable& d2,
                             const ComparisonConfig& cfg = {});

struct Comparison {
  TruthDegree forward;   // S(d1, d2)
  TruthDegree backward;  // S(d2, d1)
  TruthDegree similarity;
};

Comparison compare(const RankedDataTable& d1, const RankedDataTable& d2,
                   const ComparisonConfig& cfg = {});

}  // namespace rankdb
