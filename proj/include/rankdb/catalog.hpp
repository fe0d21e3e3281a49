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

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rankdb/lattice.hpp"
#include "rankdb/query.hpp"
#include "rankdb/rdt.hpp"
#include "rankdb/schema.hpp"

namespace rankdb {

/// A malformed config or CSV file. line() is 1-based, 0 when not tied to a
/// line.
class FormatError : public Error {
 public:
  FormatError(const std::string& source, std::size_t line, const std::string& msg)
      : Error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + msg),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Lattice, domains, attribute bindings and loaded tables.
struct Catalog {
  ResiduatedLattice lattice = ResiduatedLattice::lukasiewicz();
  std::map<std::string, DomainPtr> domains;
  std::map<std::string, std::string> bindings;
  std::map<std::string, SimilarityReport> reports;
  TableCatalog tables;

  /// Scheme over the given bound attributes; throws SchemaError for an
  /// unbound name.
  RelationScheme scheme_for(const std::vector<std::string>& names) const;
};

/// Parses config text. `[table NAME] file = ...` paths are resolved against
/// base_dir and loaded.
Catalog parse_config(std::string_view text, const std::filesystem::path& base_dir = {},
                     const std::string& source = "config");
Catalog load_config(const std::filesystem::path& path);

/// Parses a ranked CSV whose header is `rank,ATTR,...`.
RankedDataTable parse_table_csv(std::string_view text, const Catalog& catalog,
                                const std::string& source = "csv");
void load_table(Catalog& catalog, const std::string& name,
                const std::filesystem::path& path);

/// Rows by descending rank, then ascending tuple.
std::vector<std::pair<Tuple, TruthDegree>> sorted_rows(const RankedDataTable& d);

/// Ranked CSV of the stored rows in sorted_rows order. Throws OpError for a
/// table with a nonzero default, which CSV cannot carry.
std::string write_table_csv(const RankedDataTable& d);
void save_table(const RankedDataTable& d, const std::filesystem::path& path);

}  // namespace rankdb
