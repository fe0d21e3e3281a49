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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "rankdb/lattice.hpp"

namespace rankdb {

/// Malformed domains, attributes and schemes.
class SchemaError : public Error {
 public:
  using Error::Error;
};

enum class OpErrorKind {
  scheme_mismatch,
  schemes_not_disjoint,
  lattice_mismatch,
  missing_similarity,
  nonzero_default_unsupported,
  attribute_not_in_scheme,
  type_mismatch,
  non_enumerable_domain,
};

std::string to_string(OpErrorKind kind);

/// Precondition failure of a relational operation.
class OpError : public Error {
 public:
  OpError(OpErrorKind kind, const std::string& detail)
      : Error(to_string(kind) + ": " + detail), kind_(kind) {}
  OpErrorKind kind() const { return kind_; }

 private:
  OpErrorKind kind_;
};

enum class ValueKind { text, number };

std::string to_string(ValueKind kind);

/// A domain value: either a decimal number or a piece of text.
class Value {
 public:
  static Value number(double v) { return Value(v); }
  static Value text(std::string s) { return Value(std::move(s)); }

  ValueKind kind() const {
    return v_.index() == 0 ? ValueKind::number : ValueKind::text;
  }
  double as_number() const { return std::get<double>(v_); }
  const std::string& as_text() const { return std::get<std::string>(v_); }

  /// Numbers in shortest round-trip fixed-point form, text verbatim.
  std::string to_string() const;

  friend bool operator==(const Value&, const Value&) = default;
  friend bool operator<(const Value& a, const Value& b) { return a.v_ < b.v_; }

 private:
  explicit Value(double v) : v_(v) {}
  explicit Value(std::string s) : v_(std::move(s)) {}

  std::variant<double, std::string> v_;
};

/// Parses a plain decimal numeral ("228500", "-3.5") into a number value.
std::optional<Value> parse_number(std::string_view text);

struct IdentitySimilarity {};

struct TableEntry {
  Value u;
  Value v;
  TruthDegree degree;
};

/// Listed pairs; unlisted pairs of distinct values are 0.
struct TableSimilarity {
  std::vector<TableEntry> pairs;
};

/// u ~ v = max(1 - |u - v| / k, 0).
struct RampSimilarity {
  double k;
};

using SimilaritySpec =
    std::variant<IdentitySimilarity, TableSimilarity, RampSimilarity>;

/// A value domain together with a reflexive, symmetric similarity.
///
/// The constructor rejects listed diagonal entries below 1, pairs listed
/// twice with different degrees, ramps on text domains, ramps with k <= 0,
/// and values that do not match the domain's kind. An optional finite
/// universe makes the domain enumerable; stored tuples must then draw their
/// values from it.
///
/// On chain lattices a ramp degree is rounded down to the chain, which keeps
/// it reflexive, symmetric, antitone and separating.
class Domain {
 public:
  Domain(std::string id, ValueKind kind, ResiduatedLattice lattice,
         SimilaritySpec spec = IdentitySimilarity{},
         std::optional<std::vector<Value>> universe = std::nullopt);

  const std::string& id() const { return id_; }
  ValueKind value_kind() const { return kind_; }
  const ResiduatedLattice& lattice() const { return lattice_; }
  const SimilaritySpec& spec() const { return spec_; }

  bool enumerable() const { return universe_.has_value(); }
  /// Throws OpError(non_enumerable_domain) when the domain is not finite.
  const std::vector<Value>& universe() const;

  /// Kind matches and, for enumerable domains, the value is in the universe.
  bool conforms(const Value& v) const;

  /// Throws OpError(type_mismatch) when either value has the wrong kind.
  TruthDegree similarity(const Value& u, const Value& v) const;

 private:
  std::string id_;
  ValueKind kind_;
  ResiduatedLattice lattice_;
  SimilaritySpec spec_;
  std::optional<std::vector<Value>> universe_;
  std::map<std::pair<Value, Value>, TruthDegree> table_;
};

using DomainPtr = std::shared_ptr<const Domain>;

struct SimilarityReport {
  bool reflexive = true;
  bool symmetric = true;
  bool separating = true;
  /// Unknown when not decidable (ramp under goedel or product).
  std::optional<bool> transitive;
  std::string detail;
};

/// Checks reflexivity and symmetry and reports whether the similarity is
/// separating and tnorm-transitive under the domain's lattice. Table
/// similarities are checked by brute force over the listed values and the
/// universe.
SimilarityReport validate_similarity(const Domain& d);

bool valid_attribute_name(std::string_view name);

struct Attribute {
  std::string name;
  DomainPtr domain;
};

/// A finite set of attributes, each bound to a domain. Attributes are kept
/// sorted by name, which fixes the column order of tuples over the scheme.
class RelationScheme {
 public:
  RelationScheme() = default;
  /// Throws SchemaError on invalid or duplicate names and missing domains.
  explicit RelationScheme(std::vector<Attribute> attributes);

  std::span<const Attribute> attributes() const { return attrs_; }
  std::size_t size() const { return attrs_.size(); }
  bool empty() const { return attrs_.empty(); }

  std::optional<std::size_t> index_of(std::string_view name) const;
  bool contains(std::string_view name) const {
    return index_of(name).has_value();
  }
  /// Throws OpError(attribute_not_in_scheme).
  const Attribute& attribute(std::string_view name) const;

  std::vector<std::string> names() const;
  bool disjoint(const RelationScheme& other) const;
  /// Union of disjoint schemes; throws OpError(schemes_not_disjoint).
  RelationScheme concat(const RelationScheme& other) const;
  /// Sub-scheme on the given names; throws OpError(attribute_not_in_scheme).
  RelationScheme restrict(std::span<const std::string> names) const;

  /// Same names bound to the same domain ids.
  friend bool operator==(const RelationScheme& a, const RelationScheme& b);

  std::string to_string() const;

 private:
  std::vector<Attribute> attrs_;
};

/// Values of a tuple, aligned with the sorted attributes of its scheme.
struct Tuple {
  std::vector<Value> values;

  friend bool operator==(const Tuple&, const Tuple&) = default;
  friend bool operator<(const Tuple& a, const Tuple& b) {
    return a.values < b.values;
  }
};

/// Builds a tuple from a name -> value assignment covering exactly the
/// scheme's attributes.
Tuple make_tuple(const RelationScheme& scheme,
                 const std::map<std::string, Value>& assignment);

/// Throws OpError unless the tuple has the scheme's arity and every value
/// conforms to its attribute's domain.
void check_tuple(const RelationScheme& scheme, const Tuple& t);

std::string format_tuple(const Tuple& t);

/// Concatenation rs over R u S of tuples over disjoint schemes.
Tuple tuple_concat(const RelationScheme& r_scheme, const Tuple& r,
                   const RelationScheme& s_scheme, const Tuple& s);

/// Restriction of t (over scheme) to the attributes of sub.
Tuple tuple_restrict(const RelationScheme& scheme, const Tuple& t,
                     const RelationScheme& sub);

/// Infimum over the scheme's attributes of the per-attribute similarities.
TruthDegree tuple_similarity(const RelationScheme& scheme, const Tuple& t,
                             const Tuple& u, const ResiduatedLattice& lattice);

/// Every tuple over the scheme; requires all domains to be enumerable.
std::vector<Tuple> enumerate_tuples(const RelationScheme& scheme);

}  // namespace rankdb
