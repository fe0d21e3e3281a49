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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rankdb/lattice.hpp"
#include "rankdb/rdt.hpp"
#include "rankdb/schema.hpp"
#include "rankdb/similarity.hpp"

namespace rankdb {

/// Syntax error, positioned at a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Failure while evaluating or typing a query, tagged with the failing node.
class EvalError : public Error {
 public:
  EvalError(const std::string& node, const std::string& message,
            std::optional<OpErrorKind> kind = std::nullopt);
  const std::string& node() const { return node_; }
  std::optional<OpErrorKind> kind() const { return kind_; }

 private:
  std::string node_;
  std::optional<OpErrorKind> kind_;
};

struct QueryExpr;
using ExprPtr = std::shared_ptr<const QueryExpr>;

/// A literal on the right of `~`: a quoted string or a decimal numeral.
struct Literal {
  ValueKind kind = ValueKind::text;
  std::string text;  // string contents, or the numeral as written

  Value value() const;
  friend bool operator==(const Literal&, const Literal&) = default;
};

/// A degree as written in the query; interpreted in the table's lattice.
struct DegreeLiteral {
  std::string text;
  friend bool operator==(const DegreeLiteral&, const DegreeLiteral&) = default;
};

enum class BinaryKind { union_, meet, otimes, residuum, cross };

struct TableRef {
  std::string name;
};
struct Binary {
  BinaryKind op;
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Shift {
  DegreeLiteral degree;
  ExprPtr child;
};
struct Project {
  std::vector<std::string> attributes;
  ExprPtr child;
};
struct SelectVal {
  ExprPtr child;
  std::string attribute;
  Literal literal;
};
struct SelectAttr {
  ExprPtr child;
  std::string p;
  std::string q;
};
struct SelectClosure {
  ExprPtr child;
  std::string attribute;
  Literal literal;
};
struct Join {
  ExprPtr lhs;
  ExprPtr rhs;
  std::string p;
  std::string q;
};

struct QueryExpr {
  std::variant<TableRef, Binary, Shift, Project, SelectVal, SelectAttr,
               SelectClosure, Join>
      node;
};

bool operator==(const QueryExpr& a, const QueryExpr& b);

namespace expr {
ExprPtr table(std::string name);
ExprPtr binary(BinaryKind op, ExprPtr lhs, ExprPtr rhs);
ExprPtr shift(std::string degree, ExprPtr child);
ExprPtr project(std::vector<std::string> attributes, ExprPtr child);
ExprPtr select(ExprPtr child, std::string attribute, Literal literal);
ExprPtr select_attr(ExprPtr child, std::string p, std::string q);
ExprPtr select_closure(ExprPtr child, std::string attribute, Literal literal);
ExprPtr join(ExprPtr lhs, ExprPtr rhs, std::string p, std::string q);
Literal text(std::string s);
Literal number(std::string numeral);
}  // namespace expr

/// Parses the query language:
///
///   expr    := IDENT | "(" expr ")"
///            | "shift" DEGREE expr
///            | "project" "[" IDENT ("," IDENT)* "]" expr
///            | ("union"|"meet"|"otimes"|"residuum"|"cross") "(" expr "," expr ")"
///            | "join" "(" expr "," expr ")" "on" IDENT "~" IDENT
///            | ("select"|"selectc") expr "where" IDENT "~" (LITERAL | IDENT)
///
/// With a lattice, degree literals must also be elements of its carrier.
ExprPtr parse_query(std::string_view text);
ExprPtr parse_query(std::string_view text, const ResiduatedLattice& lattice);

/// Canonical concrete syntax without grouping parentheses;
/// parse_query(print_query(e)) == e.
std::string print_query(const QueryExpr& e);

using TableCatalog = std::map<std::string, RankedDataTable>;
using SchemeCatalog = std::map<std::string, RelationScheme>;

SchemeCatalog schemes_of(const TableCatalog& catalog);

/// Scheme of the result, checking every node's scheme preconditions.
/// Throws EvalError.
RelationScheme derive_scheme(const QueryExpr& e, const SchemeCatalog& schemes);

/// Evaluates by structural recursion. Closure selections rank every tuple of
/// the universe when all its domains are enumerable, the stored support
/// otherwise. Throws EvalError.
RankedDataTable evaluate(const QueryExpr& e, const TableCatalog& catalog);

/// Which similarity of outputs a propagated bound speaks about.
enum class Guarantee { rank_based, tuple_based, none };

std::string to_string(Guarantee g);

struct BoundStep {
  std::string node;
  std::string rule;
  std::vector<TruthDegree> inputs;
  TruthDegree output;
  Guarantee guarantee;
};

/// A degree guaranteed to lower-bound the similarity of two evaluations.
/// The trace is in post-order, so the root is the last step.
struct SensitivityBound {
  TruthDegree value;
  Guarantee guarantee;
  std::vector<BoundStep> trace;
};

/// Propagates input similarities through the plan:
///   table -> assumption (1 when unlisted), union/meet -> meet,
///   otimes/cross/join/residuum -> tnorm, shift/project/select -> unchanged.
///
/// Plans without closure selections bound the rank-based similarity E.
/// A closure selection bounds the tuple-based similarity instead; that
/// guarantee survives union, cross and project, and is lost under every
/// other operation. A closure is marked as unguaranteed when no schemes are
/// given, when its scheme is not enumerable (support candidates only), or
/// when some attribute similarity is not tnorm-transitive.
SensitivityBound propagate_bound(
    const QueryExpr& e, const std::map<std::string, TruthDegree>& assumptions,
    const ResiduatedLattice& lattice, const SchemeCatalog* schemes = nullptr);

struct VerifyReport {
  SensitivityBound bound;
  /// Similarity of the two results in the measure named by the guarantee;
  /// rank-based when there is no guarantee.
  TruthDegree actual;
  bool holds;
  double slack;
};

/// Evaluates e on both catalogs and checks actual >= bound. Unit-interval
/// lattices allow `tolerance` of rounding; chains are compared exactly.
/// Unlisted assumptions default to the measured input similarity E.
VerifyReport verify_bound(const QueryExpr& e, const TableCatalog& first,
                          const TableCatalog& second,
                          std::map<std::string, TruthDegree> assumptions,
                          const ResiduatedLattice& lattice,
                          double tolerance = 1e-12);

}  // namespace rankdb
