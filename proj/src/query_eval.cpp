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

#include <algorithm>

#include "rankdb/query.hpp"

namespace rankdb {

SchemeCatalog schemes_of(const TableCatalog& catalog) {
  SchemeCatalog out;
  for (const auto& [name, table] : catalog) out.emplace(name, table.scheme());
  return out;
}

namespace {

template <class F>
auto at_node(const QueryExpr& e, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const OpError& err) {
    throw EvalError(print_query(e), err.what(), err.kind());
  } catch (const LatticeError& err) {
    throw EvalError(print_query(e), err.what(), OpErrorKind::lattice_mismatch);
  } catch (const SchemaError& err) {
    throw EvalError(print_query(e), err.what());
  }
}

void check_same_domain(const RelationScheme& s, const std::string& p,
                       const std::string& q) {
  const Attribute& ap = s.attribute(p);
  const Attribute& aq = s.attribute(q);
  if (ap.domain->id() != aq.domain->id()) {
    throw OpError(OpErrorKind::missing_similarity,
                  p + " and " + q + " do not share a domain");
  }
}

void check_literal(const RelationScheme& s, const std::string& y,
                   const Literal& lit) {
  const Attribute& a = s.attribute(y);
  if (a.domain->value_kind() != lit.kind) {
    throw OpError(OpErrorKind::type_mismatch,
                  y + " holds " + to_string(a.domain->value_kind()) +
                      " values, literal is " + to_string(lit.kind));
  }
}

bool enumerable(const RelationScheme& s) {
  return std::all_of(s.attributes().begin(), s.attributes().end(),
                     [](const Attribute& a) { return a.domain->enumerable(); });
}

bool transitive(const RelationScheme& s) {
  return std::all_of(s.attributes().begin(), s.attributes().end(), [](const Attribute& a) {
    return validate_similarity(*a.domain).transitive.value_or(false);
  });
}

}  // namespace

RelationScheme derive_scheme(const QueryExpr& e, const SchemeCatalog& schemes) {
  return std::visit(
      [&](const auto& x) -> RelationScheme {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, TableRef>) {
          auto it = schemes.find(x.name);
          if (it == schemes.end()) {
            throw EvalError(x.name, "unknown table '" + x.name + "'");
          }
          return it->second;
        } else if constexpr (std::is_same_v<T, Binary>) {
          RelationScheme l = derive_scheme(*x.lhs, schemes);
          RelationScheme r = derive_scheme(*x.rhs, schemes);
          return at_node(e, [&] {
            if (x.op == BinaryKind::cross) return l.concat(r);
            if (!(l == r)) {
              throw OpError(OpErrorKind::scheme_mismatch,
                            l.to_string() + " vs " + r.to_string());
            }
            return l;
          });
        } else if constexpr (std::is_same_v<T, Shift>) {
          return derive_scheme(*x.child, schemes);
        } else if constexpr (std::is_same_v<T, Project>) {
          RelationScheme c = derive_scheme(*x.child, schemes);
          return at_node(e, [&] { return c.restrict(x.attributes); });
        } else if constexpr (std::is_same_v<T, SelectVal> ||
                             std::is_same_v<T, SelectClosure>) {
          RelationScheme c = derive_scheme(*x.child, schemes);
          at_node(e, [&] { check_literal(c, x.attribute, x.literal); });
          return c;
        } else if constexpr (std::is_same_v<T, SelectAttr>) {
          RelationScheme c = derive_scheme(*x.child, schemes);
          at_node(e, [&] { check_same_domain(c, x.p, x.q); });
          return c;
        } else {
          RelationScheme l = derive_scheme(*x.lhs, schemes);
          RelationScheme r = derive_scheme(*x.rhs, schemes);
          return at_node(e, [&] {
            RelationScheme joint = l.concat(r);
            check_same_domain(joint, x.p, x.q);
            return joint;
          });
        }
      },
      e.node);
}

RankedDataTable evaluate(const QueryExpr& e, const TableCatalog& catalog) {
  return std::visit(
      [&](const auto& x) -> RankedDataTable {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, TableRef>) {
          auto it = catalog.find(x.name);
          if (it == catalog.end()) {
            throw EvalError(x.name, "unknown table '" + x.name + "'");
          }
          return it->second;
        } else if constexpr (std::is_same_v<T, Binary>) {
          RankedDataTable l = evaluate(*x.lhs, catalog);
          RankedDataTable r = evaluate(*x.rhs, catalog);
          return at_node(e, [&] {
            switch (x.op) {
              case BinaryKind::union_:
                return combine(Combine::union_, l, r);
              case BinaryKind::meet:
                return combine(Combine::meet, l, r);
              case BinaryKind::otimes:
                return combine(Combine::otimes, l, r);
              case BinaryKind::residuum:
                return combine(Combine::residuum, l, r);
              case BinaryKind::cross:
                break;
            }
            return cartesian(l, r);
          });
        } else if constexpr (std::is_same_v<T, Shift>) {
          RankedDataTable c = evaluate(*x.child, catalog);
          return at_node(e, [&] {
            return a_shift(c.lattice().parse(x.degree.text), c);
          });
        } else if constexpr (std::is_same_v<T, Project>) {
          RankedDataTable c = evaluate(*x.child, catalog);
          return at_node(e, [&] { return project(x.attributes, c); });
        } else if constexpr (std::is_same_v<T, SelectVal>) {
          RankedDataTable c = evaluate(*x.child, catalog);
          return at_node(e, [&] {
            return select_sim(c, x.attribute, x.literal.value());
          });
        } else if constexpr (std::is_same_v<T, SelectClosure>) {
          RankedDataTable c = evaluate(*x.child, catalog);
          return at_node(e, [&] {
            CandidateMode mode = enumerable(c.scheme()) ? CandidateMode::full
                                                        : CandidateMode::support;
            return select_closure(c, x.attribute, x.literal.value(), mode);
          });
        } else if constexpr (std::is_same_v<T, SelectAttr>) {
          RankedDataTable c = evaluate(*x.child, catalog);
          return at_node(e, [&] { return select_attr(c, x.p, x.q); });
        } else {
          RankedDataTable l = evaluate(*x.lhs, catalog);
          RankedDataTable r = evaluate(*x.rhs, catalog);
          return at_node(e, [&] { return join_sim(l, r, x.p, x.q); });
        }
      },
      e.node);
}

std::string to_string(Guarantee g) {
  switch (g) {
    case Guarantee::rank_based:
      return "rank-based";
    case Guarantee::tuple_based:
      return "tuple-based";
    case Guarantee::none:
      return "none";
  }
  return "?";
}

namespace {

struct Propagator {
  const std::map<std::string, TruthDegree>& assumptions;
  const ResiduatedLattice& L;
  const SchemeCatalog* schemes;
  std::vector<BoundStep> trace;

  // Guarantee of a node whose operation preserves tuple-based subsethood.
  static Guarantee tuple_preserving(std::initializer_list<Guarantee> kids) {
    for (Guarantee g : kids) {
      if (g == Guarantee::none) return Guarantee::none;
    }
    for (Guarantee g : kids) {
      if (g == Guarantee::tuple_based) return Guarantee::tuple_based;
    }
    return Guarantee::rank_based;
  }
  // ... and of one that preserves only rank-based subsethood.
  static Guarantee rank_only(std::initializer_list<Guarantee> kids) {
    for (Guarantee g : kids) {
      if (g != Guarantee::rank_based) return Guarantee::none;
    }
    return Guarantee::rank_based;
  }

  std::pair<TruthDegree, Guarantee> record(const QueryExpr& e, std::string rule,
                                           std::vector<TruthDegree> inputs,
                                           TruthDegree out, Guarantee g) {
    trace.push_back(BoundStep{print_query(e), std::move(rule), std::move(inputs),
                              out, g});
    return {out, g};
  }

  std::pair<TruthDegree, Guarantee> run(const QueryExpr& e) {
    return std::visit(
        [&](const auto& x) -> std::pair<TruthDegree, Guarantee> {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, TableRef>) {
            auto it = assumptions.find(x.name);
            TruthDegree b = it == assumptions.end() ? L.top() : it->second;
            if (!L.owns(b)) {
              throw LatticeError("assumption for " + x.name +
                                 " is not an element of " + L.name());
            }
            return record(e, "assumption", {}, b, Guarantee::rank_based);
          } else if constexpr (std::is_same_v<T, Binary>) {
            auto [bl, gl] = run(*x.lhs);
            auto [br, gr] = run(*x.rhs);
            switch (x.op) {
              case BinaryKind::union_:
                return record(e, "meet", {bl, br}, L.meet(bl, br),
                              tuple_preserving({gl, gr}));
              case BinaryKind::meet:
                return record(e, "meet", {bl, br}, L.meet(bl, br),
                              rank_only({gl, gr}));
              case BinaryKind::cross:
                return record(e, "tnorm", {bl, br}, L.tnorm(bl, br),
                              tuple_preserving({gl, gr}));
              case BinaryKind::otimes:
              case BinaryKind::residuum:
                break;
            }
            return record(e, "tnorm", {bl, br}, L.tnorm(bl, br),
                          rank_only({gl, gr}));
          } else if constexpr (std::is_same_v<T, Join>) {
            auto [bl, gl] = run(*x.lhs);
            auto [br, gr] = run(*x.rhs);
            return record(e, "tnorm", {bl, br}, L.tnorm(bl, br),
                          rank_only({gl, gr}));
          } else if constexpr (std::is_same_v<T, Project>) {
            auto [b, g] = run(*x.child);
            return record(e, "pass-through", {b}, b, tuple_preserving({g}));
          } else if constexpr (std::is_same_v<T, SelectClosure>) {
            auto [b, g] = run(*x.child);
            Guarantee out = g == Guarantee::none ? Guarantee::none
                                                 : Guarantee::tuple_based;
            if (out != Guarantee::none) {
              if (!schemes) {
                out = Guarantee::none;
              } else {
                RelationScheme s = derive_scheme(*x.child, *schemes);
                if (!enumerable(s) || !transitive(s)) out = Guarantee::none;
              }
            }
            return record(e, "pass-through (tuple-based)", {b}, b, out);
          } else {
            // shift, select, attribute select
            auto [b, g] = run(*x.child);
            return record(e, "pass-through", {b}, b, rank_only({g}));
          }
        },
        e.node);
  }
};

}  // namespace

SensitivityBound propagate_bound(
    const QueryExpr& e, const std::map<std::string, TruthDegree>& assumptions,
    const ResiduatedLattice& lattice, const SchemeCatalog* schemes) {
  if (schemes) derive_scheme(e, *schemes);
  Propagator p{assumptions, lattice, schemes, {}};
  auto [value, guarantee] = p.run(e);
  return SensitivityBound{value, guarantee, std::move(p.trace)};
}

namespace {

void collect_tables(const QueryExpr& e, std::vector<std::string>& out) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, TableRef>) {
          out.push_back(x.name);
        } else if constexpr (std::is_same_v<T, Binary> ||
                             std::is_same_v<T, Join>) {
          collect_tables(*x.lhs, out);
          collect_tables(*x.rhs, out);
        } else {
          collect_tables(*x.child, out);
        }
      },
      e.node);
}

}  // namespace

VerifyReport verify_bound(const QueryExpr& e, const TableCatalog& first,
                          const TableCatalog& second,
                          std::map<std::string, TruthDegree> assumptions,
                          const ResiduatedLattice& lattice, double tolerance) {
  std::vector<std::string> names;
  collect_tables(e, names);
  for (const auto& n : names) {
    if (assumptions.contains(n)) continue;
    auto a = first.find(n);
    auto b = second.find(n);
    if (a == first.end() || b == second.end()) {
      throw EvalError(n, "unknown table '" + n + "'");
    }
    assumptions.emplace(n, table_similarity(a->second, b->second));
  }
  SchemeCatalog schemes = schemes_of(first);
  SensitivityBound bound = propagate_bound(e, assumptions, lattice, &schemes);
  RankedDataTable r1 = evaluate(e, first);
  RankedDataTable r2 = evaluate(e, second);
  ComparisonConfig cfg = bound.guarantee == Guarantee::tuple_based
                             ? ComparisonConfig::tuple_based()
                             : ComparisonConfig::rank_based();
  TruthDegree actual = table_similarity(r1, r2, cfg);
  double slack = actual.value() - bound.value.value();
  bool holds = true;
  if (bound.guarantee != Guarantee::none) {
    holds = lattice.exact() ? lattice.leq(bound.value, actual)
                            : slack >= -tolerance;
  }
  return VerifyReport{std::move(bound), actual, holds, slack};
}

}  // namespace rankdb
