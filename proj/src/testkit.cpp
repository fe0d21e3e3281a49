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

#include "rankdb/testkit.hpp"

#include <algorithm>
#include <sstream>

namespace rankdb::testkit {

TruthDegree random_degree(Rng& rng, const ResiduatedLattice& L, bool nonzero) {
  if (L.exact()) {
    return L.from_steps(rng.uniform(nonzero ? 1 : 0, L.chain_size()));
  }
  double v = rng.unit();
  if (rng.chance(0.1)) v = rng.chance(0.5) ? 1.0 : 0.0;
  if (nonzero && v == 0.0) v = 1.0;
  return L.degree(v);
}

namespace {

TruthDegree random_below_top(Rng& rng, const ResiduatedLattice& L) {
  if (L.exact()) return L.from_steps(rng.uniform(0, L.chain_size() - 1));
  return L.degree(rng.unit() * 0.999);
}

}  // namespace

TableSimilarity transitivize(const std::vector<Value>& values,
                             const TableSimilarity& sim,
                             const ResiduatedLattice& L) {
  std::size_t n = values.size();
  auto index = [&](const Value& v) {
    return static_cast<std::size_t>(
        std::find(values.begin(), values.end(), v) - values.begin());
  };
  std::vector<std::vector<TruthDegree>> m(n, std::vector<TruthDegree>(n, L.bot()));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = L.top();
  for (const auto& e : sim.pairs) {
    std::size_t i = index(e.u);
    std::size_t j = index(e.v);
    if (i == n || j == n) throw Error("pair outside the value list");
    m[i][j] = L.join(m[i][j], e.degree);
    m[j][i] = m[i][j];
  }
  // R := R v (R o R) until nothing changes.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          TruthDegree via = L.tnorm(m[i][k], m[k][j]);
          if (!L.leq(via, m[i][j])) {
            m[i][j] = via;
            changed = true;
          }
        }
      }
    }
  }
  TableSimilarity out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!L.is_bot(m[i][j])) out.pairs.push_back({values[i], values[j], m[i][j]});
    }
  }
  return out;
}

bool satisfies_tr(const Domain& d, Hedge h) {
  const auto& L = d.lattice();
  const auto& vs = d.universe();
  for (const auto& u : vs) {
    for (const auto& v : vs) {
      TruthDegree uv = apply_hedge(L, h, d.similarity(u, v));
      for (const auto& w : vs) {
        TruthDegree lhs = L.tnorm(uv, apply_hedge(L, h, d.similarity(v, w)));
        if (!L.leq(lhs, apply_hedge(L, h, d.similarity(u, w)))) return false;
      }
    }
  }
  return true;
}

DomainPtr random_domain(Rng& rng, const ResiduatedLattice& L, std::string id,
                        ValueKind kind, std::size_t values,
                        SimilarityStyle style) {
  std::vector<Value> universe;
  for (std::size_t i = 0; i < values; ++i) {
    universe.push_back(kind == ValueKind::text
                           ? Value::text("v" + std::to_string(i))
                           : Value::number(static_cast<double>(i)));
  }
  SimilaritySpec spec = IdentitySimilarity{};
  if (style != SimilarityStyle::identity) {
    if (kind == ValueKind::number && style != SimilarityStyle::random) {
      // Ramps are separating, and tnorm-transitive on chains.
      spec = RampSimilarity{static_cast<double>(rng.uniform(1, values + 1))};
    } else {
      TableSimilarity table;
      for (std::size_t i = 0; i < values; ++i) {
        for (std::size_t j = i + 1; j < values; ++j) {
          TruthDegree deg = style == SimilarityStyle::separating
                                ? random_below_top(rng, L)
                                : random_degree(rng, L);
          if (!L.is_bot(deg)) table.pairs.push_back({universe[i], universe[j], deg});
        }
      }
      if (style == SimilarityStyle::transitive) {
        table = transitivize(universe, table, L);
      }
      spec = std::move(table);
    }
  }
  return std::make_shared<const Domain>(std::move(id), kind, L, std::move(spec),
                                        universe);
}

RankedDataTable random_table(Rng& rng, const RelationScheme& scheme,
                             const ResiduatedLattice& L, std::size_t max_rows) {
  std::vector<Tuple> all = enumerate_tuples(scheme);
  std::shuffle(all.begin(), all.end(), std::mt19937_64(rng.next()));
  auto count = static_cast<std::size_t>(
      rng.uniform(0, static_cast<std::int64_t>(std::min(max_rows, all.size()))));
  RankedDataTable::Rows rows;
  for (std::size_t i = 0; i < count; ++i) {
    rows.emplace(all[i], random_degree(rng, L, true));
  }
  return RankedDataTable(scheme, L, std::move(rows));
}

RankedDataTable gen_rdt(const GenSpec& spec) {
  if (spec.attributes > 3 || spec.values_per_domain > 4) {
    throw Error("gen_rdt: at most 3 attributes with 4 values each");
  }
  Rng rng(spec.seed);
  auto L = ResiduatedLattice::chain(spec.chain_size);
  std::vector<Attribute> attrs;
  for (std::size_t i = 0; i < spec.attributes; ++i) {
    std::string name = std::string(1, static_cast<char>('a' + i));
    attrs.push_back({name, random_domain(rng, L, "D" + name, ValueKind::text,
                                         spec.values_per_domain, spec.style)});
  }
  RelationScheme scheme(std::move(attrs));
  std::vector<Tuple> all = enumerate_tuples(scheme);
  if (spec.rows > all.size()) {
    throw Error("gen_rdt: universe has " + std::to_string(all.size()) +
                " tuples, " + std::to_string(spec.rows) + " requested");
  }
  std::shuffle(all.begin(), all.end(), std::mt19937_64(rng.next()));
  RankedDataTable::Rows rows;
  for (std::size_t i = 0; i < spec.rows; ++i) {
    rows.emplace(all[i], random_degree(rng, L, true));
  }
  return RankedDataTable(std::move(scheme), L, std::move(rows));
}

RankedDataTable perturb(Rng& rng, const RankedDataTable& d,
                        std::size_t max_rows) {
  const auto& L = d.lattice();
  RankedDataTable::Rows rows;
  for (const auto& [t, r] : d.rows()) {
    if (rng.chance(0.1)) continue;
    TruthDegree rank = r;
    if (rng.chance(0.5)) {
      if (L.exact()) {
        std::int64_t k = r.steps() + rng.uniform(-2, 2);
        rank = L.from_steps(std::clamp<std::int64_t>(k, 0, L.chain_size()));
      } else {
        rank = L.degree(std::clamp(r.value() + (rng.unit() - 0.5) * 0.1, 0.0, 1.0));
      }
    }
    rows.emplace(t, rank);
  }
  if (rows.size() < max_rows && rng.chance(0.3)) {
    std::vector<Tuple> all = enumerate_tuples(d.scheme());
    rows.emplace(rng.pick(all), random_degree(rng, L, true));
  }
  return RankedDataTable(d.scheme(), L, std::move(rows), d.default_rank());
}

World random_world(Rng& rng, const WorldSpec& spec) {
  auto L = ResiduatedLattice::chain(spec.chain_size);
  auto size = [&] {
    return static_cast<std::size_t>(
        rng.uniform(2, static_cast<std::int64_t>(spec.max_values)));
  };
  DomainPtr shared = random_domain(rng, L, "X", ValueKind::text, size(), spec.style);
  std::vector<Attribute> left{{"a", shared}};
  std::vector<Attribute> right{{"c", shared}};
  if (rng.chance(0.6)) {
    left.push_back({"b", random_domain(rng, L, "Y", ValueKind::text, size(),
                                       spec.style)});
  }
  if (rng.chance(0.6)) {
    right.push_back({"e", random_domain(rng, L, "Z", ValueKind::number, size(),
                                        spec.style)});
  }
  return World{L,   RelationScheme(std::move(left)), RelationScheme(std::move(right)),
               "a", "c",                             spec.max_rows};
}

Value random_value(Rng& rng, const Attribute& a) {
  return rng.pick(a.domain->universe());
}

TableCatalog random_catalog(Rng& rng, const World& world) {
  TableCatalog c;
  RankedDataTable l1 = random_table(rng, world.left, world.lattice, world.max_rows);
  RankedDataTable r1 = random_table(rng, world.right, world.lattice, world.max_rows);
  // The second table of each scheme is often a neighbour of the first.
  RankedDataTable l2 = rng.chance(0.5)
                           ? perturb(rng, l1, world.max_rows)
                           : random_table(rng, world.left, world.lattice, world.max_rows);
  RankedDataTable r2 = rng.chance(0.5)
                           ? perturb(rng, r1, world.max_rows)
                           : random_table(rng, world.right, world.lattice, world.max_rows);
  c.emplace("L1", std::move(l1));
  c.emplace("L2", std::move(l2));
  c.emplace("R1", std::move(r1));
  c.emplace("R2", std::move(r2));
  return c;
}

TableCatalog perturb_catalog(Rng& rng, const TableCatalog& c,
                             std::size_t max_rows) {
  TableCatalog out;
  for (const auto& [name, t] : c) {
    out.emplace(name, rng.chance(0.2) ? t : perturb(rng, t, max_rows));
  }
  return out;
}

namespace {

struct PlanNode {
  ExprPtr e;
  RelationScheme scheme;
  bool zero_default;
};

class PlanGen {
 public:
  PlanGen(Rng& rng, const World& w, const PlanSpec& spec)
      : rng_(rng), w_(w), spec_(spec) {}

  PlanNode top(int budget) {
    if (budget >= 3 && rng_.chance(0.5)) {
      PlanNode l = family(budget - 1, true);
      PlanNode r = family(budget - 1, false);
      if (l.zero_default && r.zero_default) {
        RelationScheme joint = l.scheme.concat(r.scheme);
        bool joinable = l.scheme.contains(w_.left_key) &&
                        r.scheme.contains(w_.right_key);
        if (joinable && rng_.chance(0.5)) {
          return {expr::join(l.e, r.e, w_.left_key, w_.right_key), joint, true};
        }
        PlanNode n{expr::binary(BinaryKind::cross, l.e, r.e), joint, true};
        if (budget >= 4 && rng_.chance(0.5)) return wrap_unary(n);
        return n;
      }
    }
    return family(budget, rng_.chance(0.5));
  }

 private:
  PlanNode leaf(bool left) {
    std::string name = std::string(left ? "L" : "R") + (rng_.chance(0.5) ? "1" : "2");
    return {expr::table(name), left ? w_.left : w_.right, true};
  }

  PlanNode family(int budget, bool left) {
    if (budget <= 1 || rng_.chance(0.25)) return leaf(left);
    if (rng_.chance(0.5)) return wrap_unary(family(budget - 1, left));
    PlanNode l = family(budget - 1, left);
    PlanNode r{retarget(l.e), l.scheme, l.zero_default};
    std::vector<BinaryKind> ops{BinaryKind::union_, BinaryKind::meet,
                                BinaryKind::otimes};
    if (spec_.allow_shift) ops.push_back(BinaryKind::residuum);
    BinaryKind op = rng_.pick(ops);
    bool zero = op == BinaryKind::union_      ? l.zero_default && r.zero_default
                : op == BinaryKind::residuum ? false
                                             : l.zero_default || r.zero_default;
    if (rng_.chance(0.5)) std::swap(l, r);
    return {expr::binary(op, l.e, r.e), l.scheme, zero};
  }

  // Same shape, tables swapped for random ones of the same scheme.
  ExprPtr retarget(const ExprPtr& e) {
    return std::visit(
        [&](const auto& x) -> ExprPtr {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, TableRef>) {
            return expr::table(x.name.substr(0, 1) + (rng_.chance(0.5) ? "1" : "2"));
          } else if constexpr (std::is_same_v<T, Binary>) {
            return expr::binary(x.op, retarget(x.lhs), retarget(x.rhs));
          } else if constexpr (std::is_same_v<T, Join>) {
            return expr::join(retarget(x.lhs), retarget(x.rhs), x.p, x.q);
          } else {
            T copy = x;
            copy.child = retarget(x.child);
            return std::make_shared<const QueryExpr>(QueryExpr{std::move(copy)});
          }
        },
        e->node);
  }

  Literal literal_for(const Attribute& a) {
    Value v = random_value(rng_, a);
    return v.kind() == ValueKind::text ? expr::text(v.as_text())
                                       : expr::number(v.to_string());
  }

  PlanNode wrap_unary(PlanNode c) {
    const bool selectable = c.zero_default || spec_.allow_unsafe_defaults;
    std::vector<int> choices{1};  // project
    if (spec_.allow_shift) choices.push_back(0);
    if (selectable) {
      choices.push_back(2);
      if (spec_.allow_closure) choices.push_back(4);
      if (c.scheme.contains(w_.left_key) && c.scheme.contains(w_.right_key)) {
        choices.push_back(3);
      }
    }
    auto attrs = c.scheme.attributes();
    const Attribute& y = attrs[static_cast<std::size_t>(
        rng_.uniform(0, static_cast<std::int64_t>(attrs.size()) - 1))];
    switch (rng_.pick(choices)) {
      case 0: {
        const auto& L = w_.lattice;
        TruthDegree a = random_degree(rng_, L);
        std::string text = format_degree(a);
        return {expr::shift(text, c.e), c.scheme, L.is_top(a) && c.zero_default};
      }
      case 1: {
        std::vector<std::string> keep;
        for (const auto& a : attrs) {
          if (rng_.chance(0.5)) keep.push_back(a.name);
        }
        if (keep.empty()) keep.push_back(y.name);
        std::shuffle(keep.begin(), keep.end(), std::mt19937_64(rng_.next()));
        RelationScheme s = c.scheme.restrict(keep);
        return {expr::project(std::move(keep), c.e), std::move(s), c.zero_default};
      }
      case 2:
        return {expr::select(c.e, y.name, literal_for(y)), c.scheme, true};
      case 3:
        return {expr::select_attr(c.e, w_.left_key, w_.right_key), c.scheme, true};
      default:
        return {expr::select_closure(c.e, y.name, literal_for(y)), c.scheme, true};
    }
  }

  Rng& rng_;
  const World& w_;
  const PlanSpec& spec_;
};

}  // namespace

ExprPtr random_plan(Rng& rng, const World& world, const PlanSpec& spec) {
  PlanGen gen(rng, world, spec);
  return gen.top(std::max(1, spec.max_depth)).e;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Tuple> all_tuples(const RelationScheme& scheme) {
  std::vector<Tuple> out{Tuple{}};
  for (const auto& a : scheme.attributes()) {
    std::vector<Tuple> next;
    for (const auto& t : out) {
      for (const auto& v : a.domain->universe()) {
        Tuple u = t;
        u.values.push_back(v);
        next.push_back(std::move(u));
      }
    }
    out = std::move(next);
  }
  return out;
}

const Value& get(const RelationScheme& s, const Tuple& t, const std::string& y) {
  auto attrs = s.attributes();
  for (std::size_t i = 0; i < attrs.size(); ++i) {
    if (attrs[i].name == y) return t.values[i];
  }
  throw Error("oracle: no attribute " + y);
}

const Domain& domain_of(const RelationScheme& s, const std::string& y) {
  for (const auto& a : s.attributes()) {
    if (a.name == y) return *a.domain;
  }
  throw Error("oracle: no attribute " + y);
}

TruthDegree sim_of(const RelationScheme& s, const Tuple& t, const Tuple& u,
                   const ResiduatedLattice& L) {
  TruthDegree acc = L.top();
  auto attrs = s.attributes();
  for (std::size_t i = 0; i < attrs.size(); ++i) {
    acc = L.meet(acc, attrs[i].domain->similarity(t.values[i], u.values[i]));
  }
  return acc;
}

// Builds a tuple over `target` by taking each attribute from whichever of
// the parts carries it.
Tuple assemble(const RelationScheme& target,
               std::initializer_list<std::pair<const RelationScheme*, const Tuple*>> parts) {
  Tuple out;
  for (const auto& a : target.attributes()) {
    bool found = false;
    for (const auto& [s, t] : parts) {
      if (s->contains(a.name)) {
        out.values.push_back(get(*s, *t, a.name));
        found = true;
        break;
      }
    }
    if (!found) throw Error("oracle: cannot assemble " + a.name);
  }
  return out;
}

FullTable pointwise(const FullTable& a, const FullTable& b, auto op) {
  FullTable out{a.scheme, {}};
  for (const auto& [t, r] : a.ranks) out.ranks.emplace(t, op(r, b.ranks.at(t)));
  return out;
}

}  // namespace

FullTable materialize(const RankedDataTable& d) {
  FullTable out{d.scheme(), {}};
  for (const auto& t : all_tuples(d.scheme())) out.ranks.emplace(t, d.rank_of(t));
  return out;
}

FullCatalog materialize(const TableCatalog& c) {
  FullCatalog out;
  for (const auto& [name, t] : c) out.emplace(name, materialize(t));
  return out;
}

FullTable oracle_eval(const QueryExpr& e, const FullCatalog& catalog,
                      const ResiduatedLattice& L) {
  return std::visit(
      [&](const auto& x) -> FullTable {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, TableRef>) {
          return catalog.at(x.name);
        } else if constexpr (std::is_same_v<T, Binary>) {
          FullTable a = oracle_eval(*x.lhs, catalog, L);
          FullTable b = oracle_eval(*x.rhs, catalog, L);
          switch (x.op) {
            case BinaryKind::union_:
              return pointwise(a, b, [&](auto p, auto q) { return L.join(p, q); });
            case BinaryKind::meet:
              return pointwise(a, b, [&](auto p, auto q) { return L.meet(p, q); });
            case BinaryKind::otimes:
              return pointwise(a, b, [&](auto p, auto q) { return L.tnorm(p, q); });
            case BinaryKind::residuum:
              return pointwise(a, b,
                               [&](auto p, auto q) { return L.residuum(p, q); });
            case BinaryKind::cross:
              break;
          }
          FullTable out{a.scheme.concat(b.scheme), {}};
          for (const auto& t : all_tuples(out.scheme)) {
            Tuple s = assemble(a.scheme, {{&out.scheme, &t}});
            Tuple u = assemble(b.scheme, {{&out.scheme, &t}});
            out.ranks.emplace(t, L.tnorm(a.ranks.at(s), b.ranks.at(u)));
          }
          return out;
        } else if constexpr (std::is_same_v<T, Join>) {
          auto cross = expr::binary(BinaryKind::cross, x.lhs, x.rhs);
          FullTable c = oracle_eval(*cross, catalog, L);
          const Domain& dom = domain_of(c.scheme, x.p);
          for (auto& [t, r] : c.ranks) {
            r = L.tnorm(r, dom.similarity(get(c.scheme, t, x.p),
                                          get(c.scheme, t, x.q)));
          }
          return c;
        } else if constexpr (std::is_same_v<T, Shift>) {
          FullTable c = oracle_eval(*x.child, catalog, L);
          TruthDegree a = L.parse(x.degree.text);
          for (auto& [t, r] : c.ranks) r = L.residuum(a, r);
          return c;
        } else if constexpr (std::is_same_v<T, Project>) {
          FullTable c = oracle_eval(*x.child, catalog, L);
          RelationScheme target = c.scheme.restrict(x.attributes);
          std::vector<Attribute> rest_attrs;
          for (const auto& a : c.scheme.attributes()) {
            if (!target.contains(a.name)) rest_attrs.push_back(a);
          }
          RelationScheme rest(std::move(rest_attrs));
          FullTable out{target, {}};
          for (const auto& r : all_tuples(target)) {
            TruthDegree sup = L.bot();
            for (const auto& s : all_tuples(rest)) {
              Tuple rs = assemble(c.scheme, {{&target, &r}, {&rest, &s}});
              sup = L.join(sup, c.ranks.at(rs));
            }
            out.ranks.emplace(r, sup);
          }
          return out;
        } else if constexpr (std::is_same_v<T, SelectVal>) {
          FullTable c = oracle_eval(*x.child, catalog, L);
          const Domain& dom = domain_of(c.scheme, x.attribute);
          Value d = x.literal.value();
          for (auto& [t, r] : c.ranks) {
            r = L.tnorm(r, dom.similarity(get(c.scheme, t, x.attribute), d));
          }
          return c;
        } else if constexpr (std::is_same_v<T, SelectAttr>) {
          FullTable c = oracle_eval(*x.child, catalog, L);
          const Domain& dom = domain_of(c.scheme, x.p);
          for (auto& [t, r] : c.ranks) {
            r = L.tnorm(r, dom.similarity(get(c.scheme, t, x.p),
                                          get(c.scheme, t, x.q)));
          }
          return c;
        } else {
          FullTable c = oracle_eval(*x.child, catalog, L);
          const Domain& dom = domain_of(c.scheme, x.attribute);
          Value d = x.literal.value();
          FullTable out{c.scheme, {}};
          for (const auto& [t, unused] : c.ranks) {
            TruthDegree sup = L.bot();
            TruthDegree match = dom.similarity(get(c.scheme, t, x.attribute), d);
            for (const auto& [u, ru] : c.ranks) {
              sup = L.join(sup, L.tnorm(L.tnorm(ru, sim_of(c.scheme, u, t, L)), match));
            }
            out.ranks.emplace(t, sup);
          }
          return out;
        }
      },
      e.node);
}

namespace {

TruthDegree oracle_inclusion(Measure m, const FullTable& d1, const FullTable& d2,
                             const ResiduatedLattice& L, Hedge hedge) {
  TruthDegree acc = L.top();
  for (const auto& [t, r] : d1.ranks) {
    TruthDegree target = L.bot();
    if (m == Measure::S) {
      target = d2.ranks.at(t);
    } else {
      Hedge h = m == Measure::S_tuple ? Hedge::identity : hedge;
      for (const auto& [u, ru] : d2.ranks) {
        target = L.join(target, L.tnorm(ru, apply_hedge(L, h, sim_of(d1.scheme, t, u, L))));
      }
    }
    acc = L.meet(acc, L.residuum(r, target));
  }
  return acc;
}

}  // namespace

TruthDegree oracle_measure(Measure m, const FullTable& d1, const FullTable& d2,
                           const ResiduatedLattice& L, Hedge hedge) {
  switch (m) {
    case Measure::S:
    case Measure::S_tuple:
    case Measure::S_hedged:
      return oracle_inclusion(m, d1, d2, L, hedge);
    case Measure::E:
      return L.meet(oracle_inclusion(Measure::S, d1, d2, L, hedge),
                    oracle_inclusion(Measure::S, d2, d1, L, hedge));
    case Measure::E_tuple:
      return L.meet(oracle_inclusion(Measure::S_tuple, d1, d2, L, hedge),
                    oracle_inclusion(Measure::S_tuple, d2, d1, L, hedge));
    case Measure::E_hedged:
      return L.meet(oracle_inclusion(Measure::S_hedged, d1, d2, L, hedge),
                    oracle_inclusion(Measure::S_hedged, d2, d1, L, hedge));
  }
  return L.bot();
}

std::optional<std::string> diff(const RankedDataTable& engine,
                                const FullTable& oracle) {
  if (!(engine.scheme() == oracle.scheme)) {
    return "scheme " + engine.scheme().to_string() + " vs " +
           oracle.scheme.to_string();
  }
  for (const auto& [t, r] : oracle.ranks) {
    TruthDegree got = engine.rank_of(t);
    if (!(got == r)) {
      return format_tuple(t) + ": engine " + format_degree(got) + ", oracle " +
             format_degree(r);
    }
  }
  return std::nullopt;
}

std::string dump(const RankedDataTable& d) {
  std::ostringstream os;
  os << d.scheme().to_string() << " default " << format_degree(d.default_rank())
     << " {";
  bool first = true;
  for (const auto& [t, r] : d.rows()) {
    os << (first ? "" : ", ") << format_tuple(t) << ": " << format_degree(r);
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace rankdb::testkit
