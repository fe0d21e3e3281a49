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

#include "rankdb/checks.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>

#include "rankdb/catalog.hpp"
#include "rankdb/query.hpp"
#include "rankdb/rdt.hpp"
#include "rankdb/similarity.hpp"
#include "rankdb/testkit.hpp"

namespace rankdb::checks {

using testkit::Rng;

namespace {

constexpr double kTolerance = 1e-9;

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t tag(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : s) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
  return h;
}

// Collects one named check. Each instance gets its own generator derived
// from (seed, check name, instance index) so failures replay in isolation.
class Check {
 public:
  Check(std::string suite, std::string name, const CheckOptions& opt)
      : opt_(opt), start_(std::chrono::steady_clock::now()) {
    r_.suite = std::move(suite);
    r_.name = std::move(name);
  }

  Rng instance_rng(std::size_t i) const {
    return Rng(mix(opt_.seed ^ mix(tag(r_.suite + "/" + r_.name) + i)));
  }

  // Runs body(rng) for `count` instances; body returns an empty string when
  // the instance passes and a description of the violation otherwise.
  void run(std::size_t count, const std::function<std::string(Rng&)>& body) {
    for (std::size_t i = 0; i < count; ++i) {
      Rng rng = instance_rng(i);
      std::string failure;
      try {
        failure = body(rng);
      } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
      }
      record(i, failure);
    }
  }

  void record(std::size_t i, const std::string& failure) {
    ++r_.instances;
    if (failure.empty()) return;
    if (r_.violations++ == 0) {
      r_.first_failure = "seed " + std::to_string(opt_.seed) + " instance " +
                         std::to_string(i) + ": " + failure;
    }
  }

  // A violation of the check as a whole rather than of one instance.
  void fail(const std::string& failure) {
    if (r_.violations++ == 0) r_.first_failure = failure;
  }

  CheckResult done() {
    r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
                     .count();
    return std::move(r_);
  }

 private:
  const CheckOptions& opt_;
  std::chrono::steady_clock::time_point start_;
  CheckResult r_;
};

bool leq(const ResiduatedLattice& L, const TruthDegree& a, const TruthDegree& b) {
  return L.exact() ? L.leq(a, b) : a.value() <= b.value() + kTolerance;
}

bool eq(const ResiduatedLattice& L, const TruthDegree& a, const TruthDegree& b) {
  return L.exact() ? a == b : std::fabs(a.value() - b.value()) <= kTolerance;
}

std::string f(const TruthDegree& a) { return format_degree(a); }

std::string ineq(const std::string& what, const TruthDegree& lhs, const TruthDegree& rhs) {
  return what + " violated: " + f(lhs) + " > " + f(rhs);
}

std::vector<ResiduatedLattice> float_lattices() {
  return {ResiduatedLattice::lukasiewicz(), ResiduatedLattice::goedel(),
          ResiduatedLattice::product()};
}

// Calls fn(a, b, c) on every triple of a chain or on `samples` random
// triples of a unit-interval lattice.
void for_triples(const ResiduatedLattice& L, Rng& rng, std::size_t samples,
                 const std::function<void(const TruthDegree&, const TruthDegree&,
                                          const TruthDegree&)>& fn) {
  if (L.exact()) {
    auto c = L.carrier();
    for (const auto& a : c) {
      for (const auto& b : c) {
        for (const auto& x : c) fn(a, b, x);
      }
    }
    return;
  }
  for (std::size_t i = 0; i < samples; ++i) {
    fn(testkit::random_degree(rng, L), testkit::random_degree(rng, L),
       testkit::random_degree(rng, L));
  }
}

std::vector<ResiduatedLattice> law_lattices() {
  std::vector<ResiduatedLattice> out;
  for (std::uint32_t n : {1u, 2u, 5u, 12u}) out.push_back(ResiduatedLattice::chain(n));
  for (const auto& L : float_lattices()) out.push_back(L);
  return out;
}

// A triple-wise law checked on every lattice of law_lattices(); the law
// returns an empty string or a violation message.
CheckResult triple_law(const std::string& suite, const std::string& name,
                       const CheckOptions& opt,
                       const std::function<std::string(const ResiduatedLattice&,
                                                       const TruthDegree&,
                                                       const TruthDegree&,
                                                       const TruthDegree&)>& law) {
  Check c(suite, name, opt);
  Rng rng = c.instance_rng(0);
  std::size_t i = 0;
  for (const auto& L : law_lattices()) {
    for_triples(L, rng, opt.iterations * 10, [&](const auto& a, const auto& b, const auto& x) {
      std::string why = law(L, a, b, x);
      c.record(i++, why.empty() ? why
                                : L.name() + " a=" + f(a) + " b=" + f(b) + " c=" + f(x) +
                                      ": " + why);
    });
  }
  return c.done();
}

}  // namespace

// ---------------------------------------------------------------------------

Results adjointness(const CheckOptions& opt) {
  Results out;
  auto law = [](const ResiduatedLattice& L, const TruthDegree& a, const TruthDegree& b,
                const TruthDegree& c) -> std::string {
    TruthDegree ab = L.tnorm(a, b);
    TruthDegree bc = L.residuum(b, c);
    if (L.exact()) {
      if (L.leq(ab, c) != L.leq(a, bc)) {
        return "a(x)b <= c is " + std::string(L.leq(ab, c) ? "true" : "false") +
               " but a <= b->c is " + (L.leq(a, bc) ? "true" : "false");
      }
      return {};
    }
    // Tolerant form: flag only when one side holds with margin and the
    // other fails with margin.
    double l = ab.value() - c.value();
    double r = a.value() - bc.value();
    if ((l <= -kTolerance && r > kTolerance) || (l > kTolerance && r <= -kTolerance)) {
      return "a(x)b - c = " + std::to_string(l) + ", a - (b->c) = " + std::to_string(r);
    }
    // Residuum is the largest such element.
    if (L.tnorm(b, bc).value() > c.value() + kTolerance) {
      return "b (x) (b->c) exceeds c";
    }
    return {};
  };
  for (std::uint32_t n : {1u, 2u, 5u, 12u}) {
    auto L = ResiduatedLattice::chain(n);
    Check c("adjointness", L.name(), opt);
    Rng rng = c.instance_rng(0);
    std::size_t i = 0;
    for_triples(L, rng, 0, [&](const auto& a, const auto& b, const auto& x) {
      std::string why = law(L, a, b, x);
      c.record(i++, why.empty() ? why : "a=" + f(a) + " b=" + f(b) + " c=" + f(x) + ": " + why);
    });
    out.push_back(c.done());
  }
  for (const auto& L : float_lattices()) {
    Check c("adjointness", L.name(), opt);
    Rng rng = c.instance_rng(0);
    std::size_t i = 0;
    for_triples(L, rng, opt.iterations * 10, [&](const auto& a, const auto& b, const auto& x) {
      std::string why = law(L, a, b, x);
      c.record(i++, why.empty() ? why : "a=" + f(a) + " b=" + f(b) + " c=" + f(x) + ": " + why);
    });
    out.push_back(c.done());
  }
  return out;
}

Results lattice_laws(const CheckOptions& opt) {
  const std::string s = "lattice";
  Results out;
  out.push_back(triple_law(s, "modus ponens", opt, [](const auto& L, const auto& a, const auto& b, const auto&) {
    TruthDegree lhs = L.tnorm(a, L.residuum(a, b));
    return leq(L, lhs, b) ? std::string() : ineq("a (x) (a->b) <= b", lhs, b);
  }));
  out.push_back(triple_law(s, "residuum monotonicity", opt, [](const auto& L, const auto& a, const auto& b, const auto& x) {
    if (L.leq(a, b) && !leq(L, L.residuum(b, x), L.residuum(a, x))) {
      return std::string("a <= b but b->c > a->c");
    }
    if (L.leq(a, b) && !leq(L, L.residuum(x, a), L.residuum(x, b))) {
      return std::string("a <= b but c->a > c->b");
    }
    return std::string();
  }));
  out.push_back(triple_law(s, "currying", opt, [](const auto& L, const auto& a, const auto& b, const auto& x) {
    TruthDegree lhs = L.residuum(a, L.residuum(b, x));
    TruthDegree rhs = L.residuum(L.tnorm(a, b), x);
    return eq(L, lhs, rhs) ? std::string()
                           : "a->(b->c) = " + f(lhs) + " but (a(x)b)->c = " + f(rhs);
  }));
  out.push_back(triple_law(s, "tnorm monoid", opt, [](const auto& L, const auto& a, const auto& b, const auto& x) {
    if (!(L.tnorm(a, b) == L.tnorm(b, a))) return std::string("not commutative");
    if (!eq(L, L.tnorm(a, L.tnorm(b, x)), L.tnorm(L.tnorm(a, b), x))) {
      return std::string("not associative");
    }
    if (!(L.tnorm(a, L.top()) == a)) return std::string("1 is not neutral");
    if (L.leq(a, b) && !leq(L, L.tnorm(a, x), L.tnorm(b, x))) {
      return std::string("not monotone");
    }
    return std::string();
  }));
  out.push_back(triple_law(s, "lattice order", opt, [](const auto& L, const auto& a, const auto& b, const auto&) {
    TruthDegree m = L.meet(a, b);
    TruthDegree j = L.join(a, b);
    if (!L.leq(m, a) || !L.leq(m, b) || !L.leq(a, j) || !L.leq(b, j)) {
      return std::string("meet/join are not bounds");
    }
    if (!L.leq(L.bot(), a) || !L.leq(a, L.top())) return std::string("0/1 are not bounds");
    return std::string();
  }));
  out.push_back(triple_law(s, "biresiduum", opt, [](const auto& L, const auto& a, const auto& b, const auto&) {
    TruthDegree e = L.biresiduum(a, b);
    if (!(e == L.biresiduum(b, a))) return std::string("not symmetric");
    if (L.exact() && L.is_top(e) != (a == b)) {
      return "a<->b = " + f(e) + " for a " + (a == b ? "==" : "!=") + " b";
    }
    if (!L.exact() && a == b && !L.is_top(e)) return std::string("a<->a != 1");
    return std::string();
  }));
  for (Hedge h : {Hedge::identity, Hedge::globalization}) {
    out.push_back(triple_law(s, "hedge " + to_string(h), opt, [h](const auto& L, const auto& a, const auto& b, const auto&) {
      auto star = [&](const TruthDegree& x) { return apply_hedge(L, h, x); };
      if (!L.is_top(star(L.top()))) return std::string("1* != 1");
      if (!L.leq(star(a), a)) return std::string("a* > a");
      if (L.leq(a, b) && !L.leq(star(a), star(b))) return std::string("not monotone");
      TruthDegree lhs = L.tnorm(star(a), star(b));
      if (!leq(L, lhs, star(L.tnorm(a, b)))) return ineq("a*(x)b* <= (a(x)b)*", lhs, star(L.tnorm(a, b)));
      if (!(star(star(a)) == star(a))) return std::string("a** != a*");
      return std::string();
    }));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

testkit::WorldSpec world_spec(testkit::SimilarityStyle style) {
  testkit::WorldSpec w;
  w.style = style;
  return w;
}

testkit::SimilarityStyle random_style(Rng& rng) {
  static const std::vector<testkit::SimilarityStyle> styles{
      testkit::SimilarityStyle::identity, testkit::SimilarityStyle::random,
      testkit::SimilarityStyle::separating, testkit::SimilarityStyle::transitive};
  return rng.pick(styles);
}

const Attribute& random_attribute(Rng& rng, const RelationScheme& s) {
  auto attrs = s.attributes();
  return attrs[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(attrs.size()) - 1))];
}

std::vector<std::string> random_subset(Rng& rng, const RelationScheme& s) {
  std::vector<std::string> keep;
  for (const auto& a : s.attributes()) {
    if (rng.chance(0.5)) keep.push_back(a.name);
  }
  if (keep.empty()) keep.push_back(random_attribute(rng, s).name);
  return keep;
}

RankedDataTable neighbour(Rng& rng, const RankedDataTable& d, std::size_t max_rows) {
  return rng.chance(0.7) ? testkit::perturb(rng, d, max_rows)
                         : testkit::random_table(rng, d.scheme(), d.lattice(), max_rows);
}

// Random finite instance: two table pairs over the left scheme and one over
// the right scheme, each pair a table and a nearby one.
struct Instance {
  testkit::World w;
  RankedDataTable d1, d1p, d2, d2p, r1, r1p;

  static Instance make(Rng& rng, testkit::SimilarityStyle style) {
    testkit::World w = testkit::random_world(rng, world_spec(style));
    auto t = [&](const RelationScheme& s) {
      return testkit::random_table(rng, s, w.lattice, w.max_rows);
    };
    RankedDataTable d1 = t(w.left);
    RankedDataTable d1p = neighbour(rng, d1, w.max_rows);
    RankedDataTable d2 = t(w.left);
    RankedDataTable d2p = neighbour(rng, d2, w.max_rows);
    RankedDataTable r1 = t(w.right);
    RankedDataTable r1p = neighbour(rng, r1, w.max_rows);
    return {std::move(w), std::move(d1), std::move(d1p), std::move(d2),
            std::move(d2p), std::move(r1), std::move(r1p)};
  }

  std::string describe() const {
    return "D1=" + testkit::dump(d1) + " D1'=" + testkit::dump(d1p) + " D2=" +
           testkit::dump(d2) + " D2'=" + testkit::dump(d2p) + " R=" + testkit::dump(r1) +
           " R'=" + testkit::dump(r1p);
  }
};

TruthDegree S(const RankedDataTable& a, const RankedDataTable& b) { return subsethood(a, b); }
TruthDegree E(const RankedDataTable& a, const RankedDataTable& b) { return table_similarity(a, b); }
TruthDegree St(const RankedDataTable& a, const RankedDataTable& b) {
  return subsethood(a, b, ComparisonConfig::tuple_based());
}

}  // namespace

Results schema_laws(const CheckOptions& opt) {
  const std::string s = "schema";
  Results out;
  {
    Check c(s, "tuple similarity", opt);
    c.run(opt.iterations, [](Rng& rng) -> std::string {
      auto w = testkit::random_world(rng, world_spec(random_style(rng)));
      const auto& L = w.lattice;
      RelationScheme sc = w.left.concat(w.right);
      auto all = enumerate_tuples(sc);
      const Tuple& t = rng.pick(all);
      const Tuple& u = rng.pick(all);
      const Tuple& v = rng.pick(all);
      if (!L.is_top(tuple_similarity(sc, t, t, L))) return "not reflexive at " + format_tuple(t);
      if (!(tuple_similarity(sc, t, u, L) == tuple_similarity(sc, u, t, L))) return "not symmetric";
      bool transitive = true;
      for (const auto& a : sc.attributes()) {
        auto rep = validate_similarity(*a.domain);
        transitive = transitive && rep.transitive.value_or(false);
      }
      TruthDegree lhs = L.tnorm(tuple_similarity(sc, t, u, L), tuple_similarity(sc, u, v, L));
      if (transitive && !L.leq(lhs, tuple_similarity(sc, t, v, L))) {
        return "transitive attributes but tuples " + format_tuple(t) + " " + format_tuple(u) +
               " " + format_tuple(v) + " are not";
      }
      return {};
    });
    out.push_back(c.done());
  }
  {
    Check c(s, "ramp antitone", opt);
    c.run(opt.iterations, [](Rng& rng) -> std::string {
      auto lattices = float_lattices();
      lattices.push_back(ResiduatedLattice::chain(static_cast<std::uint32_t>(rng.uniform(1, 20))));
      const auto& L = rng.pick(lattices);
      double k = 1 + rng.unit() * 100;
      Domain d("R", ValueKind::number, L, RampSimilarity{k});
      double u = rng.unit() * 200 - 100;
      double x = rng.unit() * 150;
      double y = x + rng.unit() * 50;
      TruthDegree near = d.similarity(Value::number(u), Value::number(u + x));
      TruthDegree far = d.similarity(Value::number(u), Value::number(u + y));
      if (!L.leq(far, near)) return "|u-v| grew but similarity rose on " + L.name();
      if (x > 0 && L.is_top(near)) return "distinct values with similarity 1";
      return {};
    });
    out.push_back(c.done());
  }
  {
    Check c(s, "transitive closure", opt);
    c.run(opt.iterations, [](Rng& rng) -> std::string {
      auto L = ResiduatedLattice::chain(static_cast<std::uint32_t>(rng.uniform(1, 20)));
      auto d = testkit::random_domain(rng, L, "D", ValueKind::text,
                                      static_cast<std::size_t>(rng.uniform(2, 5)),
                                      testkit::SimilarityStyle::random);
      const auto& table = std::get<TableSimilarity>(d->spec());
      auto closed = testkit::transitivize(d->universe(), table, L);
      Domain t("T", ValueKind::text, L, closed, d->universe());
      for (const auto& u : d->universe()) {
        for (const auto& v : d->universe()) {
          if (!L.leq(d->similarity(u, v), t.similarity(u, v))) return "closure lost a pair";
        }
      }
      if (!testkit::satisfies_tr(t, Hedge::identity)) return "closure is not transitive";
      auto again = testkit::transitivize(t.universe(), closed, L);
      Domain t2("T", ValueKind::text, L, again, t.universe());
      for (const auto& u : t.universe()) {
        for (const auto& v : t.universe()) {
          if (!(t.similarity(u, v) == t2.similarity(u, v))) return "closure is not a fixpoint";
        }
      }
      return {};
    });
    out.push_back(c.done());
  }
  return out;
}

Results rdt_laws(const CheckOptions& opt) {
  const std::string s = "rdt";
  Results out;
  {
    Check c(s, "pointwise algebra", opt);
    c.run(opt.iterations, [](Rng& rng) -> std::string {
      auto in = Instance::make(rng, random_style(rng));
      const auto& a = in.d1;
      const auto& b = in.d2;
      const auto& x = in.d1p;
      for (Combine op : {Combine::union_, Combine::meet, Combine::otimes}) {
        if (!(combine(op, a, b) == combine(op, b, a))) return to_string(op) + " not commutative";
        if (!(combine(op, a, combine(op, b, x)) == combine(op, combine(op, a, b), x))) {
          return to_string(op) + " not associative";
        }
      }
      if (!(combine(Combine::union_, a, a) == a)) return "union not idempotent";
      if (!(combine(Combine::meet, a, a) == a)) return "meet not idempotent";
      return {};
    });
    out.push_back(c.done());
  }
  {
    Check c(s, "join is select of product", opt);
    c.run(opt.iterations, [](Rng& rng) -> std::string {
      auto in = Instance::make(rng, random_style(rng));
      auto lhs = join_sim(in.d1, in.r1, in.w.left_key, in.w.right_key);
      auto rhs = select_attr(cartesian(in.d1, in.r1), in.w.left_key, in.w.right_key);
      return lhs == rhs ? std::string() : "join " + testkit::dump(lhs) + " vs " + testkit::dump(rhs);
    });
    out.push_back(c.done());
  }
  {
    Check c(s, "shift", opt);
    c.run(opt.iterations, [](Rng& rng) -> std::string {
      auto in = Instance::make(rng, random_style(rng));
      const auto& L = in.w.lattice;
      if (!(a_shift(L.top(), in.d1) == in.d1)) return "1 -> D != D";
      TruthDegree a = testkit::random_degree(rng, L);
      TruthDegree b = testkit::random_degree(rng, L);
      if (L.leq(b, a)) std::swap(a, b);
      auto da = a_shift(a, in.d1);
      auto db = a_shift(b, in.d1);
      if (!L.leq(db.default_rank(), da.default_rank())) return "default not antitone";
      for (const auto& t : enumerate_tuples(in.d1.scheme())) {
        if (!L.leq(db.rank_of(t), da.rank_of(t))) {
          return "a=" + f(a) + " b=" + f(b) + " at " + format_tuple(t);
        }
      }
      return {};
    });
    out.push_back(c.done());
  }
  return out;
}

// ---------------------------------------------------------------------------

Results preservation(const CheckOptions& opt) {
  const std::string s = "preservation";
  Results out;
  using Body = std::function<std::string(const Instance&, Rng&)>;
  auto add = [&](const std::string& name, testkit::SimilarityStyle style, const Body& body) {
    Check c(s, name, opt);
    c.run(opt.iterations, [&](Rng& rng) -> std::string {
      Instance in = Instance::make(rng, style);
      std::string why = body(in, rng);
      return why.empty() ? why : why + " on " + in.describe();
    });
    out.push_back(c.done());
  };
  const auto random = testkit::SimilarityStyle::random;

  auto pointwise_S = [&](Combine op, bool use_tnorm) {
    return [op, use_tnorm](const Instance& in, Rng&) -> std::string {
      const auto& L = in.w.lattice;
      TruthDegree a = S(in.d1, in.d1p);
      TruthDegree b = S(in.d2, in.d2p);
      TruthDegree lhs = use_tnorm ? L.tnorm(a, b) : L.meet(a, b);
      TruthDegree rhs = S(combine(op, in.d1, in.d2), combine(op, in.d1p, in.d2p));
      return L.leq(lhs, rhs) ? std::string() : ineq("S", lhs, rhs);
    };
  };
  auto pointwise_E = [&](Combine op, bool use_tnorm) {
    return [op, use_tnorm](const Instance& in, Rng&) -> std::string {
      const auto& L = in.w.lattice;
      TruthDegree a = E(in.d1, in.d1p);
      TruthDegree b = E(in.d2, in.d2p);
      TruthDegree lhs = use_tnorm ? L.tnorm(a, b) : L.meet(a, b);
      TruthDegree rhs = E(combine(op, in.d1, in.d2), combine(op, in.d1p, in.d2p));
      return L.leq(lhs, rhs) ? std::string() : ineq("E", lhs, rhs);
    };
  };
  add("S union", random, pointwise_S(Combine::union_, false));
  add("S meet", random, pointwise_S(Combine::meet, false));
  add("S otimes", random, pointwise_S(Combine::otimes, true));
  add("S shift", random, [](const Instance& in, Rng& rng) -> std::string {
    const auto& L = in.w.lattice;
    TruthDegree a = testkit::random_degree(rng, L);
    TruthDegree lhs = S(in.d1, in.d1p);
    TruthDegree rhs = S(a_shift(a, in.d1), a_shift(a, in.d1p));
    return L.leq(lhs, rhs) ? std::string() : ineq("S with a=" + f(a), lhs, rhs);
  });
  add("E union", random, pointwise_E(Combine::union_, false));
  add("E meet", random, pointwise_E(Combine::meet, false));
  add("E otimes", random, pointwise_E(Combine::otimes, true));
  add("E shift", random, [](const Instance& in, Rng& rng) -> std::string {
    const auto& L = in.w.lattice;
    TruthDegree a = testkit::random_degree(rng, L);
    TruthDegree lhs = E(in.d1, in.d1p);
    TruthDegree rhs = E(a_shift(a, in.d1), a_shift(a, in.d1p));
    return L.leq(lhs, rhs) ? std::string() : ineq("E with a=" + f(a), lhs, rhs);
  });
  add("E residuum", random, pointwise_E(Combine::residuum, true));
  add("S product", random, [](const Instance& in, Rng&) -> std::string {
    const auto& L = in.w.lattice;
    TruthDegree lhs = L.tnorm(S(in.d1, in.d1p), S(in.r1, in.r1p));
    TruthDegree rhs = S(cartesian(in.d1, in.r1), cartesian(in.d1p, in.r1p));
    return L.leq(lhs, rhs) ? std::string() : ineq("S", lhs, rhs);
  });
  add("S projection", random, [](const Instance& in, Rng& rng) -> std::string {
    const auto& L = in.w.lattice;
    auto keep = random_subset(rng, in.w.left);
    TruthDegree lhs = S(in.d1, in.d1p);
    TruthDegree rhs = S(project(keep, in.d1), project(keep, in.d1p));
    return L.leq(lhs, rhs) ? std::string() : ineq("S", lhs, rhs);
  });
  add("S selection", random, [](const Instance& in, Rng& rng) -> std::string {
    const auto& L = in.w.lattice;
    const Attribute& y = random_attribute(rng, in.w.left);
    Value d = testkit::random_value(rng, y);
    TruthDegree lhs = S(in.d1, in.d1p);
    TruthDegree rhs = S(select_sim(in.d1, y.name, d), select_sim(in.d1p, y.name, d));
    return L.leq(lhs, rhs) ? std::string() : ineq("S", lhs, rhs);
  });
  add("S join", random, [](const Instance& in, Rng&) -> std::string {
    const auto& L = in.w.lattice;
    const auto& p = in.w.left_key;
    const auto& q = in.w.right_key;
    TruthDegree lhs = L.tnorm(S(in.d1, in.d1p), S(in.r1, in.r1p));
    TruthDegree rhs = S(join_sim(in.d1, in.r1, p, q), join_sim(in.d1p, in.r1p, p, q));
    return L.leq(lhs, rhs) ? std::string() : ineq("S", lhs, rhs);
  });
  add("tuple-based union", random, [](const Instance& in, Rng&) -> std::string {
    const auto& L = in.w.lattice;
    TruthDegree lhs = L.meet(St(in.d1, in.d1p), S(in.d2, in.d2p));
    TruthDegree rhs = St(combine(Combine::union_, in.d1, in.d2),
                         combine(Combine::union_, in.d1p, in.d2p));
    return L.leq(lhs, rhs) ? std::string() : ineq("S~", lhs, rhs);
  });
  add("tuple-based product", random, [](const Instance& in, Rng&) -> std::string {
    const auto& L = in.w.lattice;
    TruthDegree lhs = L.tnorm(St(in.d1, in.d1p), S(in.r1, in.r1p));
    TruthDegree rhs = St(cartesian(in.d1, in.r1), cartesian(in.d1p, in.r1p));
    return L.leq(lhs, rhs) ? std::string() : ineq("S~", lhs, rhs);
  });
  add("tuple-based projection", random, [](const Instance& in, Rng& rng) -> std::string {
    const auto& L = in.w.lattice;
    auto keep = random_subset(rng, in.w.left);
    TruthDegree lhs = St(in.d1, in.d1p);
    TruthDegree rhs = St(project(keep, in.d1), project(keep, in.d1p));
    return L.leq(lhs, rhs) ? std::string() : ineq("S~", lhs, rhs);
  });
  add("tuple-based closure selection", testkit::SimilarityStyle::transitive, [](const Instance& in, Rng& rng) -> std::string {
    const auto& L = in.w.lattice;
    const Attribute& y = random_attribute(rng, in.w.left);
    Value d = testkit::random_value(rng, y);
    TruthDegree lhs = St(in.d1, in.d1p);
    TruthDegree rhs = St(select_closure(in.d1, y.name, d, CandidateMode::full),
                         select_closure(in.d1p, y.name, d, CandidateMode::full));
    return L.leq(lhs, rhs) ? std::string() : ineq("S~ at " + y.name + "~" + d.to_string(), lhs, rhs);
  });
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Literal literal_of(const Value& v) {
  return v.kind() == ValueKind::text ? expr::text(v.as_text()) : expr::number(v.to_string());
}

std::string check_table(const RankedDataTable& engine, const QueryExpr& e,
                        const testkit::FullCatalog& full, const ResiduatedLattice& L) {
  auto why = testkit::diff(engine, testkit::oracle_eval(e, full, L));
  return why ? print_query(e) + ": " + *why : std::string();
}

}  // namespace

Results oracle_equivalence(const CheckOptions& opt) {
  const std::string s = "oracle";
  Results out;
  struct Ctx {
    Instance in;
    TableCatalog catalog;
    testkit::FullCatalog full;
  };
  auto make = [](Rng& rng) {
    Instance in = Instance::make(rng, random_style(rng));
    TableCatalog c{{"L1", in.d1}, {"L2", in.d2}, {"R1", in.r1}, {"R2", in.r1p}};
    testkit::FullCatalog full = testkit::materialize(c);
    return Ctx{std::move(in), std::move(c), std::move(full)};
  };
  auto op = [&](const std::string& name,
                const std::function<std::string(Ctx&, Rng&)>& body) {
    Check c(s, name, opt);
    c.run(opt.iterations, [&](Rng& rng) -> std::string {
      Ctx ctx = make(rng);
      return body(ctx, rng);
    });
    out.push_back(c.done());
  };
  const auto L1 = expr::table("L1");
  const auto L2 = expr::table("L2");
  const auto R1 = expr::table("R1");

  for (auto [kind, comb] : {std::pair{BinaryKind::union_, Combine::union_},
                            std::pair{BinaryKind::meet, Combine::meet},
                            std::pair{BinaryKind::otimes, Combine::otimes},
                            std::pair{BinaryKind::residuum, Combine::residuum}}) {
    op(to_string(comb), [&, kind = kind, comb = comb](Ctx& x, Rng&) {
      return check_table(combine(comb, x.in.d1, x.in.d2), *expr::binary(kind, L1, L2), x.full,
                         x.in.w.lattice);
    });
  }
  op("shift", [&](Ctx& x, Rng& rng) {
    TruthDegree a = testkit::random_degree(rng, x.in.w.lattice);
    return check_table(a_shift(a, x.in.d1), *expr::shift(serialize_degree(a), L1), x.full,
                       x.in.w.lattice);
  });
  op("project", [&](Ctx& x, Rng& rng) {
    auto keep = random_subset(rng, x.in.w.left);
    return check_table(project(keep, x.in.d1), *expr::project(keep, L1), x.full, x.in.w.lattice);
  });
  op("project of shift", [&](Ctx& x, Rng& rng) {
    TruthDegree a = testkit::random_degree(rng, x.in.w.lattice);
    auto keep = random_subset(rng, x.in.w.left);
    return check_table(project(keep, a_shift(a, x.in.d1)),
                       *expr::project(keep, expr::shift(serialize_degree(a), L1)), x.full,
                       x.in.w.lattice);
  });
  op("select", [&](Ctx& x, Rng& rng) {
    const Attribute& y = random_attribute(rng, x.in.w.left);
    Value v = testkit::random_value(rng, y);
    return check_table(select_sim(x.in.d1, y.name, v), *expr::select(L1, y.name, literal_of(v)),
                       x.full, x.in.w.lattice);
  });
  op("select attributes", [&](Ctx& x, Rng&) {
    const auto& p = x.in.w.left_key;
    const auto& q = x.in.w.right_key;
    return check_table(select_attr(cartesian(x.in.d1, x.in.r1), p, q),
                       *expr::select_attr(expr::binary(BinaryKind::cross, L1, R1), p, q), x.full,
                       x.in.w.lattice);
  });
  op("cross", [&](Ctx& x, Rng&) {
    return check_table(cartesian(x.in.d1, x.in.r1), *expr::binary(BinaryKind::cross, L1, R1),
                       x.full, x.in.w.lattice);
  });
  op("join", [&](Ctx& x, Rng&) {
    const auto& p = x.in.w.left_key;
    const auto& q = x.in.w.right_key;
    return check_table(join_sim(x.in.d1, x.in.r1, p, q), *expr::join(L1, R1, p, q), x.full,
                       x.in.w.lattice);
  });
  op("closure selection", [&](Ctx& x, Rng& rng) {
    const Attribute& y = random_attribute(rng, x.in.w.left);
    Value v = testkit::random_value(rng, y);
    return check_table(select_closure(x.in.d1, y.name, v, CandidateMode::full),
                       *expr::select_closure(L1, y.name, literal_of(v)), x.full, x.in.w.lattice);
  });

  using testkit::Measure;
  struct MeasureCase {
    const char* name;
    Measure m;
    ComparisonConfig cfg;
    bool shifted;
    bool both;
  };
  const std::vector<MeasureCase> measures{
      {"S", Measure::S, ComparisonConfig::rank_based(), false, false},
      {"E", Measure::E, ComparisonConfig::rank_based(), false, true},
      {"S of shifted tables", Measure::S, ComparisonConfig::rank_based(), true, false},
      {"E of shifted tables", Measure::E, ComparisonConfig::rank_based(), true, true},
      {"S tuple-based", Measure::S_tuple, ComparisonConfig::tuple_based(), false, false},
      {"E tuple-based", Measure::E_tuple, ComparisonConfig::tuple_based(), false, true},
      {"S hedged identity", Measure::S_hedged, ComparisonConfig::hedged(Hedge::identity), false, false},
      {"E hedged identity", Measure::E_hedged, ComparisonConfig::hedged(Hedge::identity), false, true},
      {"S hedged globalization", Measure::S_hedged, ComparisonConfig::hedged(Hedge::globalization), false, false},
      {"E hedged globalization", Measure::E_hedged, ComparisonConfig::hedged(Hedge::globalization), false, true},
  };
  for (const auto& mc : measures) {
    op("measure " + std::string(mc.name), [&mc](Ctx& x, Rng& rng) -> std::string {
      const auto& L = x.in.w.lattice;
      RankedDataTable a = x.in.d1;
      RankedDataTable b = x.in.d1p;
      if (mc.shifted) {
        a = a_shift(testkit::random_degree(rng, L), a);
        b = a_shift(testkit::random_degree(rng, L), b);
      }
      TruthDegree engine = mc.both ? table_similarity(a, b, mc.cfg) : subsethood(a, b, mc.cfg);
      TruthDegree oracle = testkit::oracle_measure(mc.m, testkit::materialize(a),
                                                   testkit::materialize(b), L, mc.cfg.hedge);
      if (engine == oracle) return {};
      return "engine " + f(engine) + ", oracle " + f(oracle) + " on " + testkit::dump(a) +
             " vs " + testkit::dump(b);
    });
  }

  {
    Check c(s, "random plans", opt);
    c.run(opt.iterations, [](Rng& rng) -> std::string {
      auto w = testkit::random_world(rng, world_spec(random_style(rng)));
      TableCatalog cat = testkit::random_catalog(rng, w);
      ExprPtr plan = testkit::random_plan(rng, w, {});
      return check_table(evaluate(*plan, cat), *plan, testkit::materialize(cat), w.lattice);
    });
    out.push_back(c.done());
  }
  return out;
}

Results specialization(const CheckOptions& opt) {
  const std::string s = "specialization";
  const std::size_t n = std::max<std::size_t>(1, opt.iterations / 2);
  Results out;
  auto pairs = [](const Instance& in) {
    return std::vector<std::pair<const RankedDataTable*, const RankedDataTable*>>{
        {&in.d1, &in.d1p}, {&in.d1p, &in.d1}, {&in.d1, &in.d2}, {&in.r1, &in.r1p}};
  };
  {
    Check c(s, "hedged identity is tuple-based", opt);
    c.run(n, [&](Rng& rng) -> std::string {
      Instance in = Instance::make(rng, random_style(rng));
      for (auto [a, b] : pairs(in)) {
        TruthDegree h = subsethood(*a, *b, ComparisonConfig::hedged(Hedge::identity));
        TruthDegree t = subsethood(*a, *b, ComparisonConfig::tuple_based());
        if (!(h == t)) return "S*=" + f(h) + " S~=" + f(t) + " on " + in.describe();
      }
      return {};
    });
    out.push_back(c.done());
  }
  {
    Check c(s, "hedged globalization is rank-based", opt);
    c.run(n, [&](Rng& rng) -> std::string {
      Instance in = Instance::make(rng, testkit::SimilarityStyle::separating);
      for (auto [a, b] : pairs(in)) {
        TruthDegree h = subsethood(*a, *b, ComparisonConfig::hedged(Hedge::globalization));
        TruthDegree r = subsethood(*a, *b);
        if (!(h == r)) return "S*=" + f(h) + " S=" + f(r) + " on " + in.describe();
        TruthDegree he = table_similarity(*a, *b, ComparisonConfig::hedged(Hedge::globalization));
        if (!(he == table_similarity(*a, *b))) return "E* differs from E on " + in.describe();
      }
      return {};
    });
    out.push_back(c.done());
  }
  {
    Check c(s, "rank-based below tuple-based", opt);
    c.run(n, [&](Rng& rng) -> std::string {
      Instance in = Instance::make(rng, random_style(rng));
      const auto& L = in.w.lattice;
      for (auto [a, b] : pairs(in)) {
        TruthDegree r = subsethood(*a, *b);
        TruthDegree t = subsethood(*a, *b, ComparisonConfig::tuple_based());
        if (!L.leq(r, t)) return ineq("S <= S~", r, t) + " on " + in.describe();
      }
      return {};
    });
    out.push_back(c.done());
  }
  {
    Check c(s, "E is the meet of both inclusions", opt);
    c.run(n, [&](Rng& rng) -> std::string {
      Instance in = Instance::make(rng, random_style(rng));
      const auto& L = in.w.lattice;
      for (const auto& cfg : {ComparisonConfig::rank_based(), ComparisonConfig::tuple_based(),
                              ComparisonConfig::hedged(Hedge::identity),
                              ComparisonConfig::hedged(Hedge::globalization)}) {
        for (auto [a, b] : pairs(in)) {
          TruthDegree e = table_similarity(*a, *b, cfg);
          if (!(e == L.meet(subsethood(*a, *b, cfg), subsethood(*b, *a, cfg)))) {
            return to_string(cfg.mode) + " E is not S meet S";
          }
        }
      }
      return {};
    });
    out.push_back(c.done());
  }
  return out;
}

Results hedged_laws(const CheckOptions& opt) {
  const std::string s = "hedged";
  const std::size_t n = std::max<std::size_t>(1, opt.iterations / 2);
  Results out;
  for (Hedge h : {Hedge::identity, Hedge::globalization}) {
    Check c(s, "hedge " + to_string(h), opt);
    c.run(n, [h](Rng& rng) -> std::string {
      auto w = testkit::random_world(rng, world_spec(testkit::SimilarityStyle::transitive));
      const auto& L = w.lattice;
      RelationScheme sc = w.left.concat(w.right);
      for (const auto& a : sc.attributes()) {
        if (!testkit::satisfies_tr(*a.domain, h)) return "generated domain " + a.domain->id() + " violates (tr)";
      }
      RankedDataTable d1 = testkit::random_table(rng, sc, L, w.max_rows);
      RankedDataTable d2 = neighbour(rng, d1, w.max_rows);
      RankedDataTable d3 = neighbour(rng, d2, w.max_rows);
      auto cfg = ComparisonConfig::hedged(h);
      auto Sh = [&](const auto& a, const auto& b) { return subsethood(a, b, cfg); };
      auto Eh = [&](const auto& a, const auto& b) { return table_similarity(a, b, cfg); };
      std::string dumps = " on " + testkit::dump(d1) + " / " + testkit::dump(d2) + " / " + testkit::dump(d3);
      for (const auto* d : {&d1, &d2, &d3}) {
        if (!L.is_top(Sh(*d, *d))) return "S* not reflexive" + dumps;
        if (!L.is_top(Eh(*d, *d))) return "E* not reflexive" + dumps;
      }
      if (!(Eh(d1, d2) == Eh(d2, d1))) return "E* not symmetric" + dumps;
      TruthDegree ls = L.tnorm(Sh(d1, d2), Sh(d2, d3));
      if (!L.leq(ls, Sh(d1, d3))) return ineq("S* transitivity", ls, Sh(d1, d3)) + dumps;
      TruthDegree rs = L.tnorm(Sh(d3, d2), Sh(d2, d1));
      if (!L.leq(rs, Sh(d3, d1))) return ineq("S* transitivity", rs, Sh(d3, d1)) + dumps;
      TruthDegree le = L.tnorm(Eh(d1, d2), Eh(d2, d3));
      if (!L.leq(le, Eh(d1, d3))) return ineq("E* transitivity", le, Eh(d1, d3)) + dumps;
      return {};
    });
    out.push_back(c.done());
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Plain relational algebra: a relation is a set of attribute -> value maps.
using Row = std::map<std::string, Value>;
using Relation = std::set<Row>;

Relation to_relation(const RankedDataTable& d) {
  Relation out;
  auto names = d.scheme().names();
  for (const auto& [t, r] : d.rows()) {
    if (!d.lattice().is_top(r)) throw Error("non-crisp rank " + f(r));
    Row row;
    for (std::size_t i = 0; i < names.size(); ++i) row.emplace(names[i], t.values[i]);
    out.insert(std::move(row));
  }
  return out;
}

Relation naive_union(const Relation& a, const Relation& b) {
  Relation out = a;
  out.insert(b.begin(), b.end());
  return out;
}

Relation naive_intersection(const Relation& a, const Relation& b) {
  Relation out;
  for (const auto& r : a) {
    if (b.count(r)) out.insert(r);
  }
  return out;
}

Relation naive_project(const Relation& a, const std::vector<std::string>& keep) {
  Relation out;
  for (const auto& r : a) {
    Row row;
    for (const auto& k : keep) row.emplace(k, r.at(k));
    out.insert(std::move(row));
  }
  return out;
}

Relation naive_select(const Relation& a, const std::function<bool(const Row&)>& pred) {
  Relation out;
  for (const auto& r : a) {
    if (pred(r)) out.insert(r);
  }
  return out;
}

Relation naive_product(const Relation& a, const Relation& b) {
  Relation out;
  for (const auto& r : a) {
    for (const auto& s : b) {
      Row row = r;
      row.insert(s.begin(), s.end());
      out.insert(std::move(row));
    }
  }
  return out;
}

bool subset(const Relation& a, const Relation& b) {
  return std::all_of(a.begin(), a.end(), [&](const Row& r) { return b.count(r) > 0; });
}

}  // namespace

Results boolean_degeneration(const CheckOptions& opt) {
  const std::string s = "boolean";
  const std::size_t n = std::max<std::size_t>(1, opt.iterations / 5);
  Results out;
  struct Ctx {
    testkit::World w;
    RankedDataTable a, b, r;
  };
  auto make = [](Rng& rng) {
    testkit::WorldSpec spec;
    spec.chain_size = 1;
    spec.style = testkit::SimilarityStyle::identity;
    testkit::World w = testkit::random_world(rng, spec);
    RankedDataTable a = testkit::random_table(rng, w.left, w.lattice, w.max_rows);
    RankedDataTable b = neighbour(rng, a, w.max_rows);
    RankedDataTable r = testkit::random_table(rng, w.right, w.lattice, w.max_rows);
    return Ctx{std::move(w), std::move(a), std::move(b), std::move(r)};
  };
  auto op = [&](const std::string& name, const std::function<std::string(Ctx&, Rng&)>& body) {
    Check c(s, name, opt);
    c.run(n, [&](Rng& rng) -> std::string {
      Ctx x = make(rng);
      std::string why = body(x, rng);
      return why.empty() ? why
                         : why + " on " + testkit::dump(x.a) + " / " + testkit::dump(x.b) +
                               " / " + testkit::dump(x.r);
    });
    out.push_back(c.done());
  };
  auto same = [](const RankedDataTable& engine, const Relation& naive) {
    return to_relation(engine) == naive ? std::string() : "engine " + testkit::dump(engine);
  };
  op("union", [&](Ctx& x, Rng&) {
    return same(combine(Combine::union_, x.a, x.b), naive_union(to_relation(x.a), to_relation(x.b)));
  });
  op("meet", [&](Ctx& x, Rng&) {
    return same(combine(Combine::meet, x.a, x.b),
                naive_intersection(to_relation(x.a), to_relation(x.b)));
  });
  op("otimes", [&](Ctx& x, Rng&) {
    return same(combine(Combine::otimes, x.a, x.b),
                naive_intersection(to_relation(x.a), to_relation(x.b)));
  });
  op("project", [&](Ctx& x, Rng& rng) {
    auto keep = random_subset(rng, x.w.left);
    return same(project(keep, x.a), naive_project(to_relation(x.a), keep));
  });
  op("select", [&](Ctx& x, Rng& rng) {
    const Attribute& y = random_attribute(rng, x.w.left);
    Value v = testkit::random_value(rng, y);
    return same(select_sim(x.a, y.name, v),
                naive_select(to_relation(x.a), [&](const Row& r) { return r.at(y.name) == v; }));
  });
  op("closure selection", [&](Ctx& x, Rng& rng) {
    const Attribute& y = random_attribute(rng, x.w.left);
    Value v = testkit::random_value(rng, y);
    return same(select_closure(x.a, y.name, v, CandidateMode::full),
                naive_select(to_relation(x.a), [&](const Row& r) { return r.at(y.name) == v; }));
  });
  op("cross", [&](Ctx& x, Rng&) {
    return same(cartesian(x.a, x.r), naive_product(to_relation(x.a), to_relation(x.r)));
  });
  op("select attributes", [&](Ctx& x, Rng&) {
    const auto& p = x.w.left_key;
    const auto& q = x.w.right_key;
    return same(select_attr(cartesian(x.a, x.r), p, q),
                naive_select(naive_product(to_relation(x.a), to_relation(x.r)),
                             [&](const Row& r) { return r.at(p) == r.at(q); }));
  });
  op("join", [&](Ctx& x, Rng&) {
    const auto& p = x.w.left_key;
    const auto& q = x.w.right_key;
    return same(join_sim(x.a, x.r, p, q),
                naive_select(naive_product(to_relation(x.a), to_relation(x.r)),
                             [&](const Row& r) { return r.at(p) == r.at(q); }));
  });
  op("subsethood", [&](Ctx& x, Rng&) -> std::string {
    const auto& L = x.w.lattice;
    bool sub = subset(to_relation(x.a), to_relation(x.b));
    for (const auto& cfg : {ComparisonConfig::rank_based(), ComparisonConfig::tuple_based()}) {
      TruthDegree d = subsethood(x.a, x.b, cfg);
      if (L.is_top(d) != sub) return to_string(cfg.mode) + " S = " + f(d);
    }
    return {};
  });
  op("similarity", [&](Ctx& x, Rng&) -> std::string {
    const auto& L = x.w.lattice;
    bool equal = to_relation(x.a) == to_relation(x.b);
    for (const auto& cfg : {ComparisonConfig::rank_based(), ComparisonConfig::tuple_based()}) {
      TruthDegree d = table_similarity(x.a, x.b, cfg);
      if (L.is_top(d) != equal) return to_string(cfg.mode) + " E = " + f(d);
    }
    return {};
  });
  return out;
}

// ---------------------------------------------------------------------------

namespace {

const std::vector<std::string>& parser_corpus() {
  static const std::vector<std::string> corpus{
      "houses",
      "project [LOCATION] houses",
      "project [AGENT, NAME] (join (houses, customers) on PRICE ~ BUDGET)",
      "join (houses, customers) on PRICE ~ BUDGET",
      "union (houses, houses_alt)",
      "meet (houses, houses_alt)",
      "otimes (houses, houses_alt)",
      "residuum (houses, houses_alt)",
      "cross (houses, customers)",
      "shift 0.7 houses",
      "shift 1 houses",
      "shift 0 houses",
      "shift .5 houses",
      "select houses where LOCATION ~ 'Vestal'",
      "select houses where PRICE ~ 250000",
      "select houses where PRICE ~ -3.5",
      "select (cross (houses, customers)) where PRICE ~ BUDGET",
      "selectc houses where LOCATION ~ 'Binghamton'",
      "selectc houses where SQFT ~ 1200",
      "select houses where AGENT ~ 'O''Brien'",
      "select houses where LOCATION ~ ''",
      "project [A, B, C] (union (t1, meet (t2, t3)))",
      "  project\n[ LOCATION ]\n\thouses  ",
      "(houses)",
      "((project [LOCATION] (houses)))",
      "union (shift 0.25 (project [X] a), project [X] (shift 0.5 b))",
      "join (select a where X ~ 'x', selectc b where Y ~ 2) on X ~ Y",
      "shift 0.5 (shift 0.25 houses)",
      "select (select houses where AGE ~ 30) where SQFT ~ 1200",
      "project [LOCATION] (selectc houses where LOCATION ~ 'Vestal')",
      "cross (cross (a, b), c)",
      "residuum (shift 0.3 a, otimes (a, b))",
      "union (union (union (a, b), c), d)",
      "project [PRICE] (select houses where PRICE ~ 0.001)",
  };
  return corpus;
}

const std::vector<std::string>& parser_rejects() {
  static const std::vector<std::string> bad{
      "shift 1.5 houses",
      "shift -0.5 houses",
      "project [] houses",
      "project [A,] houses",
      "union (a)",
      "union (a, b",
      "join (a, b) on X",
      "select a where X ~",
      "selectc a where X ~ Y",
      "frobnicate (a, b)",
      "select a where X ~ 'unterminated",
      "houses extra",
      "",
      "(a",
      "union",
      "project [LOCATION]",
  };
  return bad;
}

}  // namespace

Results parser_roundtrip(const CheckOptions& opt) {
  const std::string s = "parser";
  Results out;
  {
    Check c(s, "corpus round-trip", opt);
    const auto& corpus = parser_corpus();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      std::string why;
      try {
        ExprPtr e = parse_query(corpus[i]);
        std::string printed = print_query(*e);
        ExprPtr again = parse_query(printed);
        if (!(*again == *e)) {
          why = "'" + corpus[i] + "' printed as '" + printed + "' reparses differently";
        } else if (print_query(*again) != printed) {
          why = "printing is not stable for '" + corpus[i] + "'";
        }
      } catch (const ParseError& e) {
        why = "'" + corpus[i] + "' rejected: " + e.what();
      }
      c.record(i, why);
    }
    out.push_back(c.done());
  }
  {
    Check c(s, "rejects malformed input", opt);
    const auto& bad = parser_rejects();
    for (std::size_t i = 0; i < bad.size(); ++i) {
      std::string why;
      try {
        ExprPtr e = parse_query(bad[i]);
        why = "'" + bad[i] + "' accepted as " + print_query(*e);
      } catch (const ParseError&) {
      }
      c.record(i, why);
    }
    out.push_back(c.done());
  }
  {
    Check c(s, "random plan round-trip", opt);
    c.run(std::max<std::size_t>(50, opt.iterations / 10), [](Rng& rng) -> std::string {
      auto w = testkit::random_world(rng, world_spec(random_style(rng)));
      ExprPtr plan = testkit::random_plan(rng, w, {});
      std::string printed = print_query(*plan);
      ExprPtr again = parse_query(printed, w.lattice);
      return *again == *plan ? std::string() : "'" + printed + "' reparses differently";
    });
    out.push_back(c.done());
  }
  return out;
}

Results bound_properties(const CheckOptions& opt) {
  const std::string s = "bounds";
  Results out;
  {
    Check c(s, "soundness", opt);
    c.run(opt.iterations, [](Rng& rng) -> std::string {
      auto w = testkit::random_world(rng, world_spec(random_style(rng)));
      TableCatalog c1 = testkit::random_catalog(rng, w);
      TableCatalog c2 = testkit::perturb_catalog(rng, c1, w.max_rows);
      ExprPtr plan = testkit::random_plan(rng, w, {});
      VerifyReport r = verify_bound(*plan, c1, c2, {}, w.lattice);
      if (r.holds) return {};
      return print_query(*plan) + ": bound " + f(r.bound.value) + " (" +
             to_string(r.bound.guarantee) + ") but actual " + f(r.actual);
    });
    out.push_back(c.done());
  }
  {
    Check c(s, "soundness of closure plans", opt);
    std::size_t guaranteed = 0;
    c.run(opt.iterations, [&guaranteed](Rng& rng) -> std::string {
      auto w = testkit::random_world(rng, world_spec(testkit::SimilarityStyle::transitive));
      TableCatalog c1 = testkit::random_catalog(rng, w);
      TableCatalog c2 = testkit::perturb_catalog(rng, c1, w.max_rows);
      ExprPtr plan;
      for (int tries = 0; tries < 50; ++tries) {
        plan = testkit::random_plan(rng, w, {});
        if (print_query(*plan).find("selectc") != std::string::npos) break;
      }
      VerifyReport r = verify_bound(*plan, c1, c2, {}, w.lattice);
      guaranteed += r.bound.guarantee == Guarantee::tuple_based;
      if (r.holds) return {};
      return print_query(*plan) + ": bound " + f(r.bound.value) + " (" +
             to_string(r.bound.guarantee) + ") but actual " + f(r.actual);
    });
    if (guaranteed == 0) c.fail("no closure plan kept a tuple-based guarantee");
    out.push_back(c.done());
  }
  {
    Check c(s, "monotonicity", opt);
    c.run(opt.iterations, [](Rng& rng) -> std::string {
      auto w = testkit::random_world(rng, world_spec(random_style(rng)));
      const auto& L = w.lattice;
      ExprPtr plan = testkit::random_plan(rng, w, {});
      std::map<std::string, TruthDegree> low;
      for (const char* n : {"L1", "L2", "R1", "R2"}) low.emplace(n, testkit::random_degree(rng, L));
      auto high = low;
      auto& raised = high.at(rng.pick(std::vector<std::string>{"L1", "L2", "R1", "R2"}));
      raised = L.join(raised, testkit::random_degree(rng, L));
      auto b1 = propagate_bound(*plan, low, L);
      auto b2 = propagate_bound(*plan, high, L);
      if (!L.leq(b1.value, b2.value)) {
        return print_query(*plan) + ": raising an assumption lowered the bound";
      }
      if (b1.guarantee != b2.guarantee) return "guarantee depends on the assumptions";
      if (!(b1.trace.back().output == b1.value)) return "trace root differs from the bound";
      return {};
    });
    out.push_back(c.done());
  }
  {
    Check c(s, "scheme derivation", opt);
    c.run(opt.iterations, [](Rng& rng) -> std::string {
      auto w = testkit::random_world(rng, world_spec(random_style(rng)));
      TableCatalog cat = testkit::random_catalog(rng, w);
      testkit::PlanSpec spec;
      spec.allow_unsafe_defaults = rng.chance(0.5);
      ExprPtr plan = testkit::random_plan(rng, w, spec);
      RelationScheme derived = derive_scheme(*plan, schemes_of(cat));
      try {
        RankedDataTable r = evaluate(*plan, cat);
        if (!(r.scheme() == derived)) return print_query(*plan) + ": derived scheme differs";
      } catch (const EvalError& e) {
        if (e.kind() != OpErrorKind::nonzero_default_unsupported) {
          return print_query(*plan) + ": " + e.what();
        }
      }
      return {};
    });
    out.push_back(c.done());
  }
  return out;
}

Results io_roundtrip(const CheckOptions& opt) {
  Results out;
  Check c("io", "csv round-trip", opt);
  c.run(opt.iterations, [](Rng& rng) -> std::string {
    std::vector<ResiduatedLattice> lattices = float_lattices();
    lattices.push_back(ResiduatedLattice::chain(static_cast<std::uint32_t>(rng.uniform(1, 30))));
    const auto& L = rng.pick(lattices);
    Catalog cat;
    cat.lattice = L;
    std::vector<Value> odd{Value::text("plain"), Value::text("a,b"), Value::text("say \"hi\""),
                           Value::text(" padded "), Value::text("")};
    std::vector<Value> nums{Value::number(0), Value::number(-2.5), Value::number(1e-7),
                            Value::number(228500), Value::number(0.1)};
    cat.domains.emplace("T", std::make_shared<const Domain>("T", ValueKind::text, L,
                                                             IdentitySimilarity{}, odd));
    cat.domains.emplace("N", std::make_shared<const Domain>("N", ValueKind::number, L,
                                                             IdentitySimilarity{}, nums));
    cat.bindings = {{"name", "T"}, {"x", "N"}};
    RelationScheme sc = cat.scheme_for({"name", "x"});
    RankedDataTable d = testkit::random_table(rng, sc, L, 10);
    RankedDataTable back = parse_table_csv(write_table_csv(d), cat);
    return back == d ? std::string() : "re-imported " + testkit::dump(back) + " from " + testkit::dump(d);
  });
  out.push_back(c.done());
  return out;
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all{
      {"adjointness", adjointness},
      {"lattice", lattice_laws},
      {"schema", schema_laws},
      {"rdt", rdt_laws},
      {"preservation", preservation},
      {"oracle", oracle_equivalence},
      {"specialization", specialization},
      {"hedged", hedged_laws},
      {"boolean", boolean_degeneration},
      {"parser", parser_roundtrip},
      {"bounds", bound_properties},
      {"io", io_roundtrip},
  };
  return all;
}

std::string format_result(const CheckResult& r) {
  char head[160];
  std::snprintf(head, sizeof head, "%-4s %-52s %8zu instances %8.3fs", r.ok() ? "ok" : "FAIL",
                (r.suite + "/" + r.name).c_str(), r.instances, r.seconds);
  std::string out = head;
  if (r.violations > 0) {
    out += "\n     " + std::to_string(r.violations) + " violation(s); first: " + r.first_failure;
  }
  return out;
}

}  // namespace rankdb::checks
