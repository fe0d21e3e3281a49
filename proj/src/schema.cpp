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

#include "rankdb/schema.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

namespace rankdb {

std::string to_string(OpErrorKind kind) {
  switch (kind) {
    case OpErrorKind::scheme_mismatch:
      return "scheme_mismatch";
    case OpErrorKind::schemes_not_disjoint:
      return "schemes_not_disjoint";
    case OpErrorKind::lattice_mismatch:
      return "lattice_mismatch";
    case OpErrorKind::missing_similarity:
      return "missing_similarity";
    case OpErrorKind::nonzero_default_unsupported:
      return "nonzero_default_unsupported";
    case OpErrorKind::attribute_not_in_scheme:
      return "attribute_not_in_scheme";
    case OpErrorKind::type_mismatch:
      return "type_mismatch";
    case OpErrorKind::non_enumerable_domain:
      return "non_enumerable_domain";
  }
  return "?";
}

std::string to_string(ValueKind kind) {
  return kind == ValueKind::number ? "number" : "text";
}

std::string Value::to_string() const {
  if (kind() == ValueKind::text) return as_text();
  char buf[400];
  auto res = std::to_chars(buf, buf + sizeof buf, as_number(), std::chars_format::fixed);
  return std::string(buf, res.ptr);
}

std::optional<Value> parse_number(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t i = text[0] == '-' ? 1 : 0;
  bool seen_digit = false;
  bool seen_dot = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      seen_digit = true;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      return std::nullopt;
    }
  }
  if (!seen_digit) return std::nullopt;
  double v = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  if (v == 0.0) v = 0.0;  // fold -0
  return Value::number(v);
}

namespace {

std::pair<Value, Value> ordered(const Value& u, const Value& v) {
  return v < u ? std::make_pair(v, u) : std::make_pair(u, v);
}

}  // namespace

Domain::Domain(std::string id, ValueKind kind, ResiduatedLattice lattice,
               SimilaritySpec spec, std::optional<std::vector<Value>> universe)
    : id_(std::move(id)),
      kind_(kind),
      lattice_(lattice),
      spec_(std::move(spec)),
      universe_(std::move(universe)) {
  if (!valid_attribute_name(id_)) {
    throw SchemaError("invalid domain id '" + id_ + "'");
  }
  auto fits_kind = [&](const Value& v) { return v.kind() == kind_; };
  if (universe_) {
    std::set<Value> seen;
    for (const auto& v : *universe_) {
      if (!fits_kind(v)) {
        throw SchemaError("domain " + id_ + ": value '" + v.to_string() +
                          "' is not a " + rankdb::to_string(kind_));
      }
      if (!seen.insert(v).second) {
        throw SchemaError("domain " + id_ + ": duplicate value '" +
                          v.to_string() + "'");
      }
    }
    std::sort(universe_->begin(), universe_->end());
  }
  if (const auto* ramp = std::get_if<RampSimilarity>(&spec_)) {
    if (kind_ != ValueKind::number) {
      throw SchemaError("domain " + id_ + ": ramp similarity needs numbers");
    }
    if (!(ramp->k > 0.0) || !std::isfinite(ramp->k)) {
      throw SchemaError("domain " + id_ + ": ramp k must be positive");
    }
  }
  if (const auto* table = std::get_if<TableSimilarity>(&spec_)) {
    for (const auto& e : table->pairs) {
      if (!fits_kind(e.u) || !fits_kind(e.v)) {
        throw SchemaError("domain " + id_ + ": pair (" + e.u.to_string() +
                          ", " + e.v.to_string() + ") has wrong value kind");
      }
      if (universe_ && (!conforms(e.u) || !conforms(e.v))) {
        throw SchemaError("domain " + id_ + ": pair (" + e.u.to_string() +
                          ", " + e.v.to_string() + ") outside the universe");
      }
      if (!lattice_.owns(e.degree)) {
        throw SchemaError("domain " + id_ + ": degree from another lattice");
      }
      if (e.u == e.v) {
        if (!lattice_.is_top(e.degree)) {
          throw SchemaError("domain " + id_ + ": reflexivity violated, " +
                            e.u.to_string() + " ~ " + e.u.to_string() + " = " +
                            format_degree(e.degree));
        }
        continue;
      }
      auto [it, inserted] = table_.emplace(ordered(e.u, e.v), e.degree);
      if (!inserted && !(it->second == e.degree)) {
        throw SchemaError("domain " + id_ + ": symmetry violated, pair (" +
                          e.u.to_string() + ", " + e.v.to_string() +
                          ") listed with two degrees");
      }
    }
  }
}

const std::vector<Value>& Domain::universe() const {
  if (!universe_) {
    throw OpError(OpErrorKind::non_enumerable_domain,
                  "domain " + id_ + " has no finite universe");
  }
  return *universe_;
}

bool Domain::conforms(const Value& v) const {
  if (v.kind() != kind_) return false;
  if (!universe_) return true;
  return std::binary_search(universe_->begin(), universe_->end(), v);
}

TruthDegree Domain::similarity(const Value& u, const Value& v) const {
  if (u.kind() != kind_ || v.kind() != kind_) {
    throw OpError(OpErrorKind::type_mismatch,
                  "domain " + id_ + " holds " + rankdb::to_string(kind_) +
                      " values, got '" + u.to_string() + "' and '" +
                      v.to_string() + "'");
  }
  if (u == v) return lattice_.top();
  return std::visit(
      [&](const auto& spec) -> TruthDegree {
        using S = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<S, IdentitySimilarity>) {
          return lattice_.bot();
        } else if constexpr (std::is_same_v<S, TableSimilarity>) {
          auto it = table_.find(ordered(u, v));
          return it == table_.end() ? lattice_.bot() : it->second;
        } else {
          double s = std::max(
              1.0 - std::abs(u.as_number() - v.as_number()) / spec.k, 0.0);
          if (!lattice_.exact()) return lattice_.degree(s);
          auto n = static_cast<std::int64_t>(lattice_.chain_size());
          auto k = static_cast<std::int64_t>(std::floor(s * n + 1e-9));
          // u != v, so the degree stays below 1.
          return lattice_.from_steps(std::clamp<std::int64_t>(k, 0, n - 1));
        }
      },
      spec_);
}

SimilarityReport validate_similarity(const Domain& d) {
  SimilarityReport report;
  const auto& L = d.lattice();
  if (std::holds_alternative<IdentitySimilarity>(d.spec())) {
    report.transitive = true;
    return report;
  }
  if (const auto* ramp = std::get_if<RampSimilarity>(&d.spec())) {
    (void)ramp;
    // 1 - a/k and 1 - b/k combine to 1 - (a+b)/k under the Lukasiewicz
    // tnorm, and |u - w| <= a + b; rounding down on chains preserves this.
    if (L.kind() == LatticeKind::lukasiewicz || L.kind() == LatticeKind::chain) {
      report.transitive = true;
    }
    return report;
  }
  const auto& table = std::get<TableSimilarity>(d.spec());
  std::set<Value> values;
  for (const auto& e : table.pairs) {
    values.insert(e.u);
    values.insert(e.v);
  }
  if (d.enumerable()) values.insert(d.universe().begin(), d.universe().end());
  std::vector<Value> vs(values.begin(), values.end());
  for (const auto& u : vs) {
    if (!L.is_top(d.similarity(u, u))) {
      report.reflexive = false;
      report.detail = "not reflexive at " + u.to_string();
    }
    for (const auto& v : vs) {
      if (!(d.similarity(u, v) == d.similarity(v, u))) {
        report.symmetric = false;
        report.detail = "not symmetric at " + u.to_string() + ", " +
                        v.to_string();
      }
      if (!(u == v) && L.is_top(d.similarity(u, v))) {
        report.separating = false;
      }
    }
  }
  bool transitive = true;
  for (const auto& a : vs) {
    for (const auto& b : vs) {
      auto ab = d.similarity(a, b);
      for (const auto& c : vs) {
        if (!L.leq(L.tnorm(ab, d.similarity(b, c)), d.similarity(a, c))) {
          if (transitive) {
            report.detail = "not transitive: " + a.to_string() + " ~ " +
                            b.to_string() + " ~ " + c.to_string();
          }
          transitive = false;
        }
      }
    }
  }
  report.transitive = transitive;
  return report;
}

bool valid_attribute_name(std::string_view name) {
  if (name.empty() || (name[0] >= '0' && name[0] <= '9')) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

RelationScheme::RelationScheme(std::vector<Attribute> attributes)
    : attrs_(std::move(attributes)) {
  std::sort(attrs_.begin(), attrs_.end(),
            [](const Attribute& a, const Attribute& b) { return a.name < b.name; });
  for (std::size_t i = 0; i < attrs_.size(); ++i) {
    if (!valid_attribute_name(attrs_[i].name)) {
      throw SchemaError("invalid attribute name '" + attrs_[i].name + "'");
    }
    if (!attrs_[i].domain) {
      throw SchemaError("attribute " + attrs_[i].name + " has no domain");
    }
    if (i > 0 && attrs_[i - 1].name == attrs_[i].name) {
      throw SchemaError("duplicate attribute " + attrs_[i].name);
    }
  }
}

std::optional<std::size_t> RelationScheme::index_of(std::string_view name) const {
  auto it = std::lower_bound(
      attrs_.begin(), attrs_.end(), name,
      [](const Attribute& a, std::string_view n) { return a.name < n; });
  if (it == attrs_.end() || it->name != name) return std::nullopt;
  return static_cast<std::size_t>(it - attrs_.begin());
}

const Attribute& RelationScheme::attribute(std::string_view name) const {
  auto i = index_of(name);
  if (!i) {
    throw OpError(OpErrorKind::attribute_not_in_scheme,
                  std::string(name) + " not in " + to_string());
  }
  return attrs_[*i];
}

std::vector<std::string> RelationScheme::names() const {
  std::vector<std::string> out;
  out.reserve(attrs_.size());
  for (const auto& a : attrs_) out.push_back(a.name);
  return out;
}

bool RelationScheme::disjoint(const RelationScheme& other) const {
  return std::none_of(attrs_.begin(), attrs_.end(), [&](const Attribute& a) {
    return other.contains(a.name);
  });
}

RelationScheme RelationScheme::concat(const RelationScheme& other) const {
  if (!disjoint(other)) {
    throw OpError(OpErrorKind::schemes_not_disjoint,
                  to_string() + " and " + other.to_string() + " overlap");
  }
  std::vector<Attribute> all = attrs_;
  all.insert(all.end(), other.attrs_.begin(), other.attrs_.end());
  return RelationScheme(std::move(all));
}

RelationScheme RelationScheme::restrict(std::span<const std::string> names) const {
  std::vector<Attribute> sub;
  for (const auto& n : names) {
    const Attribute& a = attribute(n);
    if (std::none_of(sub.begin(), sub.end(),
                     [&](const Attribute& b) { return b.name == n; })) {
      sub.push_back(a);
    }
  }
  return RelationScheme(std::move(sub));
}

bool operator==(const RelationScheme& a, const RelationScheme& b) {
  if (a.attrs_.size() != b.attrs_.size()) return false;
  for (std::size_t i = 0; i < a.attrs_.size(); ++i) {
    if (a.attrs_[i].name != b.attrs_[i].name) return false;
    if (a.attrs_[i].domain != b.attrs_[i].domain &&
        a.attrs_[i].domain->id() != b.attrs_[i].domain->id()) {
      return false;
    }
  }
  return true;
}

std::string RelationScheme::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < attrs_.size(); ++i) {
    if (i) out += ", ";
    out += attrs_[i].name;
  }
  return out + "}";
}

Tuple make_tuple(const RelationScheme& scheme,
                 const std::map<std::string, Value>& assignment) {
  if (assignment.size() != scheme.size()) {
    throw OpError(OpErrorKind::scheme_mismatch,
                  "assignment does not cover " + scheme.to_string());
  }
  Tuple t;
  t.values.reserve(scheme.size());
  for (const auto& a : scheme.attributes()) {
    auto it = assignment.find(a.name);
    if (it == assignment.end()) {
      throw OpError(OpErrorKind::scheme_mismatch,
                    "assignment lacks attribute " + a.name);
    }
    t.values.push_back(it->second);
  }
  check_tuple(scheme, t);
  return t;
}

void check_tuple(const RelationScheme& scheme, const Tuple& t) {
  if (t.values.size() != scheme.size()) {
    throw OpError(OpErrorKind::scheme_mismatch,
                  "tuple " + format_tuple(t) + " does not fit " +
                      scheme.to_string());
  }
  auto attrs = scheme.attributes();
  for (std::size_t i = 0; i < attrs.size(); ++i) {
    if (!attrs[i].domain->conforms(t.values[i])) {
      throw OpError(OpErrorKind::type_mismatch,
                    "value '" + t.values[i].to_string() + "' of " +
                        attrs[i].name + " is not in domain " +
                        attrs[i].domain->id());
    }
  }
}

std::string format_tuple(const Tuple& t) {
  std::string out = "<";
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    if (i) out += ", ";
    out += t.values[i].to_string();
  }
  return out + ">";
}

Tuple tuple_concat(const RelationScheme& r_scheme, const Tuple& r,
                   const RelationScheme& s_scheme, const Tuple& s) {
  RelationScheme joint = r_scheme.concat(s_scheme);
  if (r.values.size() != r_scheme.size() || s.values.size() != s_scheme.size()) {
    throw OpError(OpErrorKind::scheme_mismatch, "tuple arity does not match");
  }
  Tuple out;
  out.values.reserve(joint.size());
  for (const auto& a : joint.attributes()) {
    if (auto i = r_scheme.index_of(a.name)) {
      out.values.push_back(r.values[*i]);
    } else {
      out.values.push_back(s.values[*s_scheme.index_of(a.name)]);
    }
  }
  return out;
}

Tuple tuple_restrict(const RelationScheme& scheme, const Tuple& t,
                     const RelationScheme& sub) {
  Tuple out;
  out.values.reserve(sub.size());
  for (const auto& a : sub.attributes()) {
    auto i = scheme.index_of(a.name);
    if (!i) {
      throw OpError(OpErrorKind::attribute_not_in_scheme,
                    a.name + " not in " + scheme.to_string());
    }
    out.values.push_back(t.values[*i]);
  }
  return out;
}

TruthDegree tuple_similarity(const RelationScheme& scheme, const Tuple& t,
                             const Tuple& u, const ResiduatedLattice& lattice) {
  if (t.values.size() != scheme.size() || u.values.size() != scheme.size()) {
    throw OpError(OpErrorKind::scheme_mismatch,
                  "tuples do not fit " + scheme.to_string());
  }
  TruthDegree acc = lattice.top();
  auto attrs = scheme.attributes();
  for (std::size_t i = 0; i < attrs.size(); ++i) {
    if (!(attrs[i].domain->lattice() == lattice)) {
      throw OpError(OpErrorKind::lattice_mismatch,
                    "domain " + attrs[i].domain->id() + " uses " +
                        attrs[i].domain->lattice().name());
    }
    acc = lattice.meet(acc, attrs[i].domain->similarity(t.values[i], u.values[i]));
    if (lattice.is_bot(acc)) break;
  }
  return acc;
}

std::vector<Tuple> enumerate_tuples(const RelationScheme& scheme) {
  std::vector<Tuple> out{Tuple{}};
  for (const auto& a : scheme.attributes()) {
    const auto& values = a.domain->universe();
    std::vector<Tuple> next;
    next.reserve(out.size() * values.size());
    for (const auto& t : out) {
      for (const auto& v : values) {
        Tuple u = t;
        u.values.push_back(v);
        next.push_back(std::move(u));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace rankdb
