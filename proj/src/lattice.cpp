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

#include "rankdb/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace rankdb {

std::string to_string(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::lukasiewicz:
      return "lukasiewicz";
    case LatticeKind::goedel:
      return "goedel";
    case LatticeKind::product:
      return "product";
    case LatticeKind::chain:
      return "chain";
  }
  return "?";
}

LatticeKind parse_lattice_kind(std::string_view name) {
  if (name == "lukasiewicz") return LatticeKind::lukasiewicz;
  if (name == "goedel" || name == "godel") return LatticeKind::goedel;
  if (name == "product") return LatticeKind::product;
  if (name == "chain") return LatticeKind::chain;
  throw LatticeError("unknown lattice kind '" + std::string(name) + "'");
}

ResiduatedLattice ResiduatedLattice::make(LatticeKind kind,
                                          std::uint32_t chain_size) {
  if (kind == LatticeKind::chain) {
    if (chain_size == 0) {
      throw LatticeError("chain lattice needs chain_size >= 1");
    }
    return ResiduatedLattice(kind, chain_size);
  }
  return ResiduatedLattice(kind, 0);
}

std::string ResiduatedLattice::name() const {
  if (kind_ == LatticeKind::chain) return "chain(" + std::to_string(n_) + ")";
  return to_string(kind_);
}

TruthDegree ResiduatedLattice::bot() const {
  return exact() ? step(0) : real(0.0);
}

TruthDegree ResiduatedLattice::top() const {
  return exact() ? step(n_) : real(1.0);
}

TruthDegree ResiduatedLattice::degree(double v) const {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw LatticeError("degree " + std::to_string(v) + " outside [0,1]");
  }
  if (!exact()) return real(v);
  double scaled = v * n_;
  double k = std::round(scaled);
  if (std::abs(scaled - k) > 1e-9) {
    throw LatticeError("degree " + std::to_string(v) +
                       " is not an element of " + name());
  }
  return step(static_cast<std::int64_t>(k));
}

TruthDegree ResiduatedLattice::from_steps(std::int64_t k) const {
  if (!exact()) throw LatticeError(name() + " has no step representation");
  if (k < 0 || k > static_cast<std::int64_t>(n_)) {
    throw LatticeError("step " + std::to_string(k) + " outside " + name());
  }
  return step(k);
}

template <class Bad>
TruthDegree ResiduatedLattice::parse_fraction(std::string_view p, std::string_view q,
                                              const Bad& bad) const {
  auto integer = [&](std::string_view s) {
    std::int64_t v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size() || v < 0) {
      throw bad("not a fraction of non-negative integers");
    }
    return v;
  };
  std::int64_t num = integer(p);
  std::int64_t den = integer(q);
  if (den == 0) throw bad("zero denominator");
  if (num > den) throw bad("outside [0,1]");
  if (!exact()) return real(static_cast<double>(num) / static_cast<double>(den));
  __int128 scaled = static_cast<__int128>(num) * n_;
  if (scaled % den != 0) {
    throw bad(("not a multiple of 1/" + std::to_string(n_)).c_str());
  }
  return step(static_cast<std::int64_t>(scaled / den));
}

TruthDegree ResiduatedLattice::parse(std::string_view text) const {
  auto bad = [&](const char* why) {
    return LatticeError("invalid degree '" + std::string(text) + "': " + why);
  };
  if (text.empty()) throw bad("empty");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return parse_fraction(text.substr(0, slash), text.substr(slash + 1), bad);
  }
  std::size_t dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac =
      dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  auto digits = [](std::string_view s) {
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!digits(whole) || !digits(frac) || (whole.empty() && frac.empty())) {
    throw bad("not a decimal numeral");
  }
  if (!exact()) {
    double v = 0.0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
      throw bad("not a decimal numeral");
    }
    if (v > 1.0) throw bad("outside [0,1]");
    return real(v);
  }
  while (!frac.empty() && frac.back() == '0') frac.remove_suffix(1);
  while (whole.size() > 1 && whole.front() == '0') whole.remove_prefix(1);
  if (whole.size() + frac.size() > 30) throw bad("too many digits");
  __int128 mantissa = 0;
  __int128 scale = 1;
  for (char c : whole) mantissa = mantissa * 10 + (c - '0');
  for (char c : frac) {
    mantissa = mantissa * 10 + (c - '0');
    scale *= 10;
  }
  if (mantissa > scale) throw bad("outside [0,1]");
  __int128 num = mantissa * n_;
  if (num % scale != 0) {
    throw bad(("not a multiple of 1/" + std::to_string(n_)).c_str());
  }
  return step(static_cast<std::int64_t>(num / scale));
}

std::vector<TruthDegree> ResiduatedLattice::carrier() const {
  if (!exact()) throw LatticeError(name() + " has an uncountable carrier");
  std::vector<TruthDegree> out;
  out.reserve(n_ + 1);
  for (std::int64_t k = 0; k <= n_; ++k) out.push_back(step(k));
  return out;
}

void ResiduatedLattice::check(const TruthDegree& a) const {
  if (!owns(a)) {
    throw LatticeError("degree from a different lattice used with " + name());
  }
}

TruthDegree ResiduatedLattice::meet(const TruthDegree& a,
                                    const TruthDegree& b) const {
  check(a);
  check(b);
  return leq(a, b) ? a : b;
}

TruthDegree ResiduatedLattice::join(const TruthDegree& a,
                                    const TruthDegree& b) const {
  check(a);
  check(b);
  return leq(a, b) ? b : a;
}

TruthDegree ResiduatedLattice::tnorm(const TruthDegree& a,
                                     const TruthDegree& b) const {
  check(a);
  check(b);
  switch (kind_) {
    case LatticeKind::chain:
      return step(std::max<std::int64_t>(a.steps_ + b.steps_ - n_, 0));
    case LatticeKind::lukasiewicz: {
      // Ordered operands keep the result commutative bit for bit, and
      // x - (1 - 1) returns x exactly.
      double lo = std::min(a.value_, b.value_);
      double hi = std::max(a.value_, b.value_);
      return real(std::max(lo - (1.0 - hi), 0.0));
    }
    case LatticeKind::goedel:
      return real(std::min(a.value_, b.value_));
    case LatticeKind::product:
      return real(a.value_ * b.value_);
  }
  return bot();
}

TruthDegree ResiduatedLattice::residuum(const TruthDegree& a,
                                        const TruthDegree& b) const {
  check(a);
  check(b);
  if (leq(a, b)) return top();
  switch (kind_) {
    case LatticeKind::chain:
      return step(n_ - a.steps_ + b.steps_);
    case LatticeKind::lukasiewicz:
      return real(1.0 - (a.value_ - b.value_));
    case LatticeKind::goedel:
      return b;
    case LatticeKind::product:
      // a > b >= 0 here, so a > 0.
      return real(b.value_ / a.value_);
  }
  return top();
}

TruthDegree ResiduatedLattice::biresiduum(const TruthDegree& a,
                                          const TruthDegree& b) const {
  return meet(residuum(a, b), residuum(b, a));
}

bool ResiduatedLattice::leq(const TruthDegree& a, const TruthDegree& b) const {
  check(a);
  check(b);
  return exact() ? a.steps_ <= b.steps_ : a.value_ <= b.value_;
}

bool ResiduatedLattice::is_top(const TruthDegree& a) const {
  check(a);
  return exact() ? a.steps_ == static_cast<std::int64_t>(n_) : a.value_ == 1.0;
}

bool ResiduatedLattice::is_bot(const TruthDegree& a) const {
  check(a);
  return exact() ? a.steps_ == 0 : a.value_ == 0.0;
}

std::string to_string(Hedge h) {
  return h == Hedge::identity ? "identity" : "globalization";
}

Hedge parse_hedge(std::string_view name) {
  if (name == "identity") return Hedge::identity;
  if (name == "globalization") return Hedge::globalization;
  throw Error("unknown hedge '" + std::string(name) + "'");
}

TruthDegree apply_hedge(const ResiduatedLattice& lattice, Hedge h,
                        const TruthDegree& a) {
  if (!lattice.owns(a)) {
    throw LatticeError("degree from a different lattice used with " +
                       lattice.name());
  }
  if (h == Hedge::identity) return a;
  return lattice.is_top(a) ? lattice.top() : lattice.bot();
}

std::string format_degree(const TruthDegree& a) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12f", a.value());
  std::string s(buf);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

std::string serialize_degree(const TruthDegree& a) {
  if (a.kind() != LatticeKind::chain) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, a.value(), std::chars_format::fixed);
    return std::string(buf, res.ptr);
  }
  std::int64_t k = a.steps();
  std::int64_t n = a.chain_size();
  std::int64_t rest = n;
  int twos = 0;
  int fives = 0;
  std::int64_t g = std::gcd(k, n);
  rest /= g;
  while (rest % 2 == 0) rest /= 2, ++twos;
  while (rest % 5 == 0) rest /= 5, ++fives;
  if (rest != 1 || std::max(twos, fives) > 18) {
    return std::to_string(k) + "/" + std::to_string(n);
  }
  // k/n = m / 10^d exactly.
  int d = std::max(twos, fives);
  __int128 scale = 1;
  for (int i = 0; i < d; ++i) scale *= 10;
  __int128 m = static_cast<__int128>(k) * scale / n;
  std::string digits;
  for (__int128 x = m; x > 0; x /= 10) digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(x % 10)));
  if (d == 0) return digits.empty() ? "0" : digits;
  while (static_cast<int>(digits.size()) <= d) digits.insert(digits.begin(), '0');
  std::string out = digits.substr(0, digits.size() - d) + "." + digits.substr(digits.size() - d);
  while (out.back() == '0') out.pop_back();
  if (out.back() == '.') out.pop_back();
  return out;
}

}  // namespace rankdb
