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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rankdb {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for carrier violations and for operands drawn from different
/// lattices.
class LatticeError : public Error {
 public:
  using Error::Error;
};

enum class LatticeKind { lukasiewicz, goedel, product, chain };

std::string to_string(LatticeKind kind);
LatticeKind parse_lattice_kind(std::string_view name);

/// An element of the carrier of one particular lattice.
///
/// Degrees remember the lattice that produced them. Unit-interval carriers
/// keep a double; the finite chain {0, 1/n, ..., 1} keeps the integer
/// numerator so every operation on it is exact.
class TruthDegree {
 public:
  LatticeKind kind() const { return kind_; }
  std::uint32_t chain_size() const { return n_; }

  /// Numerator over chain_size(); only meaningful on chain carriers.
  std::int64_t steps() const { return steps_; }

  /// The degree as a real number in [0, 1].
  double value() const { return value_; }

  friend bool operator==(const TruthDegree&, const TruthDegree&) = default;

 private:
  friend class ResiduatedLattice;
  TruthDegree(LatticeKind kind, std::uint32_t n, std::int64_t steps,
              double value)
      : kind_(kind), n_(n), steps_(steps), value_(value) {}

  LatticeKind kind_;
  std::uint32_t n_;
  std::int64_t steps_;
  double value_;
};

/// A complete residuated lattice <L, meet, join, tnorm, residuum, 0, 1>.
///
/// Instances are small immutable values; two lattices compare equal iff they
/// have the same kind and chain size, and degrees from equal lattices are
/// interchangeable.
class ResiduatedLattice {
 public:
  /// Throws LatticeError when kind is chain and chain_size is 0.
  static ResiduatedLattice make(LatticeKind kind, std::uint32_t chain_size = 0);

  static ResiduatedLattice lukasiewicz() { return make(LatticeKind::lukasiewicz); }
  static ResiduatedLattice goedel() { return make(LatticeKind::goedel); }
  static ResiduatedLattice product() { return make(LatticeKind::product); }
  static ResiduatedLattice chain(std::uint32_t n) {
    return make(LatticeKind::chain, n);
  }

  LatticeKind kind() const { return kind_; }
  std::uint32_t chain_size() const { return n_; }
  bool exact() const { return kind_ == LatticeKind::chain; }
  std::string name() const;

  TruthDegree bot() const;
  TruthDegree top() const;

  /// Converts a real number. On chains the number must be a multiple of 1/n
  /// (up to 1e-9); the result is then exact.
  TruthDegree degree(double v) const;

  /// Chain element k/n. Throws unless this is a chain and 0 <= k <= n.
  TruthDegree from_steps(std::int64_t k) const;

  /// Parses a decimal numeral such as "0.93" or "1", or a fraction "p/q".
  /// Chains accept only exact multiples of 1/n; no rounding is ever applied.
  TruthDegree parse(std::string_view text) const;

  /// All elements of a chain carrier in increasing order.
  std::vector<TruthDegree> carrier() const;

  bool owns(const TruthDegree& a) const {
    return a.kind() == kind_ && a.chain_size() == n_;
  }

  TruthDegree meet(const TruthDegree& a, const TruthDegree& b) const;
  TruthDegree join(const TruthDegree& a, const TruthDegree& b) const;
  TruthDegree tnorm(const TruthDegree& a, const TruthDegree& b) const;
  TruthDegree residuum(const TruthDegree& a, const TruthDegree& b) const;
  TruthDegree biresiduum(const TruthDegree& a, const TruthDegree& b) const;

  bool leq(const TruthDegree& a, const TruthDegree& b) const;
  bool is_top(const TruthDegree& a) const;
  bool is_bot(const TruthDegree& a) const;

  friend bool operator==(const ResiduatedLattice&,
                         const ResiduatedLattice&) = default;

 private:
  ResiduatedLattice(LatticeKind kind, std::uint32_t n) : kind_(kind), n_(n) {}

  void check(const TruthDegree& a) const;
  template <class Bad>
  TruthDegree parse_fraction(std::string_view p, std::string_view q,
                             const Bad& bad) const;
  TruthDegree real(double v) const { return TruthDegree(kind_, 0, 0, v); }
  TruthDegree step(std::int64_t k) const {
    return TruthDegree(kind_, n_, k, static_cast<double>(k) / n_);
  }

  LatticeKind kind_;
  std::uint32_t n_;
};

/// Truth-stressing hedges. Only the two boundary hedges are provided.
enum class Hedge { identity, globalization };

std::string to_string(Hedge h);
Hedge parse_hedge(std::string_view name);

TruthDegree apply_hedge(const ResiduatedLattice& lattice, Hedge h,
                        const TruthDegree& a);

/// Shortest decimal rendering that is accurate to 12 places ("0.98", "1").
std::string format_degree(const TruthDegree& a);

/// Lossless rendering that parse() reads back to the same degree: the
/// shortest round-trip decimal on unit-interval lattices; on chains a
/// terminating decimal when k/n has one, "k/n" otherwise.
std::string serialize_degree(const TruthDegree& a);

}  // namespace rankdb
