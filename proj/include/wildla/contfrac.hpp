// Copyright 2026 The Wildla Authors
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

#ifndef WILDLA_CONTFRAC_HPP_
#define WILDLA_CONTFRAC_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "wildla/bigint.hpp"

// Exact continued-fraction machinery over arbitrary-precision integers:
// Euclidean division chains, convergent tables and the best-approximation
// characterization of convergents, together with exhaustive checkers for it.
namespace wildla::contfrac {

// A fraction a/b with 0 < b < a. Produced in lowest terms by cf_value and
// by the encoder; cf_expand accepts pairs that share a factor.
struct CoprimePair {
  BigInt a;
  BigInt b;

  friend bool operator==(const CoprimePair&, const CoprimePair&) = default;
};

// (u, v) with u a denominator and v a numerator of a candidate fraction v/u.
using UVPair = std::pair<BigInt, BigInt>;

// Canonical coefficient sequence [a_0; a_1, ..., a_n]: every coefficient is
// positive and the last one is at least 2 (so the value exceeds 1 and the
// expansion is unique).
class ContinuedFraction {
 public:
  // Throws std::invalid_argument when the canonical-form invariant fails.
  explicit ContinuedFraction(std::vector<BigInt> coeffs);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  const BigInt& operator[](std::size_t i) const { return coeffs_[i]; }

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

// Parallel sequences u_i, v_i, r_i for i = -2 .. n. Storage carries a
// two-slot prefix so that the accessors take the mathematical index:
//   u_{-2} = 1, u_{-1} = 0, v_{-2} = 0, v_{-1} = 1, r_{-2} = a, r_{-1} = b,
//   u_i = u_{i-1} a_i + u_{i-2},  v_i = v_{i-1} a_i + v_{i-2},
//   r_{i-2} = r_{i-1} a_i + r_i.
class ConvergentTable {
 public:
  ConvergentTable(std::vector<BigInt> u, std::vector<BigInt> v, std::vector<BigInt> r);

  // Index of the last convergent.
  std::ptrdiff_t n() const { return static_cast<std::ptrdiff_t>(u_.size()) - 3; }
  // Number of convergents (n + 1).
  std::size_t size() const { return u_.size() - 2; }

  const BigInt& u(std::ptrdiff_t i) const { return u_.at(static_cast<std::size_t>(i + 2)); }
  const BigInt& v(std::ptrdiff_t i) const { return v_.at(static_cast<std::size_t>(i + 2)); }
  const BigInt& r(std::ptrdiff_t i) const { return r_.at(static_cast<std::size_t>(i + 2)); }

  // The pair (u_i, v_i).
  UVPair pair(std::ptrdiff_t i) const { return {u(i), v(i)}; }

  // r_{n-1}, the gcd of the pair the table was built from.
  const BigInt& gcd() const { return r(n() - 1); }

 private:
  std::vector<BigInt> u_;
  std::vector<BigInt> v_;
  std::vector<BigInt> r_;
};

// Quotients of the Euclidean division chain starting from (a, b).
// Requires 0 < b < a; gcd(a, b) may exceed 1.
ContinuedFraction cf_expand(const BigInt& a, const BigInt& b);

// Convergent table of `cf`. The remainders r_i are produced by the division
// chain of `pair`; when no pair is given, the value (v_n, u_n) of `cf` is
// used.
ConvergentTable convergents(const ContinuedFraction& cf,
                            const std::optional<CoprimePair>& pair = std::nullopt);

// (v_n, u_n), which is a/b in lowest terms.
CoprimePair cf_value(const ContinuedFraction& cf);

// True iff a/b = a_0 + 1/2, the case in which a convergent may fail to be a
// strict best approximation.
bool is_half_exception(const BigInt& a, const BigInt& b);

// |a u - b v| < |a u' - b v'| for every fraction v'/u' != v/u with
// 0 < u' <= u and v' >= 0. Only the four numerators nearest to a u'/b can
// realize the minimum for a given u', so each u' costs O(1).
bool is_best_2nd_kind(const BigInt& a, const BigInt& b, const BigInt& u, const BigInt& v);

// Pair form of the above: |a u - b v| < |a u' - b v'| for every pair
// (u', v') != (u, v) with 0 < u' <= u and v' >= 0.
bool is_best_approx_pair(const BigInt& a, const BigInt& b, const BigInt& u, const BigInt& v);

// Bounded pair form: like is_best_approx_pair, but only competitors with
// 0 < u' <= min(u, b) and 0 <= v' <= a are considered.
bool is_bounded_best_pair(const BigInt& a, const BigInt& b, const BigInt& u, const BigInt& v);

// True iff (u, v) = (u_i, v_i) for some 0 <= i <= n.
bool is_convergent_pair(const ConvergentTable& table, const BigInt& u, const BigInt& v);

std::set<UVPair> convergent_pairs(const ConvergentTable& table);

struct BruteForceOptions {
  std::int64_t ceiling = 10'000;
};

// Every (u, v) with 0 < u <= b, 0 <= v <= a satisfying the bounded pair
// condition, found by visiting the whole box [1, b] x [0, a]. Rows are
// scanned in increasing u while the minimum of |a u' - b v'| over the rows
// seen so far and the number of pairs attaining it are tracked; (u, v)
// qualifies exactly when it is the unique minimizer of its prefix of rows.
// Throws std::invalid_argument when a exceeds the ceiling.
std::set<UVPair> best_approx_bruteforce(const BigInt& a, const BigInt& b,
                                        const BruteForceOptions& options = {});

}  // namespace wildla::contfrac

#endif  // WILDLA_CONTFRAC_HPP_
