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

#ifndef WILDLA_ENCODER_HPP_
#define WILDLA_ENCODER_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "wildla/bigint.hpp"
#include "wildla/contfrac.hpp"

// Choosing continued-fraction coefficients so that convergent numerators
// reproduce a target sequence modulo a prime, and the squaring model built
// on top of that.
namespace wildla::encoder {

bool is_prime(const BigInt& n);

// Least prime p > n.
BigInt smallest_prime_above(const BigInt& n);

// x^{-1} mod m via the extended Euclidean algorithm. Throws
// std::invalid_argument when gcd(x, m) != 1.
BigInt mod_inverse(const BigInt& x, const BigInt& m);

// Least a >= min_val with v_prev * a + v_prev2 == z_target (mod c).
// Throws std::logic_error when c divides v_prev.
BigInt solve_coefficient(const BigInt& v_prev, const BigInt& v_prev2, const BigInt& z_target,
                         const BigInt& c, const BigInt& min_val);

// Residues z_i in (0, c) to be carried by the numerators v_i, c prime.
struct TargetSequence {
  std::vector<BigInt> z;
  BigInt c;

  // Throws std::invalid_argument on an empty sequence, a non-prime modulus
  // or a residue outside (0, c).
  void validate() const;

  friend bool operator==(const TargetSequence&, const TargetSequence&) = default;
};

struct Encoding {
  TargetSequence seq;
  contfrac::ContinuedFraction cf;
  contfrac::ConvergentTable table;
  contfrac::CoprimePair pair;
};

// Coefficients are the least admissible solutions; the last one is taken
// >= 2 to keep the expansion canonical, and >= 3 when it is a_1 so that a/b
// never equals a_0 + 1/2. a_1 is always >= 2: with a_1 = 1 the pair
// (u_0, v_0) = (1, a_0) is not a best approximation and z_0 would be lost.
Encoding encode_sequence(const TargetSequence& seq);

// (1, 1^2, 2, 2^2, ..., 2L, (2L)^2).
std::vector<BigInt> squaring_sequence(std::uint32_t L);

// Parameters of the three-scalar model (a, b, c) and of its two-scalar view
// alpha = a c, delta = a b c^2 + c.
//
// L == 0 marks an encoding of an arbitrary sequence rather than of the
// squaring function; the squaring invariants only apply for L >= 1.
struct WildModel {
  std::uint32_t L = 0;
  TargetSequence seq;
  contfrac::ContinuedFraction cf;
  contfrac::ConvergentTable table;
  contfrac::CoprimePair pair;
  BigInt alpha;
  BigInt delta;

  const BigInt& a() const { return pair.a; }
  const BigInt& b() const { return pair.b; }
  const BigInt& c() const { return seq.c; }
};

WildModel build_squaring_model(std::uint32_t L);

// Wraps an arbitrary encoding (L = 0) with its two-scalar parameters.
WildModel model_from_encoding(Encoding enc);

// Encoding of a function with possibly zero values: values + 1 are encoded
// with c the least prime above max(values) + 1; decode() subtracts the shift.
struct FunctionEncoding {
  Encoding encoding;
  BigInt shift = 1;

  std::vector<BigInt> decode() const;
};

FunctionEncoding encode_function(std::span<const BigInt> values);

}  // namespace wildla::encoder

#endif  // WILDLA_ENCODER_HPP_
