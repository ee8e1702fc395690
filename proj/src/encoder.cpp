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

#include "wildla/encoder.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wildla::encoder {

using contfrac::CoprimePair;

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  // Trial division is exact and fast for every modulus this library builds.
  if (n < BigInt("1000000000000")) {
    const unsigned long value = n.get_ui();
    if (value < 4) return true;
    if (value % 2 == 0) return false;
    for (unsigned long d = 3; d * d <= value; d += 2) {
      if (value % d == 0) return false;
    }
    return true;
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

BigInt smallest_prime_above(const BigInt& n) {
  if (n < 0) throw std::invalid_argument("smallest_prime_above: n must be non-negative");
  BigInt p = n + 1;
  while (!is_prime(p)) ++p;
  return p;
}

BigInt mod_inverse(const BigInt& x, const BigInt& m) {
  if (m <= 1) throw std::invalid_argument("mod_inverse: modulus must exceed 1");
  BigInt old_r = floor_mod(x, m), r = m;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    const BigInt q = floor_div(old_r, r);
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw std::invalid_argument("mod_inverse: " + to_decimal(x) + " is not invertible mod " + to_decimal(m));
  }
  return floor_mod(old_s, m);
}

BigInt solve_coefficient(const BigInt& v_prev, const BigInt& v_prev2, const BigInt& z_target,
                         const BigInt& c, const BigInt& min_val) {
  if (floor_mod(v_prev, c) == 0) {
    throw std::logic_error("solve_coefficient: c divides the previous numerator");
  }
  const BigInt inv = mod_inverse(v_prev, c);
  BigInt a = floor_mod((z_target - v_prev2) * inv, c);
  if (a < min_val) {
    a += c * floor_div(min_val - a + c - 1, c);
  }
  return a;
}

void TargetSequence::validate() const {
  if (z.empty()) throw std::invalid_argument("target sequence is empty");
  if (!is_prime(c)) throw std::invalid_argument("modulus " + to_decimal(c) + " is not prime");
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] <= 0 || z[i] >= c) {
      throw std::invalid_argument("residue z_" + std::to_string(i) + " = " + to_decimal(z[i]) +
                                  " is outside (0, " + to_decimal(c) + ")");
    }
  }
}

Encoding encode_sequence(const TargetSequence& seq) {
  seq.validate();
  const std::size_t len = seq.z.size();
  std::vector<BigInt> coeffs;
  coeffs.reserve(len);
  BigInt v_prev2 = 0;  // v_{i-2}
  BigInt v_prev = 1;   // v_{i-1}
  for (std::size_t i = 0; i < len; ++i) {
    BigInt min_val = (i == 1) ? 2 : 1;
    if (i + 1 == len) min_val = (i == 1) ? 3 : 2;
    BigInt coeff = solve_coefficient(v_prev, v_prev2, seq.z[i], seq.c, min_val);
    BigInt v = v_prev * coeff + v_prev2;
    v_prev2 = std::move(v_prev);
    v_prev = std::move(v);
    coeffs.push_back(std::move(coeff));
  }
  contfrac::ContinuedFraction cf(std::move(coeffs));
  CoprimePair pair = contfrac::cf_value(cf);
  if (len >= 2 && (pair.b < 3 || contfrac::is_half_exception(pair.a, pair.b))) {
    throw std::logic_error("encode_sequence: produced a/b = a_0 + 1/2");
  }
  contfrac::ConvergentTable table = contfrac::convergents(cf, pair);
  return Encoding{seq, std::move(cf), std::move(table), std::move(pair)};
}

std::vector<BigInt> squaring_sequence(std::uint32_t L) {
  std::vector<BigInt> z;
  z.reserve(4 * static_cast<std::size_t>(L));
  for (std::uint32_t k = 1; k <= 2 * L; ++k) {
    BigInt x = k;
    z.push_back(x);
    z.push_back(x * x);
  }
  return z;
}

WildModel model_from_encoding(Encoding enc) {
  const BigInt& a = enc.pair.a;
  const BigInt& b = enc.pair.b;
  const BigInt& c = enc.seq.c;
  BigInt alpha = a * c;
  BigInt delta = a * b * c * c + c;
  return WildModel{0, std::move(enc.seq), std::move(enc.cf), std::move(enc.table), std::move(enc.pair),
                   std::move(alpha), std::move(delta)};
}

WildModel build_squaring_model(std::uint32_t L) {
  if (L < 1) throw std::invalid_argument("build_squaring_model: L must be at least 1");
  const BigInt top = 2 * BigInt(L);
  TargetSequence seq{squaring_sequence(L), smallest_prime_above(top * top)};
  WildModel model = model_from_encoding(encode_sequence(seq));
  model.L = L;
  if (model.b() < 3) throw std::logic_error("build_squaring_model: b < 3");
  return model;
}

std::vector<BigInt> FunctionEncoding::decode() const {
  std::vector<BigInt> out;
  const auto& table = encoding.table;
  for (std::ptrdiff_t i = 0; i <= table.n(); ++i) {
    out.push_back(floor_mod(table.v(i), encoding.seq.c) - shift);
  }
  return out;
}

FunctionEncoding encode_function(std::span<const BigInt> values) {
  if (values.empty()) throw std::invalid_argument("encode_function: no values");
  BigInt top = 0;
  for (const BigInt& x : values) {
    if (x < 0) throw std::invalid_argument("encode_function: values must be non-negative");
    if (x > top) top = x;
  }
  TargetSequence seq;
  seq.c = smallest_prime_above(top + 1);
  for (const BigInt& x : values) seq.z.push_back(x + 1);
  return FunctionEncoding{encode_sequence(seq), 1};
}

}  // namespace wildla::encoder
