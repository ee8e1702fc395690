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

#include "wildla/contfrac.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace wildla::contfrac {

namespace {

BigInt abs_diff_form(const BigInt& a, const BigInt& b, const BigInt& u, const BigInt& v) {
  BigInt d = a * u - b * v;
  return abs(d);
}

// Candidate numerators v' >= 0 around a u' / b that contain the two nearest
// integers on each side.
std::vector<BigInt> window(const BigInt& a, const BigInt& b, const BigInt& u_prime) {
  const BigInt f = floor_div(a * u_prime, b);
  std::vector<BigInt> out;
  for (int off = -1; off <= 2; ++off) {
    BigInt cand = f + off;
    if (cand >= 0) out.push_back(std::move(cand));
  }
  return out;
}

void require_positive_u(const BigInt& u) {
  if (u <= 0) throw std::invalid_argument("denominator u must be positive");
}

}  // namespace

ContinuedFraction::ContinuedFraction(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("continued fraction needs at least one coefficient");
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] < 1) {
      throw std::invalid_argument("coefficient a_" + std::to_string(i) + " must be positive");
    }
  }
  if (coeffs_.back() < 2) {
    throw std::invalid_argument("last coefficient must be at least 2 (canonical form)");
  }
}

ConvergentTable::ConvergentTable(std::vector<BigInt> u, std::vector<BigInt> v, std::vector<BigInt> r)
    : u_(std::move(u)), v_(std::move(v)), r_(std::move(r)) {
  if (u_.size() < 3 || u_.size() != v_.size() || u_.size() != r_.size()) {
    throw std::invalid_argument("convergent table sequences must share a length of at least 3");
  }
}

ContinuedFraction cf_expand(const BigInt& a, const BigInt& b) {
  if (b <= 0) throw std::invalid_argument("cf_expand: b must be positive");
  if (a <= b) throw std::invalid_argument("cf_expand: a must exceed b");
  std::vector<BigInt> quotients;
  BigInt prev = a;
  BigInt cur = b;
  while (cur != 0) {
    BigInt q;
    BigInt rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), prev.get_mpz_t(), cur.get_mpz_t());
    quotients.push_back(std::move(q));
    prev = std::move(cur);
    cur = std::move(rem);
  }
  return ContinuedFraction(std::move(quotients));
}

ConvergentTable convergents(const ContinuedFraction& cf, const std::optional<CoprimePair>& pair) {
  const std::size_t slots = cf.size() + 2;
  std::vector<BigInt> u(slots);
  std::vector<BigInt> v(slots);
  std::vector<BigInt> r(slots);
  u[0] = 1;
  u[1] = 0;
  v[0] = 0;
  v[1] = 1;
  for (std::size_t k = 2; k < slots; ++k) {
    const BigInt& q = cf[k - 2];
    u[k] = u[k - 1] * q + u[k - 2];
    v[k] = v[k - 1] * q + v[k - 2];
  }
  if (pair) {
    r[0] = pair->a;
    r[1] = pair->b;
  } else {
    r[0] = v.back();
    r[1] = u.back();
  }
  for (std::size_t k = 2; k < slots; ++k) {
    r[k] = r[k - 2] - r[k - 1] * cf[k - 2];
  }
  return ConvergentTable(std::move(u), std::move(v), std::move(r));
}

CoprimePair cf_value(const ContinuedFraction& cf) {
  BigInt h_prev2 = 0, h_prev = 1;  // numerators v_{i-2}, v_{i-1}
  BigInt k_prev2 = 1, k_prev = 0;  // denominators u_{i-2}, u_{i-1}
  for (const BigInt& q : cf.coeffs()) {
    BigInt h = h_prev * q + h_prev2;
    BigInt k = k_prev * q + k_prev2;
    h_prev2 = std::move(h_prev);
    h_prev = std::move(h);
    k_prev2 = std::move(k_prev);
    k_prev = std::move(k);
  }
  return CoprimePair{h_prev, k_prev};
}

bool is_half_exception(const BigInt& a, const BigInt& b) {
  // a/b - a_0 = 1/2  <=>  2 (a mod b) = b.
  if (b <= 0) return false;
  return 2 * floor_mod(a, b) == b;
}

bool is_best_2nd_kind(const BigInt& a, const BigInt& b, const BigInt& u, const BigInt& v) {
  require_positive_u(u);
  const BigInt d = abs_diff_form(a, b, u, v);
  for (BigInt up = 1; up <= u; ++up) {
    for (const BigInt& vp : window(a, b, up)) {
      if (vp * u == v * up) continue;  // same fraction
      if (abs_diff_form(a, b, up, vp) <= d) return false;
    }
  }
  return true;
}

bool is_best_approx_pair(const BigInt& a, const BigInt& b, const BigInt& u, const BigInt& v) {
  require_positive_u(u);
  const BigInt d = abs_diff_form(a, b, u, v);
  for (BigInt up = 1; up <= u; ++up) {
    for (const BigInt& vp : window(a, b, up)) {
      if (up == u && vp == v) continue;
      if (abs_diff_form(a, b, up, vp) <= d) return false;
    }
  }
  return true;
}

bool is_bounded_best_pair(const BigInt& a, const BigInt& b, const BigInt& u, const BigInt& v) {
  require_positive_u(u);
  const BigInt d = abs_diff_form(a, b, u, v);
  const BigInt last = u < b ? u : b;
  for (BigInt up = 1; up <= last; ++up) {
    for (const BigInt& vp : window(a, b, up)) {
      if (vp > a) continue;
      if (up == u && vp == v) continue;
      if (abs_diff_form(a, b, up, vp) <= d) return false;
    }
  }
  return true;
}

bool is_convergent_pair(const ConvergentTable& table, const BigInt& u, const BigInt& v) {
  for (std::ptrdiff_t i = 0; i <= table.n(); ++i) {
    if (table.u(i) == u && table.v(i) == v) return true;
  }
  return false;
}

std::set<UVPair> convergent_pairs(const ConvergentTable& table) {
  std::set<UVPair> out;
  for (std::ptrdiff_t i = 0; i <= table.n(); ++i) out.insert(table.pair(i));
  return out;
}

std::set<UVPair> best_approx_bruteforce(const BigInt& a, const BigInt& b, const BruteForceOptions& options) {
  if (b <= 0 || a <= b) throw std::invalid_argument("best_approx_bruteforce: requires 0 < b < a");
  if (a > options.ceiling) {
    throw std::invalid_argument("best_approx_bruteforce: a = " + to_decimal(a) +
                                " exceeds the oracle ceiling " + std::to_string(options.ceiling));
  }
  const std::int64_t A = a.get_si();
  const std::int64_t B = b.get_si();

  std::int64_t block_min = std::numeric_limits<std::int64_t>::max();
  std::int64_t block_count = 0;
  std::set<UVPair> out;
  for (std::int64_t u = 1; u <= B; ++u) {
    std::int64_t row_min = std::numeric_limits<std::int64_t>::max();
    std::int64_t row_count = 0;
    std::int64_t row_arg = -1;
    for (std::int64_t v = 0; v <= A; ++v) {
      std::int64_t d = A * u - B * v;
      if (d < 0) d = -d;
      if (d < row_min) {
        row_min = d;
        row_count = 1;
        row_arg = v;
      } else if (d == row_min) {
        ++row_count;
      }
    }
    if (row_min < block_min) {
      block_min = row_min;
      block_count = row_count;
      if (block_count == 1) out.emplace(BigInt(static_cast<long>(u)), BigInt(static_cast<long>(row_arg)));
    } else if (row_min == block_min) {
      block_count += row_count;
    }
  }
  return out;
}

}  // namespace wildla::contfrac
