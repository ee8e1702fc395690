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

#include "wildla/bigint.hpp"

#include <functional>
#include <stdexcept>

namespace wildla {

std::string to_decimal(const BigInt& x) { return x.get_str(10); }

BigInt parse_decimal(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) {
    throw std::invalid_argument("empty decimal integer");
  }
  for (char ch : digits) {
    if (ch < '0' || ch > '9') {
      throw std::invalid_argument("invalid decimal integer '" + std::string(text) + "'");
    }
  }
  if (digits.size() > 1 && digits.front() == '0') {
    throw std::invalid_argument("leading zero in decimal integer '" + std::string(text) + "'");
  }
  if (digits == "0" && digits.size() != text.size()) {
    throw std::invalid_argument("negative zero is not canonical");
  }
  return BigInt(std::string(text), 10);
}

std::size_t bit_length(const BigInt& x) {
  if (x == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

BigInt floor_div(const BigInt& n, const BigInt& d) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

BigInt floor_mod(const BigInt& n, const BigInt& d) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return r;
}

std::size_t BigIntHash::operator()(const BigInt& x) const noexcept {
  const mpz_srcptr z = x.get_mpz_t();
  std::size_t h = std::hash<int>{}(z->_mp_size);
  const int limbs = z->_mp_size < 0 ? -z->_mp_size : z->_mp_size;
  for (int i = 0; i < limbs; ++i) {
    h ^= std::hash<mp_limb_t>{}(z->_mp_d[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace wildla
