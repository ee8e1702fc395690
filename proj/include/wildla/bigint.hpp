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

#ifndef WILDLA_BIGINT_HPP_
#define WILDLA_BIGINT_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace wildla {

// Arbitrary-precision signed integer. All model quantities live here.
using BigInt = mpz_class;

// Canonical base-10 rendering: optional '-', no leading zeros.
std::string to_decimal(const BigInt& x);

// Inverse of to_decimal. Rejects anything that to_decimal would not produce
// (leading '+', leading zeros, whitespace, "-0"), so that decimal strings
// round trip byte for byte.
BigInt parse_decimal(std::string_view text);

std::size_t bit_length(const BigInt& x);

// Floor division and the matching non-negative remainder for a positive
// divisor.
BigInt floor_div(const BigInt& n, const BigInt& d);
BigInt floor_mod(const BigInt& n, const BigInt& d);

struct BigIntHash {
  std::size_t operator()(const BigInt& x) const noexcept;
};

}  // namespace wildla

#endif  // WILDLA_BIGINT_HPP_
