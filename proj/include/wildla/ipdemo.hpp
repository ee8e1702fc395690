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

#ifndef WILDLA_IPDEMO_HPP_
#define WILDLA_IPDEMO_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "wildla/bigint.hpp"
#include "wildla/encoder.hpp"
#include "wildla/model/two_scalar.hpp"

// The divisibility formula phi(x, y) = (exists z <= y) z x = y, with the
// multiplication read through mu2, shatters the first n primes: for every
// i < n and J subset of {0..n-1}, phi(p_i, prod_{j in J} p_j) iff i in J.
namespace wildla::ipdemo {

inline constexpr unsigned kMaxUnforcedPrimes = 3;

struct IpInstance {
  unsigned n = 0;
  std::vector<BigInt> primes;
  BigInt L;  // product of the primes
  encoder::WildModel model;
  // Semantics of the two-scalar view, shared by all evaluations.
  std::shared_ptr<const model::TwoScalarSemantics> semantics;
};

std::vector<BigInt> first_primes(unsigned n);

// Throws std::invalid_argument for n = 0, or n above kMaxUnforcedPrimes
// unless forced.
IpInstance build_ip_instance(unsigned n, bool force = false);

// phi(x, y) for 0 <= x, y <= L. phi(0, y) holds only for y = 0.
bool phi_eval(const IpInstance& inst, const BigInt& x, const BigInt& y);

// b_J for the subset with bit mask `mask`; b_{} = 1.
BigInt subset_product(const IpInstance& inst, std::uint64_t mask);

struct IpMatrix {
  // cells[i][mask] = phi(p_i, b_J)
  std::vector<std::vector<bool>> cells;
  std::vector<BigInt> columns;
  std::vector<std::pair<unsigned, std::uint64_t>> mismatches;
  bool matches() const { return mismatches.empty(); }
};

IpMatrix check_ip_pattern(const IpInstance& inst, unsigned threads = 1);

// Header line with the subsets J in binary-counter order, then one row of
// 0/1 per prime.
std::string format_matrix(const IpInstance& inst, const IpMatrix& matrix);

}  // namespace wildla::ipdemo

#endif  // WILDLA_IPDEMO_HPP_
