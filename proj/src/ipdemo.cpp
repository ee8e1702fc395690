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

#include "wildla/ipdemo.hpp"

#include <sstream>
#include <stdexcept>
#include <thread>

namespace wildla::ipdemo {

std::vector<BigInt> first_primes(unsigned n) {
  std::vector<BigInt> out;
  BigInt p = 1;
  while (out.size() < n) {
    p = encoder::smallest_prime_above(p);
    out.push_back(p);
  }
  return out;
}

IpInstance build_ip_instance(unsigned n, bool force) {
  if (n == 0) throw std::invalid_argument("ip instance needs at least one prime");
  if (n > kMaxUnforcedPrimes && !force) {
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds " + std::to_string(kMaxUnforcedPrimes) +
                                " primes; pass force to build it anyway");
  }
  std::vector<BigInt> primes = first_primes(n);
  BigInt L = 1;
  for (const BigInt& p : primes) L *= p;
  if (!L.fits_uint_p()) throw std::invalid_argument("product of primes too large");
  encoder::WildModel model = encoder::build_squaring_model(static_cast<std::uint32_t>(L.get_ui()));
  auto semantics = std::make_shared<model::TwoScalarSemantics>(model::TwoScalarView::of(model));
  IpInstance inst{n, std::move(primes), std::move(L), std::move(model), std::move(semantics)};
  return inst;
}

bool phi_eval(const IpInstance& inst, const BigInt& x, const BigInt& y) {
  for (BigInt z = 0; z <= y; ++z) {
    if (inst.semantics->mu(z, x, y)) return true;
  }
  return false;
}

BigInt subset_product(const IpInstance& inst, std::uint64_t mask) {
  BigInt out = 1;
  for (unsigned i = 0; i < inst.n; ++i) {
    if (mask >> i & 1U) out *= inst.primes[i];
  }
  return out;
}

IpMatrix check_ip_pattern(const IpInstance& inst, unsigned threads) {
  IpMatrix m;
  const std::uint64_t cols = std::uint64_t{1} << inst.n;
  for (std::uint64_t mask = 0; mask < cols; ++mask) m.columns.push_back(subset_product(inst, mask));
  m.cells.assign(inst.n, std::vector<bool>(cols, false));

  std::vector<char> flat(inst.n * cols, 0);
  auto work = [&](unsigned id, unsigned workers) {
    for (std::size_t k = id; k < flat.size(); k += workers) {
      flat[k] = phi_eval(inst, inst.primes[k / cols], m.columns[k % cols]) ? 1 : 0;
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(flat.size())));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id, workers);
    for (auto& t : pool) t.join();
  }

  for (unsigned i = 0; i < inst.n; ++i) {
    for (std::uint64_t mask = 0; mask < cols; ++mask) {
      const bool cell = flat[i * cols + mask] != 0;
      m.cells[i][mask] = cell;
      if (cell != ((mask >> i & 1U) != 0)) m.mismatches.emplace_back(i, mask);
    }
  }
  return m;
}

std::string format_matrix(const IpInstance& inst, const IpMatrix& matrix) {
  std::ostringstream os;
  os << "J";
  for (std::uint64_t mask = 0; mask < matrix.columns.size(); ++mask) {
    os << " {";
    bool first = true;
    for (unsigned i = 0; i < inst.n; ++i) {
      if (!(mask >> i & 1U)) continue;
      if (!first) os << ',';
      os << i;
      first = false;
    }
    os << '}';
  }
  os << "\n";
  os << "b_J";
  for (const BigInt& b : matrix.columns) os << ' ' << to_decimal(b);
  os << "\n";
  for (unsigned i = 0; i < inst.n; ++i) {
    os << "a_" << i << "=" << to_decimal(inst.primes[i]);
    for (bool cell : matrix.cells[i]) os << ' ' << (cell ? 1 : 0);
    os << "\n";
  }
  return os.str();
}

}  // namespace wildla::ipdemo
