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


#include <doctest.h>

#include <string>
#include <vector>

#include "wildla/ipdemo.hpp"

using namespace wildla;
using namespace wildla::ipdemo;

TEST_CASE("instances") {
  CHECK(first_primes(3) == std::vector<BigInt>{2, 3, 5});
  const IpInstance i1 = build_ip_instance(1);
  CHECK(i1.L == 2);
  CHECK(i1.model.c() == 17);
  const IpInstance i2 = build_ip_instance(2);
  CHECK(i2.primes == std::vector<BigInt>{2, 3});
  CHECK(i2.L == 6);
  CHECK(i2.model.c() == 149);
  const IpInstance i3 = build_ip_instance(3);
  CHECK(i3.L == 30);
  CHECK(i3.model.c() == 3607);
  CHECK_THROWS_AS(build_ip_instance(0), std::invalid_argument);
  CHECK_THROWS_AS(build_ip_instance(4), std::invalid_argument);
}

TEST_CASE("phi examples") {
  const IpInstance i2 = build_ip_instance(2);
  CHECK(phi_eval(i2, 2, 6));
  CHECK_FALSE(phi_eval(i2, 2, 3));
  CHECK(phi_eval(i2, 3, 6));
  CHECK(phi_eval(build_ip_instance(3), 5, 30));
  const IpInstance i1 = build_ip_instance(1);
  CHECK_FALSE(phi_eval(i1, 2, 1));
  CHECK(phi_eval(i1, 2, 2));
}

TEST_CASE("phi is divisibility on [1, L]^2") {
  for (unsigned n = 1; n <= 3; ++n) {
    const IpInstance inst = build_ip_instance(n);
    const long L = inst.L.get_si();
    for (long x = 1; x <= L; ++x) {
      for (long y = 1; y <= L; ++y) REQUIRE(phi_eval(inst, x, y) == (y % x == 0));
    }
  }
}

TEST_CASE("phi at x = 0 holds only for y = 0") {
  const IpInstance inst = build_ip_instance(2);
  CHECK(phi_eval(inst, 0, 0));
  for (long y = 1; y <= 6; ++y) CHECK_FALSE(phi_eval(inst, 0, y));
  for (long x = 1; x <= 6; ++x) CHECK(phi_eval(inst, x, 0));
}

TEST_CASE("the membership pattern is shattered") {
  for (unsigned n = 1; n <= 3; ++n) {
    const IpInstance inst = build_ip_instance(n);
    const IpMatrix m = check_ip_pattern(inst, 3);
    CHECK(m.matches());
    REQUIRE(m.cells.size() == n);
    for (unsigned i = 0; i < n; ++i) {
      REQUIRE(m.cells[i].size() == (1u << n));
      for (std::uint64_t mask = 0; mask < (1u << n); ++mask) {
        CHECK(m.cells[i][mask] == bool(mask >> i & 1));
        CHECK(m.columns[mask] == subset_product(inst, mask));
        CHECK(m.columns[mask] <= inst.L);
      }
    }
  }
  CHECK(subset_product(build_ip_instance(3), 0) == 1);
  CHECK(subset_product(build_ip_instance(3), 5) == 10);
}

TEST_CASE("matrix text") {
  const IpInstance inst = build_ip_instance(2);
  const std::string text = format_matrix(inst, check_ip_pattern(inst));
  CHECK(text ==
        "J {} {0} {1} {0,1}\n"
        "b_J 1 2 3 6\n"
        "a_0=2 0 1 0 1\n"
        "a_1=3 0 0 1 1\n");
}
