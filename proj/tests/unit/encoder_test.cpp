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

#include <random>
#include <string>
#include <vector>

#include "wildla/contfrac.hpp"
#include "wildla/encoder.hpp"
#include "wildla/model_json.hpp"

using namespace wildla;
using namespace wildla::encoder;

namespace {

std::vector<bool> sieve(std::size_t n) {
  std::vector<bool> prime(n + 1, true);
  prime[0] = false;
  if (n >= 1) prime[1] = false;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (!prime[p]) continue;
    for (std::size_t q = p * p; q <= n; q += p) prime[q] = false;
  }
  return prime;
}

void check_encoding(const TargetSequence& seq, const Encoding& enc) {
  const auto& t = enc.table;
  REQUIRE(static_cast<std::size_t>(t.n() + 1) == seq.z.size());
  for (std::ptrdiff_t i = 0; i <= t.n(); ++i) {
    REQUIRE(floor_mod(t.v(i), seq.c) == seq.z[static_cast<std::size_t>(i)]);
  }
  for (std::ptrdiff_t j = -1; j <= t.n(); ++j) REQUIRE(floor_mod(t.v(j), seq.c) != 0);
  REQUIRE(contfrac::cf_value(enc.cf) == enc.pair);
  REQUIRE(contfrac::cf_expand(enc.pair.a, enc.pair.b) == enc.cf);
  // Least solutions: below min_val + c. min_val is 1, 2 for a_1 and at the end, 3 when n = 1.
  const std::size_t n = enc.cf.size() - 1;
  for (std::size_t i = 0; i <= n; ++i) {
    long min_val = (i == 1 || i == n) ? 2 : 1;
    if (n == 1 && i == 1) min_val = 3;
    REQUIRE(enc.cf[i] >= min_val);
    REQUIRE(enc.cf[i] < min_val + seq.c);
  }
  if (n >= 1) REQUIRE(enc.cf[1] >= 2);
}

}  // namespace

TEST_CASE("prime utilities agree with a sieve") {
  const auto prime = sieve(20000);
  for (std::size_t n = 0; n <= 20000; ++n) REQUIRE(is_prime(BigInt(static_cast<unsigned long>(n))) == prime[n]);
  for (std::size_t n = 0; n < 19000; n += 7) {
    std::size_t p = n + 1;
    while (!prime[p]) ++p;
    REQUIRE(smallest_prime_above(BigInt(static_cast<unsigned long>(n))) == static_cast<unsigned long>(p));
  }
  CHECK(smallest_prime_above(4) == 5);
  CHECK(smallest_prime_above(144) == 149);
  CHECK(smallest_prime_above(3600) == 3607);
  CHECK_THROWS_AS(smallest_prime_above(-1), std::invalid_argument);
}

TEST_CASE("mod_inverse agrees with exhaustive search") {
  for (long m = 2; m <= 60; ++m) {
    for (long x = -70; x <= 70; ++x) {
      long want = -1;
      for (long y = 0; y < m; ++y) {
        if (((x * y) % m + m) % m == 1 % m) {
          want = y;
          break;
        }
      }
      if (want < 0) {
        REQUIRE_THROWS_AS(mod_inverse(x, m), std::invalid_argument);
      } else {
        REQUIRE(mod_inverse(x, m) == want);
      }
    }
  }
}

TEST_CASE("solve_coefficient examples and minimality") {
  CHECK(solve_coefficient(1, 1, 1, 5, 1) == 5);
  CHECK(solve_coefficient(6, 1, 2, 5, 1) == 1);
  CHECK(solve_coefficient(7, 6, 4, 5, 2) == 4);
  CHECK_THROWS_AS(solve_coefficient(10, 1, 1, 5, 1), std::logic_error);
  for (long c : {3, 5, 7, 11, 13}) {
    for (long vp = 1; vp < 3 * c; ++vp) {
      if (vp % c == 0) continue;
      for (long vp2 = 0; vp2 < 2 * c; ++vp2) {
        for (long z = 1; z < c; ++z) {
          for (long lo = 1; lo <= 2; ++lo) {
            long want = lo;
            while ((vp * want + vp2) % c != z) ++want;
            REQUIRE(solve_coefficient(vp, vp2, z, c, lo) == want);
          }
        }
      }
    }
  }
}

TEST_CASE("encode_sequence examples") {
  const auto e1 = encode_sequence(TargetSequence{{1, 1, 2, 4}, 5});
  CHECK(e1.cf.coeffs() == std::vector<BigInt>{1, 5, 1, 4});
  CHECK(e1.pair == contfrac::CoprimePair{34, 29});
  const auto e2 = encode_sequence(TargetSequence{{1, 2}, 3});
  CHECK(e2.cf.coeffs() == std::vector<BigInt>{1, 4});
  CHECK(e2.pair == contfrac::CoprimePair{5, 4});
  CHECK_THROWS_AS(encode_sequence(TargetSequence{{0, 2}, 3}), std::invalid_argument);
  CHECK_THROWS_AS(encode_sequence(TargetSequence{{1, 3}, 3}), std::invalid_argument);
  CHECK_THROWS_AS(encode_sequence(TargetSequence{{1, 2}, 4}), std::invalid_argument);
  CHECK_THROWS_AS(encode_sequence(TargetSequence{{}, 5}), std::invalid_argument);
}

TEST_CASE("200 random encodings satisfy the residue invariants") {
  std::mt19937_64 rng(7);
  const std::vector<long> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  for (int trial = 0; trial < 200; ++trial) {
    const long c = primes[rng() % primes.size()];
    const std::size_t len = 1 + rng() % 8;
    TargetSequence seq{{}, c};
    for (std::size_t i = 0; i < len; ++i) seq.z.emplace_back(static_cast<long>(1 + rng() % (c - 1)));
    if (c == 2 && len == 1) continue;
    const Encoding enc = encode_sequence(seq);
    check_encoding(seq, enc);
  }
}

TEST_CASE("squaring models") {
  const WildModel m1 = build_squaring_model(1);
  CHECK(m1.c() == 5);
  CHECK(m1.seq.z == std::vector<BigInt>{1, 1, 2, 4});
  CHECK(m1.a() == 34);
  CHECK(m1.b() == 29);
  CHECK(m1.alpha == 170);
  CHECK(m1.delta == 24655);
  CHECK(build_squaring_model(2).c() == 17);
  CHECK(build_squaring_model(2).seq.z == std::vector<BigInt>{1, 1, 2, 4, 3, 9, 4, 16});
  CHECK_THROWS_AS(build_squaring_model(0), std::invalid_argument);
  for (std::uint32_t L = 1; L <= 16; ++L) {
    const WildModel m = build_squaring_model(L);
    const std::vector<BigInt> z = squaring_sequence(L);
    REQUIRE(z.size() == 4 * L);
    for (std::uint32_t i = 0; i < 2 * L; ++i) {
      REQUIRE(z[2 * i] == i + 1);
      REQUIRE(z[2 * i + 1] == BigInt(i + 1) * (i + 1));
    }
    REQUIRE(m.seq.z == z);
    REQUIRE(is_prime(m.c()));
    REQUIRE(m.c() > BigInt(2 * L) * (2 * L));
    REQUIRE(m.c() == smallest_prime_above(BigInt(2 * L) * (2 * L)));
    REQUIRE(m.b() >= 3);
    REQUIRE(m.alpha == m.a() * m.c());
    REQUIRE(m.delta == m.a() * m.b() * m.c() * m.c() + m.c());
    check_encoding(m.seq, Encoding{m.seq, m.cf, m.table, m.pair});
  }
}

TEST_CASE("encode_function shifts by one") {
  const auto f = encode_function(std::vector<BigInt>{0, 3});
  CHECK(f.shift == 1);
  CHECK(f.encoding.seq.z == std::vector<BigInt>{1, 4});
  CHECK(f.encoding.seq.c == 5);
  CHECK(f.decode() == std::vector<BigInt>{0, 3});
  const auto g = encode_function(std::vector<BigInt>{1, 2});
  CHECK(g.encoding.seq.z == std::vector<BigInt>{2, 3});
  CHECK(g.decode() == std::vector<BigInt>{1, 2});
  CHECK_THROWS_AS(encode_function(std::vector<BigInt>{}), std::invalid_argument);
  CHECK_THROWS_AS(encode_function(std::vector<BigInt>{2, -1}), std::invalid_argument);
}

TEST_CASE("model documents round trip byte for byte") {
  for (std::uint32_t L : {1u, 2u, 5u, 8u}) {
    const WildModel m = build_squaring_model(L);
    const std::string doc = serialize_model(m);
    const WildModel back = deserialize_model(doc);
    CHECK(serialize_model(back) == doc);
    CHECK(back.pair == m.pair);
    CHECK(back.cf == m.cf);
    CHECK(back.alpha == m.alpha);
    CHECK(back.delta == m.delta);
  }
  const std::string doc = serialize_model(build_squaring_model(1));
  CHECK(doc.find("\"a\": \"34\"") != std::string::npos);
}

TEST_CASE("malformed model documents are rejected") {
  std::string doc = serialize_model(build_squaring_model(1));
  auto replaced = [&](const std::string& from, const std::string& to) {
    std::string s = doc;
    s.replace(s.find(from), from.size(), to);
    return s;
  };
  CHECK_THROWS_AS(deserialize_model("{"), ModelFormatError);
  CHECK_THROWS_AS(deserialize_model("[]"), ModelFormatError);
  CHECK_THROWS_AS(deserialize_model(replaced("\"version\": 1", "\"version\": 2")), ModelFormatError);
  CHECK_THROWS_AS(deserialize_model(replaced("\"a\": \"34\"", "\"a\": 34")), ModelFormatError);
  CHECK_THROWS_AS(deserialize_model(replaced("\"a\": \"34\"", "\"a\": \"3x4\"")), ModelFormatError);
  CHECK_THROWS_AS(deserialize_model(replaced("\"4\"\n  ],\n  \"a\"", "\"1\"\n  ],\n  \"a\"")), ModelFormatError);
  // Inconsistent but well-formed values load as written.
  CHECK(deserialize_model(replaced("\"a\": \"34\"", "\"a\": \"35\"")).a() == 35);
}
