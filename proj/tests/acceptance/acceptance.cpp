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


// One line per acceptance criterion:
//   ACCEPT <n> <PASS|FAIL> <seconds>s <detail>
// followed by NOTE lines where a criterion needs context. Exit status is
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wildla/contfrac.hpp"
#include "wildla/encoder.hpp"
#include "wildla/ipdemo.hpp"
#include "wildla/logic/builders.hpp"
#include "wildla/logic/eval.hpp"
#include "wildla/logic/transform.hpp"
#include "wildla/model/equivalence.hpp"
#include "wildla/model/semantic.hpp"
#include "wildla/model/two_scalar.hpp"

using namespace wildla;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;
};

std::string plural(std::size_t n, const std::string& what) { return std::to_string(n) + " " + what; }

const encoder::WildModel& squaring(std::uint32_t L) {
  static std::map<std::uint32_t, encoder::WildModel> cache;
  auto it = cache.find(L);
  if (it == cache.end()) it = cache.emplace(L, encoder::build_squaring_model(L)).first;
  return it->second;
}

// Encodings of short sequences, all with a1 >= 2 and a <= 2000.
const std::vector<encoder::WildModel>& micro_models() {
  static const std::vector<encoder::WildModel> models = [] {
    const std::vector<encoder::TargetSequence> seqs{
        {{1, 2}, 3}, {{1, 2, 2}, 3}, {{2, 1, 3, 4}, 5}, {{1, 1, 2, 3, 1}, 7}, {{2, 4, 1, 3}, 5}};
    std::vector<encoder::WildModel> out;
    for (const auto& seq : seqs) out.push_back(encoder::model_from_encoding(encoder::encode_sequence(seq)));
    return out;
  }();
  return models;
}

contfrac::ConvergentTable table_of(long a, long b) {
  return contfrac::convergents(contfrac::cf_expand(BigInt(a), BigInt(b)), contfrac::CoprimePair{BigInt(a), BigInt(b)});
}

std::string pair_text(long a, long b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

Outcome cf_invariants() {
  Outcome o;
  std::size_t pairs = 0, bad = 0;
  std::string witness;
  for (long a = 2; a <= 200; ++a) {
    for (long b = 1; b < a; ++b) {
      ++pairs;
      const auto cf = contfrac::cf_expand(BigInt(a), BigInt(b));
      const auto t = contfrac::convergents(cf, contfrac::CoprimePair{BigInt(a), BigInt(b)});
      const std::ptrdiff_t n = t.n();
      bool ok = t.u(-2) == 1 && t.u(-1) == 0 && t.v(-2) == 0 && t.v(-1) == 1 && t.r(n) == 0 &&
                t.gcd() == std::gcd(a, b) && t.u(n) * std::gcd(a, b) == b && t.v(n) * std::gcd(a, b) == a;
      for (std::ptrdiff_t i = 0; ok && i <= n; ++i) {
        const BigInt ai = cf[static_cast<std::size_t>(i)];
        ok = t.u(i) == t.u(i - 1) * ai + t.u(i - 2) && t.v(i) == t.v(i - 1) * ai + t.v(i - 2);
        ok = ok && t.r(i - 2) == ai * t.r(i - 1) + t.r(i) && t.r(i) < t.r(i - 1);
        const BigInt residual = BigInt(a) * t.u(i) - BigInt(b) * t.v(i);
        ok = ok && t.r(i) == (i % 2 == 0 ? residual : BigInt(-residual));
        ok = ok && std::gcd(t.u(i).get_si(), t.v(i).get_si()) == 1;
        if (i >= 1) ok = ok && t.v(i) > t.v(i - 1) && t.u(i) >= t.u(i - 1);
        if (i >= 2) ok = ok && t.u(i) > t.u(i - 1);
      }
      if (!ok && bad++ == 0) witness = pair_text(a, b);
    }
  }
  o.pass = bad == 0;
  o.detail = plural(pairs, "pairs") + ", " + plural(bad, "violations") + (witness.empty() ? "" : ", first " + witness);
  return o;
}

Outcome best_approx_oracle() {
  Outcome o;
  std::size_t pairs = 0, half = 0, bad = 0, half_bad = 0, refined_bad = 0;
  std::string witness;
  for (long a = 2; a <= 60; ++a) {
    for (long b = 1; b < a; ++b) {
      const auto cf = contfrac::cf_expand(BigInt(a), BigInt(b));
      const auto t = contfrac::convergents(cf, contfrac::CoprimePair{BigInt(a), BigInt(b)});
      auto conv = contfrac::convergent_pairs(t);
      const auto oracle = contfrac::best_approx_bruteforce(BigInt(a), BigInt(b));
      if (contfrac::is_half_exception(BigInt(a), BigInt(b))) {
        ++half;
        const bool ok = oracle.size() < conv.size() &&
                        std::includes(conv.begin(), conv.end(), oracle.begin(), oracle.end()) &&
                        oracle.count(t.pair(t.n())) == 1;
        if (!ok) ++half_bad;
        continue;
      }
      ++pairs;
      if (oracle != conv && bad++ == 0) {
        witness = pair_text(a, b) + " cf";
        for (const BigInt& q : cf.coeffs()) witness += " " + to_decimal(q);
        for (const auto& p : conv) {
          if (!oracle.count(p)) witness += ", convergent (" + to_decimal(p.first) + "," + to_decimal(p.second) + ") missing";
        }
      }
      if (cf.size() > 1 && cf[1] == 1) conv.erase(t.pair(0));
      if (oracle != conv) ++refined_bad;
    }
  }
  o.pass = bad == 0 && half_bad == 0;
  o.detail = plural(pairs, "pairs") + " outside the half case, " + plural(bad, "mismatches") + "; " +
             plural(half, "half-case pairs") + ", " + plural(half_bad, "violations");
  if (!witness.empty()) o.notes.push_back("first mismatch " + witness);
  if (bad > 0) {
    o.notes.push_back("every mismatch has a1 = 1, so u0 = u1 = 1 and (1, a0) is beaten by (1, a0 + 1)");
    o.notes.push_back("oracle set = convergent set minus (1, a0) when a1 = 1: " + plural(refined_bad, "mismatches"));
  }
  return o;
}

Outcome conditions_equivalence() {
  Outcome o;
  std::size_t pairs = 0, c01 = 0, c12 = 0, refined = 0;
  std::string witness;
  for (long a = 2; a <= 40; ++a) {
    for (long b = 1; b < a; ++b) {
      const BigInt A(a), B(b);
      if (contfrac::is_half_exception(A, B)) continue;
      ++pairs;
      const auto cf = contfrac::cf_expand(A, B);
      const auto t = contfrac::convergents(cf, contfrac::CoprimePair{A, B});
      const bool degenerate = cf.size() > 1 && cf[1] == 1;
      for (long u = 1; u <= b; ++u) {
        for (long v = 0; v <= a; ++v) {
          const BigInt U(u), V(v);
          const bool x0 = contfrac::is_bounded_best_pair(A, B, U, V);
          const bool x1 = contfrac::is_best_approx_pair(A, B, U, V);
          const bool x2 = contfrac::is_convergent_pair(t, U, V);
          if (x0 != x1) ++c01;
          if (x1 != x2 && c12++ == 0) {
            witness = "a/b = " + std::to_string(a) + "/" + std::to_string(b) + " at (u,v) = " + pair_text(u, v) +
                      ": 0* " + (x0 ? "true" : "false") + ", 2* " + (x2 ? "true" : "false");
          }
          if (x1 != (x2 && !(degenerate && contfrac::UVPair{U, V} == t.pair(0)))) ++refined;
        }
      }
    }
  }
  o.pass = c01 == 0 && c12 == 0;
  o.detail = plural(pairs, "pairs") + ", 0*/1* " + plural(c01, "counterexamples") + ", 1*/2* " +
             plural(c12, "counterexamples");
  if (!witness.empty()) o.notes.push_back("first counterexample " + witness);
  if (c12 > 0) o.notes.push_back("with (1, a0) removed from 2* when a1 = 1: " + plural(refined, "counterexamples"));
  return o;
}

Outcome encodings() {
  Outcome o;
  std::mt19937_64 rng(20261014);
  const std::vector<long> primes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  std::size_t bad = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const long c = primes[rng() % primes.size()];
    encoder::TargetSequence seq{{}, c};
    const std::size_t len = 1 + rng() % 8;
    for (std::size_t i = 0; i < len; ++i) seq.z.emplace_back(static_cast<long>(1 + rng() % (c - 1)));
    const encoder::Encoding e = encoder::encode_sequence(seq);
    bool ok = contfrac::cf_expand(contfrac::cf_value(e.cf).a, contfrac::cf_value(e.cf).b) == e.cf;
    for (std::ptrdiff_t i = 0; i <= e.table.n(); ++i) {
      ok = ok && floor_mod(e.table.v(i), c) == seq.z[static_cast<std::size_t>(i)];
    }
    for (std::ptrdiff_t j = -1; j <= e.table.n(); ++j) ok = ok && floor_mod(e.table.v(j), c) != 0;
    if (!ok) ++bad;
  }
  o.pass = bad == 0;
  o.detail = "200 sequences, " + plural(bad, "failures");
  return o;
}

Outcome multiplication() {
  Outcome o;
  std::size_t bad = 0;
  std::string sizes;
  for (std::uint32_t L : {1u, 2u, 4u, 8u}) {
    const auto& m = squaring(L);
    const model::SemanticModel sem(m);
    const model::TwoScalarSemantics two(model::TwoScalarView::of(m));
    for (long x = 0; x <= L; ++x) {
      for (long y = 0; y <= L; ++y) {
        for (long z = 0; z <= static_cast<long>(L * L + L); ++z) {
          const bool want = z == x * y;
          if (sem.mu(x, y, z) != want || two.mu(x, y, z) != want) ++bad;
        }
      }
    }
    if (model::recover_constants(model::TwoScalarView::of(m)) != model::Constants{m.a(), m.b(), m.c()}) ++bad;
    sizes += " L=" + std::to_string(L) + ":" + std::to_string(bit_length(m.a())) + "b";
  }
  o.pass = bad == 0;
  o.detail = plural(bad, "failures") + "; a bits" + sizes;
  return o;
}

Outcome literal_agreement() {
  Outcome o;
  model::EquivalenceDomain dom;
  dom.literal_box = 1;
  dom.predicates = true;
  dom.budget = 100'000'000;
  dom.threads = 4;
  model::EquivalenceReport rep = model::equivalence_check(squaring(1), dom);
  std::set<std::string> names;
  for (const auto& r : rep.records) names.insert(r.name);
  const std::set<std::string> want{"gamma.literal", "V.literal", "V0.literal", "V1.literal", "pi.literal",
                                   "sigma.literal", "mu.literal", "mu2.literal"};
  const bool covered = std::includes(names.begin(), names.end(), want.begin(), want.end());
  const std::size_t l1 = rep.records.size();

  std::size_t micro_points = 0;
  std::string as;
  for (const auto& m : micro_models()) {
    if (m.a() > 2000) return {false, "micro model too large", {}};
    model::EquivalenceDomain d;
    d.product = false;
    d.predicates = true;
    d.threads = 4;
    const auto r = model::equivalence_check(m, d);
    micro_points += r.records.size();
    rep.append(r);
    as += " " + to_decimal(m.a());
  }
  o.pass = covered && rep.ok();
  o.detail = plural(l1, "points") + " on L=1, " + plural(micro_points, "points") + " on micro models a =" + as +
             "; " + plural(rep.count(model::Status::fail), "disagreements") + ", " +
             plural(rep.count(model::Status::budget), "budget overruns");
  if (const auto* w = rep.first_failure()) o.notes.push_back("first failure " + model::format_record(*w));
  return o;
}

Outcome identities() {
  Outcome o;
  std::size_t bad = 0, points = 0;
  const logic::Formula mu2 = logic::build_mu2();
  std::vector<const encoder::WildModel*> models;
  for (std::uint32_t L : {1u, 2u, 4u, 8u}) models.push_back(&squaring(L));
  for (const auto& m : micro_models()) models.push_back(&m);
  unsigned long seed = 0;
  for (const encoder::WildModel* mp : models) {
    const auto& m = *mp;
    const model::TwoScalarView view = model::TwoScalarView::of(m);
    const BigInt &a = m.a(), &b = m.b(), &c = m.c();
    std::vector<BigInt> xs;
    if (a <= 2000) {
      for (BigInt x = 0; x < a; ++x) xs.push_back(x);
    } else {
      xs = {0, 1, a - 1};
      gmp_randclass rng(gmp_randinit_default);
      rng.seed(++seed);
      for (int i = 0; i < 1000; ++i) xs.push_back(rng.get_z_range(a));
    }
    for (const BigInt& x : xs) {
      ++points;
      if (model::gamma_circ(view, x) != c * x || model::beta_circ(view, x) != b * c * x) ++bad;
    }
    if (model::gamma_circ(view, a) != 0 || model::beta_circ(view, a) != a * b * c + 1) ++bad;
    const model::Constants k = model::recover_constants(view);
    if (k.c1 != c || k.b1 != b) ++bad;
    const auto br = logic::check_bounded(mu2, std::vector<BigInt>{m.alpha, m.delta});
    if (!br.bounded || !br.constant) ++bad;
    for (const auto& e : br.entries) {
      if (!e.value || *e.value > m.delta) ++bad;
    }
  }
  o.pass = bad == 0;
  o.detail = plural(points, "points") + " below a over L in {1,2,4,8} and " + plural(micro_models().size(), "micro models") +
             ", " + plural(bad, "failures");
  return o;
}

Outcome pi_regression() {
  Outcome o;
  const auto& m = squaring(1);
  const model::SemanticModel sem(m);
  const auto raw = sem.false_squares(false);
  const auto fixed = sem.false_squares(true);

  // The same comparison through literal evaluation of sigma.
  const std::vector<BigInt> abc{m.a(), m.b(), m.c()};
  logic::Evaluator lit_raw(logic::build_mu_family({{}, false}).sigma, abc);
  logic::Evaluator lit_fixed(logic::build_mu_family().sigma, abc);
  std::size_t raw_lit = 0, fixed_lit = 0;
  const long c = m.c().get_si();
  for (long x = 0; x < c; ++x) {
    for (long y = 0; y < c; ++y) {
      if (y == x * x) continue;
      if (lit_raw.eval({{"x", x}, {"y", y}})) ++raw_lit;
      if (lit_fixed.eval({{"x", x}, {"y", y}})) ++fixed_lit;
    }
  }
  o.pass = !raw.empty() && fixed.empty() && raw_lit > 0 && fixed_lit == 0;
  std::ostringstream d;
  d << "uncorrected " << raw.size() << " false squares (literal " << raw_lit << "), corrected " << fixed.size()
    << " (literal " << fixed_lit << ")";
  if (!raw.empty()) d << ", e.g. sigma(" << raw.front().first << "," << raw.front().second << ")";
  o.detail = d.str();
  return o;
}

Outcome ip_pattern() {
  Outcome o;
  std::string info;
  for (unsigned n = 1; n <= 3; ++n) {
    const ipdemo::IpInstance inst = ipdemo::build_ip_instance(n);
    const ipdemo::IpMatrix mat = ipdemo::check_ip_pattern(inst, 4);
    if (!mat.matches()) o.pass = false;
    info += " n=" + std::to_string(n) + ":" + std::to_string(n) + "x" + std::to_string(1u << n) +
            (mat.matches() ? "" : " mismatch");
  }
  o.detail = "matrices" + info;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
      {1, cf_invariants}, {2, best_approx_oracle}, {3, conditions_equivalence}, {4, encodings}, {5, multiplication},
      {6, literal_agreement}, {7, identities}, {8, pi_regression}, {9, ip_pattern},
  };
  int failures = 0;
  for (const auto& [id, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what(), {}};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char t[32];
    std::snprintf(t, sizeof t, "%.2fs", secs);
    std::cout << "ACCEPT " << id << " " << (o.pass ? "PASS" : "FAIL") << " " << t << " " << o.detail << "\n";
    for (const auto& n : o.notes) std::cout << "NOTE " << id << " " << n << "\n";
    if (!o.pass) ++failures;
  }
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}
