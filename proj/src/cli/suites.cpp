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

#include "suites.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <random>
#include <set>

#include "wildla/contfrac.hpp"
#include "wildla/logic/builders.hpp"
#include "wildla/logic/eval.hpp"
#include "wildla/logic/transform.hpp"
#include "wildla/model/semantic.hpp"
#include "wildla/model/two_scalar.hpp"

namespace wildla::cli {

using model::CheckRecord;
using model::Comparison;
using model::Point;
using model::Status;

namespace {

CheckRecord record(std::string name, Point point, bool ok) {
  return CheckRecord{std::move(name), std::move(point), true, ok, ok ? Status::pass : Status::fail};
}

Point pt(std::initializer_list<long> xs) {
  Point p;
  for (long x : xs) p.emplace_back(x);
  return p;
}

bool is_micro(const encoder::WildModel& m) { return m.a() <= kLiteralLimit; }

std::string sizes(const encoder::WildModel& m) {
  return "model L=" + std::to_string(m.L) + " c=" + to_decimal(m.c()) + " length=" + std::to_string(m.seq.z.size()) +
         " a_bits=" + std::to_string(bit_length(m.a())) + " b_bits=" + std::to_string(bit_length(m.b()));
}

model::PredicateFactory constant_true() {
  return [] { return model::Predicate([](const Point&) { return true; }); };
}

model::PredicateFactory literal_formula(const logic::Formula& f, std::vector<BigInt> scalars, std::uint64_t budget) {
  return [f, scalars = std::move(scalars), budget]() -> model::Predicate {
    logic::EvalOptions opts;
    opts.budget = budget;
    auto ev = std::make_shared<logic::Evaluator>(f, scalars, opts);
    return [ev](const Point& p) { return ev->eval({{"x", p[0]}, {"y", p[1]}, {"z", p[2]}}); };
  };
}

// Samples of [0, a): the boundary points plus `count` uniform draws.
std::vector<BigInt> sample_below(const BigInt& a, std::size_t count) {
  std::set<BigInt> xs{BigInt(0), BigInt(1), a - 1};
  if (a <= kLiteralLimit) {
    for (BigInt x = 0; x < a; ++x) xs.insert(x);
    return {xs.begin(), xs.end()};
  }
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(20261014UL);
  for (std::size_t i = 0; i < count; ++i) xs.insert(rng.get_z_range(a));
  return {xs.begin(), xs.end()};
}

}  // namespace

bool degenerate_zeroth(const contfrac::ContinuedFraction& cf) { return cf.size() > 1 && cf[1] == 1; }

void SuiteResult::append(const SuiteResult& other) {
  report.append(other.report);
  summary.insert(summary.end(), other.summary.begin(), other.summary.end());
}

SuiteResult consistency_suite(const encoder::WildModel& m) {
  SuiteResult res;
  auto& recs = res.report.records;
  res.summary.push_back(sizes(m));

  recs.push_back(record("model.c_prime", {m.c()}, encoder::is_prime(m.c())));
  if (m.L > 0) {
    const BigInt bound = BigInt(2 * m.L) * (2 * m.L);
    recs.push_back(record("model.c_bound", {m.c()}, m.c() > bound));
    recs.push_back(record("model.sequence", {BigInt(m.L)}, m.seq.z == encoder::squaring_sequence(m.L)));
  }
  bool residues_ok = true;
  for (const BigInt& z : m.seq.z) residues_ok = residues_ok && z > 0 && z < m.c();
  recs.push_back(record("model.residue_range", {}, residues_ok));

  const bool ordered = m.b() > 0 && m.b() < m.a();
  recs.push_back(record("model.order", {m.a(), m.b()}, ordered));
  recs.push_back(record("model.b_at_least_3", {m.b()}, m.b() >= 3));
  recs.push_back(record("model.length", {BigInt(static_cast<long>(m.cf.size()))}, m.cf.size() == m.seq.z.size()));
  if (ordered) {
    recs.push_back(record("model.cf_expand", {m.a(), m.b()}, contfrac::cf_expand(m.a(), m.b()) == m.cf));
  }
  // With a1 = 1 the literal gamma misses (u0, v0) and z0 is not encoded.
  if (m.cf.size() > 1) {
    recs.push_back(record("model.a1_at_least_2", {m.cf[1]}, !degenerate_zeroth(m.cf)));
  }
  const contfrac::CoprimePair value = contfrac::cf_value(m.cf);
  recs.push_back(record("model.cf_value", {value.a, value.b}, value == m.pair));

  // v_i mod c = z_i, and c divides no v_j for -1 <= j <= n.
  const std::ptrdiff_t n = m.table.n();
  for (std::ptrdiff_t i = 0; i <= n && static_cast<std::size_t>(i) < m.seq.z.size(); ++i) {
    if (floor_mod(m.table.v(i), m.c()) != m.seq.z[static_cast<std::size_t>(i)]) {
      recs.push_back(record("model.residue", pt({static_cast<long>(i)}), false));
    }
  }
  for (std::ptrdiff_t j = -1; j <= n; ++j) {
    if (floor_mod(m.table.v(j), m.c()) == 0) recs.push_back(record("model.nondivisible", pt({static_cast<long>(j)}), false));
  }
  recs.push_back(record("model.alpha", {m.alpha}, m.alpha == m.a() * m.c()));
  recs.push_back(record("model.delta", {m.delta}, m.delta == m.a() * m.b() * m.c() * m.c() + m.c()));
  return res;
}

SuiteResult mult_suite(const encoder::WildModel& m, const SuiteOptions& opts) {
  SuiteResult res;
  model::EquivalenceDomain dom;
  dom.product = true;
  dom.threads = opts.threads;
  dom.budget = opts.budget;
  res.report = model::equivalence_check(m, dom);
  const std::size_t semantic = res.report.records.size() / 2;

  std::size_t literal = 0;
  if (is_micro(m)) {
    std::vector<Point> pts;
    for (std::uint32_t x = 0; x <= m.L; ++x) {
      for (std::uint32_t y = 0; y <= m.L; ++y) pts.push_back({BigInt(x), BigInt(y), BigInt(x) * y});
    }
    literal = pts.size();
    std::vector<Comparison> cmps{
        {"mu.literal.product", pts, constant_true(),
         literal_formula(logic::build_mu_family().mu, {m.a(), m.b(), m.c()}, opts.budget)},
        {"mu2.literal.product", pts, constant_true(), literal_formula(logic::build_mu2(), {m.alpha, m.delta}, opts.budget)},
    };
    res.report.append(model::run_comparisons(cmps, opts.threads));
    res.summary.push_back("mult: " + std::to_string(literal) + " triples checked literally, " +
                          std::to_string(semantic) + " semantically");
  } else {
    res.summary.push_back("mult: " + std::to_string(semantic) +
                          " triples checked semantically; literal checks skipped (a exceeds " +
                          std::to_string(kLiteralLimit) + ")");
  }
  return res;
}

SuiteResult equiv_suite(const encoder::WildModel& m, const SuiteOptions& opts) {
  SuiteResult res;
  model::EquivalenceDomain dom;
  dom.product = true;
  dom.threads = opts.threads;
  dom.budget = opts.budget;
  if (is_micro(m)) {
    dom.literal_box = 1;
    dom.predicates = true;
  }
  res.report = model::equivalence_check(m, dom);
  res.summary.push_back("equiv: " + std::to_string(res.report.records.size()) + " points compared" +
                        (is_micro(m) ? "" : "; literal comparisons skipped (a exceeds " +
                                                std::to_string(kLiteralLimit) + ")"));
  return res;
}

SuiteResult two_scalar_suite(const encoder::WildModel& m, const SuiteOptions& opts) {
  SuiteResult res;
  auto& recs = res.report.records;
  const model::TwoScalarView view = model::TwoScalarView::of(m);
  const BigInt& a = m.a();
  const BigInt& b = m.b();
  const BigInt& c = m.c();

  const std::vector<BigInt> xs = sample_below(a, 1000);
  std::size_t gamma_bad = 0, beta_bad = 0;
  for (const BigInt& x : xs) {
    if (model::gamma_circ(view, x) != c * x) {
      ++gamma_bad;
      recs.push_back(record("ts.gamma_circ", {x}, false));
    }
    if (model::beta_circ(view, x) != b * c * x) {
      ++beta_bad;
      recs.push_back(record("ts.beta_circ", {x}, false));
    }
  }
  recs.push_back(record("ts.gamma_circ_below_a", {BigInt(static_cast<long>(xs.size()))}, gamma_bad == 0));
  recs.push_back(record("ts.beta_circ_below_a", {BigInt(static_cast<long>(xs.size()))}, beta_bad == 0));
  recs.push_back(record("ts.gamma_circ_at_a", {a}, model::gamma_circ(view, a) == 0));
  recs.push_back(record("ts.beta_circ_at_a", {a}, model::beta_circ(view, a) == a * b * c + 1));

  const model::Constants k = model::recover_constants(view);
  recs.push_back(record("ts.a1", {k.a1}, k.a1 == a));
  recs.push_back(record("ts.b1", {k.b1}, k.b1 == b));
  recs.push_back(record("ts.c1", {k.c1}, k.c1 == c));
  if (is_micro(m)) {
    recs.push_back(record("ts.a1_search", {a}, model::search_a1(view, opts.budget) == k.a1));
  }
  recs.push_back(record("ts.gamma_star_at_a", {a}, model::gamma_star(view, k, a) == m.alpha));
  recs.push_back(record("ts.beta_star_at_a", {a}, model::beta_star(view, k, a) == a * b * c));
  recs.push_back(record("ts.star_above_a", {a + 1},
                        model::gamma_star(view, k, a + 1) == 0 && model::beta_star(view, k, a + 1) == 0));

  const logic::Formula mu2 = logic::build_mu2();
  const logic::BoundednessReport br = logic::check_bounded(mu2, std::vector<BigInt>{m.alpha, m.delta});
  bool within = br.bounded && br.constant;
  for (const auto& e : br.entries) within = within && e.value && *e.value <= m.delta;
  recs.push_back(record("ts.mu2_bounded", {BigInt(static_cast<long>(br.entries.size()))}, within));
  const std::set<std::size_t> sig = logic::signature_check(mu2);
  recs.push_back(record("ts.mu2_signature", {}, sig == std::set<std::size_t>{logic::kAlpha, logic::kDelta}));

  res.summary.push_back("two-scalar: identities on " + std::to_string(xs.size()) + " points below a; " +
                        std::to_string(br.entries.size()) + " quantifier bounds inspected");
  return res;
}

SuiteResult cf_suite(const SuiteOptions&) {
  SuiteResult res;
  auto& recs = res.report.records;

  std::size_t table_pairs = 0, table_bad = 0;
  for (long a = 2; a <= 200; ++a) {
    for (long b = 1; b < a; ++b) {
      ++table_pairs;
      const BigInt A(a), B(b);
      const auto cf = contfrac::cf_expand(A, B);
      const auto t = contfrac::convergents(cf, contfrac::CoprimePair{A, B});
      const std::ptrdiff_t n = t.n();
      BigInt g;
      mpz_gcd(g.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
      bool ok = t.u(-2) == 1 && t.u(-1) == 0 && t.v(-2) == 0 && t.v(-1) == 1;
      ok = ok && t.r(n) == 0 && t.gcd() == g && t.u(n) * g == B && t.v(n) * g == A;
      for (std::ptrdiff_t i = -2; ok && i <= n; ++i) {
        const BigInt residual = A * t.u(i) - B * t.v(i);
        ok = (i % 2 == 0 ? residual : BigInt(-residual)) == t.r(i);
        if (i >= 0) {
          BigInt h;
          mpz_gcd(h.get_mpz_t(), t.u(i).get_mpz_t(), t.v(i).get_mpz_t());
          ok = ok && h == 1 && t.u(i) == t.u(i - 1) * cf[static_cast<std::size_t>(i)] + t.u(i - 2) &&
               t.v(i) == t.v(i - 1) * cf[static_cast<std::size_t>(i)] + t.v(i - 2);
        }
        if (i >= 1) ok = ok && t.u(i) >= t.u(i - 1) && t.v(i) > t.v(i - 1);
        if (i >= 2) ok = ok && t.u(i) > t.u(i - 1);
        if (i >= -1) ok = ok && t.r(i) < t.r(i - 1);
      }
      if (!ok) {
        ++table_bad;
        recs.push_back(record("cf.table", pt({a, b}), false));
      }
    }
  }
  recs.push_back(record("cf.table_all", pt({200}), table_bad == 0));
  res.summary.push_back("cf: table invariants on " + std::to_string(table_pairs) + " pairs with a <= 200");

  // With a1 = 1 the zeroth convergent (1, a0) loses to (1, a0 + 1) = (u1, v1),
  // so it is dropped from the convergent side of both comparisons.
  std::size_t best_pairs = 0, best_bad = 0, degenerate = 0;
  for (long a = 2; a <= 60; ++a) {
    for (long b = 1; b < a; ++b) {
      ++best_pairs;
      const BigInt A(a), B(b);
      const auto cf = contfrac::cf_expand(A, B);
      const auto t = contfrac::convergents(cf, contfrac::CoprimePair{A, B});
      auto conv = contfrac::convergent_pairs(t);
      const auto oracle = contfrac::best_approx_bruteforce(A, B);
      bool ok;
      if (contfrac::is_half_exception(A, B)) {
        ok = oracle.size() < conv.size() && std::includes(conv.begin(), conv.end(), oracle.begin(), oracle.end()) &&
             oracle.count(t.pair(t.n())) == 1;
      } else {
        ok = true;
        if (degenerate_zeroth(cf)) {
          ++degenerate;
          ok = oracle.count(t.pair(0)) == 0 && oracle.count(t.pair(1)) == 1;
          conv.erase(t.pair(0));
        }
        ok = ok && oracle == conv;
      }
      if (!ok) {
        ++best_bad;
        recs.push_back(record("cf.best_approx", pt({a, b}), false));
      }
    }
  }
  recs.push_back(record("cf.best_approx_all", pt({60}), best_bad == 0));
  res.summary.push_back("cf: brute-force best approximations on " + std::to_string(best_pairs) +
                        " pairs with a <= 60; " + std::to_string(degenerate) +
                        " with a1 = 1, where (1, a0) is a convergent but not a best approximation");

  std::size_t eq_pairs = 0, eq_bad = 0;
  for (long a = 2; a <= 40; ++a) {
    for (long b = 1; b < a; ++b) {
      const BigInt A(a), B(b);
      if (contfrac::is_half_exception(A, B)) continue;
      ++eq_pairs;
      const auto cf = contfrac::cf_expand(A, B);
      const auto t = contfrac::convergents(cf, contfrac::CoprimePair{A, B});
      const bool drop_zeroth = degenerate_zeroth(cf);
      bool ok = true;
      for (long u = 1; ok && u <= b; ++u) {
        for (long v = 0; ok && v <= a; ++v) {
          const BigInt U(u), V(v);
          const bool c0 = contfrac::is_bounded_best_pair(A, B, U, V);
          const bool c1 = contfrac::is_best_approx_pair(A, B, U, V);
          const bool c2 = contfrac::is_convergent_pair(t, U, V) && !(drop_zeroth && contfrac::UVPair{U, V} == t.pair(0));
          ok = c0 == c1 && c1 == c2;
        }
      }
      if (!ok) {
        ++eq_bad;
        recs.push_back(record("cf.conditions", pt({a, b}), false));
      }
    }
  }
  recs.push_back(record("cf.conditions_all", pt({40}), eq_bad == 0));
  res.summary.push_back("cf: equivalent best-approximation conditions on " + std::to_string(eq_pairs) +
                        " pairs with a <= 40");
  return res;
}

}  // namespace wildla::cli
