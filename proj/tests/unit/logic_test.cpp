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

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wildla/encoder.hpp"
#include "wildla/logic/ast.hpp"
#include "wildla/logic/builders.hpp"
#include "wildla/logic/eval.hpp"
#include "wildla/logic/parser.hpp"
#include "wildla/logic/transform.hpp"
#include "wildla/model/semantic.hpp"

using namespace wildla;
using namespace wildla::logic;

namespace {

using Env = std::map<std::string, BigInt>;

const std::vector<BigInt> kScalars{2, 3, 1};
const std::vector<std::string> kFree{"x", "y", "z"};

bool has_sugar(const Formula& f) {
  const auto& v = f.node().v;
  if (is_sugar(f.node())) return true;
  if (const auto* n = std::get_if<NotF>(&v)) return has_sugar(n->arg);
  if (const auto* b = std::get_if<BinaryF>(&v)) return has_sugar(b->lhs) || has_sugar(b->rhs);
  if (const auto* q = std::get_if<QuantF>(&v)) return has_sugar(q->body);
  return false;
}

// Small random formulas over x, y, z and the scalars 2, 3, 1.
class RandomFormulas {
 public:
  explicit RandomFormulas(std::uint64_t seed) : rng_(seed) {}

  Term closed() {
    const BigInt n(static_cast<long>(pick(4)));
    return pick(2) ? num(n) : scal(pick(3), num(n));
  }

  Term term(const std::vector<std::string>& vars, int depth) {
    switch (depth <= 0 ? pick(2) : pick(4)) {
      case 0:
        return var(vars[pick(vars.size())]);
      case 1:
        return num(BigInt(static_cast<long>(pick(4))));
      case 2:
        return add(term(vars, depth - 1), term(vars, depth - 1));
      default:
        return scal(pick(3), term(vars, depth - 1));
    }
  }

  Formula sugar(const std::vector<std::string>& vars) { return sugar_of(pick(5), vars); }

  Formula sugar_of(std::size_t kind, const std::vector<std::string>& vars) {
    auto t = [&] { return term(vars, 1); };
    switch (kind) {
      case 0:
        return absdiff_lt(t(), t(), t(), t());
      case 1:
        return absdiff_le(t(), t(), t(), t());
      case 2:
        return eq_mod(t(), t(), add(closed(), num(1)));
      case 3:
        return eq_div(t(), t(), add(closed(), num(1)));
      default:
        return neq_pair(t(), t(), t(), t());
    }
  }

  Formula formula(std::vector<std::string> vars, int depth) {
    if (depth <= 0) {
      switch (pick(3)) {
        case 0:
          return le(term(vars, 1), term(vars, 1));
        case 1:
          return eq(term(vars, 1), term(vars, 1));
        default:
          return sugar(vars);
      }
    }
    switch (pick(6)) {
      case 0:
        return lnot(formula(vars, depth - 1));
      case 1:
        return land(formula(vars, depth - 1), formula(vars, depth - 1));
      case 2:
        return lor(formula(vars, depth - 1), formula(vars, depth - 1));
      case 3:
        return limp(formula(vars, depth - 1), formula(vars, depth - 1));
      default: {
        const std::string v = "q" + std::to_string(counter_++);
        Term bound = pick(2) ? num(BigInt(static_cast<long>(pick(5)))) : term(vars, 1);
        const auto kind = pick(2) ? QuantKind::exists : QuantKind::forall;
        const int lower = static_cast<int>(pick(2));
        const bool inclusive = pick(2);
        vars.push_back(v);
        return quant(kind, v, lower, bound, inclusive, formula(vars, depth - 1));
      }
    }
  }

  Env valuation() {
    Env env;
    for (const auto& v : kFree) env[v] = BigInt(static_cast<long>(pick(5)));
    return env;
  }

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

 private:
  std::mt19937_64 rng_;
  unsigned counter_ = 0;
};

bool eval_with(const Formula& f, const Env& env, const EvalOptions& opts) {
  Evaluator ev(f, kScalars, opts);
  return ev.eval(env);
}

encoder::WildModel m1() { return encoder::build_squaring_model(1); }

std::vector<BigInt> abc(const encoder::WildModel& m) { return {m.a(), m.b(), m.c()}; }

}  // namespace

TEST_CASE("parser examples") {
  CHECK(parse_formula("(le (+ x 1) (s 0 y))") == le(add(var("x"), num(1)), scal(0, var("y"))));
  CHECK(parse_formula("  (le(+ x (c 1))\n(s 0 y) )") == le(add(var("x"), num(1)), scal(0, var("y"))));
  const Formula q = parse_formula("(exists x (s 1 (c 1)) (eq x x))");
  CHECK(q == exists("x", 0, scal(1, num(1)), false, eq(var("x"), var("x"))));
  CHECK(parse_formula("(forall u' 1 u le (le u' u))") == forall("u'", 1, var("u"), true, le(var("u'"), var("u"))));
  CHECK(print(q) == "(exists x 0 (s 1 (c 1)) lt (eq x x))");
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_formula("(le x"), ParseError);
  CHECK_THROWS_AS(parse_formula("(foo x y)"), ParseError);
  CHECK_THROWS_AS(parse_formula("(exists x 2 y lt (eq x x))"), ParseError);
  CHECK_THROWS_AS(parse_formula("(le x y) extra"), ParseError);
  try {
    parse_formula("(le x (+ y))");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.offset() > 0);
  }
}

TEST_CASE("parser round trip on every builtin and random formulas") {
  for (const std::string& name : builtin_formula_names()) {
    const Formula f = builtin_formula(name);
    const std::string text = print(f);
    CHECK(parse_formula(text) == f);
    CHECK(print(parse_formula(text)) == text);
    const Formula g = expand_sugar(f);
    CHECK(parse_formula(print(g)) == g);
  }
  RandomFormulas gen(11);
  for (int i = 0; i < 300; ++i) {
    const Formula f = gen.formula(kFree, 3);
    REQUIRE(parse_formula(print(f)) == f);
  }
}

TEST_CASE("expand_sugar renders the sugar forms") {
  const Formula m = expand_sugar(eq_mod(var("z"), var("w"), scal(2, num(1))));
  CHECK(m == land(lt(var("z"), scal(2, num(1))),
                  exists("m", 0, var("w"), true, eq(var("w"), add(var("z"), scal(2, var("m")))))));
  const Formula d = expand_sugar(eq_div(var("w"), var("u"), scal(0, num(1))));
  CHECK(d == land(le(scal(0, var("w")), var("u")), le(add(var("u"), num(1)), scal(0, add(var("w"), num(1))))));
  const Formula ad = absdiff_lt(num(5), num(6), num(0), num(100));
  CHECK(eval_literal(ad, {{}, {}}));
  CHECK(eval_literal(expand_sugar(ad), {{}, {}}));
  CHECK_FALSE(has_sugar(expand_sugar(build_mu2())));
  CHECK(expand_sugar(le(var("x"), var("y"))) == le(var("x"), var("y")));
}

TEST_CASE("sugar soundness on 500 random valuations per sugar kind") {
  RandomFormulas gen(3);
  for (int kind = 0; kind < 5; ++kind) {
    for (int done = 0; done < 500; ++done) {
      const Formula f = gen.sugar_of(static_cast<std::size_t>(kind), kFree);
      const Formula g = expand_sugar(f);
      REQUIRE_FALSE(has_sugar(g));
      const Env env = gen.valuation();
      REQUIRE(eval_with(f, env, EvalOptions::naive()) == eval_with(g, env, EvalOptions::naive()));
      REQUIRE(eval_with(f, env, {}) == eval_with(g, env, {}));
    }
  }
  for (int i = 0; i < 300; ++i) {
    const Formula f = gen.formula(kFree, 3);
    const Env env = gen.valuation();
    REQUIRE(eval_with(f, env, EvalOptions::naive()) == eval_with(expand_sugar(f), env, EvalOptions::naive()));
  }
}

TEST_CASE("evaluation order does not change results") {
  RandomFormulas gen(5);
  for (int i = 0; i < 100; ++i) {
    const Formula f = gen.formula(kFree, 4);
    const Env env = gen.valuation();
    EvalOptions shuffled = EvalOptions::naive();
    shuffled.shuffle_seed = 1000 + i;
    REQUIRE(eval_with(f, env, shuffled) == eval_with(f, env, EvalOptions::naive()));
  }
}

TEST_CASE("optimized evaluation agrees with naive evaluation") {
  RandomFormulas gen(9);
  for (int i = 0; i < 400; ++i) {
    const Formula f = gen.formula(kFree, 4);
    EvalOptions fast;
    Evaluator ev(f, kScalars, fast);
    for (int j = 0; j < 5; ++j) {
      const Env env = gen.valuation();
      REQUIRE(ev.eval(env) == eval_with(f, env, EvalOptions::naive()));
    }
  }
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    EvalOptions opts;
    opts.shuffle_seed = seed;
    Evaluator ev(build_mu_family().mu, abc(m1()), opts);
    CHECK(ev.eval({{"x", 1}, {"y", 1}, {"z", 1}}));
    CHECK_FALSE(ev.eval({{"x", 1}, {"y", 1}, {"z", 0}}));
  }
}

TEST_CASE("naive evaluation of the small builtins matches the optimized evaluator") {
  const auto m = m1();
  const MuFamily fam = build_mu_family();
  Evaluator fast(fam.V, abc(m));
  Evaluator slow(fam.V, abc(m), EvalOptions::naive());
  for (long v = 0; v <= 34; ++v) REQUIRE(fast.eval({{"v", v}}) == slow.eval({{"v", v}}));
}

TEST_CASE("budget and valuation errors") {
  Evaluator ev(build_mu_family().mu, abc(m1()), EvalOptions::naive(1000));
  try {
    ev.eval({{"x", 1}, {"y", 1}, {"z", 1}});
    FAIL("budget not enforced");
  } catch (const BudgetExceeded& e) {
    CHECK(e.budget() == 1000);
    CHECK_FALSE(e.var().empty());
  }
  Evaluator v(build_mu_family().V, abc(m1()));
  CHECK_THROWS_AS(v.eval({}), EvalError);
  CHECK_THROWS_AS(v.eval({{"v", -1}}), EvalError);
  CHECK_THROWS_AS(Evaluator(le(scal(3, var("x")), var("x")), {1, 2, 3}), EvalError);
  CHECK(v.free_variables() == std::vector<std::string>{"v"});
}

TEST_CASE("literal builtins on the L=1 model") {
  const auto m = m1();
  const MuFamily fam = build_mu_family();
  CHECK(eval_literal(fam.gamma, {{{"u", 29}, {"v", 34}}, abc(m)}));
  CHECK(eval_literal(fam.gamma, {{{"u", 5}, {"v", 6}}, abc(m)}));
  CHECK_FALSE(eval_literal(fam.gamma, {{{"u", 5}, {"v", 7}}, abc(m)}));
  std::set<long> V, V0, V1;
  Evaluator ev(fam.V, abc(m)), ev0(fam.V0, abc(m)), ev1(fam.V1, abc(m));
  for (long v = 0; v <= 34; ++v) {
    if (ev.eval({{"v", v}})) V.insert(v);
    if (ev0.eval({{"v", v}})) V0.insert(v);
    if (ev1.eval({{"v", v}})) V1.insert(v);
  }
  CHECK(V == std::set<long>{1, 6, 7, 34});
  CHECK(V0 == std::set<long>{1, 7});
  CHECK(V1 == std::set<long>{6, 34});
  CHECK(eval_literal(fam.sigma, {{{"x", 2}, {"y", 4}}, abc(m)}));
  CHECK_FALSE(eval_literal(fam.sigma, {{{"x", 2}, {"y", 1}}, abc(m)}));
  CHECK(eval_literal(fam.sigma, {{{"x", 0}, {"y", 0}}, abc(m)}));
  CHECK(eval_literal(fam.mu, {{{"x", 1}, {"y", 1}, {"z", 1}}, abc(m)}));
  CHECK_FALSE(eval_literal(fam.mu, {{{"x", 1}, {"y", 1}, {"z", 2}}, abc(m)}));
  CHECK(eval_literal(fam.pi, {{{"v", 1}, {"v'", 6}}, abc(m)}));
  CHECK_FALSE(eval_literal(fam.pi, {{{"v", 7}, {"v'", 6}}, abc(m)}));
  const MuFamily raw = build_mu_family({{}, false});
  CHECK(eval_literal(raw.pi, {{{"v", 7}, {"v'", 6}}, abc(m)}));
  CHECK(eval_literal(raw.sigma, {{{"x", 2}, {"y", 1}}, abc(m)}));
}

TEST_CASE("literal mu2 on the L=1 model") {
  const auto m = m1();
  Evaluator ev(build_mu2(), {m.alpha, m.delta});
  CHECK(ev.eval({{"x", 1}, {"y", 1}, {"z", 1}}));
  CHECK_FALSE(ev.eval({{"x", 1}, {"y", 1}, {"z", 2}}));
  CHECK(ev.eval({{"x", 0}, {"y", 1}, {"z", 0}}));
  const MuFamily fam = build_mu_family();
  Evaluator mu(fam.mu, abc(m));
  for (long x = 0; x <= 1; ++x) {
    for (long y = 0; y <= 1; ++y) {
      for (long z = 0; z <= 1; ++z) {
        const Env env{{"x", x}, {"y", y}, {"z", z}};
        REQUIRE(ev.eval(env) == mu.eval(env));
        REQUIRE(ev.eval(env) == (z == x * y));
      }
    }
  }
}

TEST_CASE("two-scalar ingredients on the L=1 model") {
  const auto m = m1();
  const TwoScalarFormulas f = build_two_scalar_formulas();
  const std::vector<BigInt> ad{m.alpha, m.delta};
  CHECK(eval_literal(f.gamma_circ, {{{"t", 1}, {"g", 5}}, ad}));
  CHECK(eval_literal(f.beta_circ, {{{"t", 34}, {"h", 4931}}, ad}));
  CHECK(eval_literal(f.a1, {{{"A", 34}}, ad}));
  CHECK_FALSE(eval_literal(f.a1, {{{"A", 17}}, ad}));
  CHECK(eval_literal(f.b1, {{{"A", 34}, {"B", 29}}, ad}));
  CHECK(eval_literal(f.c1, {{{"C", 5}}, ad}));
  CHECK(eval_literal(f.gamma_star, {{{"A", 34}, {"t", 34}, {"g", 170}}, ad}));
  CHECK(eval_literal(f.gamma_star, {{{"A", 34}, {"t", 3}, {"g", 15}}, ad}));
  CHECK(eval_literal(f.gamma_star, {{{"A", 34}, {"t", 35}, {"g", 0}}, ad}));
  CHECK(eval_literal(f.beta_star, {{{"A", 34}, {"t", 34}, {"h", 4930}}, ad}));
  CHECK(eval_literal(f.beta_star, {{{"A", 34}, {"t", 2}, {"h", 290}}, ad}));
  CHECK(eval_literal(f.beta_star, {{{"A", 34}, {"t", 35}, {"h", 0}}, ad}));
}

TEST_CASE("boundedness reports") {
  const auto m = m1();
  const BoundednessReport r = check_bounded(build_mu2(), std::vector<BigInt>{m.alpha, m.delta});
  CHECK(r.bounded);
  CHECK(r.constant);
  CHECK_FALSE(r.entries.empty());
  for (const auto& e : r.entries) {
    REQUIRE(e.value);
    CHECK(*e.value <= m.delta);
    CHECK(e.closed);
  }
  const BoundednessReport g = check_bounded(build_mu_family().gamma);
  CHECK_FALSE(g.bounded);
  CHECK_FALSE(g.constant);
  const BoundednessReport atom = check_bounded(le(var("x"), var("y")));
  CHECK(atom.bounded);
  CHECK(atom.entries.empty());
  const BoundednessReport mu = check_bounded(build_mu_family().mu);
  CHECK(mu.bounded);
  CHECK_FALSE(mu.constant);
}

TEST_CASE("signatures") {
  CHECK(signature_check(build_mu2()) == std::set<std::size_t>{kAlpha, kDelta});
  CHECK(signature_check(build_mu_family().mu) == std::set<std::size_t>{0, 1, 2});
  CHECK(signature_check(build_mu_family().V) == std::set<std::size_t>{0, 1});
  CHECK(signature_check(le(var("x"), var("y"))).empty());
}

TEST_CASE("builder formulas are parameter free") {
  const MuFamily fam = build_mu_family();
  CHECK(free_vars(fam.gamma) == std::set<std::string>{"u", "v"});
  CHECK(free_vars(fam.V) == std::set<std::string>{"v"});
  CHECK(free_vars(fam.pi) == std::set<std::string>{"v", "v'"});
  CHECK(free_vars(fam.sigma) == std::set<std::string>{"x", "y"});
  CHECK(free_vars(fam.mu) == std::set<std::string>{"x", "y", "z"});
  CHECK(free_vars(build_mu2()) == std::set<std::string>{"x", "y", "z"});
  CHECK(builtin_scalar_count("mu2") == 2);
  CHECK(builtin_scalar_count("mu") == 3);
  CHECK_THROWS_AS(builtin_formula("nope"), std::invalid_argument);
}

TEST_CASE("homogeneity in a and b") {
  // Bounds read (a, b, c); bodies read (a c, b c, c).
  ScalarLayout hom;
  hom.body_a = 3;
  hom.body_b = 4;
  hom.body_c = 5;
  const MuFamily plain = build_mu_family();
  const MuFamily scaled = build_mu_family({hom, true});
  const std::vector<encoder::WildModel> models{
      m1(), encoder::model_from_encoding(encoder::encode_sequence(encoder::TargetSequence{{1, 2, 2}, 3}))};
  for (const auto& m : models) {
    const std::vector<BigInt> s6{m.a(), m.b(), m.c(), m.a() * m.c(), m.b() * m.c(), m.c()};
    const long a = m.a().get_si(), b = m.b().get_si();
    std::vector<std::pair<Formula, Formula>> unary{{plain.V, scaled.V}, {plain.V0, scaled.V0}, {plain.V1, scaled.V1}};
    for (const auto& [f, g] : unary) {
      Evaluator e1(f, abc(m)), e2(g, s6);
      for (long v = 0; v <= a; ++v) REQUIRE(e1.eval({{"v", v}}) == e2.eval({{"v", v}}));
    }
    Evaluator g1(plain.gamma, abc(m)), g2(scaled.gamma, s6);
    for (long u = 0; u <= b; ++u) {
      for (long v = 0; v <= a; ++v) REQUIRE(g1.eval({{"u", u}, {"v", v}}) == g2.eval({{"u", u}, {"v", v}}));
    }
    Evaluator p1(plain.pi, abc(m)), p2(scaled.pi, s6);
    for (long v = 0; v <= a; ++v) {
      for (long w = 0; w <= a; ++w) REQUIRE(p1.eval({{"v", v}, {"v'", w}}) == p2.eval({{"v", v}, {"v'", w}}));
    }
  }
}
