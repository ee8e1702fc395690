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

#include "wildla/logic/builders.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "wildla/logic/transform.hpp"

namespace wildla::logic {

namespace {

using Cont = std::function<Formula(const Term&)>;

class Names {
 public:
  explicit Names(std::set<std::string> reserved) : used_(std::move(reserved)) {}

  std::string fresh(const std::string& base) {
    if (used_.insert(base).second) return base;
    for (unsigned i = 2;; ++i) {
      std::string name = base + std::to_string(i);
      if (used_.insert(name).second) return name;
    }
  }

 private:
  std::set<std::string> used_;
};

// How the three scalars a, b, c are spoken about: as range bounds, and as
// multiplications passed to a continuation (which lets a multiplication be
// a defined function introduced by a quantifier rather than a term).
struct Vocabulary {
  Term a_bound;
  Term b_bound;
  Term c_bound;
  std::function<Formula(const Term&, const Cont&)> mul_a;
  std::function<Formula(const Term&, const Cont&)> mul_b;
  // z = w mod c.
  std::function<Formula(const Term&, const Term&)> mod_c;
};

Vocabulary three_scalar_vocabulary(const ScalarLayout& layout) {
  Vocabulary voc{
      scal(layout.bound_a, num(1)),
      scal(layout.bound_b, num(1)),
      scal(layout.bound_c, num(1)),
      [body = layout.body_a](const Term& t, const Cont& k) { return k(scal(body, t)); },
      [body = layout.body_b](const Term& t, const Cont& k) { return k(scal(body, t)); },
      [body = layout.body_c](const Term& z, const Term& w) { return eq_mod(z, w, scal(body, num(1))); },
  };
  return voc;
}

class FamilyBuilder {
 public:
  FamilyBuilder(Vocabulary voc, Names& names, bool correct_pi)
      : voc_(std::move(voc)), names_(names), correct_pi_(correct_pi) {}

  // (forall u', 0 < u' <= u)(forall v', 0 <= v' <= a)
  //   ((u, v) != (u', v') -> |au - bv| < |au' - bv'|)
  Formula gamma(const Term& u, const Term& v) {
    return voc_.mul_a(u, [&](const Term& au) {
      return voc_.mul_b(v, [&](const Term& bv) {
        const std::string u2 = names_.fresh("u'");
        const std::string v2 = names_.fresh("v'");
        const Term U2 = var(u2);
        const Term V2 = var(v2);
        Formula cmp = voc_.mul_a(U2, [&](const Term& au2) {
          return voc_.mul_b(V2, [&](const Term& bv2) { return absdiff_lt(au, bv, au2, bv2); });
        });
        return forall(u2, 1, u, true, forall(v2, 0, voc_.a_bound, true, limp(neq_pair(u, v, U2, V2), cmp)));
      });
    });
  }

  Formula V(const Term& v) {
    const std::string u = names_.fresh("u");
    return exists(u, 1, voc_.b_bound, true, gamma(var(u), v));
  }

  // au - bv > 0 when positive, au - bv <= 0 otherwise.
  Formula signed_V(const Term& v, bool positive) {
    const std::string u = names_.fresh("u");
    const Term U = var(u);
    Formula g = gamma(U, v);
    Formula sign = voc_.mul_a(U, [&](const Term& au) {
      return voc_.mul_b(v, [&](const Term& bv) { return positive ? lt(bv, au) : le(au, bv); });
    });
    return exists(u, 1, voc_.b_bound, true, land(g, sign));
  }

  Formula pi(const Term& v, const Term& v2) {
    const std::string w = names_.fresh("w");
    const Term W = var(w);
    std::vector<Formula> parts{signed_V(v, true), signed_V(v2, false)};
    if (correct_pi_) parts.push_back(lt(v, v2));
    parts.push_back(lnot(exists(w, 0, voc_.a_bound, true, land({lt(v, W), lt(W, v2), V(W)}))));
    return land(std::move(parts));
  }

  // x = y = 0 or (exists v, v')(0 <= v, v' <= a & pi(v, v') & x = v mod c & y = v' mod c)
  Formula sigma(const Term& x, const Term& y) {
    const std::string v = names_.fresh("v");
    const std::string v2 = names_.fresh("v'");
    const Term V1 = var(v);
    const Term V2 = var(v2);
    Formula body = land({pi(V1, V2), voc_.mod_c(x, V1), voc_.mod_c(y, V2)});
    return lor(land(eq(x, num(0)), eq(y, num(0))),
               exists(v, 0, voc_.a_bound, true, exists(v2, 0, voc_.a_bound, true, body)));
  }

  // (exists p, q, r)(0 <= p, q, r < c & sigma(x, p) & sigma(y, q)
  //   & sigma(x + y, r) & 2z + p + q = r)
  Formula mu(const Term& x, const Term& y, const Term& z) {
    const std::string p = names_.fresh("p");
    const std::string q = names_.fresh("q");
    const std::string r = names_.fresh("r");
    const Term P = var(p);
    const Term Q = var(q);
    const Term R = var(r);
    Formula body = land({sigma(x, P), sigma(y, Q), sigma(add(x, y), R), eq(add({z, z, P, Q}), R)});
    return exists(p, 0, voc_.c_bound, false, exists(q, 0, voc_.c_bound, false, exists(r, 0, voc_.c_bound, false, body)));
  }

 private:
  Vocabulary voc_;
  Names& names_;
  bool correct_pi_;
};

// Defined functions of the two-scalar structure.
class TwoScalarBuilder {
 public:
  explicit TwoScalarBuilder(Names& names) : names_(names) {}

  Term alpha(const Term& t) const { return scal(kAlpha, t); }
  Term delta(const Term& t) const { return scal(kDelta, t); }
  Term alpha1() const { return alpha(num(1)); }
  Term delta1() const { return delta(num(1)); }

  // g = (delta t) mod alpha, spelled out with its witness quantifier.
  Formula gamma_circ(const Term& t, const Term& g) {
    const std::string m = names_.fresh("m");
    return land(lt(g, alpha1()), exists(m, 0, delta(t), true, eq(delta(t), add(g, alpha(var(m))))));
  }

  // h = (delta t) div alpha.
  Formula beta_circ(const Term& t, const Term& h) { return eq_div(h, delta(t), alpha1()); }

  Formula a1(const Term& A) {
    const std::string y = names_.fresh("y");
    const Term Y = var(y);
    return land({le(num(1), A), gamma_circ(A, num(0)),
                 forall(y, 0, A, false, limp(le(num(1), Y), lnot(gamma_circ(Y, num(0)))))});
  }

  Formula c1(const Term& C) { return gamma_circ(num(1), C); }

  // B = (beta_circ A) div alpha, with the intermediate value W.
  Formula b1_with(const Term& A, const Term& B, const Term& W) {
    return land(beta_circ(A, W), eq_div(B, W, alpha1()));
  }

  Formula gamma_star(const Term& A, const Term& t, const Term& g) {
    return lor({land(lt(t, A), gamma_circ(t, g)), land(eq(t, A), eq(g, alpha1())), land(lt(A, t), eq(g, num(0)))});
  }

  Formula beta_star(const Term& A, const Term& t, const Term& h) {
    return lor({land(lt(t, A), beta_circ(t, h)), land(eq(t, A), beta_circ(t, add(h, num(1)))),
                land(lt(A, t), eq(h, num(0)))});
  }

  // Vocabulary of mu': ranges a1, b1, c1 held in A, B, C; multiplication by
  // a, b, c replaced with alpha*, beta*, gamma*.
  Vocabulary vocabulary(const Term& A, const Term& B, const Term& C) {
    Vocabulary voc{A, B, C, nullptr, nullptr, nullptr};
    voc.mul_a = [this](const Term& t, const Cont& k) { return k(alpha(t)); };
    voc.mul_b = [this, A](const Term& t, const Cont& k) {
      const std::string h = names_.fresh("h");
      return exists(h, 0, delta1(), false, land(beta_star(A, t, var(h)), k(var(h))));
    };
    voc.mod_c = [this, A, C](const Term& z, const Term& w) {
      const std::string m = names_.fresh("m");
      const std::string g = names_.fresh("g");
      const Term G = var(g);
      Formula cm = exists(g, 0, delta1(), false, land(gamma_star(A, var(m), G), eq(w, add(z, G))));
      return land(lt(z, C), exists(m, 0, w, true, cm));
    };
    return voc;
  }

 private:
  Names& names_;
};

std::set<std::string> reserved(std::initializer_list<const char*> names) {
  std::set<std::string> out;
  for (const char* n : names) out.insert(n);
  return out;
}

}  // namespace

MuFamily build_mu_family(const FamilyOptions& options) {
  const Vocabulary voc = three_scalar_vocabulary(options.layout);
  const Term u = var("u"), v = var("v"), v2 = var("v'"), x = var("x"), y = var("y"), z = var("z");
  auto make = [&](std::initializer_list<const char*> free, auto&& fn) {
    Names names(reserved(free));
    FamilyBuilder b(voc, names, options.correct_pi);
    return fn(b);
  };
  MuFamily fam{
      make({"u", "v"}, [&](FamilyBuilder& b) { return b.gamma(u, v); }),
      make({"v"}, [&](FamilyBuilder& b) { return b.V(v); }),
      make({"v"}, [&](FamilyBuilder& b) { return b.signed_V(v, true); }),
      make({"v"}, [&](FamilyBuilder& b) { return b.signed_V(v, false); }),
      make({"v", "v'"}, [&](FamilyBuilder& b) { return b.pi(v, v2); }),
      make({"x", "y"}, [&](FamilyBuilder& b) { return b.sigma(x, y); }),
      make({"x", "y", "z"}, [&](FamilyBuilder& b) { return b.mu(x, y, z); }),
  };
  return fam;
}

Formula build_mu2(const Mu2Options& options) {
  Names names(reserved({"x", "y", "z"}));
  TwoScalarBuilder ts(names);
  const std::string a = names.fresh("A");
  const std::string w = names.fresh("W");
  const std::string b = names.fresh("B");
  const std::string c = names.fresh("C");
  const Term A = var(a), W = var(w), B = var(b), C = var(c);

  FamilyBuilder fam(ts.vocabulary(A, B, C), names, options.correct_pi);
  Formula mu_prime = fam.mu(var("x"), var("y"), var("z"));

  const Term d1 = ts.delta1();
  Formula f = exists(
      a, 0, d1, false,
      land(ts.a1(A),
           exists(w, 0, d1, false,
                  land(ts.beta_circ(A, W),
                       exists(b, 0, d1, false,
                              land(eq_div(B, W, ts.alpha1()), exists(c, 0, d1, false, land(ts.c1(C), mu_prime))))))));
  return options.normalize ? normalize_bounds(f, d1) : f;
}

TwoScalarFormulas build_two_scalar_formulas() {
  const Term A = var("A"), B = var("B"), C = var("C"), t = var("t"), g = var("g"), h = var("h");
  auto build = [](std::initializer_list<const char*> free, auto&& fn) {
    Names names(reserved(free));
    TwoScalarBuilder ts(names);
    return fn(ts, names);
  };
  TwoScalarFormulas out{
      build({"t", "g"}, [&](TwoScalarBuilder& ts, Names&) { return ts.gamma_circ(t, g); }),
      build({"t", "h"}, [&](TwoScalarBuilder& ts, Names&) { return ts.beta_circ(t, h); }),
      build({"A"}, [&](TwoScalarBuilder& ts, Names&) { return ts.a1(A); }),
      build({"A", "B"},
            [&](TwoScalarBuilder& ts, Names& names) {
              const std::string w = names.fresh("W");
              return exists(w, 0, ts.delta1(), false, ts.b1_with(A, B, var(w)));
            }),
      build({"C"}, [&](TwoScalarBuilder& ts, Names&) { return ts.c1(C); }),
      build({"A", "t", "g"}, [&](TwoScalarBuilder& ts, Names&) { return ts.gamma_star(A, t, g); }),
      build({"A", "t", "h"}, [&](TwoScalarBuilder& ts, Names&) { return ts.beta_star(A, t, h); }),
  };
  return out;
}

const std::vector<std::string>& builtin_formula_names() {
  static const std::vector<std::string> names{"gamma", "V",     "V0", "V1", "pi", "pi-uncorrected",
                                              "sigma", "mu",    "mu2"};
  return names;
}

Formula builtin_formula(const std::string& name) {
  if (name == "mu2") return build_mu2();
  if (name == "pi-uncorrected") {
    FamilyOptions opts;
    opts.correct_pi = false;
    return build_mu_family(opts).pi;
  }
  const MuFamily fam = build_mu_family();
  if (name == "gamma") return fam.gamma;
  if (name == "V") return fam.V;
  if (name == "V0") return fam.V0;
  if (name == "V1") return fam.V1;
  if (name == "pi") return fam.pi;
  if (name == "sigma") return fam.sigma;
  if (name == "mu") return fam.mu;
  throw std::invalid_argument("unknown builtin formula '" + name + "'");
}

std::size_t builtin_scalar_count(const std::string& name) {
  const auto& names = builtin_formula_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw std::invalid_argument("unknown builtin formula '" + name + "'");
  }
  return name == "mu2" ? 2 : 3;
}

}  // namespace wildla::logic
