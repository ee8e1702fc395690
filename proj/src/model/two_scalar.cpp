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

#include "wildla/model/two_scalar.hpp"

#include <algorithm>

#include "wildla/contfrac.hpp"

namespace wildla::model {

TwoScalarView TwoScalarView::of(const encoder::WildModel& model) { return {model.alpha, model.delta}; }

BigInt gamma_circ(const TwoScalarView& view, const BigInt& x) { return floor_mod(view.delta * x, view.alpha); }

BigInt beta_circ(const TwoScalarView& view, const BigInt& x) { return floor_div(view.delta * x, view.alpha); }

Constants recover_constants(const TwoScalarView& view) {
  Constants k;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), view.alpha.get_mpz_t(), view.delta.get_mpz_t());
  k.a1 = view.alpha / g;
  k.c1 = gamma_circ(view, 1);
  k.b1 = floor_div(beta_circ(view, k.a1), view.alpha);
  return k;
}

BigInt search_a1(const TwoScalarView& view, std::uint64_t budget) {
  BigInt x = 1;
  for (std::uint64_t steps = 0; steps < budget; ++steps, ++x) {
    if (gamma_circ(view, x) == 0) return x;
  }
  throw SearchBudgetExceeded("search for a1 exceeded " + std::to_string(budget) + " steps");
}

BigInt alpha_star(const TwoScalarView& view, const BigInt& x) { return view.alpha * x; }

BigInt beta_star(const TwoScalarView& view, const Constants& k, const BigInt& x) {
  if (x < k.a1) return beta_circ(view, x);
  if (x == k.a1) return beta_circ(view, x) - 1;
  return 0;
}

BigInt gamma_star(const TwoScalarView& view, const Constants& k, const BigInt& x) {
  if (x < k.a1) return gamma_circ(view, x);
  if (x == k.a1) return view.alpha;
  return 0;
}

BigInt beta_star(const TwoScalarView& view, const BigInt& x) { return beta_star(view, recover_constants(view), x); }

BigInt gamma_star(const TwoScalarView& view, const BigInt& x) { return gamma_star(view, recover_constants(view), x); }

TwoScalarSemantics::TwoScalarSemantics(TwoScalarView view) : view_(std::move(view)), k_(recover_constants(view_)) {
  const BigInt A = alpha_star(view_, 1);
  const BigInt B = beta_star(view_, k_, 1);
  const contfrac::ConvergentTable table =
      contfrac::convergents(contfrac::cf_expand(A, B), contfrac::CoprimePair{A, B});
  std::vector<bool> positive;
  for (std::ptrdiff_t i = 0; i <= table.n(); ++i) {
    const BigInt& u = table.u(i);
    const BigInt& v = table.v(i);
    if (u < 1 || u > k_.b1 || v > k_.a1) continue;
    const bool pos = alpha_star(view_, u) > beta_star(view_, k_, v);
    sets_.V.push_back(v);
    positive.push_back(pos);
    (pos ? sets_.V0 : sets_.V1).push_back(v);
  }
  for (std::size_t i = 0; i + 1 < sets_.V.size(); ++i) {
    if (!positive[i] || positive[i + 1]) continue;
    const BigInt& v = sets_.V[i];
    const BigInt& v2 = sets_.V[i + 1];
    sets_.pairs.emplace_back(v, v2);
    const BigInt x = v % k_.c1;
    const BigInt y = v2 % k_.c1;
    if (mod_c(x, v) && mod_c(y, v2)) graph_.add(x, y);
  }
}

bool TwoScalarSemantics::mod_c(const BigInt& z, const BigInt& w) const {
  if (z < 0 || z >= k_.c1 || w < z) return false;
  const BigInt d = w - z;
  if (d == 0) return true;
  if (d == view_.alpha && k_.a1 <= w) return true;
  if (d % k_.c1 != 0) return false;
  const BigInt m = d / k_.c1;
  return m <= w && m < k_.a1 && gamma_star(view_, k_, m) == d;
}

bool mu2_eval(const TwoScalarView& view, const BigInt& x, const BigInt& y, const BigInt& z) {
  return TwoScalarSemantics(view).mu(x, y, z);
}

}  // namespace wildla::model
