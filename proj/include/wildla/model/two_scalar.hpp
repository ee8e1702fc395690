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

#ifndef WILDLA_MODEL_TWO_SCALAR_HPP_
#define WILDLA_MODEL_TWO_SCALAR_HPP_

#include <cstdint>
#include <stdexcept>

#include "wildla/bigint.hpp"
#include "wildla/encoder.hpp"
#include "wildla/model/semantic.hpp"

// The structure with the two scalars alpha = a c and delta = a b c^2 + c,
// and the functions definable in it that stand in for a, b and c.
namespace wildla::model {

struct TwoScalarView {
  BigInt alpha;
  BigInt delta;

  static TwoScalarView of(const encoder::WildModel& model);
  friend bool operator==(const TwoScalarView&, const TwoScalarView&) = default;
};

// (delta x) mod alpha and (delta x) div alpha.
BigInt gamma_circ(const TwoScalarView& view, const BigInt& x);
BigInt beta_circ(const TwoScalarView& view, const BigInt& x);

struct Constants {
  BigInt a1;
  BigInt b1;
  BigInt c1;
  friend bool operator==(const Constants&, const Constants&) = default;
};

class SearchBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// a1 = alpha / gcd(alpha, delta), the least x > 0 with gamma_circ x = 0;
// c1 = gamma_circ 1; b1 = (beta_circ a1) div alpha.
Constants recover_constants(const TwoScalarView& view);
// a1 by scanning x = 1, 2, ... for gamma_circ x = 0.
BigInt search_a1(const TwoScalarView& view, std::uint64_t budget = 10'000'000);

// Piecewise functions replacing multiplication by b and c on [0, a1].
BigInt alpha_star(const TwoScalarView& view, const BigInt& x);
BigInt beta_star(const TwoScalarView& view, const Constants& k, const BigInt& x);
BigInt gamma_star(const TwoScalarView& view, const Constants& k, const BigInt& x);
BigInt beta_star(const TwoScalarView& view, const BigInt& x);
BigInt gamma_star(const TwoScalarView& view, const BigInt& x);

// Extensions of the formulas of mu' computed from the view alone: the
// convergents of alpha*1 / beta*1 restricted to u <= b1, v <= a1, signs from
// alpha* u - beta* v, and residues from solving gamma* m = w - z.
class TwoScalarSemantics {
 public:
  explicit TwoScalarSemantics(TwoScalarView view);

  const TwoScalarView& view() const { return view_; }
  const Constants& constants() const { return k_; }
  const PredicateSets& sets() const { return sets_; }

  // (z = w mod c)': z < c1 and w = z + gamma* m for some m <= w.
  bool mod_c(const BigInt& z, const BigInt& w) const;
  bool sigma(const BigInt& x, const BigInt& y) const { return graph_.sigma(x, y); }
  bool mu(const BigInt& x, const BigInt& y, const BigInt& z) const { return graph_.mu(x, y, z, k_.c1); }

 private:
  TwoScalarView view_;
  Constants k_;
  PredicateSets sets_;
  SquareGraph graph_;
};

bool mu2_eval(const TwoScalarView& view, const BigInt& x, const BigInt& y, const BigInt& z);

}  // namespace wildla::model

#endif  // WILDLA_MODEL_TWO_SCALAR_HPP_
