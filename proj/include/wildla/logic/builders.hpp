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

#ifndef WILDLA_LOGIC_BUILDERS_HPP_
#define WILDLA_LOGIC_BUILDERS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "wildla/logic/ast.hpp"

// Parameter-free formulas defining squaring and multiplication in the wild
// model, first over three scalars (a, b, c) and then over two (alpha, delta).
//
// Free variables: gamma(u, v); V, V0, V1 (v); pi(v, v'); sigma(x, y);
// mu and mu2 (x, y, z). Bound variables are distinct from each other and
// from the free ones.
namespace wildla::logic {

// Scalar indices used by the three-scalar formulas. Quantifier ranges read
// the bound_* scalars, everything else the body_* scalars; the default uses
// the same three symbols for both.
struct ScalarLayout {
  std::size_t bound_a = 0;
  std::size_t bound_b = 1;
  std::size_t bound_c = 2;
  std::size_t body_a = 0;
  std::size_t body_b = 1;
  std::size_t body_c = 2;
};

struct FamilyOptions {
  ScalarLayout layout;
  // Adds the conjunct v < v' to pi. Without it pi(v, v') holds vacuously
  // whenever v >= v' and still satisfies V0(v) and V1(v').
  bool correct_pi = true;
};

struct MuFamily {
  Formula gamma;
  Formula V;
  Formula V0;
  Formula V1;
  Formula pi;
  Formula sigma;
  Formula mu;
};

MuFamily build_mu_family(const FamilyOptions& options = {});

// Scalar 0 is alpha = a c, scalar 1 is delta = a b c^2 + c.
inline constexpr std::size_t kAlpha = 0;
inline constexpr std::size_t kDelta = 1;

struct Mu2Options {
  bool correct_pi = true;
  // Rewrites every quantifier to the range [0, delta 1).
  bool normalize = true;
};

Formula build_mu2(const Mu2Options& options = {});

// Ingredients of mu2 as stand-alone formulas over (alpha, delta).
struct TwoScalarFormulas {
  Formula gamma_circ;  // (t, g): g = (delta t) mod alpha
  Formula beta_circ;   // (t, h): h = (delta t) div alpha
  Formula a1;          // (A): A = min {x > 0 : gamma_circ x = 0}
  Formula b1;          // (A, B): B = (beta_circ A) div alpha
  Formula c1;          // (C): C = gamma_circ 1
  Formula gamma_star;  // (A, t, g): graph of gamma* given a1 = A
  Formula beta_star;   // (A, t, h): graph of beta* given a1 = A
};

TwoScalarFormulas build_two_scalar_formulas();

// Names accepted by builtin_formula: gamma, V, V0, V1, pi, pi-uncorrected,
// sigma, mu (three scalars) and mu2 (two scalars).
const std::vector<std::string>& builtin_formula_names();
// Throws std::invalid_argument for an unknown name.
Formula builtin_formula(const std::string& name);
// Number of scalars the builtin expects: 3 or 2.
std::size_t builtin_scalar_count(const std::string& name);

}  // namespace wildla::logic

#endif  // WILDLA_LOGIC_BUILDERS_HPP_
