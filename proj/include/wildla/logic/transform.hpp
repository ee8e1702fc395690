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

#ifndef WILDLA_LOGIC_TRANSFORM_HPP_
#define WILDLA_LOGIC_TRANSFORM_HPP_

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "wildla/bigint.hpp"
#include "wildla/logic/ast.hpp"

namespace wildla::logic {

// m * t for a closed term t: each constant N inside t becomes N copies of m.
// Throws std::invalid_argument if t has variables or a constant above 256.
Term times(const Term& closed, const Term& m);

// Rewrites every sugar node into the core language:
//   z = w mod m   ->  z + 1 <= m  and  (exists k)(0 <= k <= w and w = z + m k)
//   w = u div d   ->  d w <= u  and  u + 1 <= d (w + 1)
//   |p - q| < |r - s|  ->  disjunction over the four sign cases
//   (s, t) != (s', t')  ->  not (s = s' and t = t')
// Introduced variables are fresh for the whole formula.
Formula expand_sugar(const Formula& f);

// Rewrites every quantifier to range over [0, bound) with the constant
// bound term `bound`, moving its original range into a guard: a conjunct
// under an existential, an antecedent under a universal. Equivalent to the
// input whenever all witnesses it needs lie below the bound.
Formula normalize_bounds(const Formula& f, const Term& bound);

// Value of a closed term with the given scalar values.
BigInt eval_closed(const Term& t, std::span<const BigInt> scalars);

struct BoundEntry {
  std::string var;
  std::string bound_text;
  // No variables at all.
  bool closed = false;
  // No variable that is free in the inspected formula.
  bool parameter_free = false;
  std::optional<BigInt> value;
};

struct BoundednessReport {
  // Every bound is parameter free: the formula is bounded by terms built
  // from constants, scalars and outer bound variables.
  bool bounded = true;
  // Every bound is a closed term.
  bool constant = true;
  std::vector<BoundEntry> entries;
};

// Inspects every quantifier of expand_sugar(f). Values are filled in for
// closed bounds when scalars are supplied.
BoundednessReport check_bounded(const Formula& f, std::optional<std::vector<BigInt>> scalars = std::nullopt);

// Scalar indices occurring in expand_sugar(f).
std::set<std::size_t> signature_check(const Formula& f);

}  // namespace wildla::logic

#endif  // WILDLA_LOGIC_TRANSFORM_HPP_
