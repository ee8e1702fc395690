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

#ifndef WILDLA_MODEL_SEMANTIC_HPP_
#define WILDLA_MODEL_SEMANTIC_HPP_

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "wildla/bigint.hpp"
#include "wildla/contfrac.hpp"
#include "wildla/encoder.hpp"

// Extensions of gamma, V, V0, V1, pi, sigma and mu computed directly from
// the convergent table instead of by formula evaluation.
namespace wildla::model {

using contfrac::UVPair;

struct PredicateSets {
  std::vector<BigInt> V;   // ascending
  std::vector<BigInt> V0;  // ascending, a u - b v > 0
  std::vector<BigInt> V1;  // ascending, a u - b v <= 0
  // Consecutive elements (v, v') of V with v in V0 and v' in V1.
  std::vector<std::pair<BigInt, BigInt>> pairs;

  friend bool operator==(const PredicateSets&, const PredicateSets&) = default;
};

// Residue images of the pi-pairs: sigma(x, y) for x, y not both zero holds
// iff y is among images[x].
class SquareGraph {
 public:
  SquareGraph() = default;
  void add(const BigInt& x, const BigInt& y) { images_[x].insert(y); }

  bool sigma(const BigInt& x, const BigInt& y) const;
  // 2z + p + q = r with sigma(x, p), sigma(y, q), sigma(x + y, r), p, q, r < c.
  bool mu(const BigInt& x, const BigInt& y, const BigInt& z, const BigInt& c) const;
  std::vector<BigInt> images(const BigInt& x) const;

 private:
  std::map<BigInt, std::set<BigInt>> images_;
};

class SemanticModel {
 public:
  SemanticModel(const BigInt& a, const BigInt& b, const BigInt& c);
  explicit SemanticModel(const encoder::WildModel& model);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }
  const PredicateSets& sets() const { return sets_; }

  bool gamma(const BigInt& u, const BigInt& v) const;
  bool V(const BigInt& v) const;
  bool V0(const BigInt& v) const;
  bool V1(const BigInt& v) const;
  // Without `corrected`, pi also holds for every v in V0, v' in V1 with v >= v'.
  bool pi(const BigInt& v, const BigInt& v2, bool corrected = true) const;
  bool sigma(const BigInt& x, const BigInt& y, bool corrected = true) const;
  bool mu(const BigInt& x, const BigInt& y, const BigInt& z, bool corrected = true) const;

  // Pairs (x, y) with sigma(x, y) and y != x^2 among x < c, y < c.
  std::vector<UVPair> false_squares(bool corrected) const;

 private:
  BigInt a_;
  BigInt b_;
  BigInt c_;
  std::set<UVPair> convergents_;
  PredicateSets sets_;
  std::set<BigInt> V_;
  std::set<BigInt> V0_;
  std::set<BigInt> V1_;
  SquareGraph graph_;
  SquareGraph graph_uncorrected_;
};

// PredicateSets from the convergent table and the signs of a u_i - b v_i.
PredicateSets predicate_sets(const contfrac::ConvergentTable& table, const BigInt& a, const BigInt& b);
PredicateSets predicate_sets(const encoder::WildModel& model);

bool sigma_eval(const encoder::WildModel& model, const BigInt& x, const BigInt& y);
bool mu_eval(const encoder::WildModel& model, const BigInt& x, const BigInt& y, const BigInt& z);

}  // namespace wildla::model

#endif  // WILDLA_MODEL_SEMANTIC_HPP_
