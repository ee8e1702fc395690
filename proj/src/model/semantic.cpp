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

#include "wildla/model/semantic.hpp"

#include <algorithm>
#include <stdexcept>

namespace wildla::model {

bool SquareGraph::sigma(const BigInt& x, const BigInt& y) const {
  if (x == 0 && y == 0) return true;
  auto it = images_.find(x);
  return it != images_.end() && it->second.count(y) > 0;
}

std::vector<BigInt> SquareGraph::images(const BigInt& x) const {
  std::vector<BigInt> out;
  if (auto it = images_.find(x); it != images_.end()) out.assign(it->second.begin(), it->second.end());
  if (x == 0 && (out.empty() || out.front() != 0)) out.insert(out.begin(), BigInt(0));
  return out;
}

bool SquareGraph::mu(const BigInt& x, const BigInt& y, const BigInt& z, const BigInt& c) const {
  const std::vector<BigInt> ps = images(x);
  const std::vector<BigInt> qs = images(y);
  const BigInt s = x + y;
  for (const BigInt& p : ps) {
    if (p >= c) continue;
    for (const BigInt& q : qs) {
      if (q >= c) continue;
      const BigInt r = 2 * z + p + q;
      if (r < c && sigma(s, r)) return true;
    }
  }
  return false;
}

PredicateSets predicate_sets(const contfrac::ConvergentTable& table, const BigInt& a, const BigInt& b) {
  PredicateSets out;
  std::vector<bool> positive;
  for (std::ptrdiff_t i = 0; i <= table.n(); ++i) {
    const BigInt& v = table.v(i);
    const bool pos = a * table.u(i) - b * v > 0;
    out.V.push_back(v);
    positive.push_back(pos);
    (pos ? out.V0 : out.V1).push_back(v);
  }
  for (std::size_t i = 0; i + 1 < out.V.size(); ++i) {
    if (positive[i] && !positive[i + 1]) out.pairs.emplace_back(out.V[i], out.V[i + 1]);
  }
  return out;
}

PredicateSets predicate_sets(const encoder::WildModel& model) {
  return predicate_sets(model.table, model.a(), model.b());
}

SemanticModel::SemanticModel(const BigInt& a, const BigInt& b, const BigInt& c) : a_(a), b_(b), c_(c) {
  if (c <= 0) throw std::invalid_argument("SemanticModel: c must be positive");
  const contfrac::ConvergentTable table = contfrac::convergents(contfrac::cf_expand(a, b), contfrac::CoprimePair{a, b});
  convergents_ = contfrac::convergent_pairs(table);
  sets_ = predicate_sets(table, a, b);
  V_.insert(sets_.V.begin(), sets_.V.end());
  V0_.insert(sets_.V0.begin(), sets_.V0.end());
  V1_.insert(sets_.V1.begin(), sets_.V1.end());
  for (const auto& [v, v2] : sets_.pairs) graph_.add(v % c_, v2 % c_);
  for (const BigInt& v : sets_.V0) {
    for (const BigInt& v2 : sets_.V1) {
      if (pi(v, v2, false)) graph_uncorrected_.add(v % c_, v2 % c_);
    }
  }
}

SemanticModel::SemanticModel(const encoder::WildModel& model) : SemanticModel(model.a(), model.b(), model.c()) {}

bool SemanticModel::gamma(const BigInt& u, const BigInt& v) const {
  if (u == 0) return true;
  return convergents_.count({u, v}) > 0;
}

bool SemanticModel::V(const BigInt& v) const { return V_.count(v) > 0; }
bool SemanticModel::V0(const BigInt& v) const { return V0_.count(v) > 0; }
bool SemanticModel::V1(const BigInt& v) const { return V1_.count(v) > 0; }

bool SemanticModel::pi(const BigInt& v, const BigInt& v2, bool corrected) const {
  if (!V0(v) || !V1(v2)) return false;
  if (v >= v2) return !corrected;
  auto it = V_.upper_bound(v);
  return it == V_.end() || *it >= v2;
}

bool SemanticModel::sigma(const BigInt& x, const BigInt& y, bool corrected) const {
  return (corrected ? graph_ : graph_uncorrected_).sigma(x, y);
}

bool SemanticModel::mu(const BigInt& x, const BigInt& y, const BigInt& z, bool corrected) const {
  return (corrected ? graph_ : graph_uncorrected_).mu(x, y, z, c_);
}

std::vector<UVPair> SemanticModel::false_squares(bool corrected) const {
  std::vector<UVPair> out;
  const SquareGraph& g = corrected ? graph_ : graph_uncorrected_;
  for (BigInt x = 0; x < c_; ++x) {
    for (const BigInt& y : g.images(x)) {
      if (y != x * x) out.emplace_back(x, y);
    }
  }
  return out;
}

bool sigma_eval(const encoder::WildModel& model, const BigInt& x, const BigInt& y) {
  return SemanticModel(model).sigma(x, y);
}

bool mu_eval(const encoder::WildModel& model, const BigInt& x, const BigInt& y, const BigInt& z) {
  return SemanticModel(model).mu(x, y, z);
}

}  // namespace wildla::model
