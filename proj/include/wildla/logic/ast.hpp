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

#ifndef WILDLA_LOGIC_AST_HPP_
#define WILDLA_LOGIC_AST_HPP_

#include <array>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "wildla/bigint.hpp"

// Bounded formulas over {0, 1, +, <=} and indexed scalar symbols. Terms and
// formulas are immutable handles onto shared nodes; copying is cheap and
// equality is structural.
namespace wildla::logic {

struct TermNode;
struct FormulaNode;

class Term {
 public:
  static Term var(std::string name);
  // N * 1, i.e. the sum of N ones.
  static Term constant(BigInt value);
  static Term sum(Term lhs, Term rhs);
  // Multiplication of `arg` by scalar number `index`.
  static Term scalar(std::size_t index, Term arg);

  const TermNode& node() const { return *node_; }

  friend bool operator==(const Term& x, const Term& y);

 private:
  explicit Term(std::shared_ptr<const TermNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const TermNode> node_;
};

struct VarTerm {
  std::string name;
  friend bool operator==(const VarTerm&, const VarTerm&) = default;
};
struct ConstTerm {
  BigInt value;
  friend bool operator==(const ConstTerm&, const ConstTerm&) = default;
};
struct SumTerm {
  Term lhs;
  Term rhs;
  friend bool operator==(const SumTerm&, const SumTerm&) = default;
};
struct ScalarTerm {
  std::size_t index;
  Term arg;
  friend bool operator==(const ScalarTerm&, const ScalarTerm&) = default;
};

struct TermNode {
  std::variant<VarTerm, ConstTerm, SumTerm, ScalarTerm> v;
};

enum class Rel { le, eq };
enum class Connective { conj, disj, imp };
enum class QuantKind { exists, forall };

class Formula {
 public:
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}

  const FormulaNode& node() const { return *node_; }
  // Identity of the shared node, used for memoization keys.
  const FormulaNode* id() const { return node_.get(); }

  friend bool operator==(const Formula& x, const Formula& y);

 private:
  std::shared_ptr<const FormulaNode> node_;
};

struct AtomF {
  Rel rel;
  Term lhs;
  Term rhs;
  friend bool operator==(const AtomF&, const AtomF&) = default;
};
struct NotF {
  Formula arg;
  friend bool operator==(const NotF&, const NotF&) = default;
};
struct BinaryF {
  Connective op;
  Formula lhs;
  Formula rhs;
  friend bool operator==(const BinaryF&, const BinaryF&) = default;
};
// (Q var)(lower <= var <= bound) or (lower <= var < bound), lower in {0, 1}.
struct QuantF {
  QuantKind kind;
  std::string var;
  int lower;
  Term bound;
  bool inclusive;
  Formula body;
  friend bool operator==(const QuantF&, const QuantF&) = default;
};
// |t0 - t1| < |t2 - t3| (strict) or <= (non-strict).
struct AbsDiffF {
  bool strict;
  std::array<Term, 4> t;
  friend bool operator==(const AbsDiffF&, const AbsDiffF&) = default;
};
// z = w mod m: 0 <= z < m and w = z + m k for some 0 <= k <= w.
struct EqModF {
  Term z;
  Term w;
  Term modulus;
  friend bool operator==(const EqModF&, const EqModF&) = default;
};
// w = u div d: d w <= u < d (w + 1).
struct EqDivF {
  Term w;
  Term u;
  Term divisor;
  friend bool operator==(const EqDivF&, const EqDivF&) = default;
};
// (t0, t1) != (t2, t3).
struct NeqPairF {
  std::array<Term, 4> t;
  friend bool operator==(const NeqPairF&, const NeqPairF&) = default;
};

struct FormulaNode {
  std::variant<AtomF, NotF, BinaryF, QuantF, AbsDiffF, EqModF, EqDivF, NeqPairF> v;
};

// Term constructors.
Term var(std::string name);
Term num(BigInt value);
Term add(Term lhs, Term rhs);
Term add(std::initializer_list<Term> terms);
Term scal(std::size_t index, Term arg);

// Formula constructors. lt(x, y) is x + 1 <= y.
Formula le(Term lhs, Term rhs);
Formula lt(Term lhs, Term rhs);
Formula eq(Term lhs, Term rhs);
Formula lnot(Formula arg);
Formula land(Formula lhs, Formula rhs);
Formula lor(Formula lhs, Formula rhs);
Formula limp(Formula lhs, Formula rhs);
// Right-nested conjunction / disjunction of a non-empty list.
Formula land(std::vector<Formula> parts);
Formula lor(std::vector<Formula> parts);
Formula quant(QuantKind kind, std::string v, int lower, Term bound, bool inclusive, Formula body);
Formula exists(std::string v, int lower, Term bound, bool inclusive, Formula body);
Formula forall(std::string v, int lower, Term bound, bool inclusive, Formula body);
Formula absdiff_lt(Term t0, Term t1, Term t2, Term t3);
Formula absdiff_le(Term t0, Term t1, Term t2, Term t3);
Formula eq_mod(Term z, Term w, Term modulus);
Formula eq_div(Term w, Term u, Term divisor);
Formula neq_pair(Term s, Term t, Term s2, Term t2);

std::set<std::string> free_vars(const Term& t);
std::set<std::string> free_vars(const Formula& f);
// Every variable name occurring anywhere, bound or free.
std::set<std::string> all_vars(const Formula& f);
bool is_closed(const Term& t);

bool is_sugar(const FormulaNode& node);

}  // namespace wildla::logic

#endif  // WILDLA_LOGIC_AST_HPP_
