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

#ifndef WILDLA_LOGIC_EVAL_HPP_
#define WILDLA_LOGIC_EVAL_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wildla/bigint.hpp"
#include "wildla/logic/ast.hpp"

// Literal (Tarskian) evaluation of bounded formulas over the non-negative
// integers, scalar symbol k read as multiplication by scalars[k].
//
// Quantifiers enumerate their range in increasing order and stop at the
// first witness or counterexample. Three refinements are on by default and
// can each be switched off; none of them changes a truth value:
//   narrow   - atoms of the body that are linear in the quantified variable
//              (top-level conjuncts under an existential, the antecedent
//              under a universal, unions through disjunctions) restrict the
//              enumerated values to those that can matter;
//   memoize  - the value of a quantified subformula is cached under the
//              values of its free variables;
//   reorder  - conjuncts and disjuncts are tried cheapest first.
// Sugar atoms are decided arithmetically.
namespace wildla::logic {

struct EvalOptions {
  // Quantifier iterations allowed per top-level call.
  std::uint64_t budget = 100'000'000;
  bool narrow = true;
  bool memoize = true;
  bool reorder = true;
  // When set, connective operands and quantifier ranges are visited in a
  // pseudo-random order derived from the seed.
  std::optional<std::uint64_t> shuffle_seed;

  static EvalOptions naive(std::uint64_t budget = 100'000'000) {
    EvalOptions o;
    o.budget = budget;
    o.narrow = false;
    o.memoize = false;
    o.reorder = false;
    return o;
  }
};

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public EvalError {
 public:
  BudgetExceeded(std::string var, std::uint64_t budget);
  const std::string& var() const { return var_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::string var_;
  std::uint64_t budget_;
};

struct Valuation {
  std::map<std::string, BigInt> vars;
  std::vector<BigInt> scalars;
};

// Compiled formula with fixed scalar values. Caches persist across calls of
// eval(); an Evaluator must not be shared between threads.
class Evaluator {
 public:
  Evaluator(const Formula& f, std::vector<BigInt> scalars, EvalOptions options = {});
  ~Evaluator();
  Evaluator(Evaluator&&) noexcept;
  Evaluator& operator=(Evaluator&&) noexcept;

  // Throws EvalError if a free variable is missing, BudgetExceeded if the
  // call needs more quantifier iterations than the budget.
  bool eval(const std::map<std::string, BigInt>& vars);

  std::uint64_t last_steps() const;
  const std::vector<std::string>& free_variables() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

bool eval_literal(const Formula& f, const Valuation& valuation, const EvalOptions& options = {});

}  // namespace wildla::logic

#endif  // WILDLA_LOGIC_EVAL_HPP_
