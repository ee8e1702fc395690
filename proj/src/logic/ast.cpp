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

#include "wildla/logic/ast.hpp"

#include <stdexcept>

namespace wildla::logic {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Formula make(FormulaNode node) { return Formula(std::make_shared<const FormulaNode>(std::move(node))); }

void collect_term_vars(const Term& t, std::set<std::string>& out) {
  std::visit(Overloaded{
                 [&](const VarTerm& x) { out.insert(x.name); },
                 [&](const ConstTerm&) {},
                 [&](const SumTerm& x) {
                   collect_term_vars(x.lhs, out);
                   collect_term_vars(x.rhs, out);
                 },
                 [&](const ScalarTerm& x) { collect_term_vars(x.arg, out); },
             },
             t.node().v);
}

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  auto term = [&](const Term& t) {
    std::set<std::string> vs;
    collect_term_vars(t, vs);
    for (const auto& name : vs) {
      if (!bound.contains(name)) out.insert(name);
    }
  };
  std::visit(Overloaded{
                 [&](const AtomF& x) {
                   term(x.lhs);
                   term(x.rhs);
                 },
                 [&](const NotF& x) { collect_free(x.arg, bound, out); },
                 [&](const BinaryF& x) {
                   collect_free(x.lhs, bound, out);
                   collect_free(x.rhs, bound, out);
                 },
                 [&](const QuantF& x) {
                   term(x.bound);
                   const bool was_bound = bound.contains(x.var);
                   bound.insert(x.var);
                   collect_free(x.body, bound, out);
                   if (!was_bound) bound.erase(x.var);
                 },
                 [&](const AbsDiffF& x) {
                   for (const Term& t : x.t) term(t);
                 },
                 [&](const EqModF& x) {
                   term(x.z);
                   term(x.w);
                   term(x.modulus);
                 },
                 [&](const EqDivF& x) {
                   term(x.w);
                   term(x.u);
                   term(x.divisor);
                 },
                 [&](const NeqPairF& x) {
                   for (const Term& t : x.t) term(t);
                 },
             },
             f.node().v);
}

void collect_all(const Formula& f, std::set<std::string>& out) {
  std::visit(Overloaded{
                 [&](const AtomF& x) {
                   collect_term_vars(x.lhs, out);
                   collect_term_vars(x.rhs, out);
                 },
                 [&](const NotF& x) { collect_all(x.arg, out); },
                 [&](const BinaryF& x) {
                   collect_all(x.lhs, out);
                   collect_all(x.rhs, out);
                 },
                 [&](const QuantF& x) {
                   out.insert(x.var);
                   collect_term_vars(x.bound, out);
                   collect_all(x.body, out);
                 },
                 [&](const AbsDiffF& x) {
                   for (const Term& t : x.t) collect_term_vars(t, out);
                 },
                 [&](const EqModF& x) {
                   collect_term_vars(x.z, out);
                   collect_term_vars(x.w, out);
                   collect_term_vars(x.modulus, out);
                 },
                 [&](const EqDivF& x) {
                   collect_term_vars(x.w, out);
                   collect_term_vars(x.u, out);
                   collect_term_vars(x.divisor, out);
                 },
                 [&](const NeqPairF& x) {
                   for (const Term& t : x.t) collect_term_vars(t, out);
                 },
             },
             f.node().v);
}

}  // namespace

Term Term::var(std::string name) {
  if (name.empty()) throw std::invalid_argument("variable name must not be empty");
  return Term(std::make_shared<const TermNode>(TermNode{VarTerm{std::move(name)}}));
}

Term Term::constant(BigInt value) {
  if (value < 0) throw std::invalid_argument("term constants are non-negative");
  return Term(std::make_shared<const TermNode>(TermNode{ConstTerm{std::move(value)}}));
}

Term Term::sum(Term lhs, Term rhs) {
  return Term(std::make_shared<const TermNode>(TermNode{SumTerm{std::move(lhs), std::move(rhs)}}));
}

Term Term::scalar(std::size_t index, Term arg) {
  return Term(std::make_shared<const TermNode>(TermNode{ScalarTerm{index, std::move(arg)}}));
}

bool operator==(const Term& x, const Term& y) { return x.node_ == y.node_ || x.node_->v == y.node_->v; }

bool operator==(const Formula& x, const Formula& y) {
  return x.node_ == y.node_ || x.node_->v == y.node_->v;
}

Term var(std::string name) { return Term::var(std::move(name)); }
Term num(BigInt value) { return Term::constant(std::move(value)); }
Term add(Term lhs, Term rhs) { return Term::sum(std::move(lhs), std::move(rhs)); }
Term add(std::initializer_list<Term> terms) {
  if (terms.size() == 0) throw std::invalid_argument("add: empty sum");
  auto it = terms.begin();
  Term acc = *it++;
  for (; it != terms.end(); ++it) acc = Term::sum(acc, *it);
  return acc;
}
Term scal(std::size_t index, Term arg) { return Term::scalar(index, std::move(arg)); }

Formula le(Term lhs, Term rhs) { return make({AtomF{Rel::le, std::move(lhs), std::move(rhs)}}); }
Formula lt(Term lhs, Term rhs) { return le(add(std::move(lhs), num(1)), std::move(rhs)); }
Formula eq(Term lhs, Term rhs) { return make({AtomF{Rel::eq, std::move(lhs), std::move(rhs)}}); }
Formula lnot(Formula arg) { return make({NotF{std::move(arg)}}); }
Formula land(Formula lhs, Formula rhs) {
  return make({BinaryF{Connective::conj, std::move(lhs), std::move(rhs)}});
}
Formula lor(Formula lhs, Formula rhs) {
  return make({BinaryF{Connective::disj, std::move(lhs), std::move(rhs)}});
}
Formula limp(Formula lhs, Formula rhs) {
  return make({BinaryF{Connective::imp, std::move(lhs), std::move(rhs)}});
}

namespace {
Formula fold_right(std::vector<Formula> parts, Connective op) {
  if (parts.empty()) throw std::invalid_argument("empty connective list");
  Formula acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) {
    acc = make({BinaryF{op, parts[i], acc}});
  }
  return acc;
}
}  // namespace

Formula land(std::vector<Formula> parts) { return fold_right(std::move(parts), Connective::conj); }
Formula lor(std::vector<Formula> parts) { return fold_right(std::move(parts), Connective::disj); }

Formula quant(QuantKind kind, std::string v, int lower, Term bound, bool inclusive, Formula body) {
  if (lower != 0 && lower != 1) throw std::invalid_argument("quantifier lower bound must be 0 or 1");
  if (v.empty()) throw std::invalid_argument("quantified variable name must not be empty");
  return make({QuantF{kind, std::move(v), lower, std::move(bound), inclusive, std::move(body)}});
}
Formula exists(std::string v, int lower, Term bound, bool inclusive, Formula body) {
  return quant(QuantKind::exists, std::move(v), lower, std::move(bound), inclusive, std::move(body));
}
Formula forall(std::string v, int lower, Term bound, bool inclusive, Formula body) {
  return quant(QuantKind::forall, std::move(v), lower, std::move(bound), inclusive, std::move(body));
}
Formula absdiff_lt(Term t0, Term t1, Term t2, Term t3) {
  return make({AbsDiffF{true, {std::move(t0), std::move(t1), std::move(t2), std::move(t3)}}});
}
Formula absdiff_le(Term t0, Term t1, Term t2, Term t3) {
  return make({AbsDiffF{false, {std::move(t0), std::move(t1), std::move(t2), std::move(t3)}}});
}
Formula eq_mod(Term z, Term w, Term modulus) {
  return make({EqModF{std::move(z), std::move(w), std::move(modulus)}});
}
Formula eq_div(Term w, Term u, Term divisor) {
  return make({EqDivF{std::move(w), std::move(u), std::move(divisor)}});
}
Formula neq_pair(Term s, Term t, Term s2, Term t2) {
  return make({NeqPairF{{std::move(s), std::move(t), std::move(s2), std::move(t2)}}});
}

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  collect_term_vars(t, out);
  return out;
}

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound;
  std::set<std::string> out;
  collect_free(f, bound, out);
  return out;
}

std::set<std::string> all_vars(const Formula& f) {
  std::set<std::string> out;
  collect_all(f, out);
  return out;
}

bool is_closed(const Term& t) { return free_vars(t).empty(); }

bool is_sugar(const FormulaNode& node) {
  return std::holds_alternative<AbsDiffF>(node.v) || std::holds_alternative<EqModF>(node.v) ||
         std::holds_alternative<EqDivF>(node.v) || std::holds_alternative<NeqPairF>(node.v);
}

}  // namespace wildla::logic
