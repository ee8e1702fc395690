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

#include "wildla/logic/parser.hpp"

#include <cctype>
#include <vector>

namespace wildla::logic {

ParseError::ParseError(std::size_t offset, const std::string& message)
    : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + message), offset_(offset) {}

namespace {

struct Sexpr {
  std::size_t pos = 0;
  bool is_list = false;
  std::string atom;
  std::vector<Sexpr> items;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  Sexpr read_top() {
    Sexpr s = read();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "trailing input");
    return s;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Sexpr read() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    Sexpr out;
    out.pos = pos_;
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      out.is_list = true;
      for (;;) {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError(pos_, "missing ')'");
        if (text_[pos_] == ')') {
          ++pos_;
          return out;
        }
        out.items.push_back(read());
      }
    }
    if (ch == ')') throw ParseError(pos_, "unexpected ')'");
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')') break;
      out.atom.push_back(c);
      ++pos_;
    }
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool is_number(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  const auto first = static_cast<unsigned char>(s[0]);
  if (!std::isalpha(first) && s[0] != '_') return false;
  for (char c : s) {
    const auto uc = static_cast<unsigned char>(c);
    if (!std::isalnum(uc) && c != '_' && c != '\'') return false;
  }
  return true;
}

BigInt to_number(const Sexpr& s) {
  if (s.is_list || !is_number(s.atom)) throw ParseError(s.pos, "expected a decimal number");
  return BigInt(s.atom, 10);
}

const std::string& head_of(const Sexpr& s) {
  if (s.items.empty() || s.items[0].is_list) throw ParseError(s.pos, "expected an operator after '('");
  return s.items[0].atom;
}

void expect_arity(const Sexpr& s, std::size_t args) {
  if (s.items.size() != args + 1) {
    throw ParseError(s.pos, "'" + s.items[0].atom + "' takes " + std::to_string(args) + " arguments");
  }
}

Term to_term(const Sexpr& s) {
  if (!s.is_list) {
    if (is_number(s.atom)) return num(BigInt(s.atom, 10));
    if (is_identifier(s.atom)) return var(s.atom);
    throw ParseError(s.pos, "invalid term '" + s.atom + "'");
  }
  const std::string& head = head_of(s);
  if (head == "c") {
    expect_arity(s, 1);
    return num(to_number(s.items[1]));
  }
  if (head == "+") {
    expect_arity(s, 2);
    return add(to_term(s.items[1]), to_term(s.items[2]));
  }
  if (head == "s") {
    expect_arity(s, 2);
    const BigInt k = to_number(s.items[1]);
    if (!k.fits_ulong_p()) throw ParseError(s.items[1].pos, "scalar index out of range");
    return scal(k.get_ui(), to_term(s.items[2]));
  }
  throw ParseError(s.pos, "unknown term operator '" + head + "'");
}

Formula to_formula(const Sexpr& s) {
  if (!s.is_list) throw ParseError(s.pos, "expected a formula");
  const std::string& head = head_of(s);
  auto t = [&](std::size_t i) { return to_term(s.items[i]); };
  auto f = [&](std::size_t i) { return to_formula(s.items[i]); };
  if (head == "le" || head == "eq") {
    expect_arity(s, 2);
    return head == "le" ? le(t(1), t(2)) : eq(t(1), t(2));
  }
  if (head == "and" || head == "or" || head == "imp") {
    expect_arity(s, 2);
    if (head == "and") return land(f(1), f(2));
    if (head == "or") return lor(f(1), f(2));
    return limp(f(1), f(2));
  }
  if (head == "not") {
    expect_arity(s, 1);
    return lnot(f(1));
  }
  if (head == "exists" || head == "forall") {
    const QuantKind kind = head == "exists" ? QuantKind::exists : QuantKind::forall;
    if (s.items.size() < 2 || s.items[1].is_list || !is_identifier(s.items[1].atom)) {
      throw ParseError(s.pos, "quantifier needs a variable name");
    }
    const std::string& v = s.items[1].atom;
    if (s.items.size() == 4) return quant(kind, v, 0, t(2), false, f(3));
    if (s.items.size() != 6) throw ParseError(s.pos, "quantifier takes (v lo bound incl body) or (v bound body)");
    const Sexpr& lo = s.items[2];
    if (lo.is_list || (lo.atom != "0" && lo.atom != "1")) throw ParseError(lo.pos, "lower bound must be 0 or 1");
    const Sexpr& incl = s.items[4];
    if (incl.is_list || (incl.atom != "le" && incl.atom != "lt")) {
      throw ParseError(incl.pos, "inclusivity must be 'le' or 'lt'");
    }
    return quant(kind, v, lo.atom == "1" ? 1 : 0, t(3), incl.atom == "le", f(5));
  }
  if (head == "absdlt" || head == "absdle") {
    expect_arity(s, 4);
    return head == "absdlt" ? absdiff_lt(t(1), t(2), t(3), t(4)) : absdiff_le(t(1), t(2), t(3), t(4));
  }
  if (head == "eqmod") {
    expect_arity(s, 3);
    return eq_mod(t(1), t(2), t(3));
  }
  if (head == "eqdiv") {
    expect_arity(s, 3);
    return eq_div(t(1), t(2), t(3));
  }
  if (head == "neqp") {
    expect_arity(s, 4);
    return neq_pair(t(1), t(2), t(3), t(4));
  }
  throw ParseError(s.pos, "unknown formula operator '" + head + "'");
}

void print_term(const Term& t, std::string& out) {
  const auto& v = t.node().v;
  if (const auto* x = std::get_if<VarTerm>(&v)) {
    out += x->name;
  } else if (const auto* k = std::get_if<ConstTerm>(&v)) {
    out += "(c ";
    out += to_decimal(k->value);
    out += ')';
  } else if (const auto* s = std::get_if<SumTerm>(&v)) {
    out += "(+ ";
    print_term(s->lhs, out);
    out += ' ';
    print_term(s->rhs, out);
    out += ')';
  } else {
    const auto& sc = std::get<ScalarTerm>(v);
    out += "(s ";
    out += std::to_string(sc.index);
    out += ' ';
    print_term(sc.arg, out);
    out += ')';
  }
}

void print_terms(const char* head, std::initializer_list<const Term*> ts, std::string& out) {
  out += '(';
  out += head;
  for (const Term* t : ts) {
    out += ' ';
    print_term(*t, out);
  }
  out += ')';
}

void print_formula(const Formula& f, std::string& out) {
  const auto& v = f.node().v;
  if (const auto* a = std::get_if<AtomF>(&v)) {
    print_terms(a->rel == Rel::le ? "le" : "eq", {&a->lhs, &a->rhs}, out);
  } else if (const auto* n = std::get_if<NotF>(&v)) {
    out += "(not ";
    print_formula(n->arg, out);
    out += ')';
  } else if (const auto* b = std::get_if<BinaryF>(&v)) {
    out += b->op == Connective::conj ? "(and " : b->op == Connective::disj ? "(or " : "(imp ";
    print_formula(b->lhs, out);
    out += ' ';
    print_formula(b->rhs, out);
    out += ')';
  } else if (const auto* q = std::get_if<QuantF>(&v)) {
    out += q->kind == QuantKind::exists ? "(exists " : "(forall ";
    out += q->var;
    out += q->lower == 1 ? " 1 " : " 0 ";
    print_term(q->bound, out);
    out += q->inclusive ? " le " : " lt ";
    print_formula(q->body, out);
    out += ')';
  } else if (const auto* d = std::get_if<AbsDiffF>(&v)) {
    print_terms(d->strict ? "absdlt" : "absdle", {&d->t[0], &d->t[1], &d->t[2], &d->t[3]}, out);
  } else if (const auto* m = std::get_if<EqModF>(&v)) {
    print_terms("eqmod", {&m->z, &m->w, &m->modulus}, out);
  } else if (const auto* e = std::get_if<EqDivF>(&v)) {
    print_terms("eqdiv", {&e->w, &e->u, &e->divisor}, out);
  } else {
    const auto& p = std::get<NeqPairF>(v);
    print_terms("neqp", {&p.t[0], &p.t[1], &p.t[2], &p.t[3]}, out);
  }
}

}  // namespace

Formula parse_formula(std::string_view text) { return to_formula(Reader(text).read_top()); }

Term parse_term(std::string_view text) { return to_term(Reader(text).read_top()); }

std::string print(const Term& t) {
  std::string out;
  print_term(t, out);
  return out;
}

std::string print(const Formula& f) {
  std::string out;
  print_formula(f, out);
  return out;
}

}  // namespace wildla::logic
