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

#include "wildla/logic/eval.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_map>

namespace wildla::logic {

BudgetExceeded::BudgetExceeded(std::string var, std::uint64_t budget)
    : EvalError("evaluation budget of " + std::to_string(budget) + " quantifier steps exceeded in quantifier over '" +
                var + "'"),
      var_(std::move(var)),
      budget_(budget) {}

namespace {

enum class TermKind { var, constant, sum, scalar };

struct CTerm {
  TermKind kind;
  std::uint32_t slot = 0;
  BigInt value;
  int lhs = -1;
  int rhs = -1;
  std::size_t scalar = 0;
  std::vector<std::uint32_t> slots;  // variables occurring, sorted
};

enum class NodeKind { atom, negation, conj, disj, imp, quant, absdiff, eqmod, eqdiv, neqpair };

struct CNode {
  NodeKind kind;
  Rel rel = Rel::le;
  bool flag = false;  // strict (absdiff), inclusive (quant)
  bool exists = false;
  int lower = 0;
  std::vector<int> terms;
  std::vector<int> kids;
  std::uint32_t slot = 0;
  std::string var;
  std::vector<std::uint32_t> free_slots;
  double cost = 1;
  // Alpha-invariant shape of a quantifier node and its free variables in
  // order of first occurrence; structurally equal copies share memo entries.
  int sig = -1;
  std::vector<std::uint32_t> memo_slots;
};

struct Interval {
  BigInt lo;
  BigInt hi;
};
using Intervals = std::vector<Interval>;

struct Linear {
  BigInt k;
  BigInt c;
};

Intervals intersect(const Intervals& xs, const Intervals& ys) {
  Intervals out;
  std::size_t i = 0, j = 0;
  while (i < xs.size() && j < ys.size()) {
    const BigInt& lo = xs[i].lo > ys[j].lo ? xs[i].lo : ys[j].lo;
    const BigInt& hi = xs[i].hi < ys[j].hi ? xs[i].hi : ys[j].hi;
    if (lo <= hi) out.push_back({lo, hi});
    if (xs[i].hi < ys[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

Intervals unite(Intervals xs, const Intervals& ys) {
  xs.insert(xs.end(), ys.begin(), ys.end());
  std::sort(xs.begin(), xs.end(), [](const Interval& p, const Interval& q) { return p.lo < q.lo; });
  Intervals out;
  for (auto& iv : xs) {
    if (!out.empty() && iv.lo <= out.back().hi + 1) {
      if (iv.hi > out.back().hi) out.back().hi = iv.hi;
    } else {
      out.push_back(std::move(iv));
    }
  }
  constexpr std::size_t kMaxPieces = 32;
  if (out.size() > kMaxPieces) {
    Interval hull{out.front().lo, out.back().hi};
    out.assign(1, std::move(hull));
  }
  return out;
}

std::vector<std::uint32_t> merge_slots(const std::vector<std::uint32_t>& xs, const std::vector<std::uint32_t>& ys) {
  std::vector<std::uint32_t> out;
  std::set_union(xs.begin(), xs.end(), ys.begin(), ys.end(), std::back_inserter(out));
  return out;
}

struct MemoKey {
  int sig;
  std::vector<BigInt> vals;
  bool operator==(const MemoKey& other) const { return sig == other.sig && vals == other.vals; }
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& key) const noexcept {
    std::size_t h = std::hash<int>{}(key.sig);
    BigIntHash bh;
    for (const BigInt& x : key.vals) h ^= bh(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace

struct Evaluator::Impl {
  std::vector<BigInt> scalars;
  EvalOptions options;
  std::vector<CTerm> terms;
  std::vector<CNode> nodes;
  int root = -1;
  std::map<std::string, std::uint32_t> free_names;
  std::vector<std::string> free_list;
  std::vector<BigInt> env;
  std::uint64_t steps = 0;
  std::unordered_map<MemoKey, bool, MemoKeyHash> memo;
  std::map<std::string, int> signatures;
  std::mt19937_64 rng;

  // ---- compilation ----

  std::uint32_t new_slot() {
    env.emplace_back();
    return static_cast<std::uint32_t>(env.size() - 1);
  }

  int compile_term(const Term& t, const std::map<std::string, std::uint32_t>& scope) {
    CTerm ct{};
    const auto& v = t.node().v;
    if (const auto* x = std::get_if<VarTerm>(&v)) {
      ct.kind = TermKind::var;
      auto it = scope.find(x->name);
      if (it != scope.end()) {
        ct.slot = it->second;
      } else {
        auto fit = free_names.find(x->name);
        if (fit == free_names.end()) {
          const std::uint32_t s = new_slot();
          fit = free_names.emplace(x->name, s).first;
          free_list.push_back(x->name);
        }
        ct.slot = fit->second;
      }
      ct.slots = {ct.slot};
    } else if (const auto* k = std::get_if<ConstTerm>(&v)) {
      ct.kind = TermKind::constant;
      ct.value = k->value;
    } else if (const auto* s = std::get_if<SumTerm>(&v)) {
      ct.kind = TermKind::sum;
      ct.lhs = compile_term(s->lhs, scope);
      ct.rhs = compile_term(s->rhs, scope);
      ct.slots = merge_slots(terms[ct.lhs].slots, terms[ct.rhs].slots);
    } else {
      const auto& sc = std::get<ScalarTerm>(v);
      if (sc.index >= scalars.size()) {
        throw EvalError("scalar index " + std::to_string(sc.index) + " has no value");
      }
      ct.kind = TermKind::scalar;
      ct.scalar = sc.index;
      ct.lhs = compile_term(sc.arg, scope);
      ct.slots = terms[ct.lhs].slots;
    }
    terms.push_back(std::move(ct));
    return static_cast<int>(terms.size() - 1);
  }

  void flatten(const Formula& f, Connective op, std::vector<Formula>& out) {
    if (const auto* b = std::get_if<BinaryF>(&f.node().v); b && b->op == op) {
      flatten(b->lhs, op, out);
      flatten(b->rhs, op, out);
    } else {
      out.push_back(f);
    }
  }

  int push(CNode node) {
    nodes.push_back(std::move(node));
    return static_cast<int>(nodes.size() - 1);
  }

  void add_term_slots(CNode& node) {
    for (int t : node.terms) node.free_slots = merge_slots(node.free_slots, terms[t].slots);
  }

  int compile(const Formula& f, std::map<std::string, std::uint32_t>& scope) {
    const auto& v = f.node().v;
    CNode node{};
    if (const auto* a = std::get_if<AtomF>(&v)) {
      node.kind = NodeKind::atom;
      node.rel = a->rel;
      node.terms = {compile_term(a->lhs, scope), compile_term(a->rhs, scope)};
      add_term_slots(node);
    } else if (const auto* n = std::get_if<NotF>(&v)) {
      node.kind = NodeKind::negation;
      const int kid = compile(n->arg, scope);
      node.kids = {kid};
      node.free_slots = nodes[kid].free_slots;
      node.cost = nodes[kid].cost;
    } else if (const auto* b = std::get_if<BinaryF>(&v)) {
      if (b->op == Connective::imp) {
        node.kind = NodeKind::imp;
        node.kids = {compile(b->lhs, scope), compile(b->rhs, scope)};
      } else {
        node.kind = b->op == Connective::conj ? NodeKind::conj : NodeKind::disj;
        std::vector<Formula> parts;
        flatten(f, b->op, parts);
        for (const Formula& part : parts) node.kids.push_back(compile(part, scope));
        if (options.shuffle_seed) {
          std::shuffle(node.kids.begin(), node.kids.end(), rng);
        } else if (options.reorder) {
          std::stable_sort(node.kids.begin(), node.kids.end(),
                           [&](int x, int y) { return nodes[x].cost < nodes[y].cost; });
        }
      }
      node.cost = 0;
      for (int kid : node.kids) {
        node.free_slots = merge_slots(node.free_slots, nodes[kid].free_slots);
        node.cost += nodes[kid].cost;
      }
    } else if (const auto* q = std::get_if<QuantF>(&v)) {
      node.kind = NodeKind::quant;
      node.exists = q->kind == QuantKind::exists;
      node.lower = q->lower;
      node.flag = q->inclusive;
      node.var = q->var;
      node.terms = {compile_term(q->bound, scope)};
      node.slot = new_slot();
      std::optional<std::uint32_t> shadowed;
      if (auto it = scope.find(q->var); it != scope.end()) shadowed = it->second;
      scope[q->var] = node.slot;
      const int body = compile(q->body, scope);
      if (shadowed) {
        scope[q->var] = *shadowed;
      } else {
        scope.erase(q->var);
      }
      node.kids = {body};
      std::vector<std::uint32_t> inner = nodes[body].free_slots;
      inner.erase(std::remove(inner.begin(), inner.end(), node.slot), inner.end());
      node.free_slots = merge_slots(inner, terms[node.terms[0]].slots);
      node.cost = 10.0 * (1.0 + nodes[body].cost);
    } else if (const auto* d = std::get_if<AbsDiffF>(&v)) {
      node.kind = NodeKind::absdiff;
      node.flag = d->strict;
      for (const Term& t : d->t) node.terms.push_back(compile_term(t, scope));
      add_term_slots(node);
    } else if (const auto* m = std::get_if<EqModF>(&v)) {
      node.kind = NodeKind::eqmod;
      node.terms = {compile_term(m->z, scope), compile_term(m->w, scope), compile_term(m->modulus, scope)};
      add_term_slots(node);
    } else if (const auto* e = std::get_if<EqDivF>(&v)) {
      node.kind = NodeKind::eqdiv;
      node.terms = {compile_term(e->w, scope), compile_term(e->u, scope), compile_term(e->divisor, scope)};
      add_term_slots(node);
    } else {
      const auto& p = std::get<NeqPairF>(v);
      node.kind = NodeKind::neqpair;
      for (const Term& t : p.t) node.terms.push_back(compile_term(t, scope));
      add_term_slots(node);
    }
    return push(std::move(node));
  }

  struct SigState {
    std::unordered_map<std::uint32_t, std::size_t> ids;
    std::vector<std::uint32_t> free_order;
    std::string out;
  };

  void sig_slot(std::uint32_t slot, SigState& st) const {
    auto it = st.ids.find(slot);
    if (it == st.ids.end()) {
      it = st.ids.emplace(slot, st.ids.size()).first;
      st.free_order.push_back(slot);
    }
    st.out += 'v';
    st.out += std::to_string(it->second);
  }

  void sig_term(int idx, SigState& st) const {
    const CTerm& t = terms[idx];
    switch (t.kind) {
      case TermKind::var:
        sig_slot(t.slot, st);
        return;
      case TermKind::constant:
        st.out += 'k';
        st.out += t.value.get_str();
        return;
      case TermKind::sum:
        st.out += '+';
        sig_term(t.lhs, st);
        sig_term(t.rhs, st);
        return;
      case TermKind::scalar:
        st.out += 's';
        st.out += std::to_string(t.scalar);
        sig_term(t.lhs, st);
        return;
    }
  }

  void sig_node(int idx, SigState& st) const {
    const CNode& n = nodes[idx];
    st.out += '(';
    st.out += std::to_string(static_cast<int>(n.kind));
    st.out += n.rel == Rel::le ? 'l' : 'e';
    st.out += n.flag ? '1' : '0';
    st.out += n.exists ? 'E' : 'A';
    st.out += std::to_string(n.lower);
    for (int t : n.terms) sig_term(t, st);
    if (n.kind == NodeKind::quant) {
      // The binder gets the next local id without being recorded as free.
      st.out += 'b';
      st.out += std::to_string(st.ids.size());
      st.ids.emplace(n.slot, st.ids.size());
    }
    for (int kid : n.kids) sig_node(kid, st);
    st.out += ')';
  }

  void assign_signatures() {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i].kind != NodeKind::quant) continue;
      SigState st;
      sig_node(static_cast<int>(i), st);
      auto it = signatures.emplace(std::move(st.out), static_cast<int>(signatures.size())).first;
      nodes[i].sig = it->second;
      nodes[i].memo_slots = std::move(st.free_order);
    }
  }

  // ---- evaluation ----

  BigInt term_value(int idx) const {
    const CTerm& t = terms[idx];
    switch (t.kind) {
      case TermKind::var:
        return env[t.slot];
      case TermKind::constant:
        return t.value;
      case TermKind::sum:
        return term_value(t.lhs) + term_value(t.rhs);
      case TermKind::scalar:
        return scalars[t.scalar] * term_value(t.lhs);
    }
    return 0;
  }

  Linear linear(int idx, std::uint32_t x) const {
    const CTerm& t = terms[idx];
    switch (t.kind) {
      case TermKind::var:
        if (t.slot == x) return {1, 0};
        return {0, env[t.slot]};
      case TermKind::constant:
        return {0, t.value};
      case TermKind::sum: {
        Linear l = linear(t.lhs, x);
        Linear r = linear(t.rhs, x);
        return {l.k + r.k, l.c + r.c};
      }
      case TermKind::scalar: {
        Linear l = linear(t.lhs, x);
        return {scalars[t.scalar] * l.k, scalars[t.scalar] * l.c};
      }
    }
    return {0, 0};
  }

  static bool mentions(const CTerm& t, std::uint32_t x) {
    return std::binary_search(t.slots.begin(), t.slots.end(), x);
  }

  // Values of x in [lo, hi] with k x <= d.
  static Intervals solve_le(const BigInt& k, const BigInt& d, const Interval& base) {
    if (k == 0) return d >= 0 ? Intervals{base} : Intervals{};
    Interval iv = base;
    if (k > 0) {
      BigInt top;
      mpz_fdiv_q(top.get_mpz_t(), d.get_mpz_t(), k.get_mpz_t());
      if (top < iv.hi) iv.hi = top;
    } else {
      BigInt bottom;
      mpz_cdiv_q(bottom.get_mpz_t(), d.get_mpz_t(), k.get_mpz_t());
      if (bottom > iv.lo) iv.lo = bottom;
    }
    if (iv.lo > iv.hi) return {};
    return {iv};
  }

  static Intervals solve_eq(const BigInt& k, const BigInt& d, const Interval& base) {
    if (k == 0) return d == 0 ? Intervals{base} : Intervals{};
    if (!mpz_divisible_p(d.get_mpz_t(), k.get_mpz_t())) return {};
    BigInt x = d / k;
    if (x < base.lo || x > base.hi) return {};
    return {Interval{x, x}};
  }

  Intervals narrow(int idx, std::uint32_t x, const Interval& base) const {
    const CNode& n = nodes[idx];
    switch (n.kind) {
      case NodeKind::atom: {
        const Linear l = linear(n.terms[0], x);
        const Linear r = linear(n.terms[1], x);
        const BigInt k = l.k - r.k;
        const BigInt d = r.c - l.c;
        return n.rel == Rel::le ? solve_le(k, d, base) : solve_eq(k, d, base);
      }
      case NodeKind::eqdiv: {
        if (mentions(terms[n.terms[2]], x)) return {base};
        const BigInt div = term_value(n.terms[2]);
        const Linear w = linear(n.terms[0], x);
        const Linear u = linear(n.terms[1], x);
        // div * w <= u  and  u + 1 <= div * (w + 1)
        Intervals first = solve_le(div * w.k - u.k, u.c - div * w.c, base);
        if (first.empty()) return first;
        return intersect(first, solve_le(u.k - div * w.k, div * w.c + div - u.c - 1, base));
      }
      case NodeKind::conj: {
        Intervals acc{base};
        for (int kid : n.kids) {
          acc = intersect(acc, narrow(kid, x, base));
          if (acc.empty()) break;
        }
        return acc;
      }
      case NodeKind::disj: {
        Intervals acc;
        for (int kid : n.kids) {
          acc = unite(std::move(acc), narrow(kid, x, base));
        }
        return acc;
      }
      default:
        return {base};
    }
  }

  void step(const CNode& n) {
    if (++steps > options.budget) throw BudgetExceeded(n.var, options.budget);
  }

  bool eval_quant(const CNode& n) {
    MemoKey key{n.sig, {}};
    if (options.memoize) {
      key.vals.reserve(n.memo_slots.size());
      for (std::uint32_t s : n.memo_slots) key.vals.push_back(env[s]);
      if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    BigInt hi = term_value(n.terms[0]);
    if (!n.flag) hi -= 1;
    const Interval base{BigInt(n.lower), hi};
    bool result = !n.exists;
    if (base.lo <= base.hi) {
      Intervals ranges{base};
      if (options.narrow) {
        const CNode& body = nodes[n.kids[0]];
        if (n.exists) {
          ranges = narrow(n.kids[0], n.slot, base);
        } else if (body.kind == NodeKind::imp) {
          ranges = narrow(body.kids[0], n.slot, base);
        }
      }
      result = options.shuffle_seed ? scan_shuffled(n, ranges) : scan(n, ranges);
    }
    if (options.memoize) memo.emplace(std::move(key), result);
    return result;
  }

  bool visit(const CNode& n, const BigInt& value) {
    step(n);
    env[n.slot] = value;
    return eval(n.kids[0]);
  }

  bool scan(const CNode& n, const Intervals& ranges) {
    for (const Interval& iv : ranges) {
      for (BigInt value = iv.lo; value <= iv.hi; ++value) {
        const bool r = visit(n, value);
        if (n.exists && r) return true;
        if (!n.exists && !r) return false;
      }
    }
    return !n.exists;
  }

  bool scan_shuffled(const CNode& n, const Intervals& ranges) {
    constexpr unsigned long kMaxShuffled = 1'000'000;
    BigInt total = 0;
    for (const Interval& iv : ranges) total += iv.hi - iv.lo + 1;
    if (total > kMaxShuffled) return scan(n, ranges);
    std::vector<BigInt> values;
    for (const Interval& iv : ranges) {
      for (BigInt x = iv.lo; x <= iv.hi; ++x) values.push_back(x);
    }
    std::shuffle(values.begin(), values.end(), rng);
    for (const BigInt& value : values) {
      const bool r = visit(n, value);
      if (n.exists && r) return true;
      if (!n.exists && !r) return false;
    }
    return !n.exists;
  }

  bool eval(int idx) {
    const CNode& n = nodes[idx];
    switch (n.kind) {
      case NodeKind::atom: {
        const BigInt l = term_value(n.terms[0]);
        const BigInt r = term_value(n.terms[1]);
        return n.rel == Rel::le ? l <= r : l == r;
      }
      case NodeKind::negation:
        return !eval(n.kids[0]);
      case NodeKind::conj:
        for (int kid : n.kids) {
          if (!eval(kid)) return false;
        }
        return true;
      case NodeKind::disj:
        for (int kid : n.kids) {
          if (eval(kid)) return true;
        }
        return false;
      case NodeKind::imp:
        return !eval(n.kids[0]) || eval(n.kids[1]);
      case NodeKind::quant:
        return eval_quant(n);
      case NodeKind::absdiff: {
        const BigInt lhs = abs(term_value(n.terms[0]) - term_value(n.terms[1]));
        const BigInt rhs = abs(term_value(n.terms[2]) - term_value(n.terms[3]));
        return n.flag ? lhs < rhs : lhs <= rhs;
      }
      case NodeKind::eqmod: {
        const BigInt z = term_value(n.terms[0]);
        const BigInt w = term_value(n.terms[1]);
        const BigInt m = term_value(n.terms[2]);
        if (!(z < m) || w < z) return false;
        return mpz_divisible_p(BigInt(w - z).get_mpz_t(), m.get_mpz_t()) != 0 || (m == 0 && w == z);
      }
      case NodeKind::eqdiv: {
        const BigInt w = term_value(n.terms[0]);
        const BigInt u = term_value(n.terms[1]);
        const BigInt d = term_value(n.terms[2]);
        return d * w <= u && u < d * (w + 1);
      }
      case NodeKind::neqpair:
        return !(term_value(n.terms[0]) == term_value(n.terms[2]) &&
                 term_value(n.terms[1]) == term_value(n.terms[3]));
    }
    return false;
  }
};

Evaluator::Evaluator(const Formula& f, std::vector<BigInt> scalars, EvalOptions options)
    : impl_(std::make_unique<Impl>()) {
  impl_->scalars = std::move(scalars);
  impl_->options = options;
  impl_->rng.seed(options.shuffle_seed.value_or(0));
  std::map<std::string, std::uint32_t> scope;
  impl_->root = impl_->compile(f, scope);
  if (options.memoize) impl_->assign_signatures();
}

Evaluator::~Evaluator() = default;
Evaluator::Evaluator(Evaluator&&) noexcept = default;
Evaluator& Evaluator::operator=(Evaluator&&) noexcept = default;

bool Evaluator::eval(const std::map<std::string, BigInt>& vars) {
  for (const auto& [name, slot] : impl_->free_names) {
    auto it = vars.find(name);
    if (it == vars.end()) throw EvalError("unbound variable '" + name + "'");
    if (it->second < 0) throw EvalError("variable '" + name + "' must be non-negative");
    impl_->env[slot] = it->second;
  }
  impl_->steps = 0;
  return impl_->eval(impl_->root);
}

std::uint64_t Evaluator::last_steps() const { return impl_->steps; }

const std::vector<std::string>& Evaluator::free_variables() const { return impl_->free_list; }

bool eval_literal(const Formula& f, const Valuation& valuation, const EvalOptions& options) {
  Evaluator evaluator(f, valuation.scalars, options);
  return evaluator.eval(valuation.vars);
}

}  // namespace wildla::logic
