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

#include "wildla/logic/transform.hpp"

#include <stdexcept>

#include "wildla/logic/parser.hpp"

namespace wildla::logic {

namespace {

class FreshNames {
 public:
  explicit FreshNames(std::set<std::string> taken) : taken_(std::move(taken)) {}

  std::string next(const std::string& base) {
    if (taken_.insert(base).second) return base;
    for (unsigned i = 1;; ++i) {
      std::string name = base + "_" + std::to_string(i);
      if (taken_.insert(name).second) return name;
    }
  }

 private:
  std::set<std::string> taken_;
};

template <class Fn>
Formula map_children(const Formula& f, const Fn& fn) {
  const auto& v = f.node().v;
  if (const auto* n = std::get_if<NotF>(&v)) return lnot(fn(n->arg));
  if (const auto* b = std::get_if<BinaryF>(&v)) {
    Formula lhs = fn(b->lhs);
    Formula rhs = fn(b->rhs);
    if (b->op == Connective::conj) return land(lhs, rhs);
    if (b->op == Connective::disj) return lor(lhs, rhs);
    return limp(lhs, rhs);
  }
  if (const auto* q = std::get_if<QuantF>(&v)) {
    return quant(q->kind, q->var, q->lower, q->bound, q->inclusive, fn(q->body));
  }
  return f;
}

Formula expand(const Formula& f, FreshNames& names) {
  const auto& v = f.node().v;
  if (const auto* d = std::get_if<AbsDiffF>(&v)) {
    const auto& [t0, t1, t2, t3] = d->t;
    auto cmp = [&](Term lhs, Term rhs) { return d->strict ? lt(lhs, rhs) : le(lhs, rhs); };
    return lor({
        land({le(t1, t0), le(t3, t2), cmp(add(t0, t3), add(t2, t1))}),
        land({le(t1, t0), le(t2, t3), cmp(add(t0, t2), add(t3, t1))}),
        land({le(t0, t1), le(t3, t2), cmp(add(t1, t3), add(t2, t0))}),
        land({le(t0, t1), le(t2, t3), cmp(add(t1, t2), add(t3, t0))}),
    });
  }
  if (const auto* m = std::get_if<EqModF>(&v)) {
    const std::string k = names.next("m");
    return land(lt(m->z, m->modulus),
                exists(k, 0, m->w, true, eq(m->w, add(m->z, times(m->modulus, var(k))))));
  }
  if (const auto* e = std::get_if<EqDivF>(&v)) {
    return land(le(times(e->divisor, e->w), e->u), lt(e->u, times(e->divisor, add(e->w, num(1)))));
  }
  if (const auto* p = std::get_if<NeqPairF>(&v)) {
    return lnot(land(eq(p->t[0], p->t[2]), eq(p->t[1], p->t[3])));
  }
  return map_children(f, [&](const Formula& child) { return expand(child, names); });
}

Formula normalize(const Formula& f, const Term& bound) {
  const auto& v = f.node().v;
  if (const auto* q = std::get_if<QuantF>(&v)) {
    Formula body = normalize(q->body, bound);
    if (q->lower == 0 && !q->inclusive && q->bound == bound) {
      return quant(q->kind, q->var, 0, bound, false, body);
    }
    const Term x = var(q->var);
    Formula guard = q->inclusive ? le(x, q->bound) : lt(x, q->bound);
    if (q->lower == 1) guard = land(le(num(1), x), guard);
    Formula guarded = q->kind == QuantKind::exists ? land(guard, body) : limp(guard, body);
    return quant(q->kind, q->var, 0, bound, false, guarded);
  }
  return map_children(f, [&](const Formula& child) { return normalize(child, bound); });
}

void collect_bounds(const Formula& f, const std::set<std::string>& params,
                    const std::optional<std::vector<BigInt>>& scalars, BoundednessReport& report) {
  const auto& v = f.node().v;
  if (const auto* q = std::get_if<QuantF>(&v)) {
    BoundEntry entry{q->var, print(q->bound), is_closed(q->bound), true, std::nullopt};
    for (const std::string& name : free_vars(q->bound)) {
      if (params.count(name)) entry.parameter_free = false;
    }
    if (entry.closed && scalars) entry.value = eval_closed(q->bound, *scalars);
    if (!entry.closed) report.constant = false;
    if (!entry.parameter_free) report.bounded = false;
    report.entries.push_back(std::move(entry));
    collect_bounds(q->body, params, scalars, report);
  } else if (const auto* n = std::get_if<NotF>(&v)) {
    collect_bounds(n->arg, params, scalars, report);
  } else if (const auto* b = std::get_if<BinaryF>(&v)) {
    collect_bounds(b->lhs, params, scalars, report);
    collect_bounds(b->rhs, params, scalars, report);
  }
}

void collect_scalars(const Term& t, std::set<std::size_t>& out) {
  const auto& v = t.node().v;
  if (const auto* s = std::get_if<SumTerm>(&v)) {
    collect_scalars(s->lhs, out);
    collect_scalars(s->rhs, out);
  } else if (const auto* k = std::get_if<ScalarTerm>(&v)) {
    out.insert(k->index);
    collect_scalars(k->arg, out);
  }
}

void collect_scalars(const Formula& f, std::set<std::size_t>& out) {
  const auto& v = f.node().v;
  if (const auto* a = std::get_if<AtomF>(&v)) {
    collect_scalars(a->lhs, out);
    collect_scalars(a->rhs, out);
  } else if (const auto* n = std::get_if<NotF>(&v)) {
    collect_scalars(n->arg, out);
  } else if (const auto* b = std::get_if<BinaryF>(&v)) {
    collect_scalars(b->lhs, out);
    collect_scalars(b->rhs, out);
  } else if (const auto* q = std::get_if<QuantF>(&v)) {
    collect_scalars(q->bound, out);
    collect_scalars(q->body, out);
  }
}

}  // namespace

Term times(const Term& closed, const Term& m) {
  const auto& v = closed.node().v;
  if (std::holds_alternative<VarTerm>(v)) {
    throw std::invalid_argument("times: multiplier term must be closed");
  }
  if (const auto* k = std::get_if<ConstTerm>(&v)) {
    if (k->value == 0) return num(0);
    if (k->value > 256) throw std::invalid_argument("times: constant multiplier too large to unfold");
    Term acc = m;
    for (unsigned long i = 1; i < k->value.get_ui(); ++i) acc = add(acc, m);
    return acc;
  }
  if (const auto* s = std::get_if<SumTerm>(&v)) return add(times(s->lhs, m), times(s->rhs, m));
  const auto& sc = std::get<ScalarTerm>(v);
  return scal(sc.index, times(sc.arg, m));
}

Formula expand_sugar(const Formula& f) {
  FreshNames names(all_vars(f));
  return expand(f, names);
}

Formula normalize_bounds(const Formula& f, const Term& bound) {
  if (!is_closed(bound)) throw std::invalid_argument("normalize_bounds: bound must be a closed term");
  return normalize(f, bound);
}

BigInt eval_closed(const Term& t, std::span<const BigInt> scalars) {
  const auto& v = t.node().v;
  if (const auto* x = std::get_if<VarTerm>(&v)) {
    throw std::invalid_argument("eval_closed: term has free variable " + x->name);
  }
  if (const auto* k = std::get_if<ConstTerm>(&v)) return k->value;
  if (const auto* s = std::get_if<SumTerm>(&v)) return eval_closed(s->lhs, scalars) + eval_closed(s->rhs, scalars);
  const auto& sc = std::get<ScalarTerm>(v);
  if (sc.index >= scalars.size()) throw std::invalid_argument("eval_closed: scalar index out of range");
  return scalars[sc.index] * eval_closed(sc.arg, scalars);
}

BoundednessReport check_bounded(const Formula& f, std::optional<std::vector<BigInt>> scalars) {
  BoundednessReport report;
  const Formula core = expand_sugar(f);
  collect_bounds(core, free_vars(core), scalars, report);
  return report;
}

std::set<std::size_t> signature_check(const Formula& f) {
  std::set<std::size_t> out;
  collect_scalars(expand_sugar(f), out);
  return out;
}

}  // namespace wildla::logic
