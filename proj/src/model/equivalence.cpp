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

#include "wildla/model/equivalence.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "wildla/logic/builders.hpp"
#include "wildla/logic/eval.hpp"
#include "wildla/model/semantic.hpp"
#include "wildla/model/two_scalar.hpp"

namespace wildla::model {

namespace {

const char* status_text(Status s) {
  switch (s) {
    case Status::pass:
      return "PASS";
    case Status::fail:
      return "FAIL";
    case Status::budget:
      return "BUDGET";
  }
  return "?";
}

std::string point_text(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += to_decimal(p[i]);
  }
  return out + ")";
}

void run_one(const Comparison& cmp, unsigned threads, std::vector<CheckRecord>& out) {
  std::vector<Point> points = cmp.points;
  std::sort(points.begin(), points.end());
  std::vector<CheckRecord> records(points.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(points.size())));
  std::exception_ptr error;
  std::mutex error_mutex;

  auto work = [&](unsigned id) {
    try {
      Predicate expected = cmp.expected();
      Predicate got = cmp.got();
      for (std::size_t i = id; i < points.size(); i += workers) {
        CheckRecord& rec = records[i];
        rec.name = cmp.name;
        rec.point = points[i];
        rec.expected = expected(points[i]);
        try {
          rec.got = got(points[i]);
          rec.status = *rec.got == rec.expected ? Status::pass : Status::fail;
        } catch (const logic::BudgetExceeded&) {
          rec.got.reset();
          rec.status = Status::budget;
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  out.insert(out.end(), std::make_move_iterator(records.begin()), std::make_move_iterator(records.end()));
}

PredicateFactory literal(const logic::Formula& f, std::vector<BigInt> scalars, std::vector<std::string> vars,
                         std::uint64_t budget) {
  return [f, scalars = std::move(scalars), vars = std::move(vars), budget]() -> Predicate {
    logic::EvalOptions opts;
    opts.budget = budget;
    auto ev = std::make_shared<logic::Evaluator>(f, scalars, opts);
    return [ev, vars](const Point& p) {
      std::map<std::string, BigInt> env;
      for (std::size_t i = 0; i < vars.size(); ++i) env[vars[i]] = p[i];
      return ev->eval(env);
    };
  };
}

template <class Fn>
PredicateFactory semantic(Fn fn) {
  return [fn]() -> Predicate { return fn; };
}

}  // namespace

std::string format_record(const CheckRecord& r) {
  std::ostringstream os;
  os << "CHECK " << r.name << ' ' << point_text(r.point) << ' ' << (r.expected ? "true" : "false") << ' '
     << (r.got ? (*r.got ? "true" : "false") : "budget") << ' ' << status_text(r.status);
  return os.str();
}

std::size_t EquivalenceReport::count(Status status) const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [&](const CheckRecord& r) { return r.status == status; }));
}

const CheckRecord* EquivalenceReport::first_failure() const {
  for (const CheckRecord& r : records) {
    if (r.status != Status::pass) return &r;
  }
  return nullptr;
}

void EquivalenceReport::append(const EquivalenceReport& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
}

std::string EquivalenceReport::format() const {
  std::string out;
  for (const CheckRecord& r : records) out += format_record(r) + "\n";
  return out;
}

EquivalenceReport run_comparisons(const std::vector<Comparison>& comparisons, unsigned threads) {
  EquivalenceReport report;
  for (const Comparison& cmp : comparisons) run_one(cmp, threads, report.records);
  return report;
}

std::vector<Point> grid(std::uint32_t n, std::size_t k) {
  std::vector<Point> out;
  Point p(k, BigInt(0));
  if (k == 0) return {p};
  while (true) {
    out.push_back(p);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (p[i] < n) {
        ++p[i];
        for (std::size_t j = i + 1; j < k; ++j) p[j] = 0;
        break;
      }
      if (i == 0) return out;
    }
  }
}

std::vector<Comparison> equivalence_comparisons(const encoder::WildModel& model, const EquivalenceDomain& domain) {
  std::vector<Comparison> out;
  auto sem = std::make_shared<SemanticModel>(model);
  auto two = std::make_shared<TwoScalarSemantics>(TwoScalarView::of(model));
  const std::vector<BigInt> abc{model.a(), model.b(), model.c()};
  const std::vector<BigInt> ad{model.alpha, model.delta};
  const std::vector<std::string> xyz{"x", "y", "z"};

  if (domain.product) {
    std::vector<Point> pts;
    for (std::uint32_t x = 0; x <= model.L; ++x) {
      for (std::uint32_t y = 0; y <= model.L; ++y) {
        const BigInt xy = BigInt(x) * y;
        for (int d = -1; d <= 1; ++d) {
          if (xy + d >= 0) pts.push_back({BigInt(x), BigInt(y), xy + d});
        }
      }
    }
    auto product = semantic([](const Point& p) { return p[2] == p[0] * p[1]; });
    out.push_back({"mu.semantic", pts, product,
                   semantic([sem](const Point& p) { return sem->mu(p[0], p[1], p[2]); })});
    out.push_back({"mu2.semantic", pts, product,
                   semantic([two](const Point& p) { return two->mu(p[0], p[1], p[2]); })});
  }
  if (domain.literal_box) {
    const std::vector<Point> pts = grid(*domain.literal_box, 3);
    if (domain.literal_mu) {
      out.push_back({"mu.literal", pts, semantic([sem](const Point& p) { return sem->mu(p[0], p[1], p[2]); }),
                     literal(logic::build_mu_family().mu, abc, xyz, domain.budget)});
    }
    if (domain.literal_mu2) {
      out.push_back({"mu2.literal", pts, semantic([two](const Point& p) { return two->mu(p[0], p[1], p[2]); }),
                     literal(logic::build_mu2(), ad, xyz, domain.budget)});
    }
  }
  if (domain.predicates) {
    if (!model.a().fits_uint_p()) throw std::invalid_argument("predicate comparison needs a small model");
    const auto a = static_cast<std::uint32_t>(model.a().get_ui());
    const logic::MuFamily fam = logic::build_mu_family();
    const std::vector<Point> line = grid(a, 1);
    out.push_back({"V.literal", line, semantic([sem](const Point& p) { return sem->V(p[0]); }),
                   literal(fam.V, abc, {"v"}, domain.budget)});
    out.push_back({"V0.literal", line, semantic([sem](const Point& p) { return sem->V0(p[0]); }),
                   literal(fam.V0, abc, {"v"}, domain.budget)});
    out.push_back({"V1.literal", line, semantic([sem](const Point& p) { return sem->V1(p[0]); }),
                   literal(fam.V1, abc, {"v"}, domain.budget)});
    out.push_back({"pi.literal", grid(a, 2), semantic([sem](const Point& p) { return sem->pi(p[0], p[1]); }),
                   literal(fam.pi, abc, {"v", "v'"}, domain.budget)});
    if (model.a() <= kSmallPairLimit) {
      std::vector<Point> uv;
      for (const Point& p : grid(a, 2)) {
        if (p[0] <= model.b()) uv.push_back(p);
      }
      out.push_back({"gamma.literal", uv, semantic([sem](const Point& p) { return sem->gamma(p[0], p[1]); }),
                     literal(fam.gamma, abc, {"u", "v"}, domain.budget)});
    }
    if (model.c() <= kSmallPairLimit) {
      const auto c = static_cast<std::uint32_t>(model.c().get_ui());
      out.push_back({"sigma.literal", grid(c - 1, 2),
                     semantic([sem](const Point& p) { return sem->sigma(p[0], p[1]); }),
                     literal(fam.sigma, abc, {"x", "y"}, domain.budget)});
    }
  }
  return out;
}

EquivalenceReport equivalence_check(const encoder::WildModel& model, const EquivalenceDomain& domain) {
  return run_comparisons(equivalence_comparisons(model, domain), domain.threads);
}

}  // namespace wildla::model
