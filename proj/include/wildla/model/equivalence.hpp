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

#ifndef WILDLA_MODEL_EQUIVALENCE_HPP_
#define WILDLA_MODEL_EQUIVALENCE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wildla/bigint.hpp"
#include "wildla/encoder.hpp"

// Pointwise comparison of two evaluation paths, reported one line per
// probed point:
//   CHECK <name> (<x>,<y>,...) <expected> <got> <PASS|FAIL|BUDGET>
namespace wildla::model {

using Point = std::vector<BigInt>;
using Predicate = std::function<bool(const Point&)>;
// Builds a predicate for one worker thread; state inside it is private.
using PredicateFactory = std::function<Predicate()>;

enum class Status { pass, fail, budget };

struct CheckRecord {
  std::string name;
  Point point;
  bool expected = false;
  std::optional<bool> got;  // empty when the budget ran out
  Status status = Status::pass;
};

std::string format_record(const CheckRecord& record);

struct Comparison {
  std::string name;
  std::vector<Point> points;
  PredicateFactory expected;
  PredicateFactory got;
};

struct EquivalenceReport {
  std::vector<CheckRecord> records;

  std::size_t count(Status status) const;
  bool ok() const { return count(Status::fail) == 0 && count(Status::budget) == 0; }
  // First failing record, if any.
  const CheckRecord* first_failure() const;
  void append(const EquivalenceReport& other);
  std::string format() const;
};

// Records come out grouped by comparison in the given order and sorted by
// point within each comparison, independent of the thread count.
EquivalenceReport run_comparisons(const std::vector<Comparison>& comparisons, unsigned threads = 1);

inline constexpr unsigned kSmallPairLimit = 200;

struct EquivalenceDomain {
  // Literal mu and mu2 against their semantic counterparts on [0, box]^3.
  std::optional<std::uint32_t> literal_box;
  bool literal_mu = true;
  bool literal_mu2 = true;
  // Semantic mu and mu2 against z = x y on x, y in [0, L], z in {xy-1, xy, xy+1}.
  bool product = true;
  // Literal V, V0, V1 on [0, a] and pi on [0, a]^2 against predicate_sets;
  // gamma on [0, b] x [0, a] and sigma on [0, c)^2 when a, c <= kSmallPairLimit.
  bool predicates = false;
  std::uint64_t budget = 100'000'000;
  unsigned threads = 1;
};

std::vector<Comparison> equivalence_comparisons(const encoder::WildModel& model, const EquivalenceDomain& domain);
EquivalenceReport equivalence_check(const encoder::WildModel& model, const EquivalenceDomain& domain);

// Points of [0, n]^k in lexicographic order.
std::vector<Point> grid(std::uint32_t n, std::size_t k);

}  // namespace wildla::model

#endif  // WILDLA_MODEL_EQUIVALENCE_HPP_
