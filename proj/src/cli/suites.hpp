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

#ifndef WILDLA_SRC_CLI_SUITES_HPP_
#define WILDLA_SRC_CLI_SUITES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "wildla/contfrac.hpp"
#include "wildla/encoder.hpp"
#include "wildla/model/equivalence.hpp"

namespace wildla::cli {

// Models with a above this are too large for literal evaluation.
inline constexpr unsigned kLiteralLimit = 2000;

struct SuiteOptions {
  std::uint64_t budget = 100'000'000;
  unsigned threads = 1;
};

struct SuiteResult {
  model::EquivalenceReport report;
  std::vector<std::string> summary;

  void append(const SuiteResult& other);
};

// Structural checks of a (possibly hand-edited) model document.
SuiteResult consistency_suite(const encoder::WildModel& m);
SuiteResult mult_suite(const encoder::WildModel& m, const SuiteOptions& opts);
SuiteResult equiv_suite(const encoder::WildModel& m, const SuiteOptions& opts);
SuiteResult two_scalar_suite(const encoder::WildModel& m, const SuiteOptions& opts);
// a1 = 1, so u0 = u1 = 1 and the convergent (1, a0) is beaten by (1, a0 + 1).
bool degenerate_zeroth(const contfrac::ContinuedFraction& cf);

// Needs no model: scans small pairs (a, b).
SuiteResult cf_suite(const SuiteOptions& opts);

}  // namespace wildla::cli

#endif  // WILDLA_SRC_CLI_SUITES_HPP_
