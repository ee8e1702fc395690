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

#ifndef WILDLA_LOGIC_PARSER_HPP_
#define WILDLA_LOGIC_PARSER_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wildla/logic/ast.hpp"

// Text form of formulas, parenthesized prefix notation:
//
//   term    := var | N | (c N) | (+ term term) | (s K term)
//   formula := (le t t) | (eq t t) | (and f f) | (or f f) | (not f) | (imp f f)
//            | (exists v lo bound incl f) | (forall v lo bound incl f)
//            | (exists v bound f) | (forall v bound f)      ; lo = 0, incl = lt
//            | (absdlt t t t t) | (absdle t t t t)
//            | (eqmod t t t) | (eqdiv t t t) | (neqp t t t t)
//
// lo is 0 or 1, incl is `le` or `lt`. Variables match [A-Za-z_][A-Za-z0-9_']*.
// The printer always emits the long quantifier form and (c N) constants,
// separated by single spaces.
namespace wildla::logic {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

Formula parse_formula(std::string_view text);
Term parse_term(std::string_view text);

std::string print(const Term& t);
std::string print(const Formula& f);

}  // namespace wildla::logic

#endif  // WILDLA_LOGIC_PARSER_HPP_
