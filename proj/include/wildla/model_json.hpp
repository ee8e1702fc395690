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

#ifndef WILDLA_MODEL_JSON_HPP_
#define WILDLA_MODEL_JSON_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include "wildla/encoder.hpp"

// Model documents:
//   {"version": 1, "L": <int>, "c": "<dec>", "z": ["<dec>", ...],
//    "coeffs": ["<dec>", ...], "a": "<dec>", "b": "<dec>",
//    "alpha": "<dec>", "delta": "<dec>"}
// Big integers are decimal strings. serialize(deserialize(s)) == s for every
// document this library writes.
namespace wildla::encoder {

inline constexpr int kModelFormatVersion = 1;

class ModelFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string serialize_model(const WildModel& model);

// Structural parse only: values are stored as written and no encoding
// invariant is checked, so that verification can report inconsistencies
// with a witness. Throws ModelFormatError on malformed documents, unknown
// versions, or coefficient lists that are not canonical.
WildModel deserialize_model(std::string_view text);

}  // namespace wildla::encoder

#endif  // WILDLA_MODEL_JSON_HPP_
