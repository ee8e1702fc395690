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

#include "wildla/model_json.hpp"

#include <json.hpp>

#include <vector>

namespace wildla::encoder {

using json = nlohmann::ordered_json;

namespace {

json big_list(const std::vector<BigInt>& xs) {
  json arr = json::array();
  for (const BigInt& x : xs) arr.push_back(to_decimal(x));
  return arr;
}

BigInt big_field(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_string()) {
    throw ModelFormatError(std::string("field '") + key + "' must be a decimal string");
  }
  try {
    return parse_decimal(doc.at(key).get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ModelFormatError(std::string("field '") + key + "': " + e.what());
  }
}

std::vector<BigInt> big_list_field(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_array()) {
    throw ModelFormatError(std::string("field '") + key + "' must be an array");
  }
  std::vector<BigInt> out;
  for (const json& item : doc.at(key)) {
    if (!item.is_string()) {
      throw ModelFormatError(std::string("entries of '") + key + "' must be decimal strings");
    }
    try {
      out.push_back(parse_decimal(item.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw ModelFormatError(std::string("field '") + key + "': " + e.what());
    }
  }
  return out;
}

}  // namespace

std::string serialize_model(const WildModel& model) {
  json doc;
  doc["version"] = kModelFormatVersion;
  doc["L"] = model.L;
  doc["c"] = to_decimal(model.c());
  doc["z"] = big_list(model.seq.z);
  doc["coeffs"] = big_list(model.cf.coeffs());
  doc["a"] = to_decimal(model.a());
  doc["b"] = to_decimal(model.b());
  doc["alpha"] = to_decimal(model.alpha);
  doc["delta"] = to_decimal(model.delta);
  return doc.dump(2) + "\n";
}

WildModel deserialize_model(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ModelFormatError(std::string("model document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ModelFormatError("model document must be a JSON object");
  if (!doc.contains("version") || !doc.at("version").is_number_integer()) {
    throw ModelFormatError("model document has no integer 'version'");
  }
  const auto version = doc.at("version").get<std::int64_t>();
  if (version != kModelFormatVersion) {
    throw ModelFormatError("unsupported model format version " + std::to_string(version));
  }
  if (!doc.contains("L") || !doc.at("L").is_number_unsigned()) {
    throw ModelFormatError("field 'L' must be a non-negative integer");
  }
  const auto L = doc.at("L").get<std::uint64_t>();
  if (L > 0xffffffffULL) throw ModelFormatError("field 'L' is out of range");

  TargetSequence seq{big_list_field(doc, "z"), big_field(doc, "c")};
  contfrac::CoprimePair pair{big_field(doc, "a"), big_field(doc, "b")};
  std::vector<BigInt> coeffs = big_list_field(doc, "coeffs");
  std::optional<contfrac::ContinuedFraction> cf;
  try {
    cf.emplace(std::move(coeffs));
  } catch (const std::invalid_argument& e) {
    throw ModelFormatError(std::string("field 'coeffs': ") + e.what());
  }
  contfrac::ConvergentTable table = contfrac::convergents(*cf, pair);
  return WildModel{static_cast<std::uint32_t>(L), std::move(seq), std::move(*cf), std::move(table),
                   std::move(pair), big_field(doc, "alpha"), big_field(doc, "delta")};
}

}  // namespace wildla::encoder
