// Copyright 2026 The docit2 Authors
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

// Typed access to JSON payloads. Every failure is a docit2::Error whose path
// points at the offending field.

#ifndef DOCIT2_JSON_FIELDS_HPP_
#define DOCIT2_JSON_FIELDS_HPP_

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "docit2/error.hpp"
#include "docit2/rational.hpp"

namespace docit2::json {

using Json = nlohmann::json;

inline std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
inline std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

[[noreturn]] inline void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::kParse, what + " at " + (path.empty() ? "/" : path), path);
}

inline const Json& require(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(child(path, key), "missing field");
  return *it;
}

inline const Json* optional(const Json& obj, const std::string& key) {
  if (!obj.is_object()) return nullptr;
  const auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

inline const Json& as_array(const Json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array");
  return v;
}

inline double as_double(const Json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  return v.get<double>();
}

inline std::int64_t as_int(const Json& v, const std::string& path) {
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (d == static_cast<double>(static_cast<std::int64_t>(d))) return static_cast<std::int64_t>(d);
  }
  fail(path, "expected an integer");
}

inline std::string as_string(const Json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

/// A number (read as the decimal it prints as) or a "p/q" string.
inline Rational as_rational(const Json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_number()) return rational_from_shortest_decimal(v.get<double>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected a number or a rational string");
}

inline std::vector<double> as_doubles(const Json& v, const std::string& path) {
  std::vector<double> out;
  for (std::size_t i = 0; i < as_array(v, path).size(); ++i) out.push_back(as_double(v[i], child(path, i)));
  return out;
}

inline std::vector<Rational> as_rationals(const Json& v, const std::string& path) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < as_array(v, path).size(); ++i) out.push_back(as_rational(v[i], child(path, i)));
  return out;
}

inline std::vector<std::string> as_strings(const Json& v, const std::string& path) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < as_array(v, path).size(); ++i) out.push_back(as_string(v[i], child(path, i)));
  return out;
}

inline Json rationals_to_json(const std::vector<Rational>& qs) {
  Json out = Json::array();
  for (const auto& q : qs) out.push_back(to_string(q));
  return out;
}

}  // namespace docit2::json

#endif  // DOCIT2_JSON_FIELDS_HPP_
