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

#include "docit2/io/compute.hpp"

#include "docit2/error.hpp"
#include "docit2/io/codec.hpp"

namespace docit2::io {

namespace {

bool is_it2(const Json& j) { return j.is_object() && j.contains("lower"); }

Json order_result(const Json& payload) {
  const auto& a = json::require(payload, "a", "");
  const auto& b = json::require(payload, "b", "");
  const auto* requested = json::optional(payload, "order");
  if (!is_it2(a) && !is_it2(b) && !requested) {
    return {{"result", to_json(it2::t1_admissible_order(mf_from_json(a, "/a"), mf_from_json(b, "/b")))}};
  }
  const auto x = it2_from_json(a, "/a");
  const auto y = it2_from_json(b, "/b");
  if (requested) {
    const auto kind = order_from_json(*requested, "/order");
    return {{"order", mcdm::order_name(kind)}, {"result", to_json(it2::it2_compare(kind, x, y))}};
  }
  return {{"order_1", to_json(it2::it2_order_1(x, y))}, {"order_2", to_json(it2::it2_order_2(x, y))}};
}

}  // namespace

Json compute(std::string_view op, const Json& payload, const mcdm::FileReader& reader) {
  if (!payload.is_object()) json::fail("", "expected a JSON object");
  if (op == "add") {
    const auto& a = json::require(payload, "a", "");
    const auto& b = json::require(payload, "b", "");
    if (is_it2(a) || is_it2(b)) return {{"result", to_json(it2::it2_add(it2_from_json(a, "/a"), it2_from_json(b, "/b")))}};
    return {{"result", to_json(fuzzy::add(mf_from_json(a, "/a"), mf_from_json(b, "/b")))}};
  }
  if (op == "scale") {
    const double r = json::as_double(json::require(payload, "r", ""), "/r");
    const auto& a = json::require(payload, "a", "");
    try {
      if (is_it2(a)) return {{"result", to_json(it2::it2_scale(r, it2_from_json(a, "/a")))}};
      return {{"result", to_json(fuzzy::scale(r, mf_from_json(a, "/a")))}};
    } catch (const Error& e) {
      if (!e.path().empty()) throw;
      throw Error(e.kind(), e.what(), "/r");
    }
  }
  if (op == "wa") {
    const auto& items = json::as_array(json::require(payload, "items", ""), "/items");
    std::vector<double> weights;
    for (const auto& q : json::as_rationals(json::require(payload, "weights", ""), "/weights")) {
      weights.push_back(to_double(q));
    }
    bool any_it2 = false;
    for (const auto& i : items) any_it2 = any_it2 || is_it2(i);
    try {
      if (any_it2) {
        std::vector<it2::IT2MF> mfs;
        for (std::size_t i = 0; i < items.size(); ++i) mfs.push_back(it2_from_json(items[i], json::child("/items", i)));
        return {{"result", to_json(it2::it2_weighted_average(mfs, weights))}};
      }
      std::vector<fuzzy::PiecewiseMF> mfs;
      for (std::size_t i = 0; i < items.size(); ++i) mfs.push_back(mf_from_json(items[i], json::child("/items", i)));
      return {{"result", to_json(fuzzy::weighted_average(mfs, weights))}};
    } catch (const Error& e) {
      if (!e.path().empty()) throw;
      throw Error(e.kind(), e.what(), "/weights");
    }
  }
  if (op == "order") return order_result(payload);
  if (op == "rank") {
    std::optional<it2::IT2OrderKind> order;
    if (const auto* o = json::optional(payload, "order")) order = order_from_json(*o, "/order");
    return mcdm::rank_report(mcdm::problem_from_json(payload, reader), order);
  }
  throw Error(ErrorKind::kNotFound, "unknown computation '" + std::string(op) + "'");
}

Json compute_file(const Json& expressions, const mcdm::FileReader& reader) {
  const bool single = expressions.is_object();
  const Json list = single ? Json::array({expressions}) : expressions;
  if (!list.is_array()) json::fail("", "expected an expression object or an array of them");
  Json out = Json::array();
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto path = single ? std::string() : json::child("", i);
    try {
      const auto op = json::as_string(json::require(list[i], "op", ""), "/op");
      Json payload = list[i];
      payload.erase("op");
      out.push_back(compute(op, payload, reader));
    } catch (const Error& e) {
      throw Error(e.kind(), e.what(), path + e.path());
    }
  }
  return single ? out[0] : out;
}

}  // namespace docit2::io
