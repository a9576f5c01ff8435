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

#include "docit2/mcdm/problem_io.hpp"

#include "docit2/error.hpp"
#include "docit2/io/codec.hpp"
#include "docit2/io/document.hpp"

namespace docit2::mcdm {

using json::Json;

namespace {

LinguisticScale scale_from_session(const std::string& name, const elicitation::Session& s) {
  LinguisticScale scale;
  scale.name = name;
  scale.labels = s.config().labels;
  scale.values = s.state().scale;
  for (const auto& [label, art] : s.state().labels) scale.bindings.emplace(label, *art.it2);
  return scale;
}

LinguisticScale scale_from_json(const std::string& name, const Json& j, const std::string& path,
                                const FileReader& reader) {
  try {
    if (const auto* file = json::optional(j, "session")) {
      if (!reader) throw Error(ErrorKind::kConfiguration, "session file references are not available here");
      return scale_from_session(name, io::load_any(reader(json::as_string(*file, path + "/session"))));
    }
    if (const auto* doc = json::optional(j, "document")) return scale_from_session(name, io::load_document(doc->dump()));
  } catch (const Error& e) {
    throw Error(e.kind(), "scale '" + name + "': " + e.what(), path + e.path());
  }
  LinguisticScale scale;
  scale.name = name;
  scale.labels = json::as_strings(json::require(j, "labels", path), path + "/labels");
  if (const auto* b = json::optional(j, "bindings")) {
    if (!b->is_object()) json::fail(path + "/bindings", "expected an object");
    for (const auto& [label, mf] : b->items()) {
      scale.bindings.emplace(label, io::it2_from_json(mf, path + "/bindings/" + label));
    }
  }
  return scale;
}

}  // namespace

std::string_view order_name(it2::IT2OrderKind k) {
  return k == it2::IT2OrderKind::kLowerFirst ? "order_1" : "order_2";
}

DecisionProblem problem_from_json(const Json& j, const FileReader& reader) {
  if (!j.is_object()) json::fail("", "expected a decision problem object");
  DecisionProblem p;
  p.alternatives = json::as_strings(json::require(j, "alternatives", ""), "/alternatives");

  std::map<std::string, std::size_t> scale_index;
  if (const auto* scales = json::optional(j, "scales")) {
    if (!scales->is_object()) json::fail("/scales", "expected an object");
    for (const auto& [name, body] : scales->items()) {
      scale_index[name] = p.scales.size();
      p.scales.push_back(scale_from_json(name, body, "/scales/" + name, reader));
    }
  }

  const auto& criteria = json::as_array(json::require(j, "criteria", ""), "/criteria");
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto path = json::child("/criteria", k);
    Criterion c;
    c.name = json::as_string(json::require(criteria[k], "name", path), path + "/name");
    if (const auto* s = json::optional(criteria[k], "scale")) {
      const auto name = json::as_string(*s, path + "/scale");
      const auto it = scale_index.find(name);
      if (it == scale_index.end()) throw Error(ErrorKind::kConfiguration, "unknown scale '" + name + "'", path + "/scale");
      c.scale = it->second;
    }
    if (const auto* r = json::optional(criteria[k], "range")) c.range = io::interval_from_json(*r, path + "/range");
    p.criteria.push_back(std::move(c));
  }

  const auto& rows = json::as_array(json::require(j, "matrix", ""), "/matrix");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto rpath = json::child("/matrix", i);
    std::vector<Cell> row;
    for (std::size_t k = 0; k < json::as_array(rows[i], rpath).size(); ++k) {
      const auto& v = rows[i][k];
      const auto cpath = json::child(rpath, k);
      if (v.is_string()) {
        row.emplace_back(v.get<std::string>());
      } else if (v.is_number()) {
        row.emplace_back(v.get<double>());
      } else {
        row.emplace_back(io::it2_from_json(v, cpath));
      }
    }
    p.matrix.push_back(std::move(row));
  }

  const auto& w = json::require(j, "weights", "");
  if (w.is_object()) {
    const auto chain = io::chain_from_json(json::require(w, "cards", "/weights"), "/weights/cards");
    bool worst_is_zero = true;
    if (const auto* z = json::optional(w, "worst_is_zero")) {
      if (!z->is_boolean()) json::fail("/weights/worst_is_zero", "expected a boolean");
      worst_is_zero = z->get<bool>();
    }
    p.weights = weights_for_criteria(p.criteria, chain, worst_is_zero);
  } else {
    for (const auto& q : json::as_rationals(w, "/weights")) p.weights.push_back(to_double(q));
  }
  p.validate();
  return p;
}

Json ranking_to_json(const Ranking& r) {
  Json classes = Json::array();
  std::size_t position = 1;
  for (const auto& cls : r.classes) {
    classes.push_back({{"rank", position}, {"alternatives", cls}});
    position += cls.size();
  }
  return {{"order", order_name(r.order)}, {"ranking", classes}};
}

Json rank_report(const DecisionProblem& p, std::optional<it2::IT2OrderKind> order) {
  std::vector<it2::IT2OrderKind> kinds;
  if (order) {
    kinds.push_back(*order);
  } else {
    kinds = {it2::IT2OrderKind::kLowerFirst, it2::IT2OrderKind::kUpperFirst};
  }
  Json rankings = Json::array();
  std::vector<it2::IT2MF> scores;
  for (auto k : kinds) {
    auto r = rank(p, k);
    rankings.push_back(ranking_to_json(r));
    scores = std::move(r.scores);
  }
  Json s = Json::object();
  for (std::size_t i = 0; i < p.alternatives.size(); ++i) s[p.alternatives[i]] = io::to_json(scores[i]);
  return {{"rankings", rankings}, {"scores", s}, {"weights", p.weights}};
}

std::string ranking_csv(std::span<const Ranking> rankings) {
  std::string out = "order,rank,alternative\n";
  for (const auto& r : rankings) {
    std::size_t position = 1;
    for (const auto& cls : r.classes) {
      for (const auto& a : cls) out += std::string(order_name(r.order)) + "," + std::to_string(position) + "," + a + "\n";
      position += cls.size();
    }
  }
  return out;
}

}  // namespace docit2::mcdm
