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

// docit2: batch replay of elicitation sessions, fuzzy arithmetic and
// ranking computations, card conversions, plot data and the HTTP service.
//
// Exit codes: 0 success, 2 validation error, 3 protocol error, 4 internal.
// Failures print {"error": {...}} on stderr.

#include <CLI11.hpp>

#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "docit2/elicitation/cards.hpp"
#include "docit2/error.hpp"
#include "docit2/io/codec.hpp"
#include "docit2/io/compute.hpp"
#include "docit2/io/document.hpp"
#include "docit2/mcdm/problem_io.hpp"
#include "docit2/service/service.hpp"

namespace fs = std::filesystem;
using namespace docit2;
using json::Json;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitProtocol = 3;
constexpr int kExitInternal = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kNotFound, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error(ErrorKind::kInternal, "cannot write '" + path + "'");
}

// Files named inside an input resolve against the input's directory.
mcdm::FileReader reader_near(const std::string& input) {
  const fs::path base = fs::path(input).parent_path();
  return [base](const std::string& name) {
    const fs::path p(name);
    return read_file((p.is_absolute() ? p : base / p).string());
  };
}

struct ReplayOptions {
  std::string input;
  std::string output;
  std::string format = "document";
  std::optional<std::int64_t> h_max;
  std::optional<std::size_t> enumeration_cap;
};

elicitation::Session replay(const ReplayOptions& o) {
  const auto text = read_file(o.input);
  if (!o.h_max && !o.enumeration_cap) return io::load_any(text);
  // Overrides change the configuration, so the stored snapshot no longer
  // applies: rebuild from the configuration and the events alone.
  io::EventLog log;
  const auto first = text.substr(0, text.find('\n'));
  if (first.find("\"docit2.events\"") != std::string::npos) {
    log = io::read_event_log(text);
  } else {
    const auto doc = io::parse_json(text);
    log.config = io::config_from_json(json::require(doc, "config", ""), "/config");
    const auto& events = json::as_array(json::require(doc, "events", ""), "/events");
    log.events.assign(events.begin(), events.end());
  }
  if (o.h_max) log.config.h_max = *o.h_max;
  if (o.enumeration_cap) log.config.enumeration_cap = *o.enumeration_cap;
  return elicitation::Session::replay(log.config, log.events);
}

Json replay_report(const elicitation::Session& s) {
  const auto& st = s.state();
  Json labels = Json::object();
  for (const auto& [name, art] : st.labels) {
    Json entry{{"core_support", io::to_json(art.core_support)}, {"family_size", art.family.size()}};
    for (const auto* side : {&art.left, &art.right}) {
      if (!*side) continue;
      Json decimal = Json::array();
      for (const auto& m : (*side)->memberships) decimal.push_back(to_doubles(m));
      entry[std::string(elicitation::to_string((*side)->side))] = {
          {"vertical", (*side)->vertical}, {"memberships", io::to_json(**side)["memberships"]}, {"decimal", decimal}};
    }
    labels[name] = entry;
  }
  return {{"phase", std::string(elicitation::to_string(st.phase))}, {"events", st.audit_log.size()}, {"labels", labels}};
}

int run_replay(const ReplayOptions& o) {
  const auto session = replay(o);
  const std::string out = o.format == "events" ? io::write_event_log(session) : io::save_document(session);
  write_output(o.output, out);
  if (!o.output.empty() && o.output != "-") std::cout << replay_report(session).dump(2) << "\n";
  return 0;
}

struct ComputeOptions {
  std::string input;
  std::string output;
  std::optional<int> order;
};

int run_compute(const ComputeOptions& o) {
  Json expressions = io::parse_json(read_file(o.input));
  if (o.order) {
    auto inject = [&](Json& e) {
      if (e.is_object() && !e.contains("order") && (e.value("op", "") == "order" || e.value("op", "") == "rank")) {
        e["order"] = *o.order;
      }
    };
    if (expressions.is_array()) {
      for (auto& e : expressions) inject(e);
    } else {
      inject(expressions);
    }
  }
  write_output(o.output, io::compute_file(expressions, reader_near(o.input)).dump(2) + "\n");
  return 0;
}

struct RankOptions {
  std::string input;
  std::string output;
  std::string csv;
  std::string knots_dir;
  std::optional<int> order;
};

int run_rank(const RankOptions& o) {
  const auto problem = mcdm::problem_from_json(io::parse_json(read_file(o.input)), reader_near(o.input));
  std::vector<it2::IT2OrderKind> kinds;
  if (o.order) {
    kinds.push_back(io::order_from_json(*o.order, "/order"));
  } else {
    kinds = {it2::IT2OrderKind::kLowerFirst, it2::IT2OrderKind::kUpperFirst};
  }
  std::vector<mcdm::Ranking> rankings;
  for (auto k : kinds) rankings.push_back(mcdm::rank(problem, k));
  std::optional<it2::IT2OrderKind> only;
  if (o.order) only = kinds.front();
  write_output(o.output, mcdm::rank_report(problem, only).dump(2) + "\n");
  if (!o.csv.empty()) write_output(o.csv, mcdm::ranking_csv(rankings));
  if (!o.knots_dir.empty()) {
    fs::create_directories(o.knots_dir);
    for (std::size_t i = 0; i < problem.alternatives.size(); ++i) {
      write_output((fs::path(o.knots_dir) / (problem.alternatives[i] + ".csv")).string(),
                   io::knots_csv(rankings.front().scores[i]));
    }
  }
  return 0;
}

struct CardsOptions {
  std::string values;
  std::optional<int> m;
  std::optional<std::int64_t> h_max;
};

std::string join(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

int run_cards(const CardsOptions& o) {
  std::vector<Rational> values;
  std::stringstream ss(o.values);
  std::string item;
  for (std::size_t i = 0; std::getline(ss, item, ','); ++i) {
    try {
      values.push_back(parse_rational(item));
    } catch (const Error& e) {
      throw Error(e.kind(), e.what(), "/values/" + std::to_string(i));
    }
  }
  if (o.m.has_value() == o.h_max.has_value()) {
    throw Error(ErrorKind::kConfiguration, "give exactly one of --m and --h-max");
  }
  if (o.m) {
    std::cout << join(elicitation::tuple_to_cards(values, *o.m)) << "\n";
  } else {
    const auto fit = elicitation::cards_from_values(values, *o.h_max);
    std::cout << "gaps " << join(fit.gaps) << "\ntotal " << fit.total << "\nobjective " << to_string(fit.objective)
              << "\n";
  }
  return 0;
}

struct PlotOptions {
  std::string input;
  std::string output;
  std::string label;
  std::size_t member = 0;
  bool family = false;
};

int run_plot(const PlotOptions& o) {
  const auto text = read_file(o.input);
  const Json j = io::parse_json(text);
  if (j.is_object() && j.value("schema", "") == io::kSessionSchema) {
    const auto session = io::load_document(text);
    const auto it = session.state().labels.find(o.label);
    if (it == session.state().labels.end()) {
      throw Error(ErrorKind::kNotFound, "no assembled label '" + o.label + "' in the session", "/label");
    }
    if (o.family) {
      if (o.member >= it->second.family.size()) throw Error(ErrorKind::kDomain, "no such family member", "/member");
      write_output(o.output, io::knots_csv(it->second.family[o.member]));
    } else {
      write_output(o.output, io::knots_csv(*it->second.it2));
    }
    return 0;
  }
  if (j.is_object() && j.contains("lower")) {
    write_output(o.output, io::knots_csv(io::it2_from_json(j, "")));
  } else {
    write_output(o.output, io::knots_csv(io::mf_from_json(j, "")));
  }
  return 0;
}

struct ServeOptions {
  service::Options service;
};

service::Service* g_service = nullptr;

int run_serve(const ServeOptions& o) {
  service::Service svc(o.service);
  g_service = &svc;
  std::signal(SIGINT, [](int) { if (g_service) g_service->stop(); });
  std::signal(SIGTERM, [](int) { if (g_service) g_service->stop(); });
  std::cerr << "listening on " << o.service.bind_address << ":" << o.service.port << "\n";
  const bool ok = svc.run();
  g_service = nullptr;
  if (!ok) throw Error(ErrorKind::kConfiguration, "cannot listen on " + o.service.bind_address + ":" + std::to_string(o.service.port));
  return 0;
}

int fail(const Error& e) {
  std::cerr << Json{{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}, {"path", e.path()}}}}.dump()
            << "\n";
  if (e.kind() == ErrorKind::kProtocol) return kExitProtocol;
  if (e.kind() == ErrorKind::kInternal) return kExitInternal;
  return kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"docit2: deck-of-cards elicitation of interval type-2 fuzzy numbers"};
  app.require_subcommand(1);

  ReplayOptions replay_opts;
  auto* replay_cmd = app.add_subcommand("replay", "Replay a session document or event log");
  replay_cmd->add_option("--input,-i", replay_opts.input, "*.docit2.json or *.events.jsonl")->required();
  replay_cmd->add_option("--output,-o", replay_opts.output, "Where to write the document (stdout by default)");
  replay_cmd->add_option("--format", replay_opts.format, "document or events")
      ->check(CLI::IsMember({"document", "events"}));
  replay_cmd->add_option("--h-max", replay_opts.h_max, "Override the card total bound");
  replay_cmd->add_option("--enumeration-cap", replay_opts.enumeration_cap, "Override the hesitation cap");

  ComputeOptions compute_opts;
  auto* compute_cmd = app.add_subcommand("compute", "Evaluate an expression file (add, scale, wa, order, rank)");
  compute_cmd->add_option("--input,-i", compute_opts.input)->required();
  compute_cmd->add_option("--output,-o", compute_opts.output);
  compute_cmd->add_option("--order", compute_opts.order, "IT2 order for order/rank expressions")
      ->check(CLI::IsMember({1, 2}));

  RankOptions rank_opts;
  auto* rank_cmd = app.add_subcommand("rank", "Rank the alternatives of a decision problem");
  rank_cmd->add_option("--input,-i", rank_opts.input)->required();
  rank_cmd->add_option("--output,-o", rank_opts.output, "JSON report");
  rank_cmd->add_option("--csv", rank_opts.csv, "Ranking table");
  rank_cmd->add_option("--knots-dir", rank_opts.knots_dir, "Per-alternative knot tables");
  rank_cmd->add_option("--order", rank_opts.order)->check(CLI::IsMember({1, 2}));

  CardsOptions cards_opts;
  auto* cards_cmd = app.add_subcommand("cards", "Convert values to card counts");
  cards_cmd->add_option("--values", cards_opts.values, "Comma-separated ascending values from 0 to 1")->required();
  cards_cmd->add_option("--m", cards_opts.m, "Decimal digits (tuple to cards)");
  cards_cmd->add_option("--h-max", cards_opts.h_max, "Largest card total (best-fitting gaps)");

  PlotOptions plot_opts;
  auto* plot_cmd = app.add_subcommand("plot-data", "Knot table CSV of a membership function");
  plot_cmd->add_option("--input,-i", plot_opts.input, "Membership function JSON or session document")->required();
  plot_cmd->add_option("--output,-o", plot_opts.output);
  plot_cmd->add_option("--label", plot_opts.label, "Label of a session document");
  plot_cmd->add_option("--member", plot_opts.member, "Family member index");
  plot_cmd->add_flag("--family", plot_opts.family, "Export one family member instead of the envelope");

  ServeOptions serve_opts;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
  serve_cmd->add_option("--port", serve_opts.service.port)->envname("DOCIT2_PORT");
  serve_cmd->add_option("--bind", serve_opts.service.bind_address)->envname("DOCIT2_BIND");
  serve_cmd->add_option("--enumeration-cap", serve_opts.service.enumeration_cap)->envname("DOCIT2_ENUMERATION_CAP");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*replay_cmd) return run_replay(replay_opts);
    if (*compute_cmd) return run_compute(compute_opts);
    if (*rank_cmd) return run_rank(rank_opts);
    if (*cards_cmd) return run_cards(cards_opts);
    if (*plot_cmd) return run_plot(plot_opts);
    if (*serve_cmd) return run_serve(serve_opts);
  } catch (const Error& e) {
    return fail(e);
  } catch (const std::exception& e) {
    return fail(Error(ErrorKind::kInternal, e.what()));
  }
  return 0;
}
