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

#include "docit2/service/service.hpp"

#include <httplib.h>

#include <regex>

#include "docit2/io/codec.hpp"
#include "docit2/io/compute.hpp"
#include "docit2/io/document.hpp"

namespace docit2::service {

using json::Json;

namespace {

Response json_response(int status, const Json& body) { return {status, "application/json", body.dump() + "\n"}; }

Response error_response(const Error& e, const Json& extra = Json::object()) {
  Json err{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}, {"path", e.path()}};
  err.update(extra);
  return json_response(http_status(e.kind()), Json{{"error", err}});
}

}  // namespace

int http_status(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotFound: return 404;
    case ErrorKind::kProtocol: return 409;
    case ErrorKind::kInternal: return 500;
    default: return 422;
  }
}

Service::Service(Options options)
    : options_(std::move(options)), server_(std::make_unique<httplib::Server>()) {
  install(*server_);
}

Service::~Service() = default;

std::shared_ptr<Service::Entry> Service::find(const std::string& id) {
  std::lock_guard lock(registry_mutex_);
  const auto it = sessions_.find(id);
  if (it == sessions_.end()) throw Error(ErrorKind::kNotFound, "no session '" + id + "'");
  return it->second;
}

Response Service::create(const std::string& body) {
  Json raw = io::parse_json(body);
  if (options_.enumeration_cap && raw.is_object() && !json::optional(raw, "enumeration_cap")) {
    raw["enumeration_cap"] = *options_.enumeration_cap;
  }
  auto entry = std::make_shared<Entry>(elicitation::Session(io::config_from_json(raw, "")));
  const Json view = io::session_view(entry->session);
  std::string id;
  {
    std::lock_guard lock(registry_mutex_);
    id = "s" + std::to_string(next_id_++);
    sessions_.emplace(id, std::move(entry));
  }
  return json_response(201, Json{{"id", id}, {"view", view}});
}

Response Service::view(const std::string& id) {
  const auto entry = find(id);
  std::lock_guard lock(entry->mutex);
  return json_response(200, io::session_view(entry->session));
}

Response Service::post_event(const std::string& id, const std::string& body) {
  const auto entry = find(id);
  const Json event = io::parse_json(body);
  std::lock_guard lock(entry->mutex);
  try {
    entry->session.apply(event);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kProtocol) throw;
    return error_response(
        e, {{"phase", std::string(to_string(entry->session.state().phase))},
            {"expected_events", elicitation::expected_events(entry->session.state().phase)}});
  }
  return json_response(200, io::session_view(entry->session));
}

Response Service::export_document(const std::string& id) {
  const auto entry = find(id);
  std::lock_guard lock(entry->mutex);
  return {200, "application/json", io::save_document(entry->session)};
}

Response Service::compute(const std::string& op, const std::string& body) {
  return json_response(200, io::compute(op, io::parse_json(body)));
}

Response Service::handle(const std::string& method, const std::string& path, const std::string& body) {
  static const std::regex session_re("^/sessions/([A-Za-z0-9_-]+)$");
  static const std::regex events_re("^/sessions/([A-Za-z0-9_-]+)/events$");
  static const std::regex export_re("^/sessions/([A-Za-z0-9_-]+)/export$");
  static const std::regex compute_re("^/compute/([a-z]+)$");
  std::smatch m;
  try {
    if (method == "POST" && path == "/sessions") return create(body);
    if (method == "GET" && std::regex_match(path, m, session_re)) return view(m[1]);
    if (method == "POST" && std::regex_match(path, m, events_re)) return post_event(m[1], body);
    if (method == "GET" && std::regex_match(path, m, export_re)) return export_document(m[1]);
    if (method == "POST" && std::regex_match(path, m, compute_re)) return compute(m[1], body);
    throw Error(ErrorKind::kNotFound, "no route " + method + " " + path);
  } catch (const Error& e) {
    return error_response(e);
  } catch (const std::exception& e) {
    return error_response(Error(ErrorKind::kInternal, e.what()));
  }
}

void Service::install(httplib::Server& server) {
  auto forward = [this](const httplib::Request& req, httplib::Response& res) {
    const auto r = handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  };
  server.Get(R"(/sessions/.*)", forward);
  server.Post(R"(/sessions(/.*)?)", forward);
  server.Post(R"(/compute/.*)", forward);
  server.set_error_handler([this](const httplib::Request& req, httplib::Response& res) {
    if (res.status != 404 || !res.body.empty()) return;
    const auto r = handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  });
}

bool Service::run() { return server_->listen(options_.bind_address, options_.port); }

void Service::stop() { server_->stop(); }

}  // namespace docit2::service
