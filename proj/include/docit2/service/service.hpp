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

// HTTP front end over the session state machine and the stateless
// computations.
//
//   POST /sessions                 body: session config     -> 201 {"id", "view"}
//   GET  /sessions/{id}                                      -> view
//   POST /sessions/{id}/events     body: one event           -> view
//   GET  /sessions/{id}/export                               -> session document
//   POST /compute/{add|scale|wa|order|rank}                  -> result
//
// Errors answer {"error": {"kind", "message", "path"}} with 404 for unknown
// ids or routes, 409 for events the phase does not accept (plus the
// expected events), 422 for validation failures and 500 otherwise.

#ifndef DOCIT2_SERVICE_SERVICE_HPP_
#define DOCIT2_SERVICE_SERVICE_HPP_

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "docit2/elicitation/session.hpp"
#include "docit2/error.hpp"

namespace httplib {
class Server;
}

namespace docit2::service {

struct Options {
  std::string bind_address = "127.0.0.1";
  int port = 8080;
  /// Applied to sessions whose configuration does not set a cap.
  std::optional<std::size_t> enumeration_cap;
};

struct Response {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

int http_status(ErrorKind kind);

class Service {
 public:
  explicit Service(Options options = {});
  ~Service();

  /// Routes one request; never throws.
  Response handle(const std::string& method, const std::string& path, const std::string& body);

  /// Registers the routes on an httplib server.
  void install(httplib::Server& server);

  /// Binds and serves until stop(); false when the address cannot be bound.
  bool run();
  void stop();

  const Options& options() const { return options_; }

 private:
  struct Entry {
    std::mutex mutex;  // one writer per session
    elicitation::Session session;
    explicit Entry(elicitation::Session s) : session(std::move(s)) {}
  };

  std::shared_ptr<Entry> find(const std::string& id);
  Response create(const std::string& body);
  Response view(const std::string& id);
  Response post_event(const std::string& id, const std::string& body);
  Response export_document(const std::string& id);
  Response compute(const std::string& op, const std::string& body);

  Options options_;
  std::mutex registry_mutex_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::size_t next_id_ = 1;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace docit2::service

#endif  // DOCIT2_SERVICE_SERVICE_HPP_
