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

#ifndef DOCIT2_ERROR_HPP_
#define DOCIT2_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace docit2 {

enum class ErrorKind {
  kDomain,             // argument outside the mathematical domain
  kInvalidLevels,      // malformed alpha-level set
  kInvalidWeights,     // weights not in [0,1] or not summing to 1
  kIncompleteData,     // missing ratio entries, unbound labels
  kInconsistent,       // judgments violating a required property
  kMustEnumerateFirst, // interval card gap where an exact one is needed
  kTooManyChains,      // hesitation enumeration above the cap
  kNeedsLargerM,       // decimal precision too coarse for tuple_to_cards
  kConfiguration,      // bad problem/session configuration
  kProtocol,           // event not legal in the current session phase
  kNotFound,           // unknown session id or resource
  kParse,              // malformed serialized payload
  kMigration,          // unknown schema version
  kInternal,           // solver failure or broken invariant
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `path` locates the offending field
/// for validation errors (JSON-pointer-like, may be empty).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string path = {})
      : std::runtime_error(message), kind_(kind), path_(std::move(path)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& path() const noexcept { return path_; }

 private:
  ErrorKind kind_;
  std::string path_;
};

// Broad classes used by the CLI exit codes and the HTTP status mapping.
bool is_validation_error(ErrorKind kind);

}  // namespace docit2

#endif  // DOCIT2_ERROR_HPP_
