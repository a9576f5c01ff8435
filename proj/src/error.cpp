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

#include "docit2/error.hpp"

namespace docit2 {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kInvalidLevels: return "invalid_levels";
    case ErrorKind::kInvalidWeights: return "invalid_weights";
    case ErrorKind::kIncompleteData: return "incomplete_data";
    case ErrorKind::kInconsistent: return "inconsistent";
    case ErrorKind::kMustEnumerateFirst: return "must_enumerate_first";
    case ErrorKind::kTooManyChains: return "too_many_chains";
    case ErrorKind::kNeedsLargerM: return "needs_larger_m";
    case ErrorKind::kConfiguration: return "configuration";
    case ErrorKind::kProtocol: return "protocol";
    case ErrorKind::kNotFound: return "not_found";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kMigration: return "migration";
    case ErrorKind::kInternal: return "internal";
  }
  return "unknown";
}

bool is_validation_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kProtocol:
    case ErrorKind::kNotFound:
    case ErrorKind::kInternal:
      return false;
    default:
      return true;
  }
}

}  // namespace docit2
