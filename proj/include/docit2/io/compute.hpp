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

// Stateless computations shared by the command line and the HTTP service.
//
//   add    {"a": <mf>, "b": <mf>}
//   scale  {"r": 0.5, "a": <mf>}
//   wa     {"items": [<mf>, ...], "weights": [...]}
//   order  {"a": <mf>, "b": <mf>, "order"?: 1 | 2}
//   rank   <decision problem> plus optional "order"
// An <mf> with "lower"/"upper" is an IT2 number; the arithmetic then works
// on IT2 numbers, and type-1 operands are promoted.

#ifndef DOCIT2_IO_COMPUTE_HPP_
#define DOCIT2_IO_COMPUTE_HPP_

#include <string_view>

#include "docit2/json_fields.hpp"
#include "docit2/mcdm/problem_io.hpp"

namespace docit2::io {

/// Throws kNotFound for an unknown operation and validation errors with
/// field paths for bad payloads.
json::Json compute(std::string_view op, const json::Json& payload, const mcdm::FileReader& reader = {});

/// An expression file: one {"op": ..., ...payload} object or an array of
/// them; returns one result per expression.
json::Json compute_file(const json::Json& expressions, const mcdm::FileReader& reader = {});

}  // namespace docit2::io

#endif  // DOCIT2_IO_COMPUTE_HPP_
