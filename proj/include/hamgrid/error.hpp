// Copyright 2026 The hamgrid Authors
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

#ifndef HAMGRID_ERROR_HPP_
#define HAMGRID_ERROR_HPP_

#include <optional>
#include <stdexcept>
#include <string>

#include "hamgrid/vertex.hpp"

namespace hamgrid {

enum class ErrorCode {
  kDomain,           // argument outside the operation's domain
  kNotTwoLimited,    // a live vertex has degree 0 (or > 2)
  kInfeasibleShape,  // grid parity/size unsuitable for the requested factor
  kInvalidSeparant,  // separant is stale against the subgraph
  kInvalidPath,      // augmenting path is stale against the subgraph
  kCapExceeded,      // exhaustive search refused: instance too large
  kParse,            // malformed document text
  kSchema,           // well-formed document violating the schema
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<Vertex> vertex = std::nullopt)
      : std::runtime_error(what), code_(code), vertex_(vertex) {}

  ErrorCode code() const noexcept { return code_; }

  // The offending vertex, when the failure is attributable to one.
  const std::optional<Vertex>& vertex() const noexcept { return vertex_; }

 private:
  ErrorCode code_;
  std::optional<Vertex> vertex_;
};

}  // namespace hamgrid

#endif  // HAMGRID_ERROR_HPP_
