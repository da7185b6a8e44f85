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

// Wire form of a solve result and its JSON, ASCII and SVG renderings.
//
// JSON (compact, keys in this order; vertices only for cycle/path, reason
// only for none/stuck; a cycle's first vertex is not repeated):
//
//   {"grid":{"cols":M,"rows":N,"faults":[[x,y],...]},
//    "result":"cycle"|"path"|"none"|"stuck","vertices":[[x,y],...],
//    "reason":STR,"method":"construction"|"oracle"}

#ifndef HAMGRID_DOCUMENT_HPP_
#define HAMGRID_DOCUMENT_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hamgrid/grid.hpp"
#include "hamgrid/solver.hpp"

namespace hamgrid {

struct Document {
  GridSpec grid;
  ResultKind result = ResultKind::kNone;
  std::vector<Vertex> vertices;
  std::optional<std::string> reason;
  Method method = Method::kConstruction;

  friend bool operator==(const Document&, const Document&) = default;
};

Document to_document(const HamiltonResult& result);

std::string to_json(const Document& doc);

// Throws Error(kParse) on malformed JSON and Error(kSchema) on documents
// that do not follow the layout above.
Document parse_document(std::string_view text);

// Verifies the document's vertex sequence against its grid. Documents
// without one (none/stuck) fail with a "no vertex sequence" message.
std::optional<std::string> verify_document(const Document& doc);

// Summary line, then one text row per grid row (top row first): `o` live,
// `X` fault, `-` and `|` for edges of the cycle or path.
std::string render_ascii(const Document& doc);

// 24-unit cell pitch; faults as filled squares; the cycle or path as one
// polyline, closed for cycles.
std::string render_svg(const Document& doc);

}  // namespace hamgrid

#endif  // HAMGRID_DOCUMENT_HPP_
