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

// Augmenting-path repair of 2-limited spanning subgraphs.
//
// Relative to a subgraph M, member edges are red and the remaining live grid
// edges blue. An augmenting path joins two unfilled (degree-1) vertices with
// edges alternating blue, red, ..., blue. Toggling its edges fills both ends
// and leaves every other degree unchanged, so sigma drops by exactly two.

#ifndef HAMGRID_AUGMENTER_HPP_
#define HAMGRID_AUGMENTER_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hamgrid/factor.hpp"
#include "hamgrid/grid.hpp"

namespace hamgrid {

enum class EdgeColor { kBlue, kRed };

struct AugmentingPath {
  std::vector<Vertex> vertices;

  std::size_t edge_count() const noexcept {
    return vertices.empty() ? 0 : vertices.size() - 1;
  }
  // Edge i joins vertices[i] and vertices[i + 1]; even edges are blue.
  static EdgeColor color_of_edge(std::size_t i) noexcept {
    return i % 2 == 0 ? EdgeColor::kBlue : EdgeColor::kRed;
  }

  friend bool operator==(const AugmentingPath&, const AugmentingPath&) = default;
};

// Why p is not an augmenting path of m, or nullopt when it is.
std::optional<std::string> check_augmenting_path(const SpanningSubgraph& m,
                                                 const AugmentingPath& p);

// Shortest augmenting path from `start` to any other unfilled vertex,
// breadth-first with neighbors expanded E, N, W, S. Throws Error(kDomain)
// unless start is a live unfilled vertex.
std::optional<AugmentingPath> find_augmenting_path(const SpanningSubgraph& m,
                                                   Vertex start);

// Up to `limit` distinct augmenting paths: for each unfilled start in
// row-major order, the breadth-first path to each reachable target in
// discovery order. The first entry matches find_augmenting_path from the
// row-major-first unfilled vertex.
std::vector<AugmentingPath> augmenting_path_candidates(const SpanningSubgraph& m,
                                                       std::size_t limit);

// m with p's blue edges added and red edges removed. Throws
// Error(kInvalidPath) if p is not an augmenting path of m.
SpanningSubgraph apply_augment(const SpanningSubgraph& m, const AugmentingPath& p);

struct RepairOptions {
  std::size_t alternatives = 8;  // candidate paths tried per round
};

struct RepairFailed {
  std::size_t attempts = 0;       // augmentations applied across all branches
  std::size_t two_factors = 0;    // 2-factors reached but rejected
  std::size_t sigma_left = 0;     // smallest sigma reached
};

// Accepts or rejects a finished 2-factor; rejection resumes backtracking.
using FactorFilter = std::function<bool(const Factor&)>;

// Augments until sigma is zero, backtracking over each round's alternatives.
// Throws Error(kDomain) when sigma(m) is odd and Error(kNotTwoLimited) when m
// is not 2-limited.
std::variant<Factor, RepairFailed> repair_to_two_factor(
    const SpanningSubgraph& m, const RepairOptions& options = {},
    const FactorFilter& accept = {});

}  // namespace hamgrid

#endif  // HAMGRID_AUGMENTER_HPP_
