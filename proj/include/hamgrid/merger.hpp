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

// Separant-based merging of components.
//
// A unit square whose two opposite edges belong to two different components
// is a separant of them. Swapping those two edges for the square's other two
// edges joins the components into one: two cycles become a cycle, and a path
// plus a cycle becomes a path with the same ends. Degrees never change.

#ifndef HAMGRID_MERGER_HPP_
#define HAMGRID_MERGER_HPP_

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "hamgrid/factor.hpp"
#include "hamgrid/grid.hpp"

namespace hamgrid {

struct Separant {
  UnitSquare square;
  Edge shared_a;                // member edge in component A
  Edge shared_b;                // opposite member edge in component B
  std::array<Edge, 2> bridges;  // the square's other two edges

  friend bool operator==(const Separant&, const Separant&) = default;
};

// First separant of components a and b in row-major anchor order, trying a
// square's horizontal pair before its vertical pair.
std::optional<Separant> find_separant(const SpanningSubgraph& m,
                                      const ComponentLabels& labels, int a,
                                      int b);

// Swaps the separant's shared edges for its bridges. Throws
// Error(kInvalidSeparant) if the shared edges are not members lying in two
// different components of m.
SpanningSubgraph merge_pair(const SpanningSubgraph& m, const Separant& s);

struct MergeStuck {
  std::vector<Component> residual;
};

struct MergeResult {
  // The single spanning component, or the partition no separant could join.
  std::variant<Component, MergeStuck> outcome;
  SpanningSubgraph subgraph;
  std::size_t merges = 0;

  bool merged() const noexcept {
    return std::holds_alternative<Component>(outcome);
  }
};

// Called after every merge with the subgraph before and after the swap.
using MergeObserver = std::function<void(
    const SpanningSubgraph& before, const Separant&, const SpanningSubgraph& after)>;

// Repeated row-major passes over all unit squares, applying every separant
// whose two sides are still in different components, until one component
// remains or a pass makes no progress.
MergeResult merge_all(const Factor& f, const MergeObserver& observer = {});

}  // namespace hamgrid

#endif  // HAMGRID_MERGER_HPP_
