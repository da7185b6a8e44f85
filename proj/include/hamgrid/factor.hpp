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

// Strip-based 2-factors and [1,2]-factors of fault-free grids, and the
// 2-limited subgraph left behind when faults are removed from one.

#ifndef HAMGRID_FACTOR_HPP_
#define HAMGRID_FACTOR_HPP_

#include <optional>
#include <span>
#include <vector>

#include "hamgrid/grid.hpp"

namespace hamgrid {

// A width-2 block S(a, b; c, d): a-b is one short side, c-d the other, with
// a adjacent-side to d and b to c. Its perimeter spans every vertex of the
// block.
struct Strip {
  Vertex a;
  Vertex b;
  Vertex c;
  Vertex d;

  // Perimeter in the order a, b, ..., c, d, ... back towards a.
  std::vector<Vertex> perimeter() const;

  friend bool operator==(const Strip&, const Strip&) = default;
};

// Strips used by the factor builders. Even-sized grids are tiled completely;
// odd-sized grids leave the last column (or the whole grid, when one
// dimension is 1) to the path.
std::vector<Strip> strip_layout(const GridSpec& g);

// A spanning set of disjoint cycles plus at most one path.
class Factor {
 public:
  // Decomposes m. Throws Error(kNotTwoLimited) if some live vertex has
  // degree 0, and Error(kDomain) if m has more than one path component.
  static Factor from_subgraph(SpanningSubgraph m);

  const SpanningSubgraph& subgraph() const noexcept { return subgraph_; }
  const GridSpec& grid() const noexcept { return subgraph_.grid(); }
  const std::vector<Component>& cycles() const noexcept { return cycles_; }
  const std::optional<Component>& path() const noexcept { return path_; }

  // True for a 2-factor (no path component).
  bool is_two_factor() const noexcept { return !path_.has_value(); }
  std::size_t component_count() const noexcept {
    return cycles_.size() + (path_ ? 1 : 0);
  }

 private:
  explicit Factor(SpanningSubgraph m) : subgraph_(std::move(m)) {}

  SpanningSubgraph subgraph_;
  std::vector<Component> cycles_;
  std::optional<Component> path_;
};

// cols/2 column strips (row strips when cols is odd). Requires a fault-free,
// even-sized grid with both dimensions >= 2; throws Error(kInfeasibleShape)
// otherwise.
Factor strip_two_factor(const GridSpec& g);

// (cols-1)/2 column strips plus a path up the last column, whose ends
// (cols-1, 0) and (cols-1, rows-1) are both Even. A grid with a dimension of
// 1 is a bare path. Requires a fault-free odd-sized grid; throws
// Error(kInfeasibleShape) otherwise.
Factor strip_one_two_factor(const GridSpec& g);

// The factor's edges minus every edge touching a fault, over the grid with
// those faults removed. Throws Error(kNotTwoLimited) naming a vertex left at
// degree 0, and Error(kDomain) for faults outside the factor's grid.
SpanningSubgraph delete_faults(const Factor& f, std::span<const Vertex> faults);

}  // namespace hamgrid

#endif  // HAMGRID_FACTOR_HPP_
