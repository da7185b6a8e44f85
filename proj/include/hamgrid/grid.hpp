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

// Coordinate model of a rectangular mesh R(cols, rows) with up to two
// faulty nodes, plus degree-bounded spanning subgraphs over its live nodes.

#ifndef HAMGRID_GRID_HPP_
#define HAMGRID_GRID_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hamgrid/error.hpp"
#include "hamgrid/vertex.hpp"

namespace hamgrid {

inline constexpr std::size_t kMaxFaults = 2;

// Mesh dimensions plus fault set. Faults are kept sorted and distinct.
class GridSpec {
 public:
  // Throws Error(kDomain) on non-positive dimensions, more than two faults,
  // duplicate or out-of-bounds faults, or when no live vertex remains.
  GridSpec(int cols, int rows, std::vector<Vertex> faults = {});

  int cols() const noexcept { return cols_; }
  int rows() const noexcept { return rows_; }
  std::span<const Vertex> faults() const noexcept { return faults_; }
  std::size_t fault_count() const noexcept { return faults_.size(); }

  std::size_t vertex_count() const noexcept {
    return static_cast<std::size_t>(cols_) * static_cast<std::size_t>(rows_);
  }
  std::size_t live_count() const noexcept {
    return vertex_count() - faults_.size();
  }
  bool even_sized() const noexcept { return vertex_count() % 2 == 0; }

  bool in_bounds(Vertex v) const noexcept {
    return v.x >= 0 && v.y >= 0 && v.x < cols_ && v.y < rows_;
  }
  bool is_fault(Vertex v) const noexcept;
  bool is_live(Vertex v) const noexcept { return in_bounds(v) && !is_fault(v); }
  bool is_corner(Vertex v) const noexcept {
    return (v.x == 0 || v.x == cols_ - 1) && (v.y == 0 || v.y == rows_ - 1);
  }

  // Row-major linearization; internal bookkeeping only.
  std::size_t index(Vertex v) const noexcept {
    return static_cast<std::size_t>(v.y) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(v.x);
  }
  Vertex vertex_at(std::size_t index) const noexcept {
    return Vertex{static_cast<int>(index % static_cast<std::size_t>(cols_)),
                  static_cast<int>(index / static_cast<std::size_t>(cols_))};
  }

  // Same dimensions, no faults.
  GridSpec without_faults() const { return GridSpec(cols_, rows_); }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  int cols_;
  int rows_;
  std::vector<Vertex> faults_;
};

// Up to four neighbors, in the fixed order East, North, West, South.
class Neighbors {
 public:
  void push(Vertex v) noexcept { items_[size_++] = v; }
  const Vertex* begin() const noexcept { return items_.data(); }
  const Vertex* end() const noexcept { return items_.data() + size_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  Vertex operator[](std::size_t i) const noexcept { return items_[i]; }

 private:
  std::array<Vertex, 4> items_{};
  std::size_t size_ = 0;
};

inline constexpr std::array<Vertex, 4> kDirections{
    Vertex{1, 0}, Vertex{0, 1}, Vertex{-1, 0}, Vertex{0, -1}};

// Live vertices at Manhattan distance 1 from v, ordered E, N, W, S.
// Throws Error(kDomain) if v is out of bounds or faulty.
Neighbors neighbors(const GridSpec& g, Vertex v);

// Same as neighbors() without the liveness check on v.
Neighbors live_neighbors_unchecked(const GridSpec& g, Vertex v) noexcept;

// An undirected grid edge. Endpoints are stored in lexicographic order.
struct Edge {
  Vertex a;
  Vertex b;

  // Throws Error(kDomain) unless u and v are at Manhattan distance 1.
  static Edge between(Vertex u, Vertex v);

  bool horizontal() const noexcept { return a.y == b.y; }
  bool touches(Vertex v) const noexcept { return a == v || b == v; }
  Vertex other(Vertex v) const noexcept { return a == v ? b : a; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

std::ostream& operator<<(std::ostream& os, const Edge& e);

// A 2x2 cell with lower-left corner `anchor`.
struct UnitSquare {
  Vertex anchor;

  // Counter-clockwise from the anchor.
  std::array<Vertex, 4> corners() const noexcept {
    return {anchor, Vertex{anchor.x + 1, anchor.y},
            Vertex{anchor.x + 1, anchor.y + 1}, Vertex{anchor.x, anchor.y + 1}};
  }
  Edge bottom() const noexcept { return {anchor, {anchor.x + 1, anchor.y}}; }
  Edge top() const noexcept {
    return {{anchor.x, anchor.y + 1}, {anchor.x + 1, anchor.y + 1}};
  }
  Edge left() const noexcept { return {anchor, {anchor.x, anchor.y + 1}}; }
  Edge right() const noexcept {
    return {{anchor.x + 1, anchor.y}, {anchor.x + 1, anchor.y + 1}};
  }

  friend constexpr auto operator<=>(const UnitSquare&,
                                    const UnitSquare&) = default;
};

// Every unit square with four live corners, anchors in row-major order.
std::vector<UnitSquare> unit_squares(const GridSpec& g);

// An edge set over the live vertices of a grid with per-vertex degree <= 2.
// Degree 0 is representable; "2-limited" additionally requires degree >= 1.
class SpanningSubgraph {
 public:
  explicit SpanningSubgraph(GridSpec grid);

  // Throws Error(kDomain) on a non-grid edge, a faulty endpoint, a duplicate
  // edge, or a vertex pushed above degree 2.
  static SpanningSubgraph from_edges(GridSpec grid, std::span<const Edge> edges);

  const GridSpec& grid() const noexcept { return grid_; }

  bool contains(const Edge& e) const noexcept;
  bool has_edge(Vertex u, Vertex v) const noexcept;
  int degree(Vertex v) const noexcept { return degree_[grid_.index(v)]; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  // Member edges in row-major order of their lower endpoint, east before north.
  std::vector<Edge> edges() const;

  // Member neighbors of v, in E, N, W, S order.
  Neighbors member_neighbors(Vertex v) const noexcept;

  void add(const Edge& e);
  void remove(const Edge& e);

  bool is_two_limited() const noexcept;

  // First live vertex in row-major order with degree 0, if any.
  std::optional<Vertex> first_isolated() const noexcept;

  friend bool operator==(const SpanningSubgraph&,
                         const SpanningSubgraph&) = default;

 private:
  std::uint8_t* slot(const Edge& e) noexcept;
  const std::uint8_t* slot(const Edge& e) const noexcept;
  bool valid_edge(const Edge& e) const noexcept;

  GridSpec grid_;
  std::vector<std::uint8_t> east_;   // edge (x,y)-(x+1,y)
  std::vector<std::uint8_t> north_;  // edge (x,y)-(x,y+1)
  std::vector<std::uint8_t> degree_;
  std::size_t edge_count_ = 0;
};

// Number of unfilled (degree-1) vertices. Throws Error(kNotTwoLimited) naming
// the first live vertex whose degree is outside [1, 2].
std::size_t sigma(const SpanningSubgraph& m);

enum class ComponentKind { kCycle, kPath };

// A connected piece of a degree-<=2 subgraph, listed in walk order.
// Cycles start at their row-major-smallest vertex; paths start at their
// row-major-smaller endpoint.
struct Component {
  ComponentKind kind;
  std::vector<Vertex> vertices;

  friend bool operator==(const Component&, const Component&) = default;
};

// Component decomposition, ordered by smallest contained vertex (row-major).
// Throws Error(kNotTwoLimited) if a live vertex has degree 0.
std::vector<Component> components(const SpanningSubgraph& m);

// Per-vertex component id (row-major index space), -1 on faults.
struct ComponentLabels {
  std::vector<int> label;
  int count = 0;

  int of(const GridSpec& g, Vertex v) const noexcept { return label[g.index(v)]; }
};

// Labels every live vertex with its component id; ids follow the same order
// as components(). Degree-0 vertices get their own singleton id.
ComponentLabels label_components(const SpanningSubgraph& m);

}  // namespace hamgrid

#endif  // HAMGRID_GRID_HPP_
