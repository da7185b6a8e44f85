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

#include "hamgrid/grid.hpp"

#include <algorithm>
#include <sstream>

namespace hamgrid {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kDomain: return "domain error";
    case ErrorCode::kNotTwoLimited: return "not 2-limited";
    case ErrorCode::kInfeasibleShape: return "infeasible shape";
    case ErrorCode::kInvalidSeparant: return "invalid separant";
    case ErrorCode::kInvalidPath: return "invalid path";
    case ErrorCode::kCapExceeded: return "cap exceeded";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kSchema: return "schema error";
  }
  return "unknown error";
}

namespace {

std::string describe(Vertex v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

GridSpec::GridSpec(int cols, int rows, std::vector<Vertex> faults)
    : cols_(cols), rows_(rows), faults_(std::move(faults)) {
  if (cols_ < 1 || rows_ < 1) {
    throw Error(ErrorCode::kDomain, "grid dimensions must be positive");
  }
  if (faults_.size() > kMaxFaults) {
    throw Error(ErrorCode::kDomain, "at most two faults are supported");
  }
  for (const Vertex& f : faults_) {
    if (!in_bounds(f)) {
      throw Error(ErrorCode::kDomain, "fault " + describe(f) + " out of bounds",
                  f);
    }
  }
  std::sort(faults_.begin(), faults_.end());
  if (std::adjacent_find(faults_.begin(), faults_.end()) != faults_.end()) {
    throw Error(ErrorCode::kDomain, "duplicate fault", faults_.front());
  }
  if (live_count() == 0) {
    throw Error(ErrorCode::kDomain, "grid has no live vertex");
  }
}

bool GridSpec::is_fault(Vertex v) const noexcept {
  return std::find(faults_.begin(), faults_.end(), v) != faults_.end();
}

Neighbors live_neighbors_unchecked(const GridSpec& g, Vertex v) noexcept {
  Neighbors out;
  for (const Vertex& d : kDirections) {
    const Vertex w{v.x + d.x, v.y + d.y};
    if (g.is_live(w)) out.push(w);
  }
  return out;
}

Neighbors neighbors(const GridSpec& g, Vertex v) {
  if (!g.is_live(v)) {
    throw Error(ErrorCode::kDomain,
                "vertex " + describe(v) + " is not a live vertex", v);
  }
  return live_neighbors_unchecked(g, v);
}

Edge Edge::between(Vertex u, Vertex v) {
  if (manhattan(u, v) != 1) {
    throw Error(ErrorCode::kDomain,
                describe(u) + " and " + describe(v) + " are not grid-adjacent",
                u);
  }
  return u < v ? Edge{u, v} : Edge{v, u};
}

std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << e.a << '-' << e.b;
}

std::vector<UnitSquare> unit_squares(const GridSpec& g) {
  std::vector<UnitSquare> out;
  for (int y = 0; y + 1 < g.rows(); ++y) {
    for (int x = 0; x + 1 < g.cols(); ++x) {
      const UnitSquare sq{{x, y}};
      const auto corners = sq.corners();
      if (std::all_of(corners.begin(), corners.end(),
                      [&](Vertex c) { return !g.is_fault(c); })) {
        out.push_back(sq);
      }
    }
  }
  return out;
}

SpanningSubgraph::SpanningSubgraph(GridSpec grid)
    : grid_(std::move(grid)),
      east_(grid_.vertex_count(), 0),
      north_(grid_.vertex_count(), 0),
      degree_(grid_.vertex_count(), 0) {}

SpanningSubgraph SpanningSubgraph::from_edges(GridSpec grid,
                                              std::span<const Edge> edges) {
  SpanningSubgraph m(std::move(grid));
  for (const Edge& e : edges) m.add(e);
  return m;
}

bool SpanningSubgraph::valid_edge(const Edge& e) const noexcept {
  return manhattan(e.a, e.b) == 1 && e.a < e.b && grid_.is_live(e.a) &&
         grid_.is_live(e.b);
}

std::uint8_t* SpanningSubgraph::slot(const Edge& e) noexcept {
  auto& bits = e.horizontal() ? east_ : north_;
  return &bits[grid_.index(e.a)];
}

const std::uint8_t* SpanningSubgraph::slot(const Edge& e) const noexcept {
  const auto& bits = e.horizontal() ? east_ : north_;
  return &bits[grid_.index(e.a)];
}

bool SpanningSubgraph::contains(const Edge& e) const noexcept {
  return valid_edge(e) && *slot(e) != 0;
}

bool SpanningSubgraph::has_edge(Vertex u, Vertex v) const noexcept {
  if (manhattan(u, v) != 1) return false;
  return contains(u < v ? Edge{u, v} : Edge{v, u});
}

std::vector<Edge> SpanningSubgraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < east_.size(); ++i) {
    const Vertex v = grid_.vertex_at(i);
    if (east_[i]) out.push_back({v, {v.x + 1, v.y}});
    if (north_[i]) out.push_back({v, {v.x, v.y + 1}});
  }
  return out;
}

Neighbors SpanningSubgraph::member_neighbors(Vertex v) const noexcept {
  Neighbors out;
  const std::size_t i = grid_.index(v);
  if (v.x + 1 < grid_.cols() && east_[i]) out.push({v.x + 1, v.y});
  if (v.y + 1 < grid_.rows() && north_[i]) out.push({v.x, v.y + 1});
  if (v.x > 0 && east_[i - 1]) out.push({v.x - 1, v.y});
  if (v.y > 0 && north_[i - static_cast<std::size_t>(grid_.cols())]) {
    out.push({v.x, v.y - 1});
  }
  return out;
}

void SpanningSubgraph::add(const Edge& e) {
  if (!valid_edge(e)) {
    std::ostringstream os;
    os << "edge " << e << " is not a live grid edge";
    throw Error(ErrorCode::kDomain, os.str(), e.a);
  }
  std::uint8_t* s = slot(e);
  if (*s) {
    std::ostringstream os;
    os << "edge " << e << " already present";
    throw Error(ErrorCode::kDomain, os.str(), e.a);
  }
  for (Vertex v : {e.a, e.b}) {
    if (degree(v) >= 2) {
      throw Error(ErrorCode::kDomain,
                  "vertex " + describe(v) + " would exceed degree 2", v);
    }
  }
  *s = 1;
  ++degree_[grid_.index(e.a)];
  ++degree_[grid_.index(e.b)];
  ++edge_count_;
}

void SpanningSubgraph::remove(const Edge& e) {
  if (!contains(e)) {
    std::ostringstream os;
    os << "edge " << e << " is not a member";
    throw Error(ErrorCode::kDomain, os.str(), e.a);
  }
  *slot(e) = 0;
  --degree_[grid_.index(e.a)];
  --degree_[grid_.index(e.b)];
  --edge_count_;
}

std::optional<Vertex> SpanningSubgraph::first_isolated() const noexcept {
  for (std::size_t i = 0; i < degree_.size(); ++i) {
    if (degree_[i] == 0) {
      const Vertex v = grid_.vertex_at(i);
      if (!grid_.is_fault(v)) return v;
    }
  }
  return std::nullopt;
}

bool SpanningSubgraph::is_two_limited() const noexcept {
  return !first_isolated().has_value();
}

std::size_t sigma(const SpanningSubgraph& m) {
  if (auto v = m.first_isolated()) {
    throw Error(ErrorCode::kNotTwoLimited,
                "vertex " + describe(*v) + " has degree 0", *v);
  }
  const GridSpec& g = m.grid();
  std::size_t unfilled = 0;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const Vertex v = g.vertex_at(i);
    if (!g.is_fault(v) && m.degree(v) == 1) ++unfilled;
  }
  return unfilled;
}

namespace {

// Walks the component containing `start`, which must be its first vertex in
// walk order (a path end, or any vertex of a cycle).
std::vector<Vertex> walk(const SpanningSubgraph& m, Vertex start) {
  std::vector<Vertex> out{start};
  Vertex prev = start;
  Neighbors first = m.member_neighbors(start);
  if (first.empty()) return out;
  Vertex cur = first[0];
  while (cur != start) {
    out.push_back(cur);
    const Neighbors next = m.member_neighbors(cur);
    if (next.size() < 2) break;  // path end
    const Vertex step = next[0] == prev ? next[1] : next[0];
    prev = cur;
    cur = step;
  }
  return out;
}

}  // namespace

ComponentLabels label_components(const SpanningSubgraph& m) {
  const GridSpec& g = m.grid();
  ComponentLabels labels;
  labels.label.assign(g.vertex_count(), -1);
  std::vector<Vertex> stack;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    if (labels.label[i] != -1) continue;
    const Vertex v = g.vertex_at(i);
    if (g.is_fault(v)) continue;
    const int id = labels.count++;
    labels.label[i] = id;
    stack.push_back(v);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : m.member_neighbors(u)) {
        int& l = labels.label[g.index(w)];
        if (l == -1) {
          l = id;
          stack.push_back(w);
        }
      }
    }
  }
  return labels;
}

std::vector<Component> components(const SpanningSubgraph& m) {
  if (auto v = m.first_isolated()) {
    throw Error(ErrorCode::kNotTwoLimited,
                "vertex " + describe(*v) + " has degree 0", *v);
  }
  const GridSpec& g = m.grid();
  const ComponentLabels labels = label_components(m);

  // Smallest vertex and row-major-smallest endpoint of each component.
  std::vector<std::optional<Vertex>> first(labels.count), end(labels.count);
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const int id = labels.label[i];
    if (id < 0) continue;
    const Vertex v = g.vertex_at(i);
    if (!first[id]) first[id] = v;
    if (m.degree(v) <= 1 && !end[id]) end[id] = v;
  }

  std::vector<Component> out;
  out.reserve(labels.count);
  for (int id = 0; id < labels.count; ++id) {
    if (end[id]) {
      out.push_back({ComponentKind::kPath, walk(m, *end[id])});
    } else {
      out.push_back({ComponentKind::kCycle, walk(m, *first[id])});
    }
  }
  return out;
}

}  // namespace hamgrid
