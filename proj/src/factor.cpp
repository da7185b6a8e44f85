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

#include "hamgrid/factor.hpp"

#include <sstream>

namespace hamgrid {

namespace {

// Unit step from `from` towards `to` along one axis.
Vertex step_towards(Vertex from, Vertex to) {
  const int dx = (to.x > from.x) - (to.x < from.x);
  const int dy = (to.y > from.y) - (to.y < from.y);
  return Vertex{from.x + dx, from.y + dy};
}

void append_segment(std::vector<Vertex>& out, Vertex from, Vertex to) {
  for (Vertex v = from; v != to;) {
    v = step_towards(v, to);
    out.push_back(v);
  }
}

void add_path(SpanningSubgraph& m, std::span<const Vertex> walk, bool closed) {
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    m.add(Edge::between(walk[i], walk[i + 1]));
  }
  if (closed && walk.size() > 2) m.add(Edge::between(walk.back(), walk.front()));
}

void require_fault_free(const GridSpec& g) {
  if (g.fault_count() != 0) {
    throw Error(ErrorCode::kDomain, "strip factors are built on fault-free grids");
  }
}

}  // namespace

std::vector<Vertex> Strip::perimeter() const {
  std::vector<Vertex> out{a};
  append_segment(out, a, b);
  append_segment(out, b, c);
  append_segment(out, c, d);
  append_segment(out, d, a);
  out.pop_back();  // back at a
  return out;
}

std::vector<Strip> strip_layout(const GridSpec& g) {
  const int m = g.cols();
  const int n = g.rows();
  std::vector<Strip> out;
  if (m == 1 || n == 1) return out;
  if (m % 2 == 0 || n % 2 != 0) {
    // Column strips; for odd x odd the last column is left over.
    for (int i = 0; 2 * i + 1 < m; ++i) {
      out.push_back(Strip{{2 * i, 0}, {2 * i + 1, 0}, {2 * i + 1, n - 1},
                          {2 * i, n - 1}});
    }
  } else {
    // cols odd, rows even: the column construction transposed.
    for (int i = 0; 2 * i + 1 < n; ++i) {
      out.push_back(Strip{{0, 2 * i}, {0, 2 * i + 1}, {m - 1, 2 * i + 1},
                          {m - 1, 2 * i}});
    }
  }
  return out;
}

Factor Factor::from_subgraph(SpanningSubgraph m) {
  Factor f(std::move(m));
  const GridSpec& g = f.subgraph_.grid();
  if (g.live_count() == 1 && f.subgraph_.edge_count() == 0) {
    Vertex only{};
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
      if (!g.is_fault(g.vertex_at(i))) only = g.vertex_at(i);
    }
    f.path_ = Component{ComponentKind::kPath, {only}};
    return f;
  }
  for (Component& c : components(f.subgraph_)) {
    if (c.kind == ComponentKind::kCycle) {
      f.cycles_.push_back(std::move(c));
    } else if (!f.path_) {
      f.path_ = std::move(c);
    } else {
      throw Error(ErrorCode::kDomain,
                  "subgraph has more than one path component",
                  c.vertices.front());
    }
  }
  return f;
}

Factor strip_two_factor(const GridSpec& g) {
  require_fault_free(g);
  if (!g.even_sized() || g.cols() < 2 || g.rows() < 2) {
    throw Error(ErrorCode::kInfeasibleShape,
                "a strip 2-factor needs an even-sized grid with both "
                "dimensions at least 2");
  }
  SpanningSubgraph m(g);
  for (const Strip& s : strip_layout(g)) add_path(m, s.perimeter(), true);
  return Factor::from_subgraph(std::move(m));
}

Factor strip_one_two_factor(const GridSpec& g) {
  require_fault_free(g);
  if (g.even_sized()) {
    throw Error(ErrorCode::kInfeasibleShape,
                "a strip [1,2]-factor needs an odd-sized grid");
  }
  SpanningSubgraph m(g);
  for (const Strip& s : strip_layout(g)) add_path(m, s.perimeter(), true);
  std::vector<Vertex> path;
  const Vertex last{g.cols() - 1, g.rows() - 1};
  const Vertex first{g.rows() == 1 ? 0 : g.cols() - 1, 0};
  path.push_back(first);
  append_segment(path, first, last);
  add_path(m, path, false);
  return Factor::from_subgraph(std::move(m));
}

SpanningSubgraph delete_faults(const Factor& f, std::span<const Vertex> faults) {
  const GridSpec& base = f.grid();
  std::vector<Vertex> all(base.faults().begin(), base.faults().end());
  all.insert(all.end(), faults.begin(), faults.end());
  for (Vertex v : faults) {
    if (!base.is_live(v)) {
      std::ostringstream os;
      os << "fault " << v << " is not a vertex of the factor";
      throw Error(ErrorCode::kDomain, os.str(), v);
    }
  }
  GridSpec holed(base.cols(), base.rows(), std::move(all));
  SpanningSubgraph m(holed);
  for (const Edge& e : f.subgraph().edges()) {
    if (!holed.is_fault(e.a) && !holed.is_fault(e.b)) m.add(e);
  }
  if (auto v = m.first_isolated()) {
    std::ostringstream os;
    os << "deleting faults leaves " << *v << " with degree 0";
    throw Error(ErrorCode::kNotTwoLimited, os.str(), *v);
  }
  return m;
}

}  // namespace hamgrid
