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

#include "hamgrid/merger.hpp"

#include <numeric>
#include <sstream>

namespace hamgrid {

namespace {

class DisjointSet {
 public:
  explicit DisjointSet(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Smaller root wins so that roots stay deterministic.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<int> parent_;
};

bool all_live(const GridSpec& g, const UnitSquare& sq) {
  for (Vertex c : sq.corners()) {
    if (!g.is_live(c)) return false;
  }
  return true;
}

Separant make_separant(const UnitSquare& sq, bool horizontal, bool a_first) {
  const Edge e1 = horizontal ? sq.bottom() : sq.left();
  const Edge e2 = horizontal ? sq.top() : sq.right();
  const std::array<Edge, 2> bridges =
      horizontal ? std::array<Edge, 2>{sq.left(), sq.right()}
                 : std::array<Edge, 2>{sq.bottom(), sq.top()};
  return a_first ? Separant{sq, e1, e2, bridges} : Separant{sq, e2, e1, bridges};
}

void swap_edges(SpanningSubgraph& m, const Separant& s) {
  m.remove(s.shared_a);
  m.remove(s.shared_b);
  m.add(s.bridges[0]);
  m.add(s.bridges[1]);
}

}  // namespace

std::optional<Separant> find_separant(const SpanningSubgraph& m,
                                      const ComponentLabels& labels, int a,
                                      int b) {
  if (a == b) return std::nullopt;
  const GridSpec& g = m.grid();
  for (int y = 0; y + 1 < g.rows(); ++y) {
    for (int x = 0; x + 1 < g.cols(); ++x) {
      const UnitSquare sq{{x, y}};
      if (!all_live(g, sq)) continue;
      for (bool horizontal : {true, false}) {
        const Edge e1 = horizontal ? sq.bottom() : sq.left();
        const Edge e2 = horizontal ? sq.top() : sq.right();
        if (!m.contains(e1) || !m.contains(e2)) continue;
        const int c1 = labels.of(g, e1.a);
        const int c2 = labels.of(g, e2.a);
        if (c1 == a && c2 == b) return make_separant(sq, horizontal, true);
        if (c1 == b && c2 == a) return make_separant(sq, horizontal, false);
      }
    }
  }
  return std::nullopt;
}

SpanningSubgraph merge_pair(const SpanningSubgraph& m, const Separant& s) {
  const auto fail = [&](const char* why) {
    std::ostringstream os;
    os << "separant at " << s.square.anchor << ": " << why;
    throw Error(ErrorCode::kInvalidSeparant, os.str(), s.square.anchor);
  };
  if (!all_live(m.grid(), s.square)) fail("square touches a fault");
  const UnitSquare& sq = s.square;
  const bool horizontal_pair =
      (s.shared_a == sq.bottom() && s.shared_b == sq.top()) ||
      (s.shared_a == sq.top() && s.shared_b == sq.bottom());
  const bool vertical_pair =
      (s.shared_a == sq.left() && s.shared_b == sq.right()) ||
      (s.shared_a == sq.right() && s.shared_b == sq.left());
  if (!horizontal_pair && !vertical_pair) fail("shared edges are not opposite sides");
  const std::array<Edge, 2> bridges =
      horizontal_pair ? std::array<Edge, 2>{sq.left(), sq.right()}
                      : std::array<Edge, 2>{sq.bottom(), sq.top()};
  if (s.bridges != bridges) fail("bridge edges do not match the square");
  if (!m.contains(s.shared_a) || !m.contains(s.shared_b)) {
    fail("shared edge is not a member");
  }
  const ComponentLabels labels = label_components(m);
  if (labels.of(m.grid(), s.shared_a.a) == labels.of(m.grid(), s.shared_b.a)) {
    fail("shared edges lie in the same component");
  }
  SpanningSubgraph out = m;
  swap_edges(out, s);
  return out;
}

MergeResult merge_all(const Factor& f, const MergeObserver& observer) {
  SpanningSubgraph m = f.subgraph();
  const GridSpec& g = m.grid();
  const ComponentLabels labels = label_components(m);
  DisjointSet sets(labels.count);
  int remaining = labels.count;
  std::size_t merges = 0;

  bool progress = true;
  while (remaining > 1 && progress) {
    progress = false;
    for (int y = 0; y + 1 < g.rows() && remaining > 1; ++y) {
      for (int x = 0; x + 1 < g.cols() && remaining > 1; ++x) {
        const UnitSquare sq{{x, y}};
        if (!all_live(g, sq)) continue;
        for (bool horizontal : {true, false}) {
          const Edge e1 = horizontal ? sq.bottom() : sq.left();
          const Edge e2 = horizontal ? sq.top() : sq.right();
          if (!m.contains(e1) || !m.contains(e2)) continue;
          const int c1 = sets.find(labels.of(g, e1.a));
          const int c2 = sets.find(labels.of(g, e2.a));
          if (c1 == c2) continue;
          const Separant s = make_separant(sq, horizontal, true);
          if (observer) {
            const SpanningSubgraph before = m;
            swap_edges(m, s);
            observer(before, s, m);
          } else {
            swap_edges(m, s);
          }
          sets.unite(c1, c2);
          --remaining;
          ++merges;
          progress = true;
          break;  // the square's other pair now shares a component
        }
      }
    }
  }

  if (remaining == 1) {
    if (merges == 0) {
      return MergeResult{f.path() ? *f.path() : f.cycles().front(), std::move(m),
                         0};
    }
    std::vector<Component> parts = components(m);
    return MergeResult{std::move(parts.front()), std::move(m), merges};
  }
  return MergeResult{MergeStuck{components(m)}, std::move(m), merges};
}

}  // namespace hamgrid
