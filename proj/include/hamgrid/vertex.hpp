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

#ifndef HAMGRID_VERTEX_HPP_
#define HAMGRID_VERTEX_HPP_

#include <compare>
#include <ostream>

namespace hamgrid {

// A lattice point. x runs over columns [0, cols), y over rows [0, rows).
// The defaulted ordering is lexicographic on (x, y).
struct Vertex {
  int x = 0;
  int y = 0;

  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

// Row-major order: by row first, then by column.
constexpr bool row_major_less(Vertex a, Vertex b) noexcept {
  return a.y != b.y ? a.y < b.y : a.x < b.x;
}

enum class Color { kEven, kOdd };

constexpr Color color(Vertex v) noexcept {
  return ((v.x + v.y) % 2 == 0) ? Color::kEven : Color::kOdd;
}

constexpr int manhattan(Vertex a, Vertex b) noexcept {
  const int dx = a.x > b.x ? a.x - b.x : b.x - a.x;
  const int dy = a.y > b.y ? a.y - b.y : b.y - a.y;
  return dx + dy;
}

inline std::ostream& operator<<(std::ostream& os, Vertex v) {
  return os << '(' << v.x << ',' << v.y << ')';
}

}  // namespace hamgrid

#endif  // HAMGRID_VERTEX_HPP_
