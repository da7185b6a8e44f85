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

#ifndef HAMGRID_SYMMETRY_HPP_
#define HAMGRID_SYMMETRY_HPP_

#include <array>
#include <span>
#include <vector>

#include "hamgrid/grid.hpp"

namespace hamgrid {

// An element of the dihedral group acting on a cols x rows lattice: reflect
// x and/or y in the source frame, then optionally swap the axes.
struct Symmetry {
  bool flip_x = false;
  bool flip_y = false;
  bool transpose = false;

  friend constexpr bool operator==(const Symmetry&, const Symmetry&) = default;
};

// All eight elements, identity first.
std::array<Symmetry, 8> all_symmetries() noexcept;

// Image of v under s for a source grid of the given dimensions.
Vertex apply(const Symmetry& s, int cols, int rows, Vertex v) noexcept;

// Maps a vertex of the image frame back to the source frame.
Vertex invert(const Symmetry& s, int cols, int rows, Vertex image) noexcept;

GridSpec apply(const Symmetry& s, const GridSpec& g);

std::vector<Vertex> apply(const Symmetry& s, const GridSpec& g,
                          std::span<const Vertex> vertices);

inline GridSpec transpose(const GridSpec& g) {
  return apply(Symmetry{false, false, true}, g);
}

}  // namespace hamgrid

#endif  // HAMGRID_SYMMETRY_HPP_
