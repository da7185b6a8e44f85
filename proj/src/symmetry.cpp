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

#include "hamgrid/symmetry.hpp"

namespace hamgrid {

std::array<Symmetry, 8> all_symmetries() noexcept {
  std::array<Symmetry, 8> out{};
  for (int i = 0; i < 8; ++i) {
    out[i] = Symmetry{(i & 1) != 0, (i & 2) != 0, (i & 4) != 0};
  }
  return out;
}

Vertex apply(const Symmetry& s, int cols, int rows, Vertex v) noexcept {
  if (s.flip_x) v.x = cols - 1 - v.x;
  if (s.flip_y) v.y = rows - 1 - v.y;
  if (s.transpose) return Vertex{v.y, v.x};
  return v;
}

Vertex invert(const Symmetry& s, int cols, int rows, Vertex image) noexcept {
  if (s.transpose) image = Vertex{image.y, image.x};
  if (s.flip_x) image.x = cols - 1 - image.x;
  if (s.flip_y) image.y = rows - 1 - image.y;
  return image;
}

GridSpec apply(const Symmetry& s, const GridSpec& g) {
  std::vector<Vertex> faults;
  for (Vertex f : g.faults()) faults.push_back(apply(s, g.cols(), g.rows(), f));
  return s.transpose ? GridSpec(g.rows(), g.cols(), std::move(faults))
                     : GridSpec(g.cols(), g.rows(), std::move(faults));
}

std::vector<Vertex> apply(const Symmetry& s, const GridSpec& g,
                          std::span<const Vertex> vertices) {
  std::vector<Vertex> out;
  out.reserve(vertices.size());
  for (Vertex v : vertices) out.push_back(apply(s, g.cols(), g.rows(), v));
  return out;
}

}  // namespace hamgrid
