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

// Exhaustive backtracking search for Hamiltonian cycles on small grids.
// Shares nothing with the construction pipeline beyond the grid model.

#ifndef HAMGRID_ORACLE_HPP_
#define HAMGRID_ORACLE_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hamgrid/grid.hpp"

namespace hamgrid {

inline constexpr std::size_t kOracleCycleCap = 64;
inline constexpr std::size_t kOracleCountCap = 36;

struct SearchStats {
  std::uint64_t nodes = 0;   // path extensions tried
  std::uint64_t forced = 0;  // moves taken because a neighbor had no other option
  bool found = false;
  std::chrono::nanoseconds elapsed{0};
};

struct OracleOptions {
  std::size_t cap = kOracleCycleCap;  // refuse above this many live vertices
  bool pruning = true;                // degree, forced-move, parity, connectivity
};

struct OracleCycle {
  std::optional<std::vector<Vertex>> cycle;
  SearchStats stats;
};

// Extends a path from the lexicographically smallest live vertex, neighbors
// in E, N, W, S order. Throws Error(kCapExceeded) above options.cap.
OracleCycle oracle_cycle(const GridSpec& g, const OracleOptions& options = {});

// Number of undirected Hamiltonian cycles. Throws Error(kCapExceeded) above
// options.cap.
std::uint64_t oracle_count(const GridSpec& g,
                           const OracleOptions& options = {kOracleCountCap, true});

}  // namespace hamgrid

#endif  // HAMGRID_ORACLE_HPP_
