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

// Exhaustive census over grid sizes and fault placements, comparing oracle
// existence with both solver modes and the two-fault paper conditions.

#ifndef HAMGRID_CENSUS_HPP_
#define HAMGRID_CENSUS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hamgrid/grid.hpp"
#include "hamgrid/solver.hpp"

namespace hamgrid {

struct CensusRequest {
  int cols_min = 2;
  int cols_max = 2;
  int rows_min = 2;
  int rows_max = 2;
  int faults = 0;          // exact number of faults per instance, 0..2
  unsigned threads = 0;    // 0: hardware concurrency
  std::size_t cap = 64;    // oracle live-vertex cap
};

struct CensusRecord {
  GridSpec grid;
  bool oracle_exists = false;
  ResultKind paper_mode = ResultKind::kStuck;
  ResultKind auto_mode = ResultKind::kStuck;
  std::optional<bool> cond1_diff_colors;      // two-fault instances only
  std::optional<bool> cond2_corner_adjacent;  // two-fault instances only
  bool structural_infeasible = false;
};

// Instances in output order: sizes by cols then rows, placements in
// row-major index order. One fault covers odd-sized grids, two faults
// even-sized grids, zero faults every size. Throws Error(kDomain) for a
// fault count outside 0..2 or an empty range.
std::vector<GridSpec> census_instances(const CensusRequest& request);

// Throws Error(kCapExceeded) naming the first instance above the cap before
// any work is done.
std::vector<CensusRecord> census(const CensusRequest& request);

CensusRecord census_record(const GridSpec& g, std::size_t cap = 64);

inline constexpr std::string_view kCensusHeader =
    "m,n,fault1,fault2,oracle_exists,paper_mode,auto_mode,cond1_diff_colors,"
    "cond2_corner_adjacent,structural_infeasible";

// Header line plus one line per record, each newline-terminated.
std::string census_csv(std::span<const CensusRecord> records);

}  // namespace hamgrid

#endif  // HAMGRID_CENSUS_HPP_
