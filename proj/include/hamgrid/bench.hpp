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

#ifndef HAMGRID_BENCH_HPP_
#define HAMGRID_BENCH_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hamgrid/grid.hpp"
#include "hamgrid/solver.hpp"

namespace hamgrid {

// Construction-pipeline timings on a size x size grid, fault-free and with
// two adjacent faults at the center.
struct BenchRow {
  int size = 0;
  std::size_t vertices = 0;
  double fault_free_ms = 0;  // median over the repetitions
  double two_fault_ms = 0;
  ResultKind fault_free_kind = ResultKind::kStuck;
  ResultKind two_fault_kind = ResultKind::kStuck;
};

// (size/2 - 1, size/2) and (size/2, size/2): adjacent, different colors.
std::array<Vertex, 2> central_fault_pair(int size);

// Throws Error(kDomain) for sizes below 4 or a non-positive repetition count.
std::vector<BenchRow> bench(std::span<const int> sizes, int repetitions);

// Least-squares slope of log(y) against log(x).
double fitted_exponent(std::span<const double> x, std::span<const double> y);

inline constexpr std::string_view kBenchHeader =
    "size,vertices,fault_free_ms,two_fault_ms,fault_free_result,two_fault_result";

std::string bench_csv(std::span<const BenchRow> rows);

}  // namespace hamgrid

#endif  // HAMGRID_BENCH_HPP_
