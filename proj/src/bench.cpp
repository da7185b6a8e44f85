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

#include "hamgrid/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace hamgrid {

namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double time_solve(const GridSpec& g, int reps, ResultKind& kind) {
  std::vector<double> ms;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    const HamiltonResult result = solve(g);
    const auto t1 = std::chrono::steady_clock::now();
    kind = result.kind();
    ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return median(std::move(ms));
}

}  // namespace

std::array<Vertex, 2> central_fault_pair(int size) {
  return {Vertex{size / 2 - 1, size / 2}, Vertex{size / 2, size / 2}};
}

std::vector<BenchRow> bench(std::span<const int> sizes, int repetitions) {
  if (repetitions < 1) throw Error(ErrorCode::kDomain, "repetitions must be positive");
  std::vector<BenchRow> rows;
  for (int size : sizes) {
    if (size < 4) throw Error(ErrorCode::kDomain, "bench sizes must be at least 4");
    BenchRow row;
    row.size = size;
    row.vertices = static_cast<std::size_t>(size) * static_cast<std::size_t>(size);
    const auto pair = central_fault_pair(size);
    row.fault_free_ms = time_solve(GridSpec(size, size), repetitions, row.fault_free_kind);
    row.two_fault_ms = time_solve(GridSpec(size, size, {pair[0], pair[1]}), repetitions,
                                  row.two_fault_kind);
    rows.push_back(row);
  }
  return rows;
}

double fitted_exponent(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = std::min(x.size(), y.size());
  if (n < 2) return 0.0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = static_cast<double>(n) * sxx - sx * sx;
  return denom == 0 ? 0.0 : (static_cast<double>(n) * sxy - sx * sy) / denom;
}

std::string bench_csv(std::span<const BenchRow> rows) {
  std::ostringstream os;
  os << kBenchHeader << '\n' << std::fixed << std::setprecision(3);
  for (const BenchRow& r : rows) {
    os << r.size << ',' << r.vertices << ',' << r.fault_free_ms << ',' << r.two_fault_ms
       << ',' << to_string(r.fault_free_kind) << ',' << to_string(r.two_fault_kind) << '\n';
  }
  return os.str();
}

}  // namespace hamgrid
