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

#include "hamgrid/census.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "hamgrid/oracle.hpp"

namespace hamgrid {

std::vector<GridSpec> census_instances(const CensusRequest& r) {
  if (r.faults < 0 || r.faults > 2) {
    throw Error(ErrorCode::kDomain, "census fault count must be 0, 1 or 2");
  }
  if (r.cols_min < 1 || r.rows_min < 1 || r.cols_min > r.cols_max ||
      r.rows_min > r.rows_max) {
    throw Error(ErrorCode::kDomain, "census ranges must be non-empty and positive");
  }
  std::vector<GridSpec> out;
  for (int m = r.cols_min; m <= r.cols_max; ++m) {
    for (int n = r.rows_min; n <= r.rows_max; ++n) {
      const int size = m * n;
      if (r.faults == 0) {
        out.emplace_back(m, n);
      } else if (r.faults == 1 && size % 2 == 1 && size > 1) {
        for (int a = 0; a < size; ++a) out.emplace_back(m, n, std::vector<Vertex>{{a % m, a / m}});
      } else if (r.faults == 2 && size % 2 == 0 && size > 2) {
        for (int a = 0; a < size; ++a) {
          for (int b = a + 1; b < size; ++b) {
            out.emplace_back(m, n, std::vector<Vertex>{{a % m, a / m}, {b % m, b / m}});
          }
        }
      }
    }
  }
  return out;
}

CensusRecord census_record(const GridSpec& g, std::size_t cap) {
  CensusRecord rec{g, false, ResultKind::kStuck, ResultKind::kStuck, std::nullopt,
                   std::nullopt, false};
  rec.oracle_exists = oracle_cycle(g, OracleOptions{cap, true}).cycle.has_value();
  rec.paper_mode = solve(g, SolveOptions{Mode::kPaper, cap, {}}).kind();
  rec.auto_mode = solve(g, SolveOptions{Mode::kAuto, cap, {}}).kind();
  const FeasibilityReport report = feasibility(g);
  if (g.fault_count() == 2) {
    rec.cond1_diff_colors = report.condition(kCondDiffColors)->holds;
    rec.cond2_corner_adjacent = report.condition(kCondCornerAdjacent)->holds;
  }
  rec.structural_infeasible = report.verdict == Verdict::kInfeasible;
  return rec;
}

std::vector<CensusRecord> census(const CensusRequest& request) {
  const std::vector<GridSpec> instances = census_instances(request);
  for (const GridSpec& g : instances) {
    if (g.live_count() > request.cap) {
      std::ostringstream os;
      os << "census instance " << g.cols() << "x" << g.rows() << " has "
         << g.live_count() << " live vertices, above the oracle cap " << request.cap;
      throw Error(ErrorCode::kCapExceeded, os.str());
    }
  }

  std::vector<std::optional<CensusRecord>> slots(instances.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      slots[i] = census_record(instances[i], request.cap);
    }
  };
  unsigned threads = request.threads ? request.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(instances.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<CensusRecord> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

namespace {

std::string fault_field(const GridSpec& g, std::size_t i) {
  if (i >= g.fault_count()) return "";
  return std::to_string(g.faults()[i].x) + ":" + std::to_string(g.faults()[i].y);
}

const char* flag(bool b) { return b ? "true" : "false"; }

const char* flag(const std::optional<bool>& b) { return b ? flag(*b) : ""; }

}  // namespace

std::string census_csv(std::span<const CensusRecord> records) {
  std::ostringstream os;
  os << kCensusHeader << '\n';
  for (const CensusRecord& r : records) {
    os << r.grid.cols() << ',' << r.grid.rows() << ',' << fault_field(r.grid, 0) << ','
       << fault_field(r.grid, 1) << ',' << flag(r.oracle_exists) << ','
       << to_string(r.paper_mode) << ',' << to_string(r.auto_mode) << ','
       << flag(r.cond1_diff_colors) << ',' << flag(r.cond2_corner_adjacent) << ','
       << flag(r.structural_infeasible) << '\n';
  }
  return os.str();
}

}  // namespace hamgrid
