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

#include "hamgrid/hamgrid.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "hamgrid/bench.hpp"
#include "hamgrid/census.hpp"
#include "hamgrid/document.hpp"
#include "hamgrid/error.hpp"
#include "hamgrid/grid.hpp"
#include "hamgrid/oracle.hpp"
#include "hamgrid/solver.hpp"

struct hg_grid {
  hamgrid::GridSpec spec;
};

struct hg_result {
  hamgrid::HamiltonResult result;
  std::string reason;
};

namespace {

thread_local std::string last_error;

hg_status fail(hg_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

hg_status status_of(hamgrid::ErrorCode code) {
  using hamgrid::ErrorCode;
  switch (code) {
    case ErrorCode::kParse:
      return HG_ERR_PARSE;
    case ErrorCode::kSchema:
      return HG_ERR_SCHEMA;
    case ErrorCode::kCapExceeded:
      return HG_ERR_CAP_EXCEEDED;
    default:
      return HG_ERR_DOMAIN;
  }
}

// Runs body, mapping exceptions onto status codes.
template <typename F>
hg_status guarded(F&& body) {
  try {
    return body();
  } catch (const hamgrid::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(HG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HG_ERR_INTERNAL, "unknown exception");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hg_result* wrap(hamgrid::HamiltonResult result) {
  auto* out = new hg_result{std::move(result), {}};
  out->reason = hamgrid::to_document(out->result).reason.value_or("");
  return out;
}

bool valid_format(hg_format f) {
  return f == HG_FORMAT_JSON || f == HG_FORMAT_ASCII || f == HG_FORMAT_SVG;
}

std::string render(const hamgrid::Document& doc, hg_format format) {
  switch (format) {
    case HG_FORMAT_ASCII:
      return hamgrid::render_ascii(doc);
    case HG_FORMAT_SVG:
      return hamgrid::render_svg(doc);
    default:
      return hamgrid::to_json(doc);
  }
}

}  // namespace

extern "C" {

const char* hg_version(void) { return "0.1.0"; }

const char* hg_status_string(hg_status status) {
  switch (status) {
    case HG_OK:
      return "ok";
    case HG_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case HG_ERR_DOMAIN:
      return "domain error";
    case HG_ERR_PARSE:
      return "parse error";
    case HG_ERR_SCHEMA:
      return "schema error";
    case HG_ERR_CAP_EXCEEDED:
      return "cap exceeded";
    case HG_ERR_VERIFY_FAILED:
      return "verification failed";
    case HG_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* hg_last_error(void) { return last_error.c_str(); }

void hg_string_free(char* s) { std::free(s); }

hg_status hg_grid_create(int32_t cols, int32_t rows, const int32_t* fault_xy,
                         size_t fault_count, hg_grid** out) {
  if (!out || (fault_count && !fault_xy)) return fail(HG_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::vector<hamgrid::Vertex> faults;
    for (size_t i = 0; i < fault_count; ++i) faults.push_back({fault_xy[2 * i], fault_xy[2 * i + 1]});
    *out = new hg_grid{hamgrid::GridSpec(cols, rows, std::move(faults))};
    return HG_OK;
  });
}

void hg_grid_destroy(hg_grid* grid) { delete grid; }

int32_t hg_grid_cols(const hg_grid* grid) { return grid ? grid->spec.cols() : 0; }

int32_t hg_grid_rows(const hg_grid* grid) { return grid ? grid->spec.rows() : 0; }

size_t hg_grid_live_count(const hg_grid* grid) { return grid ? grid->spec.live_count() : 0; }

hg_status hg_solve(const hg_grid* grid, hg_mode mode, size_t oracle_threshold,
                   hg_result** out) {
  if (!grid || !out) return fail(HG_ERR_INVALID_ARGUMENT, "null argument");
  if (mode != HG_MODE_PAPER && mode != HG_MODE_AUTO) {
    return fail(HG_ERR_INVALID_ARGUMENT, "unknown mode");
  }
  *out = nullptr;
  return guarded([&] {
    hamgrid::SolveOptions options;
    options.mode = mode == HG_MODE_AUTO ? hamgrid::Mode::kAuto : hamgrid::Mode::kPaper;
    if (oracle_threshold) options.oracle_threshold = oracle_threshold;
    *out = wrap(hamgrid::solve(grid->spec, options));
    return HG_OK;
  });
}

hg_status hg_oracle_cycle(const hg_grid* grid, size_t cap, hg_result** out) {
  if (!grid || !out) return fail(HG_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const hamgrid::OracleOptions options{cap ? cap : hamgrid::kOracleCycleCap, true};
    auto found = hamgrid::oracle_cycle(grid->spec, options);
    hamgrid::HamiltonResult result{grid->spec, hamgrid::InfeasibleOutcome{
                                                   hamgrid::InfeasibleReason::kOracleExhausted},
                                   hamgrid::Method::kOracleSearch};
    if (found.cycle) {
      result.outcome = hamgrid::CycleOutcome{hamgrid::canonical_cycle(*found.cycle)};
    }
    *out = wrap(std::move(result));
    return HG_OK;
  });
}

hg_status hg_oracle_count(const hg_grid* grid, size_t cap, uint64_t* count) {
  if (!grid || !count) return fail(HG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *count = hamgrid::oracle_count(grid->spec, {cap ? cap : hamgrid::kOracleCountCap, true});
    return HG_OK;
  });
}

void hg_result_destroy(hg_result* result) { delete result; }

hg_result_kind hg_result_get_kind(const hg_result* result) {
  if (!result) return HG_RESULT_STUCK;
  switch (result->result.kind()) {
    case hamgrid::ResultKind::kCycle:
      return HG_RESULT_CYCLE;
    case hamgrid::ResultKind::kPath:
      return HG_RESULT_PATH;
    case hamgrid::ResultKind::kNone:
      return HG_RESULT_NONE;
    case hamgrid::ResultKind::kStuck:
      break;
  }
  return HG_RESULT_STUCK;
}

hg_method hg_result_get_method(const hg_result* result) {
  return result && result->result.method == hamgrid::Method::kOracleSearch
             ? HG_METHOD_ORACLE
             : HG_METHOD_CONSTRUCTION;
}

size_t hg_result_vertex_count(const hg_result* result) {
  return result ? result->result.vertices().size() : 0;
}

hg_status hg_result_vertices(const hg_result* result, int32_t* xy, size_t capacity) {
  if (!result) return fail(HG_ERR_INVALID_ARGUMENT, "null argument");
  const auto vs = result->result.vertices();
  if (capacity < 2 * vs.size() || (!vs.empty() && !xy)) {
    return fail(HG_ERR_INVALID_ARGUMENT, "buffer too small for " +
                                             std::to_string(2 * vs.size()) + " coordinates");
  }
  for (size_t i = 0; i < vs.size(); ++i) {
    xy[2 * i] = vs[i].x;
    xy[2 * i + 1] = vs[i].y;
  }
  return HG_OK;
}

const char* hg_result_reason(const hg_result* result) {
  return result ? result->reason.c_str() : "";
}

hg_status hg_result_render(const hg_result* result, hg_format format, char** out) {
  if (!result || !out) return fail(HG_ERR_INVALID_ARGUMENT, "null argument");
  if (!valid_format(format)) return fail(HG_ERR_INVALID_ARGUMENT, "unknown format");
  *out = nullptr;
  return guarded([&] {
    *out = dup_string(render(hamgrid::to_document(result->result), format));
    return HG_OK;
  });
}

hg_status hg_document_render(const char* json, hg_format format, char** out) {
  if (!json || !out) return fail(HG_ERR_INVALID_ARGUMENT, "null argument");
  if (!valid_format(format)) return fail(HG_ERR_INVALID_ARGUMENT, "unknown format");
  *out = nullptr;
  return guarded([&] {
    *out = dup_string(render(hamgrid::parse_document(json), format));
    return HG_OK;
  });
}

hg_status hg_verify_document(const char* json, char** violation) {
  if (!json) return fail(HG_ERR_INVALID_ARGUMENT, "null argument");
  if (violation) *violation = nullptr;
  return guarded([&] {
    const auto problem = hamgrid::verify_document(hamgrid::parse_document(json));
    if (!problem) return HG_OK;
    if (violation) *violation = dup_string(*problem);
    return fail(HG_ERR_VERIFY_FAILED, *problem);
  });
}

hg_status hg_census_csv(const hg_census_request* request, char** csv) {
  if (!request || !csv) return fail(HG_ERR_INVALID_ARGUMENT, "null argument");
  *csv = nullptr;
  return guarded([&] {
    hamgrid::CensusRequest r;
    r.cols_min = request->cols_min;
    r.cols_max = request->cols_max;
    r.rows_min = request->rows_min;
    r.rows_max = request->rows_max;
    r.faults = request->faults;
    r.threads = request->threads;
    if (request->cap) r.cap = request->cap;
    *csv = dup_string(hamgrid::census_csv(hamgrid::census(r)));
    return HG_OK;
  });
}

hg_status hg_bench_csv(const int32_t* sizes, size_t size_count, int32_t repetitions,
                       char** csv, double* exponent) {
  if (!sizes || !size_count || !csv) return fail(HG_ERR_INVALID_ARGUMENT, "null argument");
  if (repetitions < 1) return fail(HG_ERR_INVALID_ARGUMENT, "repetitions must be positive");
  *csv = nullptr;
  return guarded([&] {
    const std::vector<int> list(sizes, sizes + size_count);
    const auto rows = hamgrid::bench(list, repetitions);
    if (exponent) {
      std::vector<double> x, y;
      for (const auto& r : rows) {
        x.push_back(static_cast<double>(r.size));
        y.push_back(std::max(r.two_fault_ms, 1e-6));
      }
      *exponent = rows.size() >= 2 ? hamgrid::fitted_exponent(x, y) : std::nan("");
    }
    *csv = dup_string(hamgrid::bench_csv(rows));
    return HG_OK;
  });
}

}  // extern "C"
