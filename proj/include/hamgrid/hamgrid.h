/*
 * Copyright 2026 The hamgrid Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libhamgrid: Hamiltonian cycles and paths in rectangular
 * meshes with up to two faulty nodes.
 *
 * Handles are opaque and owned by the caller; release them with the matching
 * *_destroy function. Strings returned through `char**` are heap-allocated
 * and must be released with hg_string_free. Every function that can fail
 * returns an hg_status; on failure hg_last_error() describes the problem for
 * the calling thread until its next failing call.
 */

#ifndef HAMGRID_HAMGRID_H_
#define HAMGRID_HAMGRID_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HAMGRID_BUILDING)
#    define HG_API __declspec(dllexport)
#  else
#    define HG_API __declspec(dllimport)
#  endif
#else
#  define HG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hg_status {
  HG_OK = 0,
  HG_ERR_INVALID_ARGUMENT = 1, /* null pointer, bad enum, undersized buffer */
  HG_ERR_DOMAIN = 2,           /* grid or fault set outside the model */
  HG_ERR_PARSE = 3,            /* malformed JSON */
  HG_ERR_SCHEMA = 4,           /* JSON that does not follow the schema */
  HG_ERR_CAP_EXCEEDED = 5,     /* exhaustive search refused */
  HG_ERR_VERIFY_FAILED = 6,    /* document is not a Hamiltonian cycle/path */
  HG_ERR_INTERNAL = 7
} hg_status;

typedef enum hg_result_kind {
  HG_RESULT_CYCLE = 0,
  HG_RESULT_PATH = 1,
  HG_RESULT_NONE = 2,
  HG_RESULT_STUCK = 3
} hg_result_kind;

typedef enum hg_mode { HG_MODE_PAPER = 0, HG_MODE_AUTO = 1 } hg_mode;

typedef enum hg_method { HG_METHOD_CONSTRUCTION = 0, HG_METHOD_ORACLE = 1 } hg_method;

typedef enum hg_format { HG_FORMAT_JSON = 0, HG_FORMAT_ASCII = 1, HG_FORMAT_SVG = 2 } hg_format;

typedef struct hg_grid hg_grid;
typedef struct hg_result hg_result;

HG_API const char* hg_version(void);
HG_API const char* hg_status_string(hg_status status);
HG_API const char* hg_last_error(void);
HG_API void hg_string_free(char* s);

/* Faults are given as fault_count (x, y) pairs, flattened. */
HG_API hg_status hg_grid_create(int32_t cols, int32_t rows, const int32_t* fault_xy,
                                size_t fault_count, hg_grid** out);
HG_API void hg_grid_destroy(hg_grid* grid);
HG_API int32_t hg_grid_cols(const hg_grid* grid);
HG_API int32_t hg_grid_rows(const hg_grid* grid);
HG_API size_t hg_grid_live_count(const hg_grid* grid);

/* oracle_threshold: live-vertex cap for the exhaustive fallback in
 * HG_MODE_AUTO; 0 selects the default of 64. */
HG_API hg_status hg_solve(const hg_grid* grid, hg_mode mode, size_t oracle_threshold,
                          hg_result** out);

/* Exhaustive search only. cap 0 selects the default (64). A grid without a
 * Hamiltonian cycle yields an HG_RESULT_NONE result. */
HG_API hg_status hg_oracle_cycle(const hg_grid* grid, size_t cap, hg_result** out);

/* Number of undirected Hamiltonian cycles; cap 0 selects the default (36). */
HG_API hg_status hg_oracle_count(const hg_grid* grid, size_t cap, uint64_t* count);

HG_API void hg_result_destroy(hg_result* result);
HG_API hg_result_kind hg_result_get_kind(const hg_result* result);
HG_API hg_method hg_result_get_method(const hg_result* result);
HG_API size_t hg_result_vertex_count(const hg_result* result);
/* Copies the vertex sequence as (x, y) pairs into xy, which must hold
 * 2 * hg_result_vertex_count() values. */
HG_API hg_status hg_result_vertices(const hg_result* result, int32_t* xy, size_t capacity);
/* Reason code for HG_RESULT_NONE, diagnostics for HG_RESULT_STUCK, "" otherwise.
 * Valid for the lifetime of the result. */
HG_API const char* hg_result_reason(const hg_result* result);
HG_API hg_status hg_result_render(const hg_result* result, hg_format format, char** out);

/* Parses a result document and renders it again in the requested format. */
HG_API hg_status hg_document_render(const char* json, hg_format format, char** out);

/* HG_OK when the document holds a valid Hamiltonian cycle or path for its
 * grid, HG_ERR_VERIFY_FAILED with the first violation in *violation
 * otherwise. violation may be null. */
HG_API hg_status hg_verify_document(const char* json, char** violation);

typedef struct hg_census_request {
  int32_t cols_min, cols_max;
  int32_t rows_min, rows_max;
  int32_t faults;     /* 0, 1 or 2 */
  uint32_t threads;   /* 0: hardware concurrency */
  size_t cap;         /* oracle cap; 0 selects 64 */
} hg_census_request;

/* Census CSV (header plus one row per instance). */
HG_API hg_status hg_census_csv(const hg_census_request* request, char** csv);

/* Benchmark CSV; *exponent receives the log-log slope of the two-fault
 * median time against the side length. exponent may be null. */
HG_API hg_status hg_bench_csv(const int32_t* sizes, size_t size_count, int32_t repetitions,
                              char** csv, double* exponent);

#ifdef __cplusplus
}
#endif

#endif /* HAMGRID_HAMGRID_H_ */
