// Copyright 2026 The rnnbp Authors
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

/*
 * C interface to the randomized-neural-network collocation solvers.
 *
 * Every function returns an rnnbp_status; on failure a message for the
 * calling thread is available from rnnbp_last_error(). Handles are opaque
 * and owned by the caller once returned; release them with the matching
 * *_free function. Strings returned by the library stay valid until the
 * handle they came from is freed (or, for rnnbp_last_error, until the next
 * call on the same thread).
 */

#ifndef RNNBP_RNNBP_H
#define RNNBP_RNNBP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32) || defined(__CYGWIN__)
#  if defined(RNNBP_BUILDING_LIBRARY)
#    define RNNBP_API __declspec(dllexport)
#  else
#    define RNNBP_API __declspec(dllimport)
#  endif
#else
#  define RNNBP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rnnbp_status {
  RNNBP_OK = 0,
  RNNBP_ERR_INVALID_ARGUMENT = 1,
  RNNBP_ERR_UNKNOWN_CASE = 2,
  RNNBP_ERR_UNSUPPORTED = 3, /* e.g. boundary processing on a disk */
  RNNBP_ERR_NUMERIC = 4,
  RNNBP_ERR_IO = 5,
  RNNBP_ERR_INTERNAL = 6
} rnnbp_status;

typedef enum rnnbp_method { RNNBP_METHOD_RNN = 0, RNNBP_METHOD_SCALING = 1, RNNBP_METHOD_BP = 2 } rnnbp_method;

typedef enum rnnbp_init { RNNBP_INIT_FANIN = 0, RNNBP_INIT_UNIFORM = 1 } rnnbp_init;

typedef enum rnnbp_pde { RNNBP_PDE_POISSON = 0, RNNBP_PDE_BIHARMONIC = 1 } rnnbp_pde;

#define RNNBP_MAX_LAYERS 16

/* One solver run. architecture is [2, hidden..., 1]. */
typedef struct rnnbp_settings {
  const char* case_id;
  int k; /* exponent for p1.3 / b2.4; negative selects the case default */
  rnnbp_method method;
  int N;
  int architecture[RNNBP_MAX_LAYERS];
  size_t n_architecture;
  rnnbp_init init;
  double rm;
  uint64_t seed;
  double rcond;
  int n_test;
} rnnbp_settings;

typedef struct rnnbp_record {
  char case_id[16];
  rnnbp_method method;
  rnnbp_pde pde;
  int N;
  int M;
  rnnbp_init init;
  double rm;
  uint64_t seed;
  int is_median; /* aggregated sweep row; seed is meaningless */
  double rcond;
  double rel_l2;
  double residual;
  int rank;
  double time_ms;
} rnnbp_record;

typedef struct rnnbp_sweep_settings {
  rnnbp_settings base;
  const rnnbp_method* methods;
  size_t n_methods;
  const int* Ns;
  size_t n_Ns;
  const int* Ms; /* last hidden width; may be empty */
  size_t n_Ms;
  const double* rms; /* may be empty */
  size_t n_rms;
  const uint64_t* seeds;
  size_t n_seeds;
} rnnbp_sweep_settings;

typedef struct rnnbp_solution rnnbp_solution;
typedef struct rnnbp_table rnnbp_table;

RNNBP_API const char* rnnbp_version(void);
RNNBP_API const char* rnnbp_last_error(void);
RNNBP_API const char* rnnbp_status_string(rnnbp_status status);

/* Defaults: case p1.1, RNN, N=16, [2,100,300,1], fan-in init, rm=1, seed 0,
 * rcond 1e-15, 10000 test points. */
RNNBP_API void rnnbp_settings_init(rnnbp_settings* s);

RNNBP_API size_t rnnbp_case_count(void);
/* default_k is -1 for cases without an exponent parameter. */
RNNBP_API rnnbp_status rnnbp_case_info(size_t index, const char** id, const char** description, rnnbp_pde* pde,
                                       int* default_k);

RNNBP_API rnnbp_status rnnbp_solve(const rnnbp_settings* s, rnnbp_solution** out);
RNNBP_API void rnnbp_solution_free(rnnbp_solution* sol);
RNNBP_API rnnbp_status rnnbp_solution_record(const rnnbp_solution* sol, rnnbp_record* out);
/* CSV header line plus the record line. */
RNNBP_API rnnbp_status rnnbp_solution_csv(const rnnbp_solution* sol, const char** out);
RNNBP_API rnnbp_status rnnbp_solution_eval(const rnnbp_solution* sol, double x, double y, double* value,
                                           double* exact);
/* Binary PGM at path plus a companion CSV of the raw error field. */
RNNBP_API rnnbp_status rnnbp_solution_heatmap(const rnnbp_solution* sol, int resolution, const char* path,
                                              double* max_error);

/* Writes prefix.net.json, prefix.points.csv, prefix.system.csv and
 * prefix.solution.csv. */
RNNBP_API rnnbp_status rnnbp_dump(const rnnbp_settings* s, const char* prefix);

RNNBP_API rnnbp_status rnnbp_sweep(const rnnbp_sweep_settings* s, rnnbp_table** out);
RNNBP_API size_t rnnbp_table_rows(const rnnbp_table* t);
RNNBP_API rnnbp_status rnnbp_table_row(const rnnbp_table* t, size_t index, rnnbp_record* out);
/* Full CSV including the header. include_timing = 0 leaves time_ms empty. */
RNNBP_API const char* rnnbp_table_csv(const rnnbp_table* t, int include_timing);
RNNBP_API void rnnbp_table_free(rnnbp_table* t);

#ifdef __cplusplus
}
#endif

#endif /* RNNBP_RNNBP_H */
