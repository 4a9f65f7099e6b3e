// Copyright 2026 The Sectorise Authors
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

// C interface to the sectorisation engine. All functions return a
// sect_status; on failure sect_last_error() describes the problem for the
// calling thread. Strings returned through char** are freed with
// sect_string_free.

#ifndef SECTORISE_SECTORISE_H_
#define SECTORISE_SECTORISE_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SECT_API __declspec(dllexport)
#else
#define SECT_API __attribute__((visibility("default")))
#endif

typedef enum sect_status {
  SECT_OK = 0,
  SECT_ERR_INVALID_ARGUMENT = 1,
  SECT_ERR_IO = 2,
  SECT_ERR_SCHEMA = 3,
  SECT_ERR_INFEASIBLE = 4,
  SECT_ERR_INTERNAL = 5,
} sect_status;

typedef struct sect_instance sect_instance;
typedef struct sect_result sect_result;

SECT_API const char* sect_version(void);
SECT_API const char* sect_last_error(void);
SECT_API void sect_string_free(char* s);

typedef struct sect_generate_options {
  uint64_t seed;
  int32_t width, height, depth;
  int32_t dim;  // 2 or 3
  int32_t colours;
  int32_t flights;
  int64_t dwell_min, dwell_max;
  int64_t workload_min, workload_max;
  int32_t default_constraints;  // nonzero adds the default constraint set
  int64_t balance_percent;
  int64_t stretch_t;
} sect_generate_options;

// Fills `opt` with the library defaults.
SECT_API void sect_generate_defaults(sect_generate_options* opt);
SECT_API sect_status sect_instance_generate(const sect_generate_options* opt,
                                            sect_instance** out);
SECT_API sect_status sect_instance_load(const char* path, sect_instance** out);
SECT_API sect_status sect_instance_parse(const char* text, sect_instance** out);
SECT_API sect_status sect_instance_save(const sect_instance* inst,
                                        const char* path);
// Canonical text form.
SECT_API sect_status sect_instance_serialize(const sect_instance* inst,
                                             char** out);
SECT_API void sect_instance_free(sect_instance* inst);
SECT_API int32_t sect_instance_num_vertices(const sect_instance* inst);
SECT_API int32_t sect_instance_num_colours(const sect_instance* inst);
SECT_API int64_t sect_instance_total_workload(const sect_instance* inst);

typedef struct sect_solve_options {
  int64_t max_iterations;  // < 0 keeps the instance value
  uint64_t seed;
  int32_t use_seed;        // nonzero overrides the instance seed
  int32_t parallel;        // independent runs on seeds seed..seed+parallel-1
  int32_t mode;            // -1 instance, 0 exact, 1 paper-fast
  const char* weights;     // "id=k,id=k" or NULL
  const char* hard;        // "connected,stretchsum" or NULL
  int64_t trace_every;     // < 0 keeps the instance value
} sect_solve_options;

SECT_API void sect_solve_defaults(sect_solve_options* opt);
SECT_API sect_status sect_solve(const sect_instance* inst,
                                const sect_solve_options* opt,
                                sect_result** out);
SECT_API void sect_result_free(sect_result* r);
SECT_API double sect_result_total(const sect_result* r);
SECT_API uint64_t sect_result_seed(const sect_result* r);
SECT_API int64_t sect_result_iterations(const sect_result* r);
SECT_API sect_status sect_result_colours(const sect_result* r, int32_t* out,
                                         size_t len);
SECT_API sect_status sect_result_solution(const sect_result* r, char** out);
SECT_API sect_status sect_result_trace_csv(const sect_result* r, char** out);

// Evaluates a solution text against every constraint from scratch. The
// report is JSON; *satisfied is set to 1 when every constraint holds.
SECT_API sect_status sect_check(const sect_instance* inst,
                                const char* solution_text, char** report,
                                int32_t* satisfied);

// Exhaustive enumeration of satisfying colourings (small instances only).
SECT_API sect_status sect_oracle_solve(const sect_instance* inst, int32_t limit,
                                       char** out);
// Stretches of a colour sequence as JSON [[first, last], ...].
SECT_API sect_status sect_oracle_stretches(const int32_t* colours, size_t len,
                                           char** out);
// Runs the 1D contiguity propagator on a JSON request
// {"colours": n, "domains": [[...], ...], "trigger": i, "relop": "<=",
//  "counter": [...], "rules_only": false} and returns the pruned store
// alongside the brute-force filter result.
SECT_API sect_status sect_oracle_propagate(const char* request, char** out);

// Probe-cost report as JSON; `grids` lists widths and heights pairwise.
SECT_API sect_status sect_probe_bench(const int32_t* grids, size_t num_grids,
                                      int32_t probes, uint64_t seed,
                                      char** out);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // SECTORISE_SECTORISE_H_
