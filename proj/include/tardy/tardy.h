/* Copyright 2026 The tardy Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the tardy solvers for 1||sum p_j U_j and Pm||sum p_j U_j:
 * choose a subset of jobs to finish by their due dates on m identical
 * machines, maximizing the processing time of the early jobs.
 *
 * Every object is an opaque handle owned by the caller and released with the
 * matching *_free function. Fallible calls return a tardy_status; on failure
 * tardy_last_error() describes the problem for the calling thread.
 * Handles may move between threads but must not be used concurrently.
 */

#ifndef TARDY_TARDY_H_
#define TARDY_TARDY_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(TARDY_BUILDING_LIBRARY)
#define TARDY_API __declspec(dllexport)
#else
#define TARDY_API __declspec(dllimport)
#endif
#else
#define TARDY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tardy_status {
  TARDY_OK = 0,
  TARDY_ERR_IO = 1,
  TARDY_ERR_PARSE = 2,
  TARDY_ERR_CAPACITY = 3,
  TARDY_ERR_CONTRACT = 4,
  TARDY_ERR_INVALID_STATE = 5,
  TARDY_ERR_NOT_ACHIEVABLE = 6,
  TARDY_ERR_INTERNAL = 7
} tardy_status;

typedef enum tardy_algorithm {
  /* Output-sensitive sum-cap solver. */
  TARDY_ALGO_FAST = 0,
  /* Flat boolean table, O(P) (or O(m P^m)) per job. */
  TARDY_ALGO_LM = 1,
  /* Exhaustive enumeration; opt only, no totals. */
  TARDY_ALGO_BRUTE = 2
} tardy_algorithm;

typedef enum tardy_deadline_model {
  TARDY_DEADLINES_UNIFORM = 0,
  TARDY_DEADLINES_TIGHT = 1,
  TARDY_DEADLINES_SUBSET_SUM = 2
} tardy_deadline_model;

typedef struct tardy_instance tardy_instance;
typedef struct tardy_result tardy_result;
typedef struct tardy_schedule tardy_schedule;

typedef struct tardy_solve_options {
  /* Largest allowed (P+1)^m. */
  uint64_t universe_limit;
  /* Number of fingerprints, 1..4. */
  uint32_t fingerprints;
  /* Nonzero: seed fingerprint bases from fingerprint_seed. */
  int use_fingerprint_seed;
  uint64_t fingerprint_seed;
  /* Nonzero: recheck every LCE answer by direct comparison. */
  int verify_lce;
  /* Test hook: corrupt the fast solver's final set. */
  int inject_fault;
} tardy_solve_options;

TARDY_API const char* tardy_version(void);
TARDY_API const char* tardy_status_name(tardy_status status);
/* Message of the last failed call on this thread; "" if none. */
TARDY_API const char* tardy_last_error(void);
/* Releases strings returned by the library. */
TARDY_API void tardy_string_free(char* text);

/* Instances */

TARDY_API tardy_status tardy_instance_create(uint32_t machines, tardy_instance** out);
TARDY_API tardy_status tardy_instance_parse(const char* text, size_t length, tardy_instance** out);
TARDY_API tardy_status tardy_instance_read_file(const char* path, tardy_instance** out);
TARDY_API tardy_status tardy_instance_generate(size_t n, uint64_t pmax, tardy_deadline_model model,
                                               uint64_t seed, uint32_t machines, tardy_instance** out);
/* n jobs with processing times summing to exactly `total`. */
TARDY_API tardy_status tardy_instance_generate_with_total(uint64_t total, size_t n,
                                                          tardy_deadline_model model, uint64_t seed,
                                                          uint32_t machines, tardy_instance** out);
TARDY_API void tardy_instance_free(tardy_instance* inst);

TARDY_API tardy_status tardy_instance_add_job(tardy_instance* inst, uint64_t processing, uint64_t due);
/* Canonical text form; release with tardy_string_free. */
TARDY_API tardy_status tardy_instance_serialize(const tardy_instance* inst, char** out);
TARDY_API uint32_t tardy_instance_machines(const tardy_instance* inst);
TARDY_API size_t tardy_instance_job_count(const tardy_instance* inst);
TARDY_API uint64_t tardy_instance_total_processing(const tardy_instance* inst);
TARDY_API tardy_status tardy_instance_job(const tardy_instance* inst, size_t index, uint64_t* processing,
                                          uint64_t* due);

/* Solving */

TARDY_API void tardy_solve_options_init(tardy_solve_options* options);
/* `options` may be NULL for defaults. */
TARDY_API tardy_status tardy_solve(const tardy_instance* inst, tardy_algorithm algorithm,
                                   const tardy_solve_options* options, tardy_result** out);
TARDY_API void tardy_result_free(tardy_result* result);

TARDY_API uint64_t tardy_result_opt(const tardy_result* result);
TARDY_API uint32_t tardy_result_machines(const tardy_result* result);
/* Zero for brute-force results, which carry no totals. */
TARDY_API int tardy_result_has_totals(const tardy_result* result);
/* Achievable totals as flattened codes, increasing. With m machines a code
 * is sum_i s_i (P+1)^i, s_i being machine i's load. The array lives as long
 * as the result. */
TARDY_API size_t tardy_result_total_count(const tardy_result* result);
TARDY_API const uint64_t* tardy_result_totals(const tardy_result* result);
TARDY_API int tardy_result_contains(const tardy_result* result, uint64_t code);
/* Writes the m loads of `code` to `loads`. */
TARDY_API tardy_status tardy_result_point(const tardy_result* result, uint64_t code, uint64_t* loads,
                                          size_t count);
TARDY_API tardy_status tardy_result_code(const tardy_result* result, const uint64_t* loads, size_t count,
                                         uint64_t* code);
/* The member with the largest load sum. */
TARDY_API uint64_t tardy_result_best_code(const tardy_result* result);
TARDY_API uint64_t tardy_result_insertions_observed(const tardy_result* result);
TARDY_API uint64_t tardy_result_insertion_bound(const tardy_result* result);
TARDY_API void tardy_result_timings(const tardy_result* result, double* preprocess_seconds,
                                    double* main_loop_seconds, double* readout_seconds);

/* Schedules */

/* A feasible schedule whose loads match `code`. Needs a fast or lm result. */
TARDY_API tardy_status tardy_reconstruct(const tardy_result* result, const tardy_instance* inst, uint64_t code,
                                         tardy_schedule** out);
TARDY_API void tardy_schedule_free(tardy_schedule* schedule);
TARDY_API size_t tardy_schedule_entry_count(const tardy_schedule* schedule);
TARDY_API tardy_status tardy_schedule_entry(const tardy_schedule* schedule, size_t index, size_t* job_id,
                                            uint32_t* machine, uint64_t* completion);
TARDY_API uint64_t tardy_schedule_total(const tardy_schedule* schedule);
TARDY_API uint64_t tardy_schedule_tardy_cost(const tardy_schedule* schedule);
/* TARDY_OK if valid for `inst`; otherwise TARDY_ERR_CONTRACT with the
 * violated rule in tardy_last_error(). */
TARDY_API tardy_status tardy_schedule_validate(const tardy_schedule* schedule, const tardy_instance* inst);

#ifdef __cplusplus
}
#endif

#endif /* TARDY_TARDY_H_ */
