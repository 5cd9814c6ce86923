/* Copyright 2026 The Skyline Authors. Licensed under Apache-2.0. */

#ifndef SKYLINE_H
#define SKYLINE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum SkyStatus {
  SKY_STATUS_OK = 0,
  SKY_STATUS_NULL_ARGUMENT = 1,
  SKY_STATUS_INVALID_UTF8 = 2,
  SKY_STATUS_INVALID_ARGUMENT = 3,
  SKY_STATUS_PARSE_ERROR = 4,
  SKY_STATUS_ANALYSIS_ERROR = 5,
  SKY_STATUS_PLANNING_ERROR = 6,
  SKY_STATUS_INGEST_ERROR = 7,
  SKY_STATUS_RUNTIME_ERROR = 8,
  SKY_STATUS_IO_ERROR = 9,
  SKY_STATUS_ENGINE_DEFECT = 10,
  SKY_STATUS_PANIC = 11,
} SkyStatus;

// A table catalog. Not safe to use from two threads at once.
typedef struct SkyEngine SkyEngine;

// A materialized query result.
typedef struct SkyResult SkyResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Creates an empty engine. Never returns NULL.
struct SkyEngine *sky_engine_new(void);

// Releases an engine. NULL is ignored.
//
// # Safety
// `engine` must come from [`sky_engine_new`] and not be used afterwards.
void sky_engine_free(struct SkyEngine *engine);

// Loads a CSV file as table `name`. `schema_path` may be NULL to infer
// column types.
//
// # Safety
// Pointers must be NULL or valid; strings must be NUL-terminated.
enum SkyStatus sky_engine_register_csv(struct SkyEngine *engine,
                                       const char *name,
                                       const char *csv_path,
                                       const char *schema_path);

// Writes the physical plan of `sql` to `*out_plan`. `algorithm_name` may be NULL
// for automatic selection.
//
// # Safety
// Pointers must be NULL or valid; strings must be NUL-terminated.
enum SkyStatus sky_engine_explain(const struct SkyEngine *engine,
                                  const char *sql,
                                  const char *algorithm_name,
                                  char **out_plan);

// Runs `sql` and stores a new result handle in `*out_result`.
// `algorithm_name` may be NULL for automatic selection; `partitions` 0 means
// one partition per worker; `timeout_ms` 0 means no limit.
//
// # Safety
// Pointers must be NULL or valid; strings must be NUL-terminated.
enum SkyStatus sky_engine_query(const struct SkyEngine *engine,
                                const char *sql,
                                const char *algorithm_name,
                                uint32_t workers,
                                uint32_t partitions,
                                uint64_t timeout_ms,
                                struct SkyResult **out_result);

// Releases a result. NULL is ignored.
//
// # Safety
// `result` must come from [`sky_engine_query`] and not be used afterwards.
void sky_result_free(struct SkyResult *result);

// Number of result rows; 0 for NULL.
//
// # Safety
// `result` must be NULL or valid.
size_t sky_result_row_count(const struct SkyResult *result);

// Number of result columns; 0 for NULL.
//
// # Safety
// `result` must be NULL or valid.
size_t sky_result_column_count(const struct SkyResult *result);

// Name of column `index`, owned by the result; NULL if out of range.
//
// # Safety
// `result` must be NULL or valid.
const char *sky_result_column_name(const struct SkyResult *result, size_t index);

// Zero-based position of result row `row` in its input table; -1 if out
// of range.
//
// # Safety
// `result` must be NULL or valid.
int64_t sky_result_ordinal(const struct SkyResult *result, size_t row);

// Dominance tests performed by the query; 0 for NULL.
//
// # Safety
// `result` must be NULL or valid.
uint64_t sky_result_dominance_tests(const struct SkyResult *result);

// Writes the result as CSV (with header) to `*out_csv`.
//
// # Safety
// Pointers must be NULL or valid.
enum SkyStatus sky_result_to_csv(const struct SkyResult *result, char **out_csv);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void sky_string_free(char *s);

// Message of the last failed call on this thread, or NULL. Valid until the
// next call into this library on the same thread.
const char *sky_last_error(void);

// Library version, a static string.
const char *sky_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SKYLINE_H */
