#ifndef ABC_ANALYTICA_H
#define ABC_ANALYTICA_H

/* Generated by cbindgen from the Rust sources; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every entry point.
typedef enum AbcStatus {
  // Success; inequality checks additionally report holds/equality.
  ABC_STATUS_OK = 0,
  // Malformed JSON, schema violation, or bad parameter.
  ABC_STATUS_INVALID_INPUT = 2,
  // A mathematical hypothesis of the requested check is violated.
  ABC_STATUS_HYPOTHESIS_VIOLATED = 3,
  // Internal inconsistency; indicates a bug, not bad input.
  ABC_STATUS_INTERNAL_ERROR = 4,
  // A required pointer argument was null.
  ABC_STATUS_NULL_POINTER = 5,
  // A string argument was not valid UTF-8.
  ABC_STATUS_INVALID_UTF8 = 6,
} AbcStatus;

// Opaque handle for a parsed problem file.
typedef struct AbcProblem AbcProblem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parse a JSON problem file into a new handle. On success `*out` owns the
// problem and must be released with [`abc_problem_free`].
//
// # Safety
// `json` must be a valid NUL-terminated string and `out` a valid,
// writable pointer.
enum AbcStatus abc_problem_parse(const char *json, struct AbcProblem **out);

// Release a handle returned by [`abc_problem_parse`]. Null is a no-op.
//
// # Safety
// `p` must be null or a pointer previously returned by
// [`abc_problem_parse`] that has not been freed.
void abc_problem_free(struct AbcProblem *p);

// Run the exact polynomial check (two-term or n-term, depending on the
// problem payload) and return the JSON report. Returns `InternalError`
// if the inequality fails to hold — it is a theorem, so that flags a bug.
//
// # Safety
// `p` must be a live handle and `out_json` a valid, writable pointer.
enum AbcStatus abc_mason_run(const struct AbcProblem *p, char **out_json);

// Build the analytic system from the problem file and verify the named
// bound. `theorem` is one of "1", "2", "prop3a", "prop3b", "4"; the
// D_alpha exponent for "4" comes from the problem file's `alpha` field.
//
// # Safety
// `p` must be a live handle, `theorem` a valid NUL-terminated string,
// and `out_json` a valid, writable pointer.
enum AbcStatus abc_verify_run(const struct AbcProblem *p, const char *theorem, char **out_json);

// Run a built-in demonstration ("example1", "example2", "limit",
// "lemmas") with default quadrature settings and return the JSON bundle.
//
// # Safety
// `which` must be a valid NUL-terminated string and `out_json` a valid,
// writable pointer.
enum AbcStatus abc_demo_run(const char *which, char **out_json);

// Release a string returned through an out-parameter. Null is a no-op.
//
// # Safety
// `s` must be null or a pointer previously handed out by this library
// that has not been freed.
void abc_string_free(char *s);

// Message for the most recent failure on this thread. The pointer stays
// valid until the next failing call on the same thread; do not free it.
const char *abc_last_error(void);

// Library version as a static NUL-terminated string; do not free it.
const char *abc_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ABC_ANALYTICA_H */
