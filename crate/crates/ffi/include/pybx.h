#ifndef PYBX_H
#define PYBX_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes shared by every function.
typedef enum PybxStatus {
  // The call succeeded and, for `pybx_run`, the verdict is pass.
  PYBX_STATUS_OK = 0,
  // `pybx_run` produced a report whose verdict is fail.
  PYBX_STATUS_FAIL = 1,
  // The spec text could not be parsed.
  PYBX_STATUS_PARSE = 2,
  // A required argument was null, not UTF-8, or not recognised.
  PYBX_STATUS_INVALID_ARGUMENT = 3,
  // The library rejected the input (not an algebra, singular, ...).
  PYBX_STATUS_REJECTED = 4,
  // A required field is missing from the spec.
  PYBX_STATUS_MISSING_INPUT = 5,
  // An internal panic was caught.
  PYBX_STATUS_INTERNAL = 6,
} PybxStatus;

// Opaque parsed spec.
typedef struct PybxSpec PybxSpec;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses spec text into a new handle stored in `*out`.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer.
enum PybxStatus pybx_spec_parse(const char *text, struct PybxSpec **out);

// Releases a handle. Null is accepted.
//
// # Safety
// `spec` must be null or a handle from [`pybx_spec_parse`] not yet freed.
void pybx_spec_free(struct PybxSpec *spec);

// Dimension of the spec, or 0 for a null handle.
//
// # Safety
// `spec` must be null or a live handle.
uintptr_t pybx_spec_dim(const struct PybxSpec *spec);

// Number of parser warnings (duplicate entries), or 0 for a null handle.
//
// # Safety
// `spec` must be null or a live handle.
uintptr_t pybx_spec_warning_count(const struct PybxSpec *spec);

// Writes the canonical serialization to `*out`.
//
// # Safety
// `spec` must be a live handle and `out` a valid pointer.
enum PybxStatus pybx_spec_serialize(const struct PybxSpec *spec, char **out);

// Runs a workbench command and writes the rendered report to `*report`.
//
// `direction` and `weight` may be null. `machine` selects JSON output.
// Returns `PYBX_STATUS_OK` or `PYBX_STATUS_FAIL` according to the verdict
// when a report was produced; `*report` is null otherwise.
//
// # Safety
// String arguments must be null or NUL-terminated, `spec` a live handle,
// `report` a valid pointer.
enum PybxStatus pybx_run(const struct PybxSpec *spec,
                         const char *command,
                         const char *direction,
                         const char *weight,
                         bool machine,
                         char **report);

// Releases a string returned by this library. Null is accepted.
//
// # Safety
// `s` must be null or a string from this library not yet freed.
void pybx_string_free(char *s);

// Message for the most recent error on this thread, or null.
//
// The pointer stays valid until the next failing call on the same thread.
const char *pybx_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PYBX_H */
