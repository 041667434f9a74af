#ifndef SEDN_H
#define SEDN_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes 0 to 5 match the CLI exit codes.
 */
#define SEDN_OK 0

#define SEDN_INVALID_LABELING 1

#define SEDN_CONFLICT 2

#define SEDN_UNCOVERED_OR_REFUSED 3

#define SEDN_INTERNAL_MISMATCH 4

#define SEDN_IO_PARSE 5

/**
 * A required pointer was null or a string was not UTF-8.
 */
#define SEDN_INVALID_ARGUMENT 6

#define SEDN_PANIC 7

/**
 * Opaque labeling handle.
 */
typedef struct SednLabeling SednLabeling;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Agreed closed-form value. Returns `SEDN_CONFLICT` when the applicable
 * formulas disagree, leaving `out_value` untouched.
 *
 * # Safety
 * `out_value` must be valid for writes; null is rejected.
 */
int32_t sedn_gamma(uint32_t m, uint32_t n, uint32_t p, int64_t *out_value);

/**
 * Closed-form result as JSON, conflicts included. Free with `sedn_string_free`.
 *
 * # Safety
 * `out_json` must be valid for writes; null is rejected.
 */
int32_t sedn_gamma_json(uint32_t m, uint32_t n, uint32_t p, char **out_json);

/**
 * Formula value against m+n+p-1.
 *
 * # Safety
 * All out-pointers must be valid for writes; null is rejected.
 */
int32_t sedn_xu_bound(uint32_t m,
                      uint32_t n,
                      uint32_t p,
                      int64_t *out_gamma,
                      int64_t *out_bound,
                      bool *out_tight);

/**
 * Verified minimum-weight labeling from the constructor.
 *
 * # Safety
 * `out_labeling` must be valid for writes; null is rejected.
 */
int32_t sedn_construct(uint32_t m, uint32_t n, uint32_t p, struct SednLabeling **out_labeling);

/**
 * Exact optimum. `max_edges` of 0 uses the default cap. The certificate
 * is written only when `out_certificate` is not null.
 *
 * # Safety
 * `out_optimum` must be valid for writes; `out_certificate` may be null.
 */
int32_t sedn_solve(uint32_t m,
                   uint32_t n,
                   uint32_t p,
                   uint32_t max_edges,
                   int64_t *out_optimum,
                   struct SednLabeling **out_certificate);

/**
 * # Safety
 * `json` must be a nul-terminated string; `out_labeling` must be valid for writes.
 */
int32_t sedn_labeling_from_json(const char *json, struct SednLabeling **out_labeling);

/**
 * Free the result with `sedn_string_free`.
 *
 * # Safety
 * `labeling` must come from this library; `out_json` must be valid for writes.
 */
int32_t sedn_labeling_to_json(const struct SednLabeling *labeling, char **out_json);

/**
 * # Safety
 * `labeling` must come from this library; out-pointers must be valid for writes.
 */
int32_t sedn_labeling_verify(const struct SednLabeling *labeling,
                             bool *out_is_sedf,
                             uint64_t *out_violations);

/**
 * # Safety
 * `labeling` must come from this library; `out_weight` must be valid for writes.
 */
int32_t sedn_labeling_weight(const struct SednLabeling *labeling, int64_t *out_weight);

/**
 * Part sizes of the labeled graph.
 *
 * # Safety
 * `labeling` must come from this library; out-pointers must be valid for writes.
 */
int32_t sedn_labeling_params(const struct SednLabeling *labeling,
                             uint32_t *out_m,
                             uint32_t *out_n,
                             uint32_t *out_p);

/**
 * # Safety
 * `labeling` must be null or come from this library, and not be freed twice.
 */
void sedn_labeling_free(struct SednLabeling *labeling);

/**
 * # Safety
 * `s` must be null or a string returned by this library, and not be freed twice.
 */
void sedn_string_free(char *s);

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next call into the library from the same thread.
 */
const char *sedn_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SEDN_H */
