#ifndef ABELIAN_PARABOLIC_H
#define ABELIAN_PARABOLIC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ApStatus {
  AP_STATUS_OK = 0,
  AP_STATUS_INVALID_INPUT = 2,
  AP_STATUS_NON_ABELIAN = 3,
  AP_STATUS_CONSISTENCY = 4,
} ApStatus;

// Opaque case handle.
typedef struct ApCase ApCase;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the last failure on this thread. The pointer stays
// valid until the next failing call on the same thread.
const char *ap_last_error(void);

// Builds the case for `kind` ("A".."E"), `rank` and 1-based `node`.
//
// # Safety
// `kind` must be a NUL-terminated string and `out` a writable pointer.
enum ApStatus ap_case_new(const char *kind, size_t rank, size_t node, struct ApCase **out);

// # Safety
// `handle` must come from [`ap_case_new`] and not have been freed. Null is
// accepted.
void ap_case_free(struct ApCase *handle);

// Number of M-orbits on V, that is r + 1.
//
// # Safety
// `handle` must be a live handle and `out` writable.
enum ApStatus ap_case_orbit_count(const struct ApCase *handle, size_t *out);

// # Safety
// `handle` must be a live handle and `out` writable.
enum ApStatus ap_case_dim_v(const struct ApCase *handle, size_t *out);

// Dimension of orbit `index`.
//
// # Safety
// `handle` must be a live handle and `out` writable.
enum ApStatus ap_case_orbit_dim(const struct ApCase *handle, size_t index, size_t *out);

// Whether w₀λ = −λ, which decides the unitarity verdict.
//
// # Safety
// `handle` must be a live handle and `out` writable.
enum ApStatus ap_case_w0_negates_lambda(const struct ApCase *handle, bool *out);

// Full report as JSON. The string must be released with
// [`ap_string_free`].
//
// # Safety
// `handle` must be a live handle and `out` writable.
enum ApStatus ap_case_report_json(const struct ApCase *handle, char **out);

// # Safety
// `s` must come from this library and not have been freed. Null is
// accepted.
void ap_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ABELIAN_PARABOLIC_H */
