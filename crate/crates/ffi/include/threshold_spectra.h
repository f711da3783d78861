#ifndef THRESHOLD_SPECTRA_H
#define THRESHOLD_SPECTRA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes.
typedef enum TsStatus {
  TS_STATUS_OK = 0,
  TS_STATUS_NULL_POINTER = 1,
  TS_STATUS_INVALID_UTF8 = 2,
  TS_STATUS_PARSE_ERROR = 3,
  TS_STATUS_NUMERIC_ERROR = 4,
  TS_STATUS_BUFFER_TOO_SMALL = 5,
  TS_STATUS_NOT_AVAILABLE = 6,
  TS_STATUS_INVALID_ARGUMENT = 7,
  TS_STATUS_PANIC = 8,
} TsStatus;

// Opaque graph handle.
typedef struct TsGraph TsGraph;

typedef struct TsInertia {
  size_t negatives;
  size_t zeros;
  size_t positives;
} TsInertia;

// Interval free of non-trivial eigenvalues and the order of the
// anti-regular graph that produced it.
typedef struct TsInterval {
  double lo;
  double hi;
  size_t source_order;
} TsInterval;

typedef struct TsBounds {
  // `λ_max` is at least this value.
  double lower_bound_lambda_max;
  // `λ_min` is at most this value.
  double upper_bound_lambda_min;
} TsBounds;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL. Valid until the
// next call into this library from the same thread.
const char *ts_last_error(void);

// Library version as a static NUL-terminated string.
const char *ts_version(void);

// Parses a creation string (`"0011"` or `"0^2 1^2"`).
//
// # Safety
// `text` must be NULL or a NUL-terminated string; `out` must be NULL or
// writable.
enum TsStatus ts_graph_parse(const char *text, struct TsGraph **out);

// The anti-regular graph on `n >= 2` vertices.
//
// # Safety
// `out` must be NULL or writable.
enum TsStatus ts_graph_antiregular(size_t n, struct TsGraph **out);

// Releases a handle. NULL is ignored.
//
// # Safety
// `g` must be NULL or a handle from this library that has not been freed.
void ts_graph_free(struct TsGraph *g);

// Number of vertices, or 0 for NULL.
//
// # Safety
// `g` must be NULL or a live handle.
size_t ts_graph_order(const struct TsGraph *g);

// Writes the expanded creation string plus a NUL into `buf`. `needed`
// (optional) receives the length including the NUL.
//
// # Safety
// `buf` must be writable for `cap` bytes; `needed` must be NULL or writable.
enum TsStatus ts_graph_to_string(const struct TsGraph *g, char *buf, size_t cap, size_t *needed);

// Eigenvalues in ascending order; `cap` must be at least the order.
//
// # Safety
// `out` must be writable for `cap` doubles.
enum TsStatus ts_graph_eigenvalues(const struct TsGraph *g, double *out, size_t cap);

// Inertia counted from the computed spectrum.
//
// # Safety
// `out` must be NULL or writable.
enum TsStatus ts_graph_inertia(const struct TsGraph *g, struct TsInertia *out);

// Inertia predicted from the block structure.
//
// # Safety
// `out` must be NULL or writable.
enum TsStatus ts_graph_inertia_formula(const struct TsGraph *g, struct TsInertia *out);

// Largest eigenvalue below -1; `TS_STATUS_NOT_AVAILABLE` when none exists.
//
// # Safety
// `out` must be NULL or writable.
enum TsStatus ts_graph_mu_minus(const struct TsGraph *g, double *out);

// Smallest positive eigenvalue.
//
// # Safety
// `out` must be NULL or writable.
enum TsStatus ts_graph_mu_plus(const struct TsGraph *g, double *out);

// `[μ⁻(A_m), μ⁺(A_m)]` for the largest anti-regular subgraph `A_m`.
//
// # Safety
// `out` must be NULL or writable.
enum TsStatus ts_graph_free_interval(const struct TsGraph *g, struct TsInterval *out);

// Closed-form bounds on the extreme eigenvalues.
//
// # Safety
// `out` must be NULL or writable.
enum TsStatus ts_graph_bounds(const struct TsGraph *g, struct TsBounds *out);

// Vertices of `g` inducing its largest anti-regular subgraph `A_m`; `m` is
// written to `len` even when the buffer is too small.
//
// # Safety
// `indices` must be writable for `cap` entries; `len` must be NULL or writable.
enum TsStatus ts_graph_antiregular_subgraph(const struct TsGraph *g,
                                            size_t *indices,
                                            size_t cap,
                                            size_t *len);

// Positions of the vertices of `g` inside its smallest anti-regular
// supergraph `A_N` (one per vertex of `g`); `N` is written to `host_order`.
//
// # Safety
// `indices` must be writable for `cap` entries; `host_order` must be NULL or
// writable.
enum TsStatus ts_graph_antiregular_supergraph(const struct TsGraph *g,
                                              size_t *indices,
                                              size_t cap,
                                              size_t *host_order);

// Endpoints of the interval `[(-1-√2)/2, (-1+√2)/2]`.
//
// # Safety
// `lo` and `hi` must each be NULL or writable.
void ts_omega(double *lo, double *hi);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* THRESHOLD_SPECTRA_H */
