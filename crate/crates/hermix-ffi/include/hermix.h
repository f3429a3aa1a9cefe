#ifndef HERMIX_H
#define HERMIX_H

/* Generated by cbindgen from hermix-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>
typedef struct HxMixed HxMixed;

// Census mode selector.
typedef enum HxMode {
  HX_MODE_MIXED = 0,
  HX_MODE_ORIENTED = 1,
} HxMode;

// Status codes returned by every fallible call.
typedef enum HxStatus {
  HX_STATUS_OK = 0,
  // A required pointer argument was null.
  HX_STATUS_NULL_ARGUMENT = 1,
  // A string argument was not valid UTF-8.
  HX_STATUS_INVALID_UTF8 = 2,
  // Input could not be parsed (JSON, graph6, ...).
  HX_STATUS_PARSE_ERROR = 3,
  // The request itself was invalid (unknown name, size limit, ...).
  HX_STATUS_USAGE_ERROR = 4,
  // A verification or domain check failed.
  HX_STATUS_VERIFICATION_FAILED = 5,
  // The two graphs are not switching equivalent.
  HX_STATUS_NOT_EQUIVALENT = 6,
  // Unexpected internal failure (panic caught at the boundary).
  HX_STATUS_INTERNAL_ERROR = 7,
} HxStatus;

// Last error message for this thread; valid until the next failing call.
const char *hx_last_error_message(void);

// Parses mixed-graph JSON into a new handle.
//
// # Safety
// `json` must be a NUL-terminated string and `out` a valid pointer.
enum HxStatus hx_mixed_parse_json(const char *json, HxMixed **out);

// Canonical JSON of the mixed graph; release with `hx_string_free`.
//
// # Safety
// `m` must be a live handle and `out` a valid pointer.
enum HxStatus hx_mixed_to_json(const HxMixed *m, char **out);

// Vertex, arc and undirected-edge counts.
//
// # Safety
// `m` must be a live handle; out pointers may be null to skip a field.
enum HxStatus hx_mixed_counts(const HxMixed *m,
                              uint64_t *out_vertices,
                              uint64_t *out_arcs,
                              uint64_t *out_undirected);

// Releases a mixed-graph handle. Null is ignored.
//
// # Safety
// `m` must be null or a handle not yet freed.
void hx_mixed_free(HxMixed *m);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void hx_string_free(char *s);

// Exact optimality verdict H^2 = D*I: writes 1 or 0.
//
// # Safety
// `m` must be a live handle and `out` a valid pointer.
enum HxStatus hx_is_optimum(const HxMixed *m, int32_t *out);

// Hermitian energy (sum of absolute eigenvalues).
//
// # Safety
// `m` must be a live handle and `out` a valid pointer.
enum HxStatus hx_hermitian_energy(const HxMixed *m, double *out);

// The gap n*sqrt(D) - E_H; zero (within tolerance) exactly on optimum
// graphs.
//
// # Safety
// `m` must be a live handle and `out` a valid pointer.
enum HxStatus hx_energy_bound_gap(const HxMixed *m, double *out);

// Switching-equivalence witness as JSON `{"perm"?: [...], "theta": [...]}`.
// `iso` != 0 also tries underlying-graph automorphisms (order <= 10).
// Returns `NotEquivalent` when no witness exists.
//
// # Safety
// `a` and `b` must be live handles and `out` a valid pointer.
enum HxStatus hx_switching_witness_json(const HxMixed *a,
                                        const HxMixed *b,
                                        int32_t iso,
                                        char **out);

// Builds the optimum orientation of Q_k as a new handle.
//
// # Safety
// `out` must be a valid pointer.
enum HxStatus hx_phi0(uint32_t k, HxMixed **out);

// Runs the exact phi0 verification for Q_k (H^2 = k*I, cycle types, and
// the numeric energy for k <= 8).
enum HxStatus hx_verify_phi0(uint32_t k);

// Reduces an optimum hypercube orientation onto phi0; writes the switching
// signs as a JSON array.
//
// # Safety
// `m` must be a live handle and `out` a valid pointer.
enum HxStatus hx_reduce_to_phi0(const HxMixed *m, char **out);

// Runs a census over a graph6 string or a named graph (K<n>, C<n>, Q<k>,
// K33, prism) and writes the JSON report. `pruned` selects the
// backtracking strategy, `no_meta` != 0 strips the wall-time field.
//
// # Safety
// `graph` must be a NUL-terminated string and `out` a valid pointer.
enum HxStatus hx_census_json(const char *graph,
                             enum HxMode mode,
                             int32_t pruned,
                             uint32_t jobs,
                             int32_t no_meta,
                             char **out);

#endif /* HERMIX_H */
