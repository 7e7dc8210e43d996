#ifndef KE_FFI_H
#define KE_FFI_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum KeStatus {
  KE_STATUS_OK = 0,
  // A required pointer argument was null.
  KE_STATUS_NULL_POINTER = 1,
  // Malformed text, bad UTF-8, or an invalid set, collection or graph.
  KE_STATUS_INVALID_INPUT = 2,
  // A guardrail was exceeded.
  KE_STATUS_TOO_LARGE = 3,
  // Members of the collection differ in size.
  KE_STATUS_NOT_RELEVANT = 4,
  // The operation's hypothesis does not hold for this input.
  KE_STATUS_HYPOTHESIS_FAILS = 5,
  KE_STATUS_UNKNOWN_THEOREM = 6,
  // An internal consistency check failed.
  KE_STATUS_VIOLATION = 7,
  // A Rust panic was caught at the boundary.
  KE_STATUS_PANIC = 8,
} KeStatus;

// hke decision procedure.
typedef enum KeHkeMethod {
  KE_HKE_METHOD_BRUTE = 0,
  KE_HKE_METHOD_DUALITY = 1,
  KE_HKE_METHOD_EXISTENTIAL = 2,
} KeHkeMethod;

// Opaque set collection.
typedef struct KeCollection KeCollection;

// Opaque graph.
typedef struct KeGraph KeGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failed call on this thread. Empty after a
// successful call. The pointer stays valid until the next call into the
// library on the same thread.
const char *ke_last_error_message(void);

// Frees a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed already.
void ke_string_free(char *s);

// Parses `{"sets": [[1,2],[2,3]]}`.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum KeStatus ke_collection_from_json(const char *json, struct KeCollection **out);

// Builds a collection from `set_count` sets laid out back to back in
// `elements`; set `i` has `set_lengths[i]` elements.
//
// # Safety
// `elements` must hold the sum of `set_lengths` values and `set_lengths`
// must hold `set_count` values.
enum KeStatus ke_collection_from_sets(const uint32_t *elements,
                                      const size_t *set_lengths,
                                      size_t set_count,
                                      struct KeCollection **out);

// # Safety
// `c` must be null or a handle from this library not yet freed.
void ke_collection_free(struct KeCollection *c);

// Number of member sets.
//
// # Safety
// `c` must be a live handle; `out` must be writable.
enum KeStatus ke_collection_len(const struct KeCollection *c, size_t *out);

// Common member size; `KE_STATUS_NOT_RELEVANT` if sizes differ.
//
// # Safety
// `c` must be a live handle; `out` must be writable.
enum KeStatus ke_collection_alpha(const struct KeCollection *c, size_t *out);

// `|union| + |intersection|`.
//
// # Safety
// `c` must be a live handle; `out` must be writable.
enum KeStatus ke_collection_e_value(const struct KeCollection *c, size_t *out);

// # Safety
// `c` must be a live handle; `out` must be writable.
enum KeStatus ke_collection_is_ke(const struct KeCollection *c, bool *out);

// # Safety
// `c` must be a live handle; `out` must be writable.
enum KeStatus ke_collection_is_hke(const struct KeCollection *c,
                                   enum KeHkeMethod method,
                                   bool *out);

// The m-invariant; `KE_STATUS_HYPOTHESIS_FAILS` when the single-removal
// values differ or there are fewer than two sets.
//
// # Safety
// `c` must be a live handle; `out` must be writable.
enum KeStatus ke_collection_compute_m(const struct KeCollection *c, int64_t *out);

// Whether the collection lies inside the maximum independent sets of
// some graph.
//
// # Safety
// `c` must be a live handle; `out` must be writable.
enum KeStatus ke_collection_is_realizable(const struct KeCollection *c, bool *out);

// Graph on vertices `1..=n`; `edges` holds `2 * edge_count` endpoints.
//
// # Safety
// `edges` must hold `2 * edge_count` values (it may be null when
// `edge_count` is zero); `out` must be writable.
enum KeStatus ke_graph_new(size_t n,
                           const uint32_t *edges,
                           size_t edge_count,
                           struct KeGraph **out);

// Parses `{"n": 3, "edges": [[1,2],[2,3]]}`.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum KeStatus ke_graph_from_json(const char *json, struct KeGraph **out);

// Parses the text format: a header `n <count>`, then one `u v` per line.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum KeStatus ke_graph_from_edge_list(const char *text, struct KeGraph **out);

// # Safety
// `g` must be null or a handle from this library not yet freed.
void ke_graph_free(struct KeGraph *g);

// Independence number.
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum KeStatus ke_graph_alpha(const struct KeGraph *g, size_t *out);

// Matching number.
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum KeStatus ke_graph_mu(const struct KeGraph *g, size_t *out);

// Whether alpha + mu equals the vertex count.
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum KeStatus ke_graph_is_ke(const struct KeGraph *g, bool *out);

// All maximum independent sets as collection JSON.
//
// # Safety
// `g` must be a live handle; `out` must be writable. Free the result with
// `ke_string_free`.
enum KeStatus ke_graph_omega_json(const struct KeGraph *g, char **out);

// A KE certificate as JSON `{"collection": ..., "matching": ...}`, or the
// text `null` when the graph has none.
//
// # Safety
// `g` must be a live handle; `out` must be writable. Free the result with
// `ke_string_free`.
enum KeStatus ke_graph_certificate_json(const struct KeGraph *g, char **out);

// Runs a stress suite. `config_json` may be null for the defaults, or a
// JSON object overriding any of the configuration fields. `passed` gets
// the verdict; if `report_out` is non-null it receives the JSON-lines
// report, to be freed with `ke_string_free`.
//
// # Safety
// String arguments must be NUL-terminated; `passed` must be writable.
enum KeStatus ke_stress(const char *theorem,
                        const char *config_json,
                        bool *passed,
                        char **report_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KE_FFI_H */
