#ifndef GENUS_FFI_H
#define GENUS_FFI_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stdint.h>
#include <stddef.h>

/**
 * Values accepted by the `family` argument of the graph entry points.
 */
typedef enum GenusGraph {
  GENUS_GRAPH_L = 0,
  GENUS_GRAPH_CL = 1,
  GENUS_GRAPH_ML = 2,
  GENUS_GRAPH_RL = 3,
  GENUS_GRAPH_R = 4,
} GenusGraph;

/**
 * Values accepted by the `method` argument of [`genus_family_distribution`].
 */
typedef enum GenusMethod {
  GENUS_METHOD_CLOSED = 0,
  GENUS_METHOD_RECURRENCE = 1,
  GENUS_METHOD_AUTO = 2,
} GenusMethod;

/**
 * Result codes shared by every function.
 */
typedef enum GenusStatus {
  GENUS_STATUS_OK = 0,
  GENUS_STATUS_NULL_ARGUMENT = 1,
  GENUS_STATUS_INVALID_ARGUMENT = 2,
  GENUS_STATUS_OUT_OF_RANGE = 3,
  GENUS_STATUS_METHOD_UNAVAILABLE = 4,
  GENUS_STATUS_VERIFICATION_FAILED = 5,
  GENUS_STATUS_BUDGET_EXCEEDED = 6,
  GENUS_STATUS_UNSUPPORTED = 7,
  GENUS_STATUS_PANIC = 8,
} GenusStatus;

/**
 * One genus distribution.
 */
typedef struct GenusDist GenusDist;

/**
 * Genus distributions of all eleven surface families up to some `n`.
 */
typedef struct GenusTable GenusTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or an empty string.
 * The pointer stays valid until the next call into this library on the
 * same thread.
 */
const char *genus_last_error(void);

/**
 * Builds the table of all surface families for `0 <= n <= max_n`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum GenusStatus genus_table_build(uint32_t max_n, struct GenusTable **out);

/**
 * # Safety
 * `table` is a live handle; `out` is writable.
 */
enum GenusStatus genus_table_max_n(const struct GenusTable *table, uint32_t *out);

/**
 * Copies row `S_j^n` out of the table into a new distribution handle.
 *
 * # Safety
 * `table` is a live handle; `out` is writable.
 */
enum GenusStatus genus_table_get(const struct GenusTable *table,
                                 uint32_t j,
                                 uint32_t n,
                                 struct GenusDist **out);

/**
 * # Safety
 * `table` is null or a live handle that is not used afterwards.
 */
void genus_table_free(struct GenusTable *table);

/**
 * `S_j^n` by the method given as a [`GenusMethod`] value. `Auto` computes
 * both routes where a closed form exists and reports
 * `VERIFICATION_FAILED` if they differ.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum GenusStatus genus_family_distribution(uint32_t j,
                                           uint32_t n,
                                           uint32_t method,
                                           struct GenusDist **out);

/**
 * Genus polynomial of a named graph family ([`GenusGraph`] value).
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum GenusStatus genus_graph_polynomial(uint32_t family, uint32_t n, struct GenusDist **out);

/**
 * Enumerates every rotation system of a named graph. `R` has no
 * construction and yields `UNSUPPORTED`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum GenusStatus genus_oracle_named(uint32_t family,
                                    uint32_t n,
                                    uint64_t budget,
                                    struct GenusDist **out);

/**
 * Enumerates every rotation system of a connected multigraph given as
 * `edge_count` pairs `(edges[2k], edges[2k + 1])`.
 *
 * # Safety
 * `edges` points to `2 * edge_count` readable values (it may be null when
 * `edge_count` is zero); `out` is writable.
 */
enum GenusStatus genus_oracle_edges(uint32_t vertex_count,
                                    const uint32_t *edges,
                                    uintptr_t edge_count,
                                    uint64_t budget,
                                    struct GenusDist **out);

/**
 * # Safety
 * `dist` is a live handle; `out` is writable.
 */
enum GenusStatus genus_dist_offset(const struct GenusDist *dist, uintptr_t *out);

/**
 * Number of stored entries, from the minimum to the maximum genus.
 *
 * # Safety
 * `dist` is a live handle; `out` is writable.
 */
enum GenusStatus genus_dist_len(const struct GenusDist *dist, uintptr_t *out);

/**
 * Count of embeddings of genus `genus`, as a decimal string. Genera
 * outside the support give "0".
 *
 * # Safety
 * `dist` is a live handle; `out` is writable.
 */
enum GenusStatus genus_dist_coeff(const struct GenusDist *dist, uintptr_t genus, char **out);

/**
 * # Safety
 * `dist` is a live handle; `out` is writable.
 */
enum GenusStatus genus_dist_is_unimodal(const struct GenusDist *dist, bool *out);

/**
 * # Safety
 * `dist` is a live handle; `out` is writable.
 */
enum GenusStatus genus_dist_is_log_concave(const struct GenusDist *dist, bool *out);

/**
 * Mode interval `[lo, hi]` in absolute genus. For a non-unimodal
 * distribution this is the leftmost maximal run.
 *
 * # Safety
 * `dist` is a live handle; `lo` and `hi` are writable.
 */
enum GenusStatus genus_dist_modes(const struct GenusDist *dist, uintptr_t *lo, uintptr_t *hi);

/**
 * The same JSON object the command-line tool prints.
 *
 * # Safety
 * `dist` is a live handle; `out` is writable.
 */
enum GenusStatus genus_dist_to_json(const struct GenusDist *dist, char **out);

/**
 * # Safety
 * `dist` is null or a live handle that is not used afterwards.
 */
void genus_dist_free(struct GenusDist *dist);

/**
 * # Safety
 * `s` is null or a string returned by this library that is not used
 * afterwards.
 */
void genus_string_free(char *s);

/**
 * Reads a NUL-terminated edge list in the `u v` per line format and
 * enumerates it.
 *
 * # Safety
 * `text` is a NUL-terminated string; `out` is writable.
 */
enum GenusStatus genus_oracle_edge_list(const char *text, uint64_t budget, struct GenusDist **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GENUS_FFI_H */
