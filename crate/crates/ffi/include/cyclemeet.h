#ifndef CYCLEMEET_H
#define CYCLEMEET_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum CmStatus {
  CM_OK = 0,
  CM_NULL_ARGUMENT = 1,
  CM_INVALID_UTF8 = 2,
  CM_PARSE_ERROR = 3,
  CM_INVALID_ARGUMENT = 4,
  CM_PRECONDITION = 5,
  CM_TRUNCATED = 6,
  CM_INTERNAL = 7,
} CmStatus;

/**
 * Opaque graph handle.
 */
typedef struct CmGraph CmGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a graph6 string into a new handle. On success writes the handle to
 * `out` and returns CM_OK; the handle must be released with `cm_graph_free`.
 */
enum CmStatus cm_graph_parse_g6(const char *text, struct CmGraph **out);

/**
 * Releases a graph handle. Null is a no-op.
 */
void cm_graph_free(struct CmGraph *g);

/**
 * Serializes a handle back to graph6. The string must be released with
 * `cm_string_free`.
 */
enum CmStatus cm_graph_emit_g6(const struct CmGraph *g, char **out);

/**
 * Releases a string returned by this library. Null is a no-op.
 */
void cm_string_free(char *s);

int32_t cm_graph_order(const struct CmGraph *g);

int32_t cm_graph_edge_count(const struct CmGraph *g);

/**
 * Vertex connectivity; -1 for a null handle.
 */
int32_t cm_vertex_connectivity(const struct CmGraph *g);

/**
 * Longest-path length in edges; -1 for a null handle.
 */
int32_t cm_longest_path_length(const struct CmGraph *g);

/**
 * Circumference in edges (0 if acyclic); -1 for a null handle.
 */
int32_t cm_longest_cycle_length(const struct CmGraph *g);

/**
 * Minimum pairwise vertex intersection over all longest paths (kind 0) or
 * cycles (kind 1). Writes the minimum to `out`; returns CM_TRUNCATED when
 * enumeration hit the cap (the value is then only an upper bound).
 */
enum CmStatus cm_min_pair_intersection(const struct CmGraph *g,
                                       int32_t kind,
                                       uint64_t cap,
                                       uint32_t *out);

/**
 * The guaranteed longest-cycle intersection lower bound max(0, min(k, 8k-n-16)).
 */
enum CmStatus cm_bound_cycles(uint32_t n, uint32_t k, uint32_t *out);

/**
 * The guaranteed longest-path intersection lower bound max(0, min(k, 8k-n-9)).
 */
enum CmStatus cm_bound_paths(uint32_t n, uint32_t k, uint32_t *out);

/**
 * The general cycle-intersection lower bound c * k^(3/5).
 */
double cm_chen_bound(uint32_t k);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* CYCLEMEET_H */
