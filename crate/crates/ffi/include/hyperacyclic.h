/* C interface to the hyperacyclic library. Generated by cbindgen; do not edit. */

#ifndef HYPERACYCLIC_H
#define HYPERACYCLIC_H

#include <stdbool.h>
#include <stddef.h>

// Result code of every call.
typedef enum HaStatus {
  HA_STATUS_OK = 0,
  // A required pointer argument was null.
  HA_STATUS_NULL_POINTER = 1,
  // Malformed hypergraph: empty, out-of-range or repeated vertex, vertex
  // in no hyperedge, unparsable text, or invalid UTF-8.
  HA_STATUS_INVALID_INPUT = 2,
  HA_STATUS_NOT_ACYCLIC = 3,
  HA_STATUS_NOT_BETA = 4,
  HA_STATUS_NOT_GAMMA = 5,
  HA_STATUS_NOT_INTERVAL = 6,
  // The output buffer is too small; the required length was written.
  HA_STATUS_BUFFER_TOO_SMALL = 7,
  // A Rust panic was caught at the boundary.
  HA_STATUS_INTERNAL = 8,
} HaStatus;

// Subset-graph algorithm selector.
typedef enum HaSubsetAlgo {
  HA_SUBSET_ALGO_BASELINE = 0,
  HA_SUBSET_ALGO_BETA = 1,
  HA_SUBSET_ALGO_GAMMA = 2,
  HA_SUBSET_ALGO_INTERVAL = 3,
} HaSubsetAlgo;

// Union-join-graph algorithm selector.
typedef enum HaUnionJoinAlgo {
  // Join-tree separators driven by the bitset subset graph.
  HA_UNION_JOIN_ALGO_GENERIC = 0,
  HA_UNION_JOIN_ALGO_GAMMA = 1,
  HA_UNION_JOIN_ALGO_INTERVAL = 2,
} HaUnionJoinAlgo;

// Opaque graph handle on hyperedge ids `0..m`. Undirected graphs store
// each edge once with the smaller endpoint first.
typedef struct HaGraph HaGraph;

// Opaque hypergraph handle.
typedef struct HaHypergraph HaHypergraph;

// Position of a hypergraph in the acyclicity hierarchy.
typedef struct HaClass {
  bool is_alpha;
  bool is_hypertree;
  bool is_beta;
  bool is_gamma;
  bool is_interval;
} HaClass;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the last failed call on this thread, or null if none
// failed yet. Valid until the next failing call on this thread.
const char *ha_last_error_message(void);

// Static description of a status code.
const char *ha_status_name(enum HaStatus status);

// Builds a hypergraph on vertices `0..n` from `m` hyperedges in compressed
// form: hyperedge `j` is `vertices[offsets[j] .. offsets[j+1]]`, so
// `offsets` holds `m + 1` non-decreasing entries starting at 0.
//
// # Safety
// `offsets` points to `m + 1` readable values and `vertices` to
// `offsets[m]` readable values (it may be null when that is 0). `out` is
// valid for a write.
enum HaStatus ha_hypergraph_new(size_t n,
                                size_t m,
                                const size_t *offsets,
                                const size_t *vertices,
                                struct HaHypergraph **out);

// Parses the line-oriented text format: one hyperedge per line, vertex
// names separated by whitespace, `#` starting a comment.
//
// # Safety
// `text` is a NUL-terminated string and `out` is valid for a write.
enum HaStatus ha_hypergraph_parse(const char *text, struct HaHypergraph **out);

// Releases a hypergraph. Null is ignored.
//
// # Safety
// `h` is null or a handle from this library not yet freed.
void ha_hypergraph_free(struct HaHypergraph *h);

// Writes the vertex count, hyperedge count and total size; any output
// pointer may be null.
//
// # Safety
// `h` is a live handle; non-null outputs are valid for a write.
enum HaStatus ha_hypergraph_counts(const struct HaHypergraph *h,
                                   size_t *n,
                                   size_t *m,
                                   size_t *size);

// Classifies `h` within the acyclicity hierarchy.
//
// # Safety
// `h` is a live handle and `out` is valid for a write.
enum HaStatus ha_classify(const struct HaHypergraph *h, struct HaClass *out);

// Whether some hyperedge of the α-acyclic hypergraph `h` is contained in
// another.
//
// # Safety
// `h` is a live handle and `out` is valid for a write.
enum HaStatus ha_sperner(const struct HaHypergraph *h, bool *out);

// Subset graph of `h`: edge `(i, j)` iff hyperedge `i` is contained in
// hyperedge `j` (ties between equal hyperedges give both directions).
//
// # Safety
// `h` is a live handle and `out` is valid for a write.
enum HaStatus ha_subset_graph(const struct HaHypergraph *h,
                              enum HaSubsetAlgo algo,
                              struct HaGraph **out);

// Union join graph of the α-acyclic hypergraph `h`.
//
// # Safety
// `h` is a live handle and `out` is valid for a write.
enum HaStatus ha_union_join(const struct HaHypergraph *h,
                            enum HaUnionJoinAlgo algo,
                            struct HaGraph **out);

// Releases a graph. Null is ignored.
//
// # Safety
// `g` is null or a handle from this library not yet freed.
void ha_graph_free(struct HaGraph *g);

// Number of edges of `g`.
//
// # Safety
// `g` is a live handle and `out` is valid for a write.
enum HaStatus ha_graph_edge_count(const struct HaGraph *g, size_t *out);

// Whether `g` is directed (a subset graph) or undirected (a union join
// graph).
//
// # Safety
// `g` is a live handle and `out` is valid for a write.
enum HaStatus ha_graph_is_directed(const struct HaGraph *g, bool *out);

// Copies the edges of `g`, sorted, into `pairs` as `(source, target)`
// pairs of 0-based hyperedge ids: `2 * count` values. `capacity` is the
// length of `pairs` in values; when it is too small nothing is copied,
// `*required` receives the needed length and `BufferTooSmall` is returned.
//
// # Safety
// `g` is a live handle, `pairs` is valid for `capacity` writes (or null
// with capacity 0), and `required` is null or valid for a write.
enum HaStatus ha_graph_edges(const struct HaGraph *g,
                             size_t *pairs,
                             size_t capacity,
                             size_t *required);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HYPERACYCLIC_H */
