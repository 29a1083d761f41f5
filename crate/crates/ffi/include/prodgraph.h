/* SPDX-License-Identifier: Apache-2.0 */

#ifndef PRODGRAPH_H
#define PRODGRAPH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PgStatus {
  PG_STATUS_OK = 0,
  PG_STATUS_NULL_POINTER = 1,
  PG_STATUS_INVALID_ARGUMENT = 2,
  PG_STATUS_NOT_CONNECTED = 3,
  PG_STATUS_PARSE_ERROR = 4,
  PG_STATUS_BUFFER_TOO_SMALL = 5,
  PG_STATUS_BUDGET_EXCEEDED = 6,
  PG_STATUS_HYPOTHESIS = 7,
  PG_STATUS_PANIC = 8,
} PgStatus;

typedef enum PgProductKind {
  PG_PRODUCT_KIND_CARTESIAN = 0,
  PG_PRODUCT_KIND_KRONECKER = 1,
  PG_PRODUCT_KIND_STRONG = 2,
  PG_PRODUCT_KIND_LEXICOGRAPHIC = 3,
} PgProductKind;

typedef enum PgMatrix {
  PG_MATRIX_ADJACENCY = 0,
  PG_MATRIX_DISTANCE = 1,
} PgMatrix;

typedef enum PgCountFamily {
  PG_COUNT_FAMILY_NONE = 0,
  PG_COUNT_FAMILY_B = 1,
  PG_COUNT_FAMILY_C = 2,
} PgCountFamily;

typedef enum PgRule {
  PG_RULE_EQUAL_ODD_CYCLES = 0,
  PG_RULE_SINGLE_VERTEX_FACTORS = 1,
  PG_RULE_CART_KRON_NOT_CYCLES = 2,
  PG_RULE_CART_KRON_EVEN_CYCLES = 3,
  PG_RULE_CART_KRON_EVEN_ODD_CYCLES = 4,
  PG_RULE_CART_KRON_UNEQUAL_ODD_CYCLES = 5,
  PG_RULE_CART_STRONG_MAX_DEGREE = 6,
  PG_RULE_CART_LEX_MAX_DEGREE = 7,
  PG_RULE_KRON_STRONG_MAX_DEGREE = 8,
  PG_RULE_KRON_LEX_MAX_DEGREE = 9,
  PG_RULE_STRONG_LEX_COMPLETE_FACTOR = 10,
  PG_RULE_STRONG_LEX_MIN_DEGREE = 11,
} PgRule;

typedef enum PgCertificate {
  PG_CERTIFICATE_EXPLICIT_MAP = 0,
  PG_CERTIFICATE_MIN_DEGREE = 1,
  PG_CERTIFICATE_MAX_DEGREE = 2,
  PG_CERTIFICATE_CONNECTIVITY = 3,
  PG_CERTIFICATE_EIGENVALUE = 4,
} PgCertificate;

// Opaque graph handle.
typedef struct PgGraph PgGraph;

// Outcome of `pg_drg_check`. When `regular` is true only `diameter` is
// meaningful; otherwise the remaining fields describe the witness.
typedef struct PgDrgResult {
  bool regular;
  size_t diameter;
  size_t distance;
  enum PgCountFamily family;
  size_t first_x;
  size_t first_y;
  size_t second_x;
  size_t second_y;
  size_t first_count;
  size_t second_count;
} PgDrgResult;

// Outcome of `pg_decide`. `first` and `second` are the two compared
// invariants (degrees, component counts or smallest eigenvalues) in the
// order the kinds were passed; both are 0 for an explicit map.
typedef struct PgDecision {
  bool isomorphic;
  enum PgRule rule;
  enum PgCertificate certificate;
  double first;
  double second;
} PgDecision;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version, a static nul-terminated string.
const char *pg_version(void);

// Message for the last failed call on this thread, or null. Valid until
// the next call into the library on the same thread.
const char *pg_last_error_message(void);

// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
// `edges` (`2 * edge_count` entries).
//
// # Safety
// `edges` must point to `2 * edge_count` readable values (or be null when
// `edge_count` is 0) and `out` must be writable.
enum PgStatus pg_graph_from_edges(size_t n,
                                  const size_t *edges,
                                  size_t edge_count,
                                  struct PgGraph **out);

// Parses graph6 or the `n m` edge-list text format.
//
// # Safety
// `text` must be a valid nul-terminated string and `out` writable.
enum PgStatus pg_graph_parse(const char *text, struct PgGraph **out);

// # Safety
// `out` must be writable.
enum PgStatus pg_graph_cycle(size_t n, struct PgGraph **out);

// # Safety
// `out` must be writable.
enum PgStatus pg_graph_path(size_t n, struct PgGraph **out);

// # Safety
// `out` must be writable.
enum PgStatus pg_graph_complete(size_t n, struct PgGraph **out);

// Releases a handle; null is ignored.
//
// # Safety
// `g` must come from this library and not be used afterwards.
void pg_graph_free(struct PgGraph *g);

// Vertex count; 0 for null.
//
// # Safety
// `g` must be null or a live handle.
size_t pg_graph_order(const struct PgGraph *g);

// Edge count; 0 for null.
//
// # Safety
// `g` must be null or a live handle.
size_t pg_graph_edge_count(const struct PgGraph *g);

// False for null handles and out-of-range vertices.
//
// # Safety
// `g` must be null or a live handle.
bool pg_graph_has_edge(const struct PgGraph *g, size_t u, size_t v);

// graph6 encoding; release the string with `pg_string_free`.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum PgStatus pg_graph_to_graph6(const struct PgGraph *g, char **out);

// # Safety
// `s` must come from this library and not be used afterwards.
void pg_string_free(char *s);

// Product with row-major labels: vertex `(i, j)` is `i * order(h) + j`.
//
// # Safety
// `g` and `h` must be live handles and `out` writable.
enum PgStatus pg_product(enum PgProductKind kind,
                         const struct PgGraph *g,
                         const struct PgGraph *h,
                         struct PgGraph **out);

// # Safety
// `g` must be a live handle and `out` writable.
enum PgStatus pg_graph_diameter(const struct PgGraph *g, size_t *out);

// Writes all `order(g)` eigenvalues, nonincreasing, into `buf`. `written`
// always receives the required length, so a too-small buffer can be
// retried.
//
// # Safety
// `buf` must hold `len` writable values, `written` must be writable.
enum PgStatus pg_spectrum(const struct PgGraph *g,
                          enum PgMatrix matrix,
                          double *buf,
                          size_t len,
                          size_t *written);

// The explicit `C_n □ C_n -> C_n ⊗ C_n` map for odd `n`, `n * n` entries.
//
// # Safety
// `buf` must hold `len` writable values.
enum PgStatus pg_fn_map(size_t n, size_t *buf, size_t len);

// Checks that `map` (length `order(g1)`) is an isomorphism `g1 -> g2`.
//
// # Safety
// Handles must be live, `map` must hold `len` values, `out` writable.
enum PgStatus pg_verify_isomorphism(const struct PgGraph *g1,
                                    const struct PgGraph *g2,
                                    const size_t *map,
                                    size_t len,
                                    bool *out);

// Backtracking search with at most `budget` nodes (0 selects the
// default). On success `isomorphic` is set and, when true, the map is
// written to `map_out`. Returns `PG_STATUS_BUDGET_EXCEEDED` when the
// search gave up.
//
// # Safety
// Handles must be live, `map_out` must hold `len` writable values,
// `isomorphic` must be writable.
enum PgStatus pg_find_isomorphism(const struct PgGraph *g1,
                                  const struct PgGraph *g2,
                                  uint64_t budget,
                                  size_t *map_out,
                                  size_t len,
                                  bool *isomorphic);

// # Safety
// `g` must be a live handle and `out` writable.
enum PgStatus pg_drg_check(const struct PgGraph *g, struct PgDrgResult *out);

// Decides whether `G kind_a H` and `G kind_b H` are isomorphic.
//
// # Safety
// Handles must be live and `out` writable.
enum PgStatus pg_decide(enum PgProductKind kind_a,
                        enum PgProductKind kind_b,
                        const struct PgGraph *g,
                        const struct PgGraph *h,
                        struct PgDecision *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PRODGRAPH_H */
