/* SPDX-License-Identifier: Apache-2.0 */
#include <math.h>
#include <stdio.h>
#include <string.h>

#include "prodgraph.h"

#define CHECK(cond)                                                 \
  do {                                                              \
    if (!(cond)) {                                                  \
      fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__,        \
              __LINE__, #cond);                                     \
      return 1;                                                     \
    }                                                               \
  } while (0)

int main(void) {
  PgGraph *c5 = NULL, *cart = NULL, *kron = NULL;
  CHECK(pg_graph_cycle(5, &c5) == PG_STATUS_OK);
  CHECK(pg_product(PG_PRODUCT_KIND_CARTESIAN, c5, c5, &cart) == PG_STATUS_OK);
  CHECK(pg_product(PG_PRODUCT_KIND_KRONECKER, c5, c5, &kron) == PG_STATUS_OK);
  CHECK(pg_graph_order(cart) == 25 && pg_graph_edge_count(kron) == 50);

  size_t map[25];
  bool valid = false;
  CHECK(pg_fn_map(5, map, 25) == PG_STATUS_OK);
  CHECK(pg_verify_isomorphism(cart, kron, map, 25, &valid) == PG_STATUS_OK);
  CHECK(valid);

  double eig[25];
  size_t written = 0;
  CHECK(pg_spectrum(kron, PG_MATRIX_DISTANCE, eig, 3, &written) ==
        PG_STATUS_BUFFER_TOO_SMALL);
  CHECK(written == 25);
  CHECK(pg_spectrum(kron, PG_MATRIX_DISTANCE, eig, 25, &written) ==
        PG_STATUS_OK);
  CHECK(fabs(eig[0] - 60.0) < 1e-7);

  PgDrgResult drg;
  CHECK(pg_drg_check(cart, &drg) == PG_STATUS_OK);
  CHECK(!drg.regular && drg.family == PG_COUNT_FAMILY_C && drg.distance == 2);

  PgDecision d;
  CHECK(pg_decide(PG_PRODUCT_KIND_CARTESIAN, PG_PRODUCT_KIND_KRONECKER, c5, c5,
                  &d) == PG_STATUS_OK);
  CHECK(d.isomorphic && d.rule == PG_RULE_EQUAL_ODD_CYCLES);

  char *g6 = NULL;
  CHECK(pg_graph_to_graph6(c5, &g6) == PG_STATUS_OK);
  CHECK(strcmp(g6, "Dhc") == 0);
  pg_string_free(g6);

  PgGraph *bad = NULL;
  CHECK(pg_graph_parse("3 1\n0 9\n", &bad) == PG_STATUS_PARSE_ERROR);
  CHECK(bad == NULL && pg_last_error_message() != NULL);

  pg_graph_free(c5);
  pg_graph_free(cart);
  pg_graph_free(kron);
  printf("ok %s\n", pg_version());
  return 0;
}
