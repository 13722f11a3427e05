#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "ghom/ghom.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static ghom_graph* graph(const char* text) {
  ghom_graph* g = NULL;
  EXPECT(ghom_graph_from_text(text, &g) == GHOM_OK);
  return g;
}

int main(void) {
  ghom_options opt;
  ghom_options_init(&opt);
  EXPECT(opt.method == GHOM_METHOD_REDUCED);
  EXPECT(opt.type == 1);
  EXPECT(opt.cycle_cap < 0);

  ghom_graph* c5 = graph("5\n1 2\n2 3\n3 4\n4 5\n5 1\n");
  EXPECT(ghom_graph_vertex_count(c5) == 5);
  EXPECT(ghom_graph_edge_count(c5) == 5);

  size_t rank = 99, ntors = 99;
  int64_t tors[4];
  EXPECT(ghom_h1(c5, GHOM_METHOD_DEFINITIONAL, 5000000, &rank, tors, 4, &ntors) == GHOM_OK);
  EXPECT(rank == 1 && ntors == 0);
  EXPECT(ghom_h1(c5, GHOM_METHOD_REDUCED, 0, &rank, NULL, 0, NULL) == GHOM_OK);
  EXPECT(rank == 1);
  EXPECT(ghom_h1(c5, GHOM_METHOD_BASIS, 0, &rank, NULL, 0, NULL) == GHOM_ERR_INVALID);
  EXPECT(ghom_h1(c5, GHOM_METHOD_DEFINITIONAL, 10, &rank, NULL, 0, NULL) == GHOM_ERR_BUDGET);
  EXPECT(strlen(ghom_last_error()) > 0);

  ghom_report* r = NULL;
  opt.method = GHOM_METHOD_BASIS;
  EXPECT(ghom_run_h1(c5, &opt, &r) == GHOM_OK);
  EXPECT(ghom_report_exit_code(r) == 0);
  char* json = NULL;
  EXPECT(ghom_report_render(r, GHOM_FORMAT_JSON, &json) == GHOM_OK);
  EXPECT(strstr(json, "\"schema\": 1") != NULL);
  EXPECT(strstr(json, "\"rank_claim\": 1") != NULL);
  ghom_string_free(json);
  ghom_report_free(r);

  r = NULL;
  EXPECT(ghom_run_check_trivial(c5, "121", &opt, &r) == GHOM_OK);
  char* text = NULL;
  EXPECT(ghom_report_render(r, GHOM_FORMAT_TEXT, &text) == GHOM_OK);
  EXPECT(strstr(text, "reduced: trivial") != NULL);
  ghom_string_free(text);
  ghom_report_free(r);

  r = NULL;
  EXPECT(ghom_run_check_trivial(c5, "1241", &opt, &r) == GHOM_OK);
  EXPECT(ghom_report_exit_code(r) == 1);
  ghom_report_free(r);

  char* dump = NULL;
  EXPECT(ghom_dump_boundary(c5, 1, 5000000, &dump) == GHOM_OK);
  EXPECT(strncmp(dump, "5 ", 2) == 0);
  ghom_string_free(dump);
  EXPECT(ghom_dump_boundary(c5, 7, 5000000, &dump) == GHOM_ERR_INVALID);

  ghom_options_init(&opt);
  opt.count = 5;
  opt.nmax = 6;
  opt.seed = 3;
  r = NULL;
  EXPECT(ghom_run_corpus(&opt, &r) == GHOM_OK);
  EXPECT(ghom_report_exit_code(r) == 0);
  ghom_report_free(r);

  ghom_graph* bad = NULL;
  EXPECT(ghom_graph_from_text("3\n1 4\n", &bad) == GHOM_ERR_INVALID);
  EXPECT(bad == NULL);
  EXPECT(ghom_graph_from_file("/nonexistent/graph.g", &bad) == GHOM_ERR_INVALID);
  EXPECT(ghom_graph_from_text(NULL, &bad) == GHOM_ERR_INVALID);
  EXPECT(ghom_run_h1(NULL, &opt, &r) == GHOM_ERR_INVALID);

  ghom_graph_free(c5);
  ghom_graph_free(NULL);
  ghom_report_free(NULL);

  if (failures) fprintf(stderr, "%d failures\n", failures);
  return failures ? 1 : 0;
}
