#ifndef GHOM_H
#define GHOM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define GHOM_API __attribute__((visibility("default")))
#else
#define GHOM_API
#endif

typedef enum ghom_status {
  GHOM_OK = 0,
  GHOM_ERR_INVALID = 1,  /* parse errors, bad arguments, invalid walks */
  GHOM_ERR_BUDGET = 2,   /* enumeration budget exceeded */
  GHOM_ERR_INTERNAL = 4
} ghom_status;

typedef enum ghom_method {
  GHOM_METHOD_DEFINITIONAL = 0,
  GHOM_METHOD_REDUCED = 1,
  GHOM_METHOD_BASIS = 2
} ghom_method;

typedef enum ghom_format { GHOM_FORMAT_TEXT = 0, GHOM_FORMAT_JSON = 1 } ghom_format;

typedef struct ghom_graph ghom_graph;
typedef struct ghom_report ghom_report;

typedef struct ghom_options {
  ghom_method method;
  int type;                /* 1..4 */
  uint64_t max_simplices;
  int64_t cycle_cap;       /* negative: size-dependent default, 0: unbounded */
  uint64_t max_cycles;
  uint64_t seed;
  uint64_t count;
  int nmax;
  int exhaustive;
  int strict;
  int timings;
  unsigned threads;        /* 0: hardware concurrency */
} ghom_options;

GHOM_API void ghom_options_init(ghom_options* opt);

/* Message of the last failure on the calling thread; never NULL. */
GHOM_API const char* ghom_last_error(void);

GHOM_API ghom_status ghom_graph_from_text(const char* text, ghom_graph** out);
GHOM_API ghom_status ghom_graph_from_file(const char* path, ghom_graph** out);
GHOM_API void ghom_graph_free(ghom_graph* g);
GHOM_API int ghom_graph_vertex_count(const ghom_graph* g);
GHOM_API size_t ghom_graph_edge_count(const ghom_graph* g);

/* H1 by the definitional (method 0) or reduced (method 1) engine. torsion
 * receives up to torsion_cap invariant factors; torsion_count the full count.
 * Factors that do not fit in int64 are reported as 0. */
GHOM_API ghom_status ghom_h1(const ghom_graph* g, ghom_method method, uint64_t max_simplices, size_t* rank,
                             int64_t* torsion, size_t torsion_cap, size_t* torsion_count);

/* Commands. A report is produced whenever the status is GHOM_OK; its exit
 * code carries the command outcome (0, 1, 2 or 3). */
GHOM_API ghom_status ghom_run_h1(const ghom_graph* g, const ghom_options* opt, ghom_report** out);
GHOM_API ghom_status ghom_run_check_trivial(const ghom_graph* g, const char* walk, const ghom_options* opt,
                                            ghom_report** out);
GHOM_API ghom_status ghom_run_corpus(const ghom_options* opt, ghom_report** out);

/* Caller frees the string with ghom_string_free. */
GHOM_API ghom_status ghom_report_render(const ghom_report* r, ghom_format format, char** out);
GHOM_API int ghom_report_exit_code(const ghom_report* r);
GHOM_API void ghom_report_free(ghom_report* r);

/* Coordinate list of d1 (which = 1) or d2 (which = 2). */
GHOM_API ghom_status ghom_dump_boundary(const ghom_graph* g, int which, uint64_t max_simplices, char** out);

GHOM_API void ghom_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
