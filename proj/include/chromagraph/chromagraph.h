#ifndef CHROMAGRAPH_CHROMAGRAPH_H
#define CHROMAGRAPH_CHROMAGRAPH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CG_API __declspec(dllexport)
#else
#define CG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cg_status {
  CG_OK = 0,
  CG_ERR_PARSE = 1,
  CG_ERR_INVALID_ARGUMENT = 2,
  CG_ERR_DOMAIN = 3,
  CG_ERR_LIMIT = 4,
  CG_ERR_NO_CONVERGENCE = 5,
  CG_ERR_DISCONNECTED = 6,
  CG_ERR_INTERNAL = 7
} cg_status;

typedef struct cg_graph cg_graph;
typedef struct cg_poly cg_poly;
typedef struct cg_corpus cg_corpus;
typedef struct cg_run_config cg_run_config;

typedef struct cg_graph_stats {
  int n;
  size_t m;
  int max_degree;
  uint64_t triangles;
  int connected;
} cg_graph_stats;

/* Message of the last failed call on this thread; never NULL. */
CG_API const char* cg_last_error(void);
CG_API const char* cg_version(void);
/* Frees strings returned through char** out parameters. */
CG_API void cg_string_free(char* s);

/* Graphs */
CG_API cg_status cg_graph_from_graph6(const char* text, cg_graph** out);
CG_API cg_status cg_graph_from_edge_list(const char* text, cg_graph** out);
/* family is "KIND:N"; the seed is used by the random kinds only. */
CG_API cg_status cg_graph_family(const char* spec, uint64_t seed, cg_graph** out);
CG_API void cg_graph_free(cg_graph* g);
CG_API cg_status cg_graph_to_graph6(const cg_graph* g, char** out);
CG_API cg_status cg_graph_stats_get(const cg_graph* g, cg_graph_stats* out);

/* Corpora: ordered graph lists */
CG_API cg_status cg_corpus_exhaustive(int n, cg_corpus** out);
/* graph6 lines, or a single edge list; source names the input in errors. */
CG_API cg_status cg_corpus_from_text(const char* text, const char* source, cg_corpus** out);
CG_API cg_status cg_corpus_from_family(const char* spec, uint64_t seed, cg_corpus** out);
CG_API size_t cg_corpus_size(const cg_corpus* c);
/* Copies graph i into a new handle. */
CG_API cg_status cg_corpus_get(const cg_corpus* c, size_t i, cg_graph** out);
CG_API void cg_corpus_free(cg_corpus* c);

/* Chromatic polynomials */
CG_API cg_status cg_chromatic_polynomial(const cg_graph* g, cg_poly** out);
CG_API void cg_poly_free(cg_poly* p);
CG_API int cg_poly_degree(const cg_poly* p);
/* JSON array of decimal coefficient strings, lowest power first. */
CG_API cg_status cg_poly_to_json(const cg_poly* p, char** out);
CG_API cg_status cg_chromatic_number(const cg_poly* p, int* out);
/* Exact sign of the k-th derivative of ln[(-1)^n P] at the rational x < 0,
   given as a decimal or "a/b" string. */
CG_API cg_status cg_log_derivative_sign(const cg_poly* p, int k, const char* x, int* sign);

/* Run configuration, mirrors the command-line options */
CG_API cg_run_config* cg_run_config_new(void);
CG_API void cg_run_config_free(cg_run_config* c);
CG_API cg_status cg_run_config_set_input_label(cg_run_config* c, const char* label);
/* "2,3,5-8" */
CG_API cg_status cg_run_config_set_k(cg_run_config* c, const char* list);
CG_API cg_status cg_run_config_set_K(cg_run_config* c, const char* rational);
/* "XMIN:STEP" */
CG_API cg_status cg_run_config_set_grid(cg_run_config* c, const char* grid);
/* "json" or "csv" */
CG_API cg_status cg_run_config_set_format(cg_run_config* c, const char* format);
CG_API cg_status cg_run_config_set_jobs(cg_run_config* c, unsigned jobs);
CG_API cg_status cg_run_config_set_seed(cg_run_config* c, uint64_t seed);
CG_API cg_status cg_run_config_set_strict(cg_run_config* c, int strict);
CG_API cg_status cg_run_config_set_reproducible(cg_run_config* c, int reproducible);
/* "A:B" or "A" */
CG_API cg_status cg_run_config_set_audit_delta(cg_run_config* c, const char* range);
CG_API cg_status cg_run_config_set_audit_k(cg_run_config* c, const char* range);

/* Subcommands. On CG_OK, *out holds the report text and *exit_code the
   process exit status (0 clean, 1 check failure, 3 finding under strict). */
CG_API cg_status cg_run_poly(const cg_run_config* c, const cg_corpus* corpus, char** out, int* exit_code);
CG_API cg_status cg_run_verify(const cg_run_config* c, const cg_corpus* corpus, char** out, int* exit_code);
CG_API cg_status cg_run_scan(const cg_run_config* c, const cg_corpus* corpus, char** out, int* exit_code);
CG_API cg_status cg_run_audit(const cg_run_config* c, char** out, int* exit_code);

#ifdef __cplusplus
}
#endif

#endif
