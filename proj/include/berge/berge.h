/* C interface to the Berge hypergraph toolkit.
 *
 * Objects are opaque handles released with their *_free function. Every
 * function returning berge_status leaves a thread-local message readable with
 * berge_last_error(). Strings handed out through char** parameters are
 * heap-allocated and must be released with berge_string_free(). */
#ifndef BERGE_H
#define BERGE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BERGE_BUILDING_LIBRARY)
#    define BERGE_API __declspec(dllexport)
#  else
#    define BERGE_API __declspec(dllimport)
#  endif
#else
#  define BERGE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum berge_status {
  BERGE_OK = 0,
  BERGE_E_INVALID_ARGUMENT = 1,
  BERGE_E_NON_UNIFORM_EDGE = 2,
  BERGE_E_VERTEX_OUT_OF_RANGE = 3,
  BERGE_E_PARSE = 4,
  BERGE_E_INVALID_CYCLE_LENGTH = 5,
  BERGE_E_FORMAT = 6,
  BERGE_E_INDEX_OUT_OF_RANGE = 7,
  BERGE_E_EMPTY_HYPERGRAPH = 8,
  BERGE_E_TOO_FEW_EDGES = 9,
  BERGE_E_VERTEX_NOT_IN_HOST = 10,
  BERGE_E_V0_TOO_SMALL = 11,
  BERGE_E_BAD_PARAMETERS = 12,
  BERGE_E_PARAMS_OUT_OF_RANGE = 13,
  BERGE_E_DOES_NOT_DIVIDE = 14,
  BERGE_E_BLOCK_TOO_SMALL = 15,
  BERGE_E_OUTSIDE_THEOREM_RANGE = 16,
  BERGE_E_GRID_OUTSIDE_HYPOTHESES = 17,
  BERGE_E_SCALE_GUARD_EXCEEDED = 18,
  BERGE_E_HOST_NOT_FREE = 19,
  BERGE_E_IO = 20,
  BERGE_E_INTERNAL = 99
} berge_status;

typedef enum berge_search_status {
  BERGE_FOUND = 0,
  BERGE_NOT_FOUND = 1,
  BERGE_INDETERMINATE = 2
} berge_search_status;

typedef struct berge_hypergraph berge_hypergraph;
typedef struct berge_pattern berge_pattern;

BERGE_API const char* berge_version(void);
BERGE_API const char* berge_status_name(berge_status status);
BERGE_API const char* berge_last_error(void);
/* Byte offset for BERGE_E_PARSE, line number for BERGE_E_FORMAT, else -1. */
BERGE_API int64_t berge_last_error_position(void);
BERGE_API void berge_string_free(char* s);

/* ---- hypergraphs ---- */

/* `flat` holds num_edges * r vertex labels in 1..n; edges are canonicalized. */
BERGE_API berge_status berge_hypergraph_create(int r, int n, const int* flat, size_t num_edges,
                                               berge_hypergraph** out);
BERGE_API berge_status berge_hypergraph_read_text(const char* text, berge_hypergraph** out);
BERGE_API berge_status berge_hypergraph_read_file(const char* path, berge_hypergraph** out);
BERGE_API berge_status berge_hypergraph_write_file(const berge_hypergraph* h, const char* path);
BERGE_API berge_status berge_hypergraph_to_text(const berge_hypergraph* h, char** out);
BERGE_API void berge_hypergraph_free(berge_hypergraph* h);

BERGE_API int berge_hypergraph_order(const berge_hypergraph* h);
BERGE_API int berge_hypergraph_uniformity(const berge_hypergraph* h);
BERGE_API size_t berge_hypergraph_size(const berge_hypergraph* h);
BERGE_API int berge_hypergraph_duplicates_collapsed(const berge_hypergraph* h);
/* Copies the r vertices of edge i into out. */
BERGE_API berge_status berge_hypergraph_edge(const berge_hypergraph* h, size_t i, int* out);

/* ---- patterns ---- */

BERGE_API berge_status berge_pattern_parse(const char* expr, berge_pattern** out);
BERGE_API void berge_pattern_free(berge_pattern* p);
BERGE_API int berge_pattern_num_vertices(const berge_pattern* p);
BERGE_API size_t berge_pattern_num_edges(const berge_pattern* p);
/* Normalized expression; owned by the pattern. */
BERGE_API const char* berge_pattern_tag(const berge_pattern* p);

/* ---- containment ---- */

/* budget 0 = exhaustive. *certificate_json (may be NULL) receives the
 * certificate when found and NULL otherwise. nodes may be NULL. */
BERGE_API berge_status berge_find_embedding(const berge_hypergraph* h, const berge_pattern* f, uint64_t budget,
                                            berge_search_status* status, char** certificate_json,
                                            uint64_t* nodes);
BERGE_API berge_status berge_find_cycle(const berge_hypergraph* h, int length, uint64_t budget,
                                        berge_search_status* status, char** certificate_json, uint64_t* nodes);
BERGE_API berge_status berge_verify_certificate(const berge_hypergraph* h, const char* certificate_json, int* valid);
/* {"length", "exact", "nodes", "certificate"} */
BERGE_API berge_status berge_longest_path(const berge_hypergraph* h, uint64_t budget, char** result_json);

/* Writes up to `capacity` vertices; *length receives the full length. */
BERGE_API berge_status berge_good_order(const berge_hypergraph* h, int first, int* out, size_t capacity,
                                        size_t* length);
BERGE_API berge_status berge_is_good_order(const berge_hypergraph* h, const int* order, size_t length, int* good);
BERGE_API berge_status berge_common_neighbours(const berge_hypergraph* h, const int* v0, size_t v0_length,
                                               int* out, size_t capacity, size_t* length);
/* {"exists", "degree", "degree_condition", "certificate"} */
BERGE_API berge_status berge_star(const berge_hypergraph* h, int x, int l, char** result_json);

/* ---- constructions ---- */

BERGE_API berge_status berge_extremal_construction(int64_t n, int64_t r, int64_t l, int64_t k,
                                                   berge_hypergraph** out, char** layout_json);
BERGE_API berge_status berge_block_construction(int n, int l, int r, berge_hypergraph** out);
BERGE_API berge_status berge_construction_audit(const berge_hypergraph* h, const char* layout_json,
                                                char** report_json, int* pass);

/* ---- formulas ----
 * name is one of erdos_gallai {n,l}, kpl_graph {n,k,l}, path_bound {n,r,l},
 * connected_path {n,r,l}, two_path {n,r,l1,l2}, kpl {n,r,l,k},
 * conjecture {n,r,lengths}. Integers in the result are decimal strings and
 * rationals are "p/q" strings. */
BERGE_API berge_status berge_formula(const char* name, const char* params_json, char** result_json);
/* grid_json may be NULL for the lemma's default grid; csv may be NULL. */
BERGE_API berge_status berge_verify_lemma(const char* lemma, const char* grid_json, char** report_json,
                                          char** csv);

/* ---- exact Turán search ---- */

typedef struct berge_search_options {
  int connected_only;
  uint64_t node_budget;
  size_t witness_limit;
  int symmetry_pruning;
  unsigned threads;
  size_t max_candidates;
} berge_search_options;

BERGE_API void berge_search_options_init(berge_search_options* opts);
/* {"max_edges", "exact", "feasible", "nodes_explored", "embedding_nodes",
 *  "elapsed_seconds", "witnesses": [[[v, ...], ...], ...], ...} */
BERGE_API berge_status berge_exact_turan(int n, int r, const berge_pattern* f, const berge_search_options* opts,
                                         char** result_json);
BERGE_API berge_status berge_is_maximal_free(const berge_hypergraph* h, const berge_pattern* f, int* maximal);
BERGE_API berge_status berge_compare_with_formula(int n, int r, int k, int l, const berge_search_options* opts,
                                                  char** result_json, char** csv_row);
BERGE_API const char* berge_compare_csv_header(void);

#ifdef __cplusplus
}
#endif

#endif
