/*
 * hued: r-hued graph colouring behind a C ABI.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a hued_status; on
 * failure hued_last_error() describes it (thread-local, valid until the next
 * call on the same thread). Strings returned through char** are
 * NUL-terminated, heap allocated, and released with hued_string_free.
 */
#ifndef HUED_H
#define HUED_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HUED_API __declspec(dllexport)
#else
#define HUED_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hued_status {
    HUED_OK = 0,
    HUED_ERR_INPUT = 1,     /* invalid argument or precondition */
    HUED_ERR_PARSE = 2,     /* malformed graph / JSON text */
    HUED_ERR_INVARIANT = 3, /* internal invariant failed: a bug */
    HUED_ERR_INTERNAL = 4   /* anything else (allocation, ...) */
} hued_status;

typedef enum hued_format {
    HUED_FORMAT_GRAPH6 = 0,
    HUED_FORMAT_DIMACS = 1,
    HUED_FORMAT_EDGELIST = 2
} hued_format;

typedef enum hued_order {
    HUED_ORDER_INDEX = 0,
    HUED_ORDER_RANDOM = 1
} hued_order;

typedef enum hued_design_kind {
    HUED_DESIGN_PAIRS = 0,
    HUED_DESIGN_BOSE = 1,
    HUED_DESIGN_SKOLEM = 2,
    HUED_DESIGN_PROJECTIVE = 3,
    HUED_DESIGN_AFFINE = 4,
    HUED_DESIGN_BRUTE = 5
} hued_design_kind;

typedef struct hued_graph hued_graph;
typedef struct hued_coloring hued_coloring;
typedef struct hued_design hued_design;

HUED_API const char* hued_last_error(void);
/* Byte offset of the last HUED_ERR_PARSE, or -1. */
HUED_API int64_t hued_last_error_offset(void);
HUED_API const char* hued_status_name(hued_status status);
HUED_API void hued_string_free(char* s);

/* ---- graphs ---- */

HUED_API hued_status hued_graph_parse(const char* data, size_t len, hued_format format, hued_graph** out);
HUED_API hued_status hued_graph_write(const hued_graph* g, hued_format format, char** out);
HUED_API void hued_graph_free(hued_graph* g);

HUED_API size_t hued_graph_vertex_count(const hued_graph* g);
HUED_API size_t hued_graph_edge_count(const hued_graph* g);
HUED_API size_t hued_graph_max_degree(const hued_graph* g);
HUED_API hued_status hued_graph_degree(const hued_graph* g, uint32_t v, size_t* out);
/* *is_forest is set to 1 (and *out to 0) for acyclic graphs. */
HUED_API hued_status hued_graph_girth(const hued_graph* g, size_t* out, int* is_forest);
/* *is_bipartite receives 0/1; sides (may be NULL) gets a 0/1 side per vertex
   and must hold vertex_count entries. */
HUED_API hued_status hued_graph_bipartition(const hued_graph* g, int* is_bipartite, uint8_t* sides);

/* ---- colourings ---- */

typedef struct hued_greedy_options {
    uint32_t r;
    hued_order order;
    uint64_t seed;
    int check_invariants; /* nonzero: assert every step boundary */
    int record_log;       /* nonzero: fill the step log in log_json */
} hued_greedy_options;

HUED_API void hued_greedy_options_init(hued_greedy_options* options);

/* log_json may be NULL; otherwise receives the step log document. */
HUED_API hued_status hued_greedy(const hued_graph* g, const hued_greedy_options* options, hued_coloring** out,
                                 char** log_json);

HUED_API hued_status hued_coloring_from_json(const char* text, size_t len, hued_coloring** out);
HUED_API hued_status hued_coloring_to_json(const hued_coloring* c, char** out);
HUED_API void hued_coloring_free(hued_coloring* c);

HUED_API size_t hued_coloring_vertex_count(const hued_coloring* c);
HUED_API uint32_t hued_coloring_palette_size(const hued_coloring* c);
HUED_API size_t hued_coloring_colors_used(const hued_coloring* c);
/* 0 for an uncoloured vertex. */
HUED_API uint32_t hued_coloring_get(const hued_coloring* c, uint32_t v);
/* r recorded in the colouring's document (or the r it was produced for). */
HUED_API uint32_t hued_coloring_r(const hued_coloring* c);

/* *valid receives 1 iff c is a total r-hued colouring of g; message (may be
   NULL) receives the first violation, or NULL when valid. */
HUED_API hued_status hued_verify(const hued_graph* g, const hued_coloring* c, uint32_t r, int* valid, char** message);
HUED_API hued_status hued_verify_partial(const hued_graph* g, const hued_coloring* c, uint32_t r, int* valid);

/* ---- exact search ---- */

typedef struct hued_exact_options {
    size_t max_vertices;  /* default 40 */
    uint64_t node_limit;  /* 0 = unlimited */
    uint64_t timeout_ms;  /* 0 = unlimited */
    uint32_t max_colors;  /* 0 = no limit */
} hued_exact_options;

typedef struct hued_exact_info {
    uint32_t chi_r;          /* 0 if max_colors was reached without success */
    uint64_t nodes_explored;
    int timed_out;           /* chi_r is then only an upper bound */
    int exhausted_max_colors;
} hued_exact_info;

HUED_API void hued_exact_options_init(hued_exact_options* options);
HUED_API uint32_t hued_lower_bound(const hued_graph* g, uint32_t r);
/* witness may be NULL; it stays NULL when no colouring was found. */
HUED_API hued_status hued_exact(const hued_graph* g, uint32_t r, const hued_exact_options* options,
                                hued_exact_info* info, hued_coloring** witness);

/* ---- designs ---- */

/* param is n for pairs/bose/skolem/brute, q for projective/affine.
   block_size is used by HUED_DESIGN_BRUTE only. For brute force a missing
   system yields HUED_OK with *out == NULL; *indeterminate (may be NULL) is
   set when the node budget ran out. */
HUED_API hued_status hued_design_generate(hued_design_kind kind, uint32_t param, uint32_t block_size,
                                          uint64_t node_limit, hued_design** out, int* indeterminate);
HUED_API hued_status hued_design_from_json(const char* text, size_t len, hued_design** out);
HUED_API hued_status hued_design_to_json(const hued_design* d, char** out);
HUED_API void hued_design_free(hued_design* d);
HUED_API size_t hued_design_point_count(const hued_design* d);
HUED_API size_t hued_design_block_size(const hued_design* d);
HUED_API size_t hued_design_block_count(const hued_design* d);
/* *valid receives 1/0; message (may be NULL) receives the first failure. */
HUED_API hued_status hued_design_verify(const hued_design* d, int* valid, char** message);
/* Points first (0..n-1), then blocks in canonical order. */
HUED_API hued_status hued_levi_graph(const hued_design* d, hued_graph** out);

/* ---- Levi recolouring ---- */

/* levi: points-first incidence graph with point_count points. The input must
   be a total r-hued colouring. report_json (may be NULL) receives the step
   report. A best-effort run that stops early still returns HUED_OK; check
   *success (may be NULL). */
HUED_API hued_status hued_reduce(const hued_graph* levi, size_t point_count, const hued_coloring* c, uint32_t r,
                                 hued_coloring** out, int* success, char** report_json);

/* ---- benchmark ---- */

/* config_json keys: family ("gnp"|"levi"), sizes, probabilities, trials,
   designs, rs, seed, exact_max_vertices, exact_timeout_ms, jobs, timing.
   csv receives the table; *violation (may be NULL) is set to 1 if a row
   breaks greedy <= thm4_bound or exact <= greedy. */
HUED_API hued_status hued_bench(const char* config_json, size_t len, char** csv, int* violation);

#ifdef __cplusplus
}
#endif

#endif /* HUED_H */
