/* freechoose — exact b-fold list coloring of paths, cycles and trees of
 * cycles, with one vertex's color set fixable in advance.
 *
 * All functionality is exposed through opaque handles and status codes so the
 * library can be consumed from C or through FFI. Handles are immutable once
 * used; every function is safe to call from multiple threads as long as each
 * handle is confined to one thread. Failure messages are stored per thread
 * and read back with fch_last_error().
 */

#ifndef FREECHOOSE_H
#define FREECHOOSE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define FCH_API __declspec(dllexport)
#else
#define FCH_API __attribute__((visibility("default")))
#endif

typedef enum fch_status {
    FCH_OK = 0,
    FCH_ERR_ARGUMENT = 1, /* bad parameter or ill-formed instance */
    FCH_ERR_PARSE = 2,    /* document syntax or field error */
    FCH_ERR_BUDGET = 3,   /* exact search exceeded its node budget */
    FCH_ERR_INTERNAL = 4
} fch_status;

typedef enum fch_outcome {
    FCH_COLORED = 0,    /* coloring found / verified valid / all anchors extend */
    FCH_INFEASIBLE = 1, /* proven impossible / invalid / some anchor fails */
    FCH_UNRESOLVED = 2
} fch_outcome;

typedef struct fch_instance fch_instance;
typedef struct fch_report fch_report;

FCH_API const char* fch_version(void);

/* Message describing the most recent failure on the calling thread. */
FCH_API const char* fch_last_error(void);

/* ---- instance construction ------------------------------------------- */

/* A path of `length` edges (vertices 0..length). */
FCH_API fch_status fch_instance_create_path(int32_t length, fch_instance** out);
/* A cycle on `length` vertices (length >= 3). */
FCH_API fch_status fch_instance_create_cycle(int32_t length, fch_instance** out);
/* A general graph given as vertex count plus flat edge pairs u0,v0,u1,v1,...
 * Structural requirements (connected, cycles disjoint, blocks are edges or
 * chordless cycles) are checked when the instance is used. */
FCH_API fch_status fch_instance_create_tree_of_cycles(int32_t vertex_count,
                                                      const int32_t* edge_pairs,
                                                      int32_t edge_count,
                                                      fch_instance** out);

FCH_API fch_status fch_instance_set_b(fch_instance* inst, int32_t b);
FCH_API fch_status fch_instance_set_list(fch_instance* inst, int32_t vertex,
                                         const int32_t* colors, int32_t count);
/* Fix `count` == b colors at one vertex; they must come from its list. */
FCH_API fch_status fch_instance_set_anchor(fch_instance* inst, int32_t vertex,
                                           const int32_t* colors, int32_t count);
FCH_API fch_status fch_instance_clear_anchor(fch_instance* inst);
FCH_API int32_t fch_instance_vertex_count(const fch_instance* inst);
FCH_API void fch_instance_free(fch_instance* inst);

/* ---- documents -------------------------------------------------------- */

/* Parses an instance document (see docs/FORMAT.md). The parsed instance is
 * fully validated, including graph structure. */
FCH_API fch_status fch_instance_from_json(const char* text, fch_instance** out);
/* Canonical JSON; free the string with fch_string_free. */
FCH_API fch_status fch_instance_to_json(const fch_instance* inst, char** out);
FCH_API void fch_string_free(char* text);

/* ---- solving ----------------------------------------------------------- */

/* Solves by shape: the waterfall pipeline for paths and cycles, block-tree
 * propagation for trees of cycles, exact search as the fallback. budget 0
 * means the library default. */
FCH_API fch_status fch_solve(const fch_instance* inst, uint64_t budget, fch_report** out);

/* Exact feasibility, respecting the anchor when present. */
FCH_API fch_status fch_oracle_feasible(const fch_instance* inst, uint64_t budget,
                                       fch_report** out);

/* Tries every b-subset of L(vertex) as the fixed set, in lexicographic order;
 * reports the first failing one, if any. The instance must be unanchored. */
FCH_API fch_status fch_oracle_free_check(const fch_instance* inst, int32_t vertex,
                                         uint64_t budget, fch_report** out);

/* The witness a-list family on the cycle of length 2p with {1..b} anchored at
 * vertex 0; requires a/b < 2 + 1/p (and p >= 2, a >= b >= 1). */
FCH_API fch_status fch_counterexample_even_cycle(int32_t p, int32_t a, int32_t b,
                                                 fch_instance** out);

/* Validates a coloring document against an instance. The report's outcome is
 * FCH_COLORED when valid, FCH_INFEASIBLE with per-rule violations otherwise. */
FCH_API fch_status fch_verify(const fch_instance* inst, const char* coloring_json,
                              fch_report** out);

/* ---- exact threshold arithmetic ---------------------------------------- */

/* fchr(C_n) = (2*floor(n/2) + 1) / floor(n/2), reduced. */
FCH_API fch_status fch_fchr_cycle(int32_t n, int64_t* num, int64_t* den);
/* Smallest even integer >= num/den (num >= 0, den > 0). */
FCH_API fch_status fch_even_ceil(int64_t num, int64_t den, int64_t* out);
/* 1 when a*floor(n/2) >= 2*b*floor(n/2) + b, else 0. */
FCH_API fch_status fch_cycle_guaranteed(int32_t n, int32_t a, int32_t b, int32_t* out);

/* ---- reports ------------------------------------------------------------ */

FCH_API fch_outcome fch_report_outcome(const fch_report* report);
FCH_API int32_t fch_report_threshold_met(const fch_report* report);
FCH_API int32_t fch_report_fallback_used(const fch_report* report);
FCH_API uint64_t fch_report_steps(const fch_report* report);
FCH_API uint64_t fch_report_nodes(const fch_report* report);
FCH_API int64_t fch_report_repairs(const fch_report* report);
FCH_API int64_t fch_report_total_colors(const fch_report* report);

/* Copies one vertex's colors into colors_out (up to capacity); count_out gets
 * the true size. FCH_ERR_ARGUMENT when the report has no coloring. */
FCH_API fch_status fch_report_vertex_colors(const fch_report* report, int32_t vertex,
                                            int32_t* colors_out, int32_t capacity,
                                            int32_t* count_out);

FCH_API fch_status fch_report_to_json(const fch_report* report, char** out);
FCH_API fch_status fch_report_to_text(const fch_report* report, char** out);
FCH_API void fch_report_free(fch_report* report);

#ifdef __cplusplus
}
#endif

#endif /* FREECHOOSE_H */
