/*
 * C interface to the hadwiger library.
 *
 * Objects are opaque handles created by hw_*_new / hw_*_run style calls and
 * released with the matching hw_*_free. Every fallible call returns an
 * hw_status; on failure hw_last_error() describes the problem for the
 * calling thread. Pointers returned by accessors are owned by the handle and
 * stay valid until it is freed.
 */
#ifndef HADWIGER_H
#define HADWIGER_H 1

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HADWIGER_BUILDING_LIBRARY)
#    define HW_API __declspec(dllexport)
#  else
#    define HW_API __declspec(dllimport)
#  endif
#else
#  define HW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as the command-line exit codes. */
typedef enum hw_status {
    HW_OK = 0,
    HW_ERR_USAGE = 1,
    HW_ERR_PARSE = 2,
    HW_ERR_LIMIT = 3,
    HW_ERR_BOUND = 4,
    HW_ERR_SOLVER_BUG = 5,
    HW_ERR_PRECONDITION = 6,
    HW_ERR_INTERNAL = 7
} hw_status;

HW_API const char * hw_version(void);
HW_API const char * hw_status_name(hw_status status);

/* Message for the last failed call on this thread, or "" after success. */
HW_API const char * hw_last_error(void);

/* Byte offset of the last parse error on this thread, or -1. */
HW_API long hw_last_error_offset(void);

typedef struct hw_limits {
    int alpha_bruteforce;
    int alpha;
    int chi;
    int minor;
} hw_limits;

HW_API hw_limits hw_default_limits(void);

/* ---- graphs ------------------------------------------------------------ */

typedef struct hw_graph hw_graph;

typedef enum hw_generator {
    HW_GEN_COMPLETE = 0,
    HW_GEN_CYCLE = 1,
    HW_GEN_PATH = 2,
    HW_GEN_PETERSEN = 3,
    HW_GEN_GNP = 4
} hw_generator;

/* edges holds edge_count (u, v) pairs, flattened. */
HW_API hw_status hw_graph_from_edges(int n, const int * edges, size_t edge_count, hw_graph ** out);
HW_API hw_status hw_graph_parse_graph6(const char * text, hw_graph ** out);
HW_API hw_status hw_generator_from_name(const char * name, hw_generator * out);

/* seed is only read for HW_GEN_GNP; n is ignored for HW_GEN_PETERSEN. */
HW_API hw_status hw_graph_generate(hw_generator kind, int n, double probability, uint64_t seed, hw_graph ** out);

HW_API void hw_graph_free(hw_graph * g);

HW_API int hw_graph_order(const hw_graph * g);
HW_API long hw_graph_edge_count(const hw_graph * g);
HW_API int hw_graph_adjacent(const hw_graph * g, int u, int v);
HW_API int hw_graph_is_connected(const hw_graph * g);

/* NULL when the graph has more than 62 vertices. */
HW_API const char * hw_graph_graph6(const hw_graph * g);

HW_API hw_status hw_graph_delete_vertices(const hw_graph * g, const int * vertices, size_t count, hw_graph ** out);
HW_API hw_status hw_graph_contract_edge(const hw_graph * g, int u, int v, hw_graph ** out);

typedef struct hw_graph_list hw_graph_list;

/* Isomorphism classes on 1..n_max vertices (n_max <= 10). */
HW_API hw_status hw_enumerate_graphs(int n_max, int connected_only, hw_graph_list ** out);
HW_API size_t hw_graph_list_size(const hw_graph_list * list);

/* Borrowed; owned by the list. */
HW_API const hw_graph * hw_graph_list_at(const hw_graph_list * list, size_t index);
HW_API void hw_graph_list_free(hw_graph_list * list);

/* ---- connected dominating pairs ---------------------------------------- */

typedef struct hw_pair hw_pair;

/* start < 0 selects vertex 0. */
HW_API hw_status hw_dominating_pair(const hw_graph * g, int start, hw_pair ** out);
HW_API size_t hw_pair_d(const hw_pair * p, const int ** members);
HW_API size_t hw_pair_s(const hw_pair * p, const int ** members);
HW_API void hw_pair_free(hw_pair * p);

HW_API hw_status hw_verify_dominating_pair(const hw_graph * g, const int * d, size_t d_count,
        const int * s, size_t s_count, int * valid);

/* ---- exact invariants -------------------------------------------------- */

typedef struct hw_stats hw_stats;

HW_API hw_status hw_compute_stats(const hw_graph * g, const hw_limits * limits, hw_stats ** out);
HW_API void hw_stats_free(hw_stats * s);

HW_API int hw_stats_alpha(const hw_stats * s);
HW_API int hw_stats_omega(const hw_stats * s);
HW_API int hw_stats_chi(const hw_stats * s);
HW_API int hw_stats_eta(const hw_stats * s);

HW_API size_t hw_stats_alpha_witness(const hw_stats * s, const int ** members);
HW_API size_t hw_stats_omega_witness(const hw_stats * s, const int ** members);

/* One colour per vertex. */
HW_API size_t hw_stats_colouring(const hw_stats * s, const int ** colours);

HW_API size_t hw_stats_branch_set_count(const hw_stats * s);
HW_API size_t hw_stats_branch_set(const hw_stats * s, size_t index, const int ** members);

HW_API const char * hw_stats_json(const hw_stats * s);

HW_API hw_status hw_independence_number(const hw_graph * g, const hw_limits * limits, int * alpha);
HW_API hw_status hw_hadwiger_number(const hw_graph * g, const hw_limits * limits, int * eta);

/* *found is set to 0 or 1; the embedding itself is validated internally. */
HW_API hw_status hw_has_clique_minor(const hw_graph * g, int t, const hw_limits * limits, int * found);

/* ---- peeling ----------------------------------------------------------- */

typedef enum hw_base_solver {
    HW_BASE_T3 = 0,
    HW_BASE_ORACLE = 1
} hw_base_solver;

typedef struct hw_peel_params {
    int t;
    long long p_num;
    long long p_den;
    hw_base_solver base;
} hw_peel_params;

HW_API hw_status hw_parse_rational(const char * text, long long * num, long long * den);

/* (2n - p) / (4 eta + 2p - 4t) + 1/2 in lowest terms, and its ceiling. */
HW_API hw_status hw_guaranteed_bound(long n, int eta, int t, long long p_num, long long p_den,
        long long * num, long long * den, long long * ceiling);

typedef struct hw_peel hw_peel;

/* Runs the peel and, when eta is within the minor limit, the bound check. */
HW_API hw_status hw_peel_run(const hw_graph * g, const hw_peel_params * params, const hw_limits * limits, hw_peel ** out);
HW_API void hw_peel_free(hw_peel * p);

HW_API size_t hw_peel_set(const hw_peel * p, const int ** members);
HW_API int hw_peel_level_count(const hw_peel * p);

/* Index of the level whose candidate was returned, or -1 for the base case. */
HW_API int hw_peel_chosen(const hw_peel * p);

/* -1 when eta was not computed. */
HW_API int hw_peel_eta(const hw_peel * p);
HW_API int hw_peel_has_bound(const hw_peel * p);
HW_API long long hw_peel_bound_ceiling(const hw_peel * p);
HW_API const char * hw_peel_bound_text(const hw_peel * p);
HW_API int hw_peel_meets_bound(const hw_peel * p);
HW_API int hw_peel_certificate_valid(const hw_graph * g, const hw_peel * p);
HW_API const char * hw_peel_certificate_json(const hw_peel * p);

/* ---- inequality verification ------------------------------------------- */

#define HW_CHECK_COUNT 7

/* Canonical check name for index 0..HW_CHECK_COUNT-1, else NULL. */
HW_API const char * hw_check_name(int index);

/* "all" or a comma-separated list; bit i of *mask selects check i. */
HW_API hw_status hw_parse_checks(const char * list, unsigned * mask);

typedef enum hw_corpus_source {
    HW_CORPUS_FILE = 0,
    HW_CORPUS_GENERATOR = 1,
    HW_CORPUS_EXHAUSTIVE = 2
} hw_corpus_source;

typedef struct hw_corpus_spec {
    hw_corpus_source source;
    const char * path;
    hw_generator generator;
    int n_min;
    int n_max;
    int count_per_n;
    double probability;
    uint64_t seed;
    int exhaustive_n_max;
    int connected_only;
    int eta_min;    /* < 0: no filter */
    int eta_max;    /* < 0: no filter */
} hw_corpus_spec;

HW_API hw_corpus_spec hw_default_corpus_spec(void);

typedef struct hw_corpus hw_corpus;

HW_API hw_status hw_corpus_run(const hw_corpus_spec * spec, unsigned checks, const hw_limits * limits, int jobs, hw_corpus ** out);
HW_API void hw_corpus_free(hw_corpus * c);

HW_API size_t hw_corpus_report_count(const hw_corpus * c);
HW_API long hw_corpus_skipped(const hw_corpus * c);
HW_API long hw_corpus_filtered(const hw_corpus * c);
HW_API int hw_corpus_solver_bug(const hw_corpus * c);
HW_API int hw_corpus_conjecture_failure(const hw_corpus * c);
HW_API size_t hw_corpus_failure_count(const hw_corpus * c);
HW_API const char * hw_corpus_failure(const hw_corpus * c, size_t index);

/* One JSON object per reported graph, newline terminated. */
HW_API const char * hw_corpus_jsonl(const hw_corpus * c);
HW_API const char * hw_corpus_summary_csv(const hw_corpus * c);

typedef struct hw_check_summary {
    const char * name;
    long applicable_count;
    long pass_count;
    long fail_count;
    int has_min_slack;
    long long min_slack;
    const char * argmin_g6;
} hw_check_summary;

HW_API size_t hw_corpus_summary_count(const hw_corpus * c);
HW_API hw_status hw_corpus_summary(const hw_corpus * c, size_t index, hw_check_summary * out);

/* ---- tightness search -------------------------------------------------- */

typedef struct hw_search_params {
    hw_generator family;
    int n_min;
    int n_max;
    double probability;
    long budget;
    uint64_t seed;
    int top;
    long restart_interval;
} hw_search_params;

HW_API hw_search_params hw_default_search_params(void);

typedef struct hw_search hw_search;

HW_API hw_status hw_search_run(const hw_search_params * params, const hw_limits * limits, hw_search ** out);
HW_API void hw_search_free(hw_search * s);
HW_API size_t hw_search_count(const hw_search * s);
HW_API hw_status hw_search_entry(const hw_search * s, size_t index, const char ** g6, long long * slack,
        int * n, int * alpha, int * eta);

#ifdef __cplusplus
}
#endif

#endif
