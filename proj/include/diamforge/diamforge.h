#ifndef DIAMFORGE_H
#define DIAMFORGE_H

/*
 * C interface to the diamforge engine: maximum-diameter simplicial 2-complexes
 * and partitions of K_n into squares of Hamilton cycles.
 *
 * Every function returns a dfg_status. On failure, dfg_last_error() holds a
 * message for the calling thread until its next failing call. Handles are
 * opaque and owned by the caller; release them with the matching *_free.
 * Strings returned through char** are released with dfg_string_free.
 */

#include <stddef.h>

#if defined(_WIN32)
#define DFG_API __declspec(dllexport)
#else
#define DFG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dfg_status {
    DFG_OK = 0,
    DFG_ERR_INVALID_ARGUMENT = 1, /* malformed input or schema violation */
    DFG_ERR_DEGENERATE = 2,       /* a triple repeats a label */
    DFG_ERR_NOT_GOOD = 3,         /* walk cannot be encoded */
    DFG_ERR_PRECONDITION = 4,     /* operation precondition failed */
    DFG_ERR_CONSTRUCTION = 5,     /* internal construction audit failed */
    DFG_ERR_NOT_FOUND = 6,        /* no such table entry or builtin */
    DFG_ERR_INTERNAL = 7
} dfg_status;

typedef enum dfg_family {
    DFG_FAMILY_FULL = 0,    /* no missing residues */
    DFG_FAMILY_MISSING_12 = 1,
    DFG_FAMILY_MISSING_1248 = 2
} dfg_family;

typedef struct dfg_complex dfg_complex;
typedef struct dfg_genseq dfg_genseq;
typedef struct dfg_decomposition dfg_decomposition;
typedef struct dfg_search_result dfg_search_result;

typedef struct dfg_certificate {
    int good;
    int circular;
    long long covered_edges;
    int has_diameter;
    int diameter;
    int optimum;
    int matches_optimum;
    size_t uncovered_count;
} dfg_certificate;

DFG_API const char* dfg_version(void);
DFG_API const char* dfg_last_error(void);
DFG_API void dfg_string_free(char* s);

DFG_API dfg_status dfg_hs_max_diameter(int n, int* out);

/* Complexes. */
DFG_API dfg_status dfg_construct(int n, dfg_complex** out);
DFG_API dfg_status dfg_construct_general(int n, dfg_complex** out);
DFG_API dfg_status dfg_small_table(int n, dfg_complex** out);
DFG_API dfg_status dfg_complex_from_pair(int n, const int* labels, size_t label_count,
                                         const unsigned char* layout, size_t layout_count, dfg_complex** out);
DFG_API dfg_status dfg_complex_from_json(const char* json, dfg_complex** out);
DFG_API dfg_status dfg_complex_triangle_count(const dfg_complex* c, size_t* out);
DFG_API dfg_status dfg_complex_triangle(const dfg_complex* c, size_t index, int out[3]);
DFG_API dfg_status dfg_complex_certificate(const dfg_complex* c, dfg_certificate* out);
/* {"n","labels","layout","certificate":{...}} */
DFG_API dfg_status dfg_complex_to_json(const dfg_complex* c, char** out);
DFG_API void dfg_complex_free(dfg_complex* c);

/* Generating sequences over Z/nZ, n = 4k+1. */
DFG_API dfg_status dfg_genseq_family(int n, dfg_family family, dfg_genseq** out);
DFG_API dfg_status dfg_genseq_create(int n, const int* terms, size_t term_count, const int* turns,
                                     size_t turn_count, dfg_genseq** out);
DFG_API dfg_status dfg_genseq_valid(const dfg_genseq* g, int* valid);
DFG_API dfg_status dfg_genseq_expand(const dfg_genseq* g, dfg_complex** out);
DFG_API dfg_status dfg_genseq_to_json(const dfg_genseq* g, char** out);
DFG_API void dfg_genseq_free(dfg_genseq* g);

/* Decompositions of K_n into squares of Hamilton cycles. */
DFG_API dfg_status dfg_decompose_prime(int p, dfg_decomposition** out);
DFG_API dfg_status dfg_decompose_builtin(int n, dfg_decomposition** out);
DFG_API dfg_status dfg_decomposition_from_json(const char* json, dfg_decomposition** out);
DFG_API dfg_status dfg_decomposition_cycle_count(const dfg_decomposition* d, size_t* out);
DFG_API dfg_status dfg_decomposition_verify(const dfg_decomposition* d, int* success);
/* {"n","cycles","report":{...}} */
DFG_API dfg_status dfg_decomposition_to_json(const dfg_decomposition* d, char** out);
DFG_API void dfg_decomposition_free(dfg_decomposition* d);

/* Exhaustive search; budget 0 means unlimited. */
DFG_API dfg_status dfg_search(int n, unsigned long long budget, int jobs, dfg_search_result** out);
DFG_API dfg_status dfg_search_summary(const dfg_search_result* r, int* best_diameter, int* exhaustive,
                                      unsigned long long* nodes);
DFG_API dfg_status dfg_search_to_json(const dfg_search_result* r, char** out);
DFG_API void dfg_search_free(dfg_search_result* r);

#ifdef __cplusplus
}
#endif

#endif
