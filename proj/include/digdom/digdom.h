/* C interface to the digdom library.
 *
 * Every function returning dd_status leaves a message for the calling
 * thread in dd_last_error() when it fails. Objects are opaque handles owned
 * by the caller and released with the matching *_free function; strings
 * returned through char** are released with dd_string_free. Borrowed
 * pointers (marked below) live as long as their owner.
 */
#ifndef DIGDOM_H
#define DIGDOM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DIGDOM_BUILDING)
#    define DD_API __declspec(dllexport)
#  else
#    define DD_API __declspec(dllimport)
#  endif
#else
#  define DD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dd_status {
    DD_OK = 0,
    DD_ERR_INVALID_ARGUMENT = 1,
    DD_ERR_PARSE = 2,
    DD_ERR_IO = 3,
    DD_ERR_CONSTRUCTION = 4,
    DD_ERR_PRECONDITION = 5,
    DD_ERR_UNSUPPORTED = 6,
    DD_ERR_INDETERMINATE = 7,
    DD_ERR_PROVEN_BOUND_VIOLATION = 8,
    DD_ERR_INTERNAL = 9
} dd_status;

typedef enum dd_format { DD_FORMAT_TEXT = 0, DD_FORMAT_JSON = 1 } dd_format;

/* Message of the last failed call on this thread ("" if none). */
DD_API const char* dd_last_error(void);
DD_API void dd_string_free(char* s);
DD_API const char* dd_version(void);
DD_API dd_status dd_format_parse(const char* name, dd_format* out);

/* ------------------------------------------------------------------ */
/* Digraphs                                                            */
/* ------------------------------------------------------------------ */

typedef struct dd_digraph dd_digraph;

/* Arc i is tails[i] -> heads[i]. Duplicates are merged; loops fail. */
DD_API dd_status dd_digraph_new(size_t n, const uint32_t* tails, const uint32_t* heads, size_t m,
                                dd_digraph** out);
/* Instance text ("n m" header, then one "u v" line per arc). */
DD_API dd_status dd_digraph_parse(const char* text, dd_digraph** out);
DD_API dd_status dd_digraph_load(const char* path, dd_digraph** out);
DD_API dd_status dd_digraph_save(const dd_digraph* d, const char* path);
DD_API dd_status dd_digraph_serialize(const dd_digraph* d, char** out);
DD_API dd_status dd_digraph_to_dot(const dd_digraph* d, char** out);
DD_API dd_status dd_digraph_converse(const dd_digraph* d, dd_digraph** out);
DD_API size_t dd_digraph_order(const dd_digraph* d);
DD_API size_t dd_digraph_arc_count(const dd_digraph* d);
DD_API void dd_digraph_free(dd_digraph* d);

/* ------------------------------------------------------------------ */
/* Parameters and validation                                           */
/* ------------------------------------------------------------------ */

typedef enum dd_param_tag {
    DD_PARAM_DOMINATION = 0,
    DD_PARAM_K_DOMINATION = 1,
    DD_PARAM_DOUBLE_DOMINATION = 2,
    DD_PARAM_TOTAL_2_DOMINATION = 3,
    DD_PARAM_PACKING = 4,
    DD_PARAM_K_LIMITED_PACKING = 5,
    DD_PARAM_TWO_LIMITED_PACKING = 6,
    DD_PARAM_TOTAL_2_LIMITED_PACKING = 7
} dd_param_tag;

/* k is read only for the two K_ tags. */
typedef struct dd_param {
    dd_param_tag tag;
    unsigned k;
} dd_param;

/* gamma, gamma-2, gamma-x2, gamma-t2, rho, L1, L2, L2t, k-dom:K, k-lp:K and aliases. */
DD_API dd_status dd_param_parse(const char* name, dd_param* out);

/* *valid is 1 or 0. On 0, *vertex is the smallest violating vertex and
 * *reason (if non-NULL) receives the failed clause. Members >= n fail with
 * DD_ERR_INVALID_ARGUMENT. */
DD_API dd_status dd_validate(const dd_digraph* d, const uint32_t* members, size_t count, dd_param param,
                             int* valid, uint32_t* vertex, char** reason);

/* ------------------------------------------------------------------ */
/* Exact solving                                                       */
/* ------------------------------------------------------------------ */

typedef enum dd_solve_status {
    DD_SOLVE_OPTIMAL = 0,
    DD_SOLVE_INFEASIBLE = 1,
    DD_SOLVE_BUDGET_EXCEEDED = 2
} dd_solve_status;

typedef struct dd_solution dd_solution;
typedef struct dd_solution_set dd_solution_set;

/* 2^24 unless DIGDOM_BUDGET overrides it. */
DD_API uint64_t dd_default_budget(void);

/* budget 0 means dd_default_budget(). pruned selects the pruned search,
 * which returns the same value and witness as the plain one. */
DD_API dd_status dd_solve(const dd_digraph* d, dd_param param, uint64_t budget, int pruned, dd_solution** out);
DD_API dd_solve_status dd_solution_status(const dd_solution* s);
/* Returns 1 and sets *value when optimal, 0 otherwise. */
DD_API int dd_solution_value(const dd_solution* s, size_t* value);
/* Copies up to cap witness members (ascending) and returns the witness size;
 * 0 when there is no witness. */
DD_API size_t dd_solution_witness(const dd_solution* s, uint32_t* buffer, size_t cap);
DD_API uint64_t dd_solution_subsets_examined(const dd_solution* s);
DD_API dd_status dd_solution_render(const dd_solution* s, dd_format format, char** out);
DD_API void dd_solution_free(dd_solution* s);

/* gamma, gamma_2, gamma_x2, gamma^t_x2, rho, L_1, L_2, L^t_2. */
DD_API dd_status dd_solve_all(const dd_digraph* d, uint64_t budget, int pruned, dd_solution_set** out);
DD_API size_t dd_solution_set_size(const dd_solution_set* set);
/* Borrowed. */
DD_API const dd_solution* dd_solution_set_at(const dd_solution_set* set, size_t i);
DD_API dd_status dd_solution_set_render(const dd_solution_set* set, dd_format format, char** out);
DD_API void dd_solution_set_free(dd_solution_set* set);

/* ------------------------------------------------------------------ */
/* Families and gadgets                                                */
/* ------------------------------------------------------------------ */

typedef enum dd_family_kind {
    DD_FAMILY_OMEGA = 0,
    DD_FAMILY_THETA = 1,
    DD_FAMILY_GAMMA_TREE = 2,
    DD_FAMILY_R_GADGET = 3,
    DD_FAMILY_REDUCTION_DD = 4,
    DD_FAMILY_REDUCTION_LP = 5
} dd_family_kind;

typedef struct dd_family dd_family;

/* r 0 picks the smallest admissible r. */
DD_API dd_status dd_construct_omega(const dd_digraph* functional_seed, size_t r, dd_family** out);
DD_API dd_status dd_construct_theta(const dd_digraph* contrafunctional_seed, size_t r, dd_family** out);
DD_API dd_status dd_construct_gamma_tree(size_t r, const size_t* star_orders, size_t star_count, uint64_t seed,
                                         dd_family** out);
DD_API dd_status dd_construct_r_gadget(const dd_digraph* connected_seed, dd_family** out);
/* Gadgets wrapped with their certificate; budget 0 means the default. */
DD_API dd_status dd_construct_reduction_dd(const dd_digraph* d, uint64_t budget, dd_family** out);
DD_API dd_status dd_construct_reduction_lp(const dd_digraph* d, uint64_t budget, dd_family** out);
DD_API dd_status dd_reduce_domination_gadget(const dd_digraph* d, dd_digraph** out);
DD_API dd_status dd_reduce_packing_gadget(const dd_digraph* d, dd_digraph** out);

/* Omega or Theta only. *member is 1 or 0. */
DD_API dd_status dd_extremal_membership(const dd_digraph* d, dd_family_kind family, uint64_t budget, int* member);

DD_API dd_family_kind dd_family_kind_of(const dd_family* f);
/* Borrowed. */
DD_API const dd_digraph* dd_family_digraph(const dd_family* f);
DD_API size_t dd_family_extremal_set(const dd_family* f, uint32_t* buffer, size_t cap);
/* JSON metadata: family, params, seed/added vertices, extremal set. */
DD_API dd_status dd_family_sidecar(const dd_family* f, char** out);
DD_API void dd_family_free(dd_family* f);

/* ------------------------------------------------------------------ */
/* Audits                                                              */
/* ------------------------------------------------------------------ */

typedef struct dd_report dd_report;

typedef enum dd_verdict {
    DD_VERDICT_CLEAN = 0,
    DD_VERDICT_PROVEN_VIOLATION = 1, /* a proven bound failed: solver bug */
    DD_VERDICT_OPEN_FINDING = 2      /* an open-problem counterexample */
} dd_verdict;

/* Every bound on one digraph. Reduction identities are skipped when
 * include_reductions is 0. */
DD_API dd_status dd_audit_digraph(const dd_digraph* d, uint64_t budget, int include_reductions, dd_report** out);
/* problem: "P1", "P2", a theorem id or "all". genspec: see the CLI help.
 * trials 0 uses the generator's own count. */
DD_API dd_status dd_audit_search(const char* problem, const char* genspec, uint64_t trials, uint64_t budget,
                                 dd_report** out);
DD_API dd_verdict dd_report_verdict(const dd_report* r);
DD_API dd_status dd_report_render(const dd_report* r, dd_format format, char** out);
/* Violations found by a search (0 for single-digraph audits). */
DD_API size_t dd_report_finding_count(const dd_report* r);
/* Instance text and a file-name-safe label ("P1-index12-seed19"). */
DD_API dd_status dd_report_finding(const dd_report* r, size_t i, char** label, char** instance);
DD_API void dd_report_free(dd_report* r);

#ifdef __cplusplus
}
#endif

#endif /* DIGDOM_H */
