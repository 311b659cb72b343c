/* C interface for the connected fair-division toolkit.
 *
 * Conventions: every fallible call returns icfd_status and reports detail
 * through icfd_last_error() (thread-local). Returned strings are heap copies
 * released with icfd_string_free(); handles have their own free functions;
 * result structs are released with their dispose functions, which tolerate
 * repeated calls. Logical outcomes (No answers, unfair allocations) are data,
 * not errors.
 */
#ifndef ICFD_H
#define ICFD_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  ICFD_OK = 0,
  ICFD_ERR_PARSE = 1,      /* malformed input text */
  ICFD_ERR_VALIDATION = 2, /* well-formed but breaks a model invariant */
  ICFD_ERR_PARAM = 3,      /* unusable argument or option combination */
  ICFD_ERR_BUDGET = 4,     /* work limit exhausted before an answer */
  ICFD_ERR_INTERNAL = 5
} icfd_status;

typedef enum {
  ICFD_NOTION_PROP = 0,
  ICFD_NOTION_EF = 1,
  ICFD_NOTION_EF1 = 2,
  ICFD_NOTION_EFX = 3
} icfd_notion;

typedef enum {
  ICFD_ANSWER_YES = 0,
  ICFD_ANSWER_NO = 1,
  ICFD_ANSWER_NO_WITNESS_FOUND = 2 /* randomized search exhausted, undecided */
} icfd_answer;

typedef enum {
  ICFD_METHOD_BRUTE = 0,
  ICFD_METHOD_COLORCODE = 1,
  ICFD_METHOD_AUTO = 2
} icfd_method;

typedef enum {
  ICFD_VC_EXACT_IF_SMALL = 0,
  ICFD_VC_APPROX_ONLY = 1
} icfd_vc_mode;

typedef enum {
  ICFD_INNER_EXACT = 0,
  ICFD_INNER_COLORCODE = 1
} icfd_inner_mode;

typedef struct icfd_instance icfd_instance;
typedef struct icfd_allocation icfd_allocation;

const char* icfd_version(void);
/* Message from this thread's most recent failing call; empty after success. */
const char* icfd_last_error(void);
void icfd_string_free(char* s);

/* ---- instances and allocations -------------------------------------- */

icfd_status icfd_instance_parse(const char* text, icfd_instance** out);
icfd_status icfd_instance_serialize(const icfd_instance* inst, char** out_text);
void icfd_instance_free(icfd_instance* inst);
int icfd_instance_m(const icfd_instance* inst);
int icfd_instance_n(const icfd_instance* inst);
int icfd_instance_p(const icfd_instance* inst);

icfd_status icfd_allocation_parse(const char* text, const icfd_instance* inst,
                                  icfd_allocation** out);
icfd_status icfd_allocation_serialize(const icfd_allocation* alloc, char** out_text);
void icfd_allocation_free(icfd_allocation* alloc);

/* ---- fairness verification ------------------------------------------ */

/* ICFD_OK sets *out_fair to 1 or 0. When unfair and out_violation is not
 * NULL, it receives one line of "key=value" fields describing the failed
 * comparison (agent, other, pivot as applicable, lhs, rhs). */
icfd_status icfd_verify(const icfd_instance* inst, const icfd_allocation* alloc,
                        icfd_notion notion, int* out_fair, char** out_violation);

/* ---- solving --------------------------------------------------------- */

typedef struct {
  size_t struct_size; /* sizeof(icfd_solve_options), set by the init call */
  icfd_notion notion;
  icfd_method method;
  int kernelize;           /* nonzero: reduce before the explicit method */
  int aggressive;          /* nonzero: prune partial search states early */
  uint64_t node_budget;    /* exhaustive search nodes before ICFD_ERR_BUDGET */
  uint64_t seed;
  int64_t repetitions;     /* <= 0: default count (n^p, capped) */
  int64_t repetition_cap;  /* refuse larger default repetition counts */
  icfd_inner_mode inner;
  uint64_t inner_delta_num; /* inner-search miss budget num/den */
  uint64_t inner_delta_den;
  icfd_vc_mode vc_mode;
} icfd_solve_options;

void icfd_solve_options_init(icfd_solve_options* opts);

typedef struct {
  icfd_answer answer;
  icfd_allocation* witness; /* non-NULL exactly on ICFD_ANSWER_YES */
  uint64_t nodes;           /* search nodes or colorings consumed */
  double elapsed_sec;
  char* strategy;           /* plan that produced the answer */
  int kernelized;           /* nonzero when a reduction ran first */
  int kernel_m;             /* kernel vertex count (when kernelized) */
  char* kernel_bound;       /* decimal size bound (when kernelized) */
  int kernel_definitive_no; /* reduction alone proved the No */
} icfd_solve_result;

icfd_status icfd_solve(const icfd_instance* inst, const icfd_solve_options* opts,
                       icfd_solve_result* out);
void icfd_solve_result_dispose(icfd_solve_result* result);

/* ---- kernelization ---------------------------------------------------- */

typedef struct {
  icfd_instance* kernel;
  char* rule_log;        /* one line per rule application */
  int definitive_no;
  char* size_bound;      /* decimal; kernel vertex count never exceeds it */
  int cover_size;
  int cover_exact;
  int* vertex_origin;    /* kernel vertex -> source vertex, -1 for dummies */
  int vertex_origin_len;
} icfd_kernel_result;

icfd_status icfd_kernelize(const icfd_instance* inst, icfd_notion notion,
                           icfd_vc_mode vc_mode, icfd_kernel_result* out);
void icfd_kernel_result_dispose(icfd_kernel_result* result);

/* ---- instance statistics ---------------------------------------------- */

typedef struct {
  int m;
  int edge_count;
  int n;
  int p;
  int connected;
  int vcn_exact; /* -1 when not determined within budget */
  int vcn_approx;
  int distinct_values;
  int agent_types;
  char* agents_without_positive; /* space-separated agent indices, may be "" */
} icfd_stats_result;

icfd_status icfd_stats(const icfd_instance* inst, icfd_vc_mode vc_mode,
                       icfd_stats_result* out);
void icfd_stats_result_dispose(icfd_stats_result* result);

/* ---- instance generation ---------------------------------------------- */

typedef struct {
  icfd_instance* instance;
  icfd_allocation* witness; /* NULL when the source problem is a No */
  char* text;               /* instance text with vertex-name comments */
  char* meta;               /* one-line generator summary */
} icfd_generated;

/* family: "ksum-ef", "ksum-ef1", "ksum-efx" with source "k t a1 a2 ...";
 * "rbds-prop", "rbds-ef", "rbds-ef1", "rbds-efx" with source
 * "|T| |N| k" followed by one "ti nj" pair per line. */
icfd_status icfd_generate(const char* family, const char* source_text,
                          icfd_generated* out);
void icfd_generated_dispose(icfd_generated* result);

/* Seeded random connected instance; max_val is a decimal string. */
icfd_status icfd_generate_random(int m, int n, int p, const char* max_val,
                                 double density, uint64_t seed,
                                 icfd_instance** out);

#ifdef __cplusplus
}
#endif

#endif /* ICFD_H */
