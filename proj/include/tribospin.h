/* tribospin — exact generalized Tribonacci sequences, split quaternions and
 * hyperbolic spinors.
 *
 * C interface of the shared library. All objects are opaque handles; all
 * functions return a ts_status. Structured results come back as JSON strings
 * allocated by the library; release them with ts_string_free. Rational
 * numbers cross the boundary as "p/q" (or "p") strings.
 *
 * Every handle and string is owned by exactly one side: inputs stay with the
 * caller, outputs must be released through the matching ts_*_free call.
 * Error details for the most recent failing call on the current thread are
 * available through ts_last_error().
 */
#ifndef TRIBOSPIN_H
#define TRIBOSPIN_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ts_status {
  TS_OK = 0,
  TS_ERR_INVALID_ARGUMENT = 1,
  TS_ERR_NOT_FOUND = 2,
  TS_ERR_ZERO_DENOMINATOR = 3,
  TS_ERR_ZERO_DIVISOR = 4,
  TS_ERR_REPEATED_ROOTS = 5,
  TS_ERR_PRECONDITION = 6,
  TS_ERR_SINGULAR_PIVOT = 7,
  TS_ERR_LIMIT = 8,
  TS_ERR_PARSE = 9,
  TS_ERR_INTERNAL = 10
} ts_status;

typedef struct ts_params ts_params;           /* sequence parameters (a,b,c;r,s,t) */
typedef struct ts_poly_params ts_poly_params; /* polynomial sequence parameters */

const char* ts_version(void);
const char* ts_status_name(ts_status s);
/* Detail message of the last failing call on this thread; empty if none. */
const char* ts_last_error(void);

void ts_string_free(char* s);

/* ---- parameters ------------------------------------------------------- */

ts_status ts_params_create(const char* a, const char* b, const char* c, const char* r,
                           const char* s, const char* t, ts_params** out);
ts_status ts_params_from_family(const char* name, ts_params** out);
/* Instantiates a family with explicit initial values; required for the
 * generic classification rows, allowed for any row. */
ts_status ts_params_from_family_with_initials(const char* name, const char* a, const char* b,
                                              const char* c, ts_params** out);
ts_status ts_params_is_generic_family(const char* name, int* out_generic);
void ts_params_free(ts_params* p);

/* ---- scalar sequence --------------------------------------------------- */

ts_status ts_term(const ts_params* p, long n, char** out_rational);
ts_status ts_term_by_matrix(const ts_params* p, long n, char** out_rational); /* n >= 2 */
ts_status ts_binet_term(const ts_params* p, long n, double* out_re, double* out_im);
/* out_roots = {re1,im1,re2,im2,re3,im3}. */
ts_status ts_characteristic_roots(const ts_params* p, double out_roots[6], int* out_distinct);

typedef enum ts_sum_kind {
  TS_SUM_ALL = 0,
  TS_SUM_EVEN = 1,
  TS_SUM_ODD = 2,
  TS_SUM_S1_EVEN = 3,
  TS_SUM_S1_ODD = 4
} ts_sum_kind;

ts_status ts_sum(const ts_params* p, long m, ts_sum_kind kind, char** out_rational);

typedef enum ts_det_method { TS_DET_HESSENBERG = 0, TS_DET_CERECEDA = 1 } ts_det_method;

ts_status ts_det_term(const ts_params* p, long n, ts_det_method method, char** out_rational);

/* ---- quaternions and spinors (JSON results) ---------------------------- */

ts_status ts_quaternion(const ts_params* p, long n, char** out_json);
ts_status ts_spinor(const ts_params* p, long n, char** out_json);
ts_status ts_spinor_by_matrix(const ts_params* p, long n, char** out_json);
ts_status ts_spinor_norm(const ts_params* p, long n, char** out_json);
ts_status ts_spinor_sum(const ts_params* p, long m, ts_sum_kind kind, char** out_json);
ts_status ts_spinor_det(const ts_params* p, long n, ts_det_method method, char** out_json);
/* Complexified closed form; floats inside the JSON. */
ts_status ts_spinor_binet(const ts_params* p, long n, char** out_json);

/* Exact generating-function check up to the given truncation degree.
 * Result: {"ok":bool,"numerator":[spinor,spinor,spinor]}. */
ts_status ts_gf_check(const ts_params* p, long truncation_degree, char** out_json);
/* Float EGF/PGF check at the given samples against a truncated series.
 * Result: {"ok":bool,"egf":[...],"pgf":[...]} with per-sample values. */
ts_status ts_egf_check(const ts_params* p, const double* y_samples, size_t n_samples, long terms,
                       double tol, char** out_json);

/* ---- families ----------------------------------------------------------- */

ts_status ts_family_count(size_t* out_count);
ts_status ts_families_json(char** out_json);

/* ---- verification ------------------------------------------------------- */

/* Runs the printed-identity suite (family == NULL means every concrete
 * family). out_clean: observed statuses match the embedded manifest of known
 * paper discrepancies. out_any_discrepant: at least one identity is
 * Discrepant (expectedly or not). */
ts_status ts_verify(const char* family, long n_max, char** out_report_json, int* out_clean,
                    int* out_any_discrepant);

/* ---- polynomial spinors -------------------------------------------------- */

/* Each argument is a JSON array of rational strings, lowest degree first. */
ts_status ts_poly_params_create(const char* a, const char* b, const char* c, const char* r,
                                const char* s, const char* t, ts_poly_params** out);
void ts_poly_params_free(ts_poly_params* p);
ts_status ts_poly_spinor(const ts_poly_params* p, long n, char** out_json);
/* Evaluates the n-th polynomial spinor at the rational point x. */
ts_status ts_poly_spinor_eval(const ts_poly_params* p, long n, const char* x, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* TRIBOSPIN_H */
