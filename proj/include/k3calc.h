/* k3calc — exact enumerative computations for nodal elliptic curves on K3
 * surfaces: eta-product q-series, 1-admissible sequence combinatorics,
 * Chern-class intersection calculus on symmetric products, and the
 * assembled genus lower bounds.
 *
 * C interface over the C++ core. All big numbers cross the boundary as
 * decimal strings owned by the library; release them with k3_string_free.
 * Every object returned through an out-parameter is owned by the caller and
 * released with the matching *_free function. Functions returning k3_status
 * leave out-parameters untouched on failure; k3_last_error() describes the
 * most recent failure on the calling thread.
 */

#ifndef K3CALC_H
#define K3CALC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define K3CALC_API
#elif defined(K3CALC_BUILD)
#  define K3CALC_API __attribute__((visibility("default")))
#else
#  define K3CALC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum k3_status {
    K3_OK = 0,
    K3_ERROR_INVALID_ARGUMENT = 1, /* malformed input (null pointer, bad enum, ...) */
    K3_ERROR_DOMAIN = 2,           /* precondition violated (even genus, r < 5, ...) */
    K3_ERROR_INTERNAL = 3
} k3_status;

K3CALC_API const char* k3_status_str(k3_status status);

/* Message for the last failure on this thread; empty string if none. The
 * pointer stays valid until the next failing call on the same thread. */
K3CALC_API const char* k3_last_error(void);

K3CALC_API void k3_string_free(char* s);

/* ---- truncated integer q-series ---------------------------------------- */

/* Opaque handle to a truncated power series in q with exact integer
 * coefficients (order = number of retained coefficients). */
typedef struct k3_series k3_series;

/* prod_{m>=1} (1 - q^m)^k truncated to `order` coefficients (order >= 1). */
K3CALC_API k3_status k3_series_eta_product(int64_t k, size_t order, k3_series** out);

/* Cauchy product truncated to the smaller operand order. */
K3CALC_API k3_status k3_series_mul(const k3_series* a, const k3_series* b, k3_series** out);

/* Inverse modulo q^order; the constant term must be 1 or -1. */
K3CALC_API k3_status k3_series_inverse(const k3_series* a, k3_series** out);

/* Rational-curve counts N_0..N_max_g as a series of max_g + 1 coefficients. */
K3CALC_API k3_status k3_series_yau_zaslow(size_t max_g, k3_series** out);

/* Partition numbers p(0)..p(max_n) as a series of max_n + 1 coefficients. */
K3CALC_API k3_status k3_series_partition_numbers(size_t max_n, k3_series** out);

K3CALC_API size_t k3_series_order(const k3_series* s);
K3CALC_API k3_status k3_series_coefficient(const k3_series* s, size_t n, char** out_decimal);
K3CALC_API void k3_series_free(k3_series* s);

/* Coefficient of q^n in the k = -48 eta product, as a decimal string. */
K3CALC_API k3_status k3_bl48_coefficient(size_t n, char** out_decimal);

/* ---- admissible sequences ----------------------------------------------- */

/* Opaque list of 1-admissible sequences; each sequence is an offset
 * `left` plus positive values s_{-left}..s_{length-1-left}. */
typedef struct k3_seq_list k3_seq_list;

/* All 1-admissible sequences of weight a >= 1 in canonical order; there are
 * exactly p(a) of them. */
K3CALC_API k3_status k3_enumerate_one_admissible(int64_t a, k3_seq_list** out);

K3CALC_API size_t k3_seq_list_size(const k3_seq_list* list);
K3CALC_API int64_t k3_seq_list_left(const k3_seq_list* list, size_t i);
K3CALC_API size_t k3_seq_list_length(const k3_seq_list* list, size_t i);
K3CALC_API int64_t k3_seq_list_value(const k3_seq_list* list, size_t i, size_t j);
K3CALC_API void k3_seq_list_free(k3_seq_list* list);

/* sum over a_1+...+a_48 = r-1 of prod p(a_i); equals bl48(r - 1). */
K3CALC_API k3_status k3_fixed_fiber_count(int64_t r, char** out_decimal);

/* ---- genus lower bounds -------------------------------------------------- */

typedef struct k3_bound_report k3_bound_report;

/* The genus lower bound chain for odd g >= 3. */
K3CALC_API k3_status k3_severi_lower_bound(int64_t g, k3_bound_report** out);

K3CALC_API int64_t k3_bound_report_g(const k3_bound_report* r);
K3CALC_API int64_t k3_bound_report_r(const k3_bound_report* r);
K3CALC_API int k3_bound_report_omega_genus_lb(const k3_bound_report* r);
K3CALC_API k3_status k3_bound_report_bl_count(const k3_bound_report* r, char** out_decimal);
K3CALC_API k3_status k3_bound_report_severi_genus_lb(const k3_bound_report* r,
                                                     char** out_decimal);
/* Canonical JSON form of the report. */
K3CALC_API k3_status k3_bound_report_json(const k3_bound_report* r, char** out_json);
K3CALC_API void k3_bound_report_free(k3_bound_report* r);

/* OLS slope of log bl48(n) against sqrt(n) over [n_min, n_max]
 * (10 <= n_min < n_max), plus the worst relative residual of the fit. */
K3CALC_API k3_status k3_asymptotic_fit(size_t n_min, size_t n_max, double* out_c,
                                       double* out_max_rel_residual);

/* ---- appendix degeneracy-locus genus ------------------------------------- */

/* Closed-form arithmetic genus for the (4,4) case at r >= 5 (integer). */
K3CALC_API k3_status k3_appendix_genus_closed_form(int64_t r, char** out_decimal);

/* Same quantity from the Chern-class summation formula at (g, n, d);
 * an exact rational rendered as "p" or "p/q". */
K3CALC_API k3_status k3_degeneracy_genus(int64_t g, int64_t n, int64_t d, char** out_rational);

/* Symbolic bracket c_1(C_n) - c_1(F_N) as a JSON list of
 * {"x":a,"theta":b,"coeff":"p/q"}. */
K3CALC_API k3_status k3_degeneracy_bracket_json(int64_t g, int64_t n, int64_t d,
                                                char** out_json);

/* Compares the closed form against the summation at (9, 2r, 4r+4);
 * *out_match is 1 on agreement. */
K3CALC_API k3_status k3_appendix_genus_crosscheck(int64_t r, int* out_match);

/* ---- cross-verification suites ------------------------------------------- */

typedef struct k3_verify_result k3_verify_result;

/* Runs suite "qseries", "admissible", "chow", "bounds" or "all";
 * max_n <= 0 selects the default depth. */
K3CALC_API k3_status k3_verify(const char* suite, int64_t max_n, k3_verify_result** out);

K3CALC_API size_t k3_verify_count(const k3_verify_result* r);
K3CALC_API const char* k3_verify_name(const k3_verify_result* r, size_t i);
K3CALC_API int k3_verify_passed(const k3_verify_result* r, size_t i);
K3CALC_API const char* k3_verify_detail(const k3_verify_result* r, size_t i);
K3CALC_API int k3_verify_all_passed(const k3_verify_result* r);
K3CALC_API void k3_verify_free(k3_verify_result* r);

#ifdef __cplusplus
}
#endif

#endif /* K3CALC_H */
