/*
 * C interface to the invdesc library: exact descent tables for involutions,
 * reverse Yamanouchi words and semistandard tableaux, verification suites,
 * and log-concavity scans.
 *
 * Every object is an opaque handle owned by the caller and released with the
 * matching *_free function. Strings returned by accessors are owned by the
 * handle and stay valid until it is freed. Big integers are returned as
 * decimal strings.
 *
 * Functions that can fail return an invdesc_status; on failure a message is
 * available from invdesc_last_error() on the calling thread.
 */
#ifndef INVDESC_H
#define INVDESC_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(INVDESC_BUILDING_LIBRARY)
#    define INVDESC_API __declspec(dllexport)
#  else
#    define INVDESC_API __declspec(dllimport)
#  endif
#else
#  define INVDESC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum invdesc_status {
  INVDESC_OK = 0,
  INVDESC_ERR_INVALID_ARGUMENT = 1, /* bad range, unsupported method, ... */
  INVDESC_ERR_OUT_OF_BOUNDS = 2,    /* enumeration above the oracle bounds */
  INVDESC_ERR_INTERNAL = 3,         /* violated internal invariant */
  INVDESC_ERR_NULL_POINTER = 4,
  INVDESC_ERR_UNKNOWN = 5
} invdesc_status;

typedef enum invdesc_kind {
  INVDESC_KIND_INVOLUTIONS = 0, /* i(n, h): involutions of [n] with h descents */
  INVDESC_KIND_YAMANOUCHI = 1,  /* y(n, k): Yamanouchi words with k weak descents */
  INVDESC_KIND_SSYT = 2         /* a(n, k): row-strict tableaux, n cells, k symbols */
} invdesc_kind;

typedef enum invdesc_method {
  INVDESC_METHOD_FORMULA = 0,   /* closed formula */
  INVDESC_METHOD_SERIES = 1,    /* ssyt only: power series coefficients */
  INVDESC_METHOD_TRANSFORM = 2, /* ssyt only: binomial transform of the y row */
  INVDESC_METHOD_BRUTE = 3,     /* exhaustive enumeration */
  INVDESC_METHOD_EXPANDED = 4   /* involutions / yamanouchi: fully expanded double sum */
} invdesc_method;

typedef enum invdesc_suite {
  INVDESC_SUITE_BIJECTIONS = 0,
  INVDESC_SUITE_SYMMETRY = 1,
  INVDESC_SUITE_EQ2 = 2,
  INVDESC_SUITE_EQ3 = 3,
  INVDESC_SUITE_EQ4 = 4,
  INVDESC_SUITE_GF = 5,
  INVDESC_SUITE_SCHUR = 6,
  INVDESC_SUITE_ALL = 7
} invdesc_suite;

typedef enum invdesc_target {
  INVDESC_TARGET_INVOLUTIONS = 0, /* rows i(n, .) */
  INVDESC_TARGET_YAMANOUCHI = 1,  /* rows y(n, .) */
  INVDESC_TARGET_SSYT_ROWS = 2    /* rows a(n, 0..k_max) */
} invdesc_target;

/* Size limits for brute-force enumeration. */
typedef struct invdesc_bounds {
  size_t yamanouchi_n;
  size_t involution_n;
  size_t ssyt_n;
  size_t ssyt_s;
  size_t standard_n;
  size_t shape_n;
  size_t shape_m;
} invdesc_bounds;

typedef struct invdesc_table invdesc_table;
typedef struct invdesc_report invdesc_report;
typedef struct invdesc_scan invdesc_scan;

INVDESC_API const char* invdesc_version(void);
INVDESC_API const char* invdesc_last_error(void);
INVDESC_API const char* invdesc_status_name(invdesc_status status);
INVDESC_API void invdesc_default_bounds(invdesc_bounds* out);

/* ---- count tables ------------------------------------------------------ */

/* Rows n_from..n_to. k_max < 0 selects the full row (involutions,
 * yamanouchi) or k = 0..n (ssyt). bounds may be NULL for the defaults. */
INVDESC_API invdesc_status invdesc_table_compute(invdesc_kind kind, invdesc_method method,
                                                 size_t n_from, size_t n_to, long long k_max,
                                                 const invdesc_bounds* bounds, invdesc_table** out);
INVDESC_API void invdesc_table_free(invdesc_table* table);
INVDESC_API const char* invdesc_table_label(const invdesc_table* table);
INVDESC_API const char* invdesc_table_provenance(const invdesc_table* table);
INVDESC_API size_t invdesc_table_row_count(const invdesc_table* table);
INVDESC_API size_t invdesc_table_row_n(const invdesc_table* table, size_t row);
INVDESC_API size_t invdesc_table_row_length(const invdesc_table* table, size_t row);
/* Entry k of the given row, or NULL when out of range. */
INVDESC_API const char* invdesc_table_value(const invdesc_table* table, size_t row, size_t k);

/* ---- verification -------------------------------------------------------- */

/* printed_form != 0 checks the misprinted expanded inverse in the eq4 suite. */
INVDESC_API invdesc_status invdesc_verify(invdesc_suite suite, size_t n_max, int printed_form,
                                          const invdesc_bounds* bounds, invdesc_report** out);
INVDESC_API void invdesc_report_free(invdesc_report* report);
INVDESC_API const char* invdesc_report_suite(const invdesc_report* report);
INVDESC_API size_t invdesc_report_n_max(const invdesc_report* report);
INVDESC_API int invdesc_report_passed(const invdesc_report* report);
INVDESC_API size_t invdesc_report_check_count(const invdesc_report* report);
INVDESC_API const char* invdesc_report_check_identity(const invdesc_report* report, size_t i);
INVDESC_API const char* invdesc_report_check_range(const invdesc_report* report, size_t i);
INVDESC_API int invdesc_report_check_passed(const invdesc_report* report, size_t i);
/* First failing instance, or NULL if the check passed. */
INVDESC_API const char* invdesc_report_check_witness(const invdesc_report* report, size_t i);

/* ---- log-concavity scans --------------------------------------------------- */

/* k_max is used by INVDESC_TARGET_SSYT_ROWS only; k_max < 0 means k = 0..n. */
INVDESC_API invdesc_status invdesc_scan_rows(invdesc_target target, size_t n_from, size_t n_to,
                                             long long k_max, invdesc_scan** out);
INVDESC_API void invdesc_scan_free(invdesc_scan* scan);
INVDESC_API const char* invdesc_scan_label(const invdesc_scan* scan);
INVDESC_API const char* invdesc_scan_indexing(const invdesc_scan* scan);
INVDESC_API size_t invdesc_scan_count(const invdesc_scan* scan);
INVDESC_API size_t invdesc_scan_n(const invdesc_scan* scan, size_t i);
INVDESC_API int invdesc_scan_symmetric(const invdesc_scan* scan, size_t i);
INVDESC_API int invdesc_scan_unimodal(const invdesc_scan* scan, size_t i);
INVDESC_API int invdesc_scan_log_concave(const invdesc_scan* scan, size_t i);
INVDESC_API size_t invdesc_scan_row_length(const invdesc_scan* scan, size_t i);
INVDESC_API const char* invdesc_scan_row_value(const invdesc_scan* scan, size_t i, size_t k);
INVDESC_API size_t invdesc_scan_violation_count(const invdesc_scan* scan, size_t i);
INVDESC_API size_t invdesc_scan_violation_index(const invdesc_scan* scan, size_t i, size_t v);
/* s_{j-1} * s_{j+1} and s_j^2 at violation v of row i. */
INVDESC_API const char* invdesc_scan_violation_outer(const invdesc_scan* scan, size_t i, size_t v);
INVDESC_API const char* invdesc_scan_violation_square(const invdesc_scan* scan, size_t i, size_t v);
/* Smallest n in the scan whose row is not log-concave, or -1. */
INVDESC_API long long invdesc_scan_first_violating_n(const invdesc_scan* scan);

#ifdef __cplusplus
}
#endif

#endif /* INVDESC_H */
