#ifndef CGEXACT_CGEXACT_H
#define CGEXACT_CGEXACT_H

/*
 * C interface to the exact Clebsch-Gordan engine.
 *
 * Every function returns a cgx_status. On failure a message describing the
 * error is available from cgx_last_error() on the calling thread until the
 * next call into the library from that thread. Output strings and reports
 * are opaque handles owned by the caller and released with the matching
 * free function; out-parameters are left untouched on failure.
 *
 * Indices follow the integer convention: V(m) (x) V(n) contains V(m+n-2k),
 * and (i, j) label the weight vector x^i y^(m-i) (x) x^j y^(n-j).
 */

#include <stddef.h>

#if defined(_WIN32)
#define CGX_API __declspec(dllexport)
#else
#define CGX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cgx_status {
  CGX_OK = 0,
  CGX_ERR_DOMAIN = 1,     /* indices or parameters outside the valid range */
  CGX_ERR_ARGUMENT = 2,   /* null pointer or unsupported option */
  CGX_ERR_IRRATIONAL = 3, /* an exact result would not be rational */
  CGX_ERR_INTERNAL = 4,   /* an internal consistency check failed */
  CGX_ERR_MEMORY = 5
} cgx_status;

typedef enum cgx_coeff_kind {
  CGX_COEFF_RATIONAL = 0, /* the rational Clebsch-Gordan coefficient */
  CGX_COEFF_WIGNER = 1,   /* unitary normalization by Wigner's sum */
  CGX_COEFF_RACAH = 2     /* unitary normalization by Racah's sum */
} cgx_coeff_kind;

typedef enum cgx_format {
  CGX_FORMAT_JSON = 0,
  CGX_FORMAT_CSV = 1,
  CGX_FORMAT_PRETTY = 2
} cgx_format;

enum {
  CGX_SUITE_ORTHOGONALITY = 1u << 0,
  CGX_SUITE_RECURRENCES = 1u << 1,
  CGX_SUITE_REGGE = 1u << 2,
  CGX_SUITE_NORMALIZED = 1u << 3,
  CGX_SUITE_PROJECTORS = 1u << 4,
  CGX_SUITE_ALL = (1u << 5) - 1
};

/* Passed as only_k / k to select every summand. */
#define CGX_ALL_K (-1L)

typedef struct cgx_string cgx_string;
typedef struct cgx_report cgx_report;

CGX_API const char* cgx_version(void);
CGX_API const char* cgx_last_error(void);
CGX_API const char* cgx_status_name(cgx_status status);

/* NUL-terminated contents; valid until cgx_string_free. */
CGX_API const char* cgx_string_data(const cgx_string* s);
CGX_API size_t cgx_string_size(const cgx_string* s);
CGX_API void cgx_string_free(cgx_string* s);

/*
 * Coefficient at (m, n, k, i, j). Structurally invalid triples (k > min(m,n)
 * or a negative entry) give CGX_ERR_DOMAIN; indices outside the weight window
 * give "0". The rational kind prints "p/q"; the normalized kinds print
 * "+sqrt(p/q)", "-sqrt(p/q)" or "0".
 *
 * With float_digits > 0 and decimal != NULL, *decimal receives a rounded
 * decimal rendering with that many fractional digits.
 */
CGX_API cgx_status cgx_coeff(long m, long n, long k, long i, long j, cgx_coeff_kind kind,
                             int float_digits, cgx_string** exact, cgx_string** decimal);

/* "j1=.. j2=.. j=.. m1=.. m2=.." for the tuple, halves written as p/2. */
CGX_API cgx_status cgx_su2_labels(long m, long n, long k, long i, long j, cgx_string** out);

/*
 * Every summand of V(m) (x) V(n), or only summand only_k. su2_labels adds the
 * half-integer label columns to CSV output and is ignored otherwise.
 */
CGX_API cgx_status cgx_table(long m, long n, long only_k, cgx_format format, int su2_labels,
                             cgx_string** out);

/* Checks a JSON table: parses it and compares with a fresh computation. */
CGX_API cgx_status cgx_table_check_json(const char* json, size_t size, int* matches);

/*
 * The e f operator on the weight space of total weight p and its spectral
 * projectors (all, or only summand k). CSV is not supported.
 */
CGX_API cgx_status cgx_projector(long m, long n, long p, long k, cgx_format format,
                                 cgx_string** out);

/* Suite bitmask for "all", "orthogonality", ...; 0 for an unknown name. */
CGX_API unsigned cgx_suite_from_name(const char* name);

/*
 * Runs the selected suites for every 0 <= m <= m_max, 0 <= n <= n_max on
 * `threads` workers (0 selects CG_EXACT_THREADS or the hardware default).
 */
CGX_API cgx_status cgx_verify(long m_max, long n_max, unsigned suites, int fail_fast,
                              unsigned threads, cgx_report** out);
CGX_API int cgx_report_passed(const cgx_report* report);
CGX_API cgx_status cgx_report_text(const cgx_report* report, int quiet, cgx_string** out);
CGX_API void cgx_report_free(cgx_report* report);

#ifdef __cplusplus
}
#endif

#endif
