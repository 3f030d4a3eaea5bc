/* C interface to the triharmonic hypersurface checker.
 *
 * Every command produces an opaque report carrying the rendered output
 * (JSON, text or CSV) and a process-style exit code. Reports exist on
 * TRIH_OK and TRIH_CHECK_FAILED; on TRIH_USAGE_ERROR no report is
 * produced and trih_last_error() describes the problem. Error messages
 * are thread-local; reports are independent objects and may be used
 * from any thread, but each report must be freed exactly once.
 *
 * Exact values cross this boundary as strings ("p/q", "key=value") so
 * no precision is lost in either direction.
 */
#ifndef TRIHCHECK_H
#define TRIHCHECK_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct trih_report trih_report;

typedef enum trih_status {
  TRIH_OK = 0,           /* all checks passed */
  TRIH_CHECK_FAILED = 1, /* a mathematical check failed */
  TRIH_USAGE_ERROR = 2   /* bad arguments or parameter validation */
} trih_status;

/* Classify one catalog hypersurface.
 *   curvature  ambient curvature as a rational string, e.g. "1", "-1", "0"
 *   n          hypersurface dimension (>= 2)
 *   family     catalog name, e.g. "small-sphere", "clifford", "horosphere"
 *   params     "key=value" strings, values as exact rationals ("1/3")
 *   expect     "proper", "minimal", "not", or NULL to skip the comparison
 *   format     "json" or "text"; NULL means "json"
 */
trih_status trih_run_check(const char* curvature, int n, const char* family,
                           const char* const* params, size_t num_params,
                           const char* expect, const char* format,
                           trih_report** out);

/* Root isolation, torus crosscheck and radius elimination for one n. */
trih_status trih_run_corollary(int n, int digits, const char* format,
                               trih_report** out);

/* Formal identity suites: "lemma3", "lemma4", "vandermonde", "theorem3",
 * "r6" or "all" (NULL means "all"). qmax bounds the formal moment range,
 * cases the randomized factorization count; pass 0 for the defaults
 * (15 and 1000). */
trih_status trih_run_identities(const char* suite, long qmax, long cases,
                                const char* format, trih_report** out);

/* Sweep one parameter over an inclusive range.
 *   range  "key=lo:hi:steps"; lo and hi accept rationals or decimals
 *   out_format  "csv" or "json"; NULL means "csv"
 * Fixed parameters are passed as in trih_run_check. */
trih_status trih_run_scan(const char* curvature, int n, const char* family,
                          const char* const* params, size_t num_params,
                          const char* range, const char* out_format,
                          trih_report** out);

/* 0, 1 or 2, matching trih_status. */
int trih_report_exit_code(const trih_report* report);

/* Rendered output, NUL-terminated, owned by the report. */
const char* trih_report_output(const trih_report* report);

void trih_report_free(trih_report* report);

/* Message for the most recent failure on this thread ("" if none). */
const char* trih_last_error(void);

/* Library version, e.g. "0.1.0". */
const char* trih_version(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TRIHCHECK_H */
