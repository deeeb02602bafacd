/* C interface to the cyclotomic BMW verification library.
 *
 * Conventions:
 *   - Every function returns an int32_t status: 0 on success, otherwise one
 *     of the nonzero codes below; cybmw_status_name() maps codes to strings
 *     and cybmw_last_error_message() returns a thread-local description of
 *     the most recent failure on the calling thread.
 *   - Output strings (always JSON, UTF-8, NUL-terminated) are allocated by
 *     the library and must be released with cybmw_free().  On failure the
 *     output pointer is set to NULL.
 *   - Handles are opaque; destroy functions accept NULL.
 */

#ifndef CYBMW_C_H
#define CYBMW_C_H

#include <stdint.h>

#if defined(_WIN32)
#define CYBMW_API __declspec(dllexport)
#else
#define CYBMW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes (stable; additions only). */
enum {
  CYBMW_OK = 0,
  CYBMW_INVALID_ARGUMENT = 1,
  CYBMW_PARSE_ERROR = 2,
  CYBMW_DIVISION_BY_ZERO = 3,
  CYBMW_NOT_EXPANDABLE = 4,
  CYBMW_POLE_AT_POINT = 5,
  CYBMW_MISSING_ASSIGNMENT = 6,
  CYBMW_INDEX_OUT_OF_RANGE = 7,
  CYBMW_DEGENERATE_PARAMETERS = 8,
  CYBMW_NODE_NOT_INCIDENT = 9,
  CYBMW_SHAPE_NOT_IN_LEVEL = 10,
  CYBMW_SHAPE_INCONSISTENCY = 11,
  CYBMW_INVALID_MATCHING = 12,
  CYBMW_SIZE_MISMATCH = 13,
  CYBMW_PARAMETER_MISMATCH = 14,
  CYBMW_VERIFICATION_FAILED = 15,
  CYBMW_INTERNAL_ERROR = 99
};

/* ABI version of this header/library pair; bump on incompatible change. */
CYBMW_API int32_t cybmw_abi_version(void);

/* Static name for a status code ("ok", "parse-error", ...). */
CYBMW_API const char* cybmw_status_name(int32_t status);

/* Thread-local message for the last failing call on this thread; empty string
 * after a success.  Valid until the next library call on the same thread. */
CYBMW_API const char* cybmw_last_error_message(void);

/* Releases a string returned through any char** output parameter. */
CYBMW_API void cybmw_free(char* s);

/* --- Parameter systems ----------------------------------------------------- */

/* Opaque admissible parameter system (symbolic or exact-rational). */
typedef struct cybmw_params cybmw_params;

/* Builds a parameter system from a parameter file:
 *   {"r": 2, "mode": "symbolic" | "specialized",
 *    "rho": "canonical" | <value>, "q": <value>, "u": [<value>, ...],
 *    "delta": {"1": <value>, ...}}            (optional overrides)
 * Values are expressions in q, u1..ur (symbolic) or exact rationals
 * (specialized). */
CYBMW_API int32_t cybmw_params_create(const char* params_json, cybmw_params** out);
CYBMW_API void cybmw_params_destroy(cybmw_params* p);

/* Admissibility report: weak relations over a window, the defining relation
 * family, the ground-ring relation, and closed-form agreement.  The report's
 * "pass" field states whether every check passed. */
CYBMW_API int32_t cybmw_params_check(const cybmw_params* p, int64_t window, char** report_json);

/* Table of delta values for indices lo..hi with their computation source. */
CYBMW_API int32_t cybmw_params_deltas(const cybmw_params* p, int64_t lo, int64_t hi,
                                      char** table_json);

/* --- Up-down tableaux ------------------------------------------------------ */

/* {"total": N, "by_shape": {<shape>: count, ...}} for paths of length n. */
CYBMW_API int32_t cybmw_tableaux_count(int32_t n, int32_t r, char** json);

/* All up-down tableaux of length n as arrays of multipartitions. */
CYBMW_API int32_t cybmw_tableaux_list(int32_t n, int32_t r, char** json);

/* --- Trace weights --------------------------------------------------------- */

/* Weight of every shape at level n: {"n": N, "entries": {<shape>: <value>}}. */
CYBMW_API int32_t cybmw_weights_table(const cybmw_params* p, int32_t n, char** json);

/* --- Two-strand representation --------------------------------------------- */

/* Relation check report for the r-dimensional two-strand module; moments are
 * cross-checked for exponents in [moment_lo, moment_hi]. */
CYBMW_API int32_t cybmw_w2_verify(const cybmw_params* p, int64_t moment_lo, int64_t moment_hi,
                                  char** report_json);

/* Same relation suite over `trials` seeded nondegenerate rational sample
 * points (full moment window), for r too large to verify symbolically. */
CYBMW_API int32_t cybmw_w2_verify_randomized(int32_t r, int32_t trials, uint64_t seed,
                                             char** report_json);

/* --- Labelled Brauer diagrams ---------------------------------------------- */

/* {"n": ..., "r": ..., "count": "<r^n (2n-1)!!>"} (count as decimal string). */
CYBMW_API int32_t cybmw_brauer_count(int32_t n, int32_t r, char** json);

/* Composes two diagrams (same n and r); returns the product diagram plus the
 * multiplicity of each loop parameter removed during stacking:
 *   {"loops": {"th0": 2, ...}, "scalar": "th0^2", "product": {<diagram>}}
 * Diagram format: {"n":2, "r":3, "strands":[{"ends":["t1","b2"], "label":1}]}. */
CYBMW_API int32_t cybmw_brauer_mul(const char* diagram_a_json, const char* diagram_b_json,
                                   char** json);

/* Gram matrix determinant of the diagram basis under the trace form.  The
 * loop parameters come from theta_json ({"r":3, "theta":["2","-1/3"]}), or
 * are drawn from the seeded generator when theta_json is NULL. */
CYBMW_API int32_t cybmw_brauer_gram(int32_t n, int32_t r, const char* theta_json, uint64_t seed,
                                    char** json);

/* --- Whole-library verification -------------------------------------------- */

/* Runs every check battery.  Config (all fields optional):
 *   {"r": 2, "n": 3, "mode": "symbolic" | "randomized",
 *    "trials": 20, "seed": 42}
 * The returned report has named sections of checks and a top-level "pass";
 * the call succeeds (status 0) even when checks fail — inspect "pass". */
CYBMW_API int32_t cybmw_verify_all(const char* config_json, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* CYBMW_C_H */
