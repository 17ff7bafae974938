/*
 * latpos C API: exact weighted-lattice-path matrices, total-positivity
 * checks, planar-network verification and closed-form routes behind an
 * opaque-handle interface.
 *
 * Conventions:
 *   - every function returning latpos_status sets the thread-local message
 *     readable via latpos_last_error() on failure;
 *   - strings returned through char** are heap-allocated and must be
 *     released with latpos_free_string();
 *   - JSON in, JSON out for structured data.
 */
#ifndef LATPOS_H
#define LATPOS_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum latpos_status {
    LATPOS_OK = 0,
    LATPOS_ERROR = 1,        /* operation failed; see latpos_last_error() */
    LATPOS_BAD_ARGUMENT = 2, /* malformed input, unknown name, bad index */
    LATPOS_CAP_EXCEEDED = 3  /* enumeration refused: instance too large */
} latpos_status;

typedef struct latpos_scheme latpos_scheme;
typedef struct latpos_matrix latpos_matrix;

/* Last error message for the calling thread; empty string if none. */
const char* latpos_last_error(void);

void latpos_free_string(char* s);

/* ---- weight schemes ---------------------------------------------------- */

/* params_json: object mapping parameter names to canonical polynomial
 * strings, e.g. {"e":"2","h":"3"}; NULL or "" for defaults. */
latpos_status latpos_scheme_from_catalog(const char* name, const char* params_json,
                                         latpos_scheme** out);

/* Scheme document {"t":int, "ell":int, "a":[rule...], "b":rule,
 * "vars":[...]}; rule kinds: constant | table | poly_in_n. */
latpos_status latpos_scheme_from_json(const char* json_text, latpos_scheme** out);

latpos_status latpos_scheme_to_json(const latpos_scheme* s, char** out);

/* 0 = row-recursive family, 1 = column-recursive (transpose) family. */
int latpos_scheme_orientation(const latpos_scheme* s);

void latpos_scheme_free(latpos_scheme* s);

/* Catalog listing: [{"name","orientation","params","description"}...]. */
latpos_status latpos_catalog_json(char** out);

/* ---- truncations ------------------------------------------------------- */

/* route: "rec1" | "rec2" | "oracle" | "transpose" | "auto"
 * ("auto" picks rec1 or transpose from the scheme orientation). */
latpos_status latpos_build_truncation(const latpos_scheme* s, int rows, int cols,
                                      const char* route, latpos_matrix** out);

int latpos_matrix_rows(const latpos_matrix* m);
int latpos_matrix_cols(const latpos_matrix* m);

/* Canonical polynomial text of one entry. */
latpos_status latpos_matrix_entry(const latpos_matrix* m, int row, int col, char** out);

/* format: "csv" | "json". */
latpos_status latpos_matrix_render(const latpos_matrix* m, const char* format, char** out);

void latpos_matrix_free(latpos_matrix* m);

/* ---- checks (JSON reports) --------------------------------------------- */

/* Total positivity of order <= order; report {order, passed, witness?}. */
latpos_status latpos_tp_report(const latpos_matrix* m, int order, int threads, char** out);

/* Toeplitz window of a row/column/skew-diagonal slice.
 * what_json: {"row":n} | {"column":k} | {"diagonal":[n,k,delta,sigma]} */
latpos_status latpos_toeplitz_report(const latpos_scheme* s, const char* what_json, int window,
                                     int order, char** out);

/* Sequence report {sequence, origin, pf, witness?, log_concavity_depth}. */
latpos_status latpos_sequence_report(const latpos_scheme* s, const char* what_json, int count,
                                     int window, int order, int logconcave_depth, char** out);

/* Closed-form route agreement for constant-weight schemes. */
latpos_status latpos_riordan_report(const latpos_scheme* s, int order, char** out);

/* Planar-network construction / verification.
 * config_json: {"variant":"tridiag"|"general", "network":"layer"|"star"|
 *               "diamond"|"circ", "t":int, "n":int, "ell":int?, "k":int?,
 *               "m":int?, "delta":int?, "sigma":int?, "order":int?}
 * Weights default to symbolic families. */
latpos_status latpos_lgv_report(const char* config_json, char** out);

/* Arc-list export {"arcs":[{tail,head,weight}...],"sources":[...],"sinks":[...]}. */
latpos_status latpos_network_json(const char* config_json, char** out);

/* Full verification battery; the report (stdout payload) is byte-identical
 * for a fixed seed. timing_out may be NULL. */
latpos_status latpos_verify_all(uint64_t seed, int threads, char** report_out,
                                char** timing_out);

#ifdef __cplusplus
}
#endif

#endif /* LATPOS_H */
