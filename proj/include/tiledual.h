/* tiledual: exact tiling checks and truncated Plancherel diagnostics for
 * p-periodic subsets of the real line.
 *
 * C interface to the shared library. Problems are described as JSON text
 * ({"p": 2, "base": [["0","1"]], ...}); commands produce JSON reports, or
 * CSV for "sweep". All strings returned through output parameters are
 * heap-allocated and must be released with td_string_free.
 */

#ifndef TILEDUAL_H
#define TILEDUAL_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum td_status {
    TD_OK = 0,            /* check passed / verdict consistent */
    TD_CHECK_FAILED = 1,  /* violation, inconsistency, or unreachable tolerance */
    TD_INVALID_INPUT = 2, /* malformed JSON, bad field, unknown command */
    TD_INTERNAL_ERROR = 3
} td_status;

/* Opaque parsed problem: a periodic set plus optional test functions. */
typedef struct td_problem td_problem;

/* Library version, e.g. "0.1.0". Static storage, do not free. */
const char* td_version(void);

/* Parses a problem description. On success stores a handle in *out and
 * returns TD_OK; otherwise *out is NULL and td_last_error() explains why. */
td_status td_problem_parse(const char* json_text, td_problem** out);

void td_problem_free(td_problem* problem);

/* Runs one command against a parsed problem.
 *
 *   command:      "check-tiling" | "check-spectral" | "complete" |
 *                 "verdict" | "sweep"
 *   options_json: optional run configuration (NULL or "{}" for defaults):
 *                 {"tol": 1e-6, "seed": 1, "n_max": 2, "t_samples": 64,
 *                  "k_max": 10000000,
 *                  "sweep": {"kind": "plancherel"|"comb", "points": 101,
 *                            "t_min": 0.0, "t_max": 1.0, "n": 1,
 *                            "offsets": ["0"]}}
 *   output:       receives the report (JSON, or CSV for "sweep");
 *                 free with td_string_free. May be set even when the
 *                 status is TD_CHECK_FAILED.
 *
 * The status mirrors the CLI exit code contract: TD_OK for true/consistent
 * verdicts, TD_CHECK_FAILED for violations or inconsistencies,
 * TD_INVALID_INPUT for malformed input or configuration. */
td_status td_run(const td_problem* problem, const char* command, const char* options_json, char** output);

void td_string_free(char* s);

/* Message describing the most recent failure on the calling thread; empty
 * string when the last call succeeded. Static storage, do not free. */
const char* td_last_error(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TILEDUAL_H */
