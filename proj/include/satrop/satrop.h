#ifndef SATROP_H
#define SATROP_H

/* C interface to the satrop engine: tropical-point enumeration for tensor
 * invariant spaces, Dynkin-folding experiments, and classical oracles.
 *
 * Runs are configured by a JSON document (see the README for the schema) and
 * produce a JSON report. All pointers returned as const char* are owned by
 * the run object and stay valid until satrop_run_free.
 */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SATROP_API __declspec(dllexport)
#else
#define SATROP_API __attribute__((visibility("default")))
#endif

/* Status codes: 0 and 2 encode scientific outcomes, the rest are
 * operational errors. */
#define SATROP_OK 0           /* all checked equalities hold */
#define SATROP_MISMATCH 2     /* a checked equality failed; see the report */
#define SATROP_E_CONFIG 3     /* configuration could not be parsed/validated */
#define SATROP_E_RUNTIME 4    /* evaluation error (genericity, box limit, ...) */

typedef struct satrop_run satrop_run;

SATROP_API unsigned satrop_abi_version(void);

/* Create a run from a configuration JSON string. Never returns NULL except
 * on allocation failure; configuration errors surface from execute. */
SATROP_API satrop_run* satrop_run_new(const char* config_json);
SATROP_API void satrop_run_free(satrop_run* run);

/* Execute the configured command. Returns a SATROP_* status. */
SATROP_API int satrop_run_execute(satrop_run* run);

/* JSON report of the last execution; NULL before execute or after an
 * operational error that produced no report. */
SATROP_API const char* satrop_run_report(const satrop_run* run);

/* Human-readable message for the last error, or NULL. */
SATROP_API const char* satrop_run_error(const satrop_run* run);

/* Serialize a root datum (family letter, rank, form name) to JSON. The
 * returned string must be released with satrop_free_string. Returns a
 * SATROP_* status. */
SATROP_API int satrop_datum_json(const char* family, int rank, const char* form, char** out);

/* Same for the folded datum of (family, rank, sc form) under the standard
 * automorphism: the diagram flip, or triality when family is D and rank 4
 * and order is 3. */
SATROP_API int satrop_folded_datum_json(const char* family, int rank, int order, char** out);

SATROP_API void satrop_free_string(char* s);

#ifdef __cplusplus
}
#endif

#endif /* SATROP_H */
