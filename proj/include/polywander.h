/* C interface of the polywander verification library.
 *
 * Usage: create a run from a JSON config (or NULL for defaults), execute
 * it, read the reports, destroy it. Handles are opaque; all strings
 * returned by accessors stay owned by the handle and remain valid until
 * pw_run_destroy.
 */
#ifndef POLYWANDER_H
#define POLYWANDER_H

#include <stddef.h>

#if defined(_WIN32)
#define PW_API __declspec(dllexport)
#else
#define PW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pw_status {
  PW_OK = 0,
  PW_FAIL_VERIFICATION = 1, /* suites executed, at least one case failed */
  PW_ERR_CONFIG = 2,        /* malformed or inconsistent configuration */
  PW_ERR_IO = 3,            /* filesystem problem */
  PW_ERR_ARGUMENT = 4,      /* null handle or invalid call sequence */
  PW_ERR_INTERNAL = 5       /* unexpected failure; see pw_run_error */
} pw_status;

typedef struct pw_run pw_run;

/* Library version as "major.minor.patch". */
PW_API const char* pw_version(void);

/* Parses and validates the config (JSON text; NULL or empty means all
 * defaults) and allocates a run. On a config error the handle is still
 * returned so pw_run_error can be read; it must be destroyed either way.
 * *out_run is NULL only when allocation itself failed. */
PW_API pw_status pw_run_create(const char* config_json, pw_run** out_run);

/* Executes the configured suites. Returns PW_OK when everything passed,
 * PW_FAIL_VERIFICATION when the suites ran but a case failed, or an error
 * status. Reports are available after either of the first two. */
PW_API pw_status pw_run_execute(pw_run* run);

/* Full JSON / CSV report text; NULL before a successful execute. */
PW_API const char* pw_run_report_json(const pw_run* run);
PW_API const char* pw_run_report_csv(const pw_run* run);

/* 1 when all suites passed, 0 when some case failed, -1 before execute. */
PW_API int pw_run_passed(const pw_run* run);

/* One-line per-suite summaries, valid after execute. */
PW_API size_t pw_run_summary_count(const pw_run* run);
PW_API const char* pw_run_summary_line(const pw_run* run, size_t index);

/* Message of the last error on this handle; empty string when none. */
PW_API const char* pw_run_error(const pw_run* run);

PW_API void pw_run_destroy(pw_run* run);

#ifdef __cplusplus
}
#endif

#endif /* POLYWANDER_H */
