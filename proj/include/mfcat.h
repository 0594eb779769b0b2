/* C interface to the matrix-factorization engine.
 *
 * Everything is exposed through two opaque handles: a problem (parsed from a
 * JSON description of a ring, a potential, a cover, and named objects) and a
 * report (the result of running one command against a problem).  All strings
 * are UTF-8 and owned by the handle they came from.
 *
 * Thread safety: handles are immutable after creation, so distinct threads
 * may run commands against the same problem concurrently.  The error message
 * store is thread-local.
 */
#ifndef MFCAT_H
#define MFCAT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(MFCAT_BUILD)
#define MFCAT_API __attribute__((visibility("default")))
#else
#define MFCAT_API
#endif

/* Mirrors the CLI exit codes. */
typedef enum mfcat_status {
  MFCAT_OK = 0,
  MFCAT_MATH_FAIL = 1,       /* verification or comparison failed */
  MFCAT_INPUT_ERROR = 2,     /* malformed problem or arguments */
  MFCAT_BUDGET_EXCEEDED = 3, /* pair budget or stage cap exhausted */
} mfcat_status;

typedef struct mfcat_problem mfcat_problem;
typedef struct mfcat_report mfcat_report;

MFCAT_API const char *mfcat_version(void);

/* Parse a problem from JSON text, or load one from a file.  On failure both
 * return NULL; mfcat_last_status / mfcat_last_error describe why. */
MFCAT_API mfcat_problem *mfcat_problem_parse(const char *json_text);
MFCAT_API mfcat_problem *mfcat_problem_load(const char *path);
MFCAT_API void mfcat_problem_free(mfcat_problem *p);

/* Run one command ("verify", "ext", "cech-ext", "stabilize", "coker",
 * "dual", "tensor", "hh", "hh-homology", "hh-diagonal", "hh-compare",
 * "cy-check").  budget > 0 overrides the Groebner pair budget; verbose != 0
 * appends timing to the human-readable text (never to the JSON payload, so
 * payloads stay byte-identical across runs).
 *
 * Returns MFCAT_OK and stores a report in *out when the command ran to
 * completion; the report's "passed" flag may still be false for comparison
 * commands.  On any other status *out is untouched and mfcat_last_error
 * holds the diagnostic. */
MFCAT_API mfcat_status mfcat_run(const mfcat_problem *p, const char *command,
                                 size_t budget, int verbose,
                                 mfcat_report **out);

/* Accessors; returned strings remain valid until the report is freed. */
MFCAT_API const char *mfcat_report_text(const mfcat_report *r);
MFCAT_API const char *mfcat_report_json(const mfcat_report *r);
MFCAT_API int mfcat_report_passed(const mfcat_report *r);
MFCAT_API void mfcat_report_free(mfcat_report *r);

/* Status and message of the most recent failing call on this thread. */
MFCAT_API mfcat_status mfcat_last_status(void);
MFCAT_API const char *mfcat_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* MFCAT_H */
