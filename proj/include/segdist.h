/* C interface to the segment-distinction engine.
 *
 * Handles are opaque; every object returned through an out parameter is
 * owned by the caller and released with the matching free function.
 * Report strings are heap-allocated C strings released with
 * segdist_string_free.  On failure, *out_error (when the pointer is
 * non-null) receives an allocated message.
 */

#ifndef SEGDIST_H
#define SEGDIST_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum segdist_status {
  SEGDIST_OK = 0,
  SEGDIST_FAIL = 1,             /* a check ran and found a violation */
  SEGDIST_PARSE_ERROR = 2,      /* malformed input text */
  SEGDIST_SEMANTIC_ERROR = 3,   /* universe closure or validation failure */
  SEGDIST_INVALID_ARGUMENT = 4, /* precondition or usage violation */
  SEGDIST_INTERNAL_ERROR = 5    /* invariant breakage; report a bug */
} segdist_status;

typedef enum segdist_format {
  SEGDIST_FORMAT_TEXT = 0,
  SEGDIST_FORMAT_JSON = 1
} segdist_format;

typedef struct segdist_universe segdist_universe;
typedef struct segdist_multisegment segdist_multisegment;

const char* segdist_version(void);

void segdist_string_free(char* s);

/* ---- universes ---- */

segdist_status segdist_universe_parse(const char* text,
                                      segdist_universe** out,
                                      char** out_error);
segdist_status segdist_universe_from_file(const char* path,
                                          segdist_universe** out,
                                          char** out_error);
void segdist_universe_free(segdist_universe* u);
segdist_status segdist_universe_print(const segdist_universe* u,
                                      char** out_text);

/* ---- multisegments ---- */

segdist_status segdist_multisegment_parse(const segdist_universe* u,
                                          const char* text,
                                          segdist_multisegment** out,
                                          char** out_error);
void segdist_multisegment_free(segdist_multisegment* m);
segdist_status segdist_multisegment_print(const segdist_universe* u,
                                          const segdist_multisegment* m,
                                          char** out_text);

/* ---- queries ----
 *
 * Each writes a report in the requested format to *out_report and
 * returns SEGDIST_OK, except as noted.
 */

/* mode is "auto", "ladder", "standard" or "segment". */
segdist_status segdist_classify(const segdist_universe* u,
                                const segdist_multisegment* m,
                                const char* mode, segdist_format format,
                                char** out_report, char** out_error);

/* Pure components, plus the proper-block decomposition when the input
 * is a ladder. */
segdist_status segdist_decompose(const segdist_universe* u,
                                 const segdist_multisegment* m,
                                 segdist_format format, char** out_report,
                                 char** out_error);

/* Derivative enumeration; the input must be a ladder. */
segdist_status segdist_derivatives(const segdist_universe* u,
                                   const segdist_multisegment* m,
                                   segdist_format format, char** out_report,
                                   char** out_error);

/* Stratum table and multiplicity bound for the canonical realization. */
segdist_status segdist_strata(const segdist_universe* u,
                              const segdist_multisegment* m,
                              segdist_format format, char** out_report,
                              char** out_error);

/* Duality images and closure verdict. */
segdist_status segdist_dual(const segdist_universe* u,
                            const segdist_multisegment* m,
                            segdist_format format, char** out_report,
                            char** out_error);

/* ---- checks ----
 *
 * SEGDIST_OK means PASS; SEGDIST_FAIL means the property failed and the
 * report carries a witness.
 */

segdist_status segdist_check_key_lemma(const segdist_universe* u,
                                       int max_segments, int max_span,
                                       segdist_format format,
                                       char** out_report, char** out_error);

segdist_status segdist_check_deriv(const segdist_universe* u, uint64_t seed,
                                   int count, int max_segments, int max_span,
                                   segdist_format format, char** out_report,
                                   char** out_error);

/* Seeded random multisegments for regression corpora; bit-reproducible. */
segdist_status segdist_corpus(const segdist_universe* u, uint64_t seed,
                              int count, int max_segments, int max_span,
                              segdist_format format, char** out_report,
                              char** out_error);

#ifdef __cplusplus
}
#endif

#endif /* SEGDIST_H */
