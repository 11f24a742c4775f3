/* C interface to the manifold-point library.
 *
 * Handles are opaque. Functions return an mfp_status; on failure the
 * message of the last error on the calling thread is available through
 * mfp_last_error(). Strings returned through char** are owned by the
 * caller and released with mfp_string_free(). */
#ifndef MFP_MFP_H
#define MFP_MFP_H

#include <stddef.h>

#if defined(MFP_BUILDING_LIBRARY)
#define MFP_API __attribute__((visibility("default")))
#else
#define MFP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mfp_ideal mfp_ideal;
typedef struct mfp_report mfp_report;

typedef enum mfp_status {
  MFP_OK = 0,
  /* Malformed input: parse errors, bad points, bad options or parameters. */
  MFP_ERROR_INPUT = 1,
  /* The computation itself failed (e.g. not zero-dimensional, no stabilization). */
  MFP_ERROR_COMPUTATION = 2,
  /* Out of memory or an unexpected internal failure. */
  MFP_ERROR_INTERNAL = 3
} mfp_status;

typedef enum mfp_format { MFP_FORMAT_TEXT = 0, MFP_FORMAT_MACHINE = 1 } mfp_format;

typedef struct mfp_analyze_options {
  int assume_radical;
  unsigned max_depth; /* 0 selects the default of 6 */
} mfp_analyze_options;

MFP_API const char* mfp_version(void);
/* Message of the last failure on this thread, "" if none. */
MFP_API const char* mfp_last_error(void);
/* Error kind name of the last failure on this thread (e.g. "SyntaxError"), "" if none. */
MFP_API const char* mfp_last_error_kind(void);
MFP_API void mfp_string_free(char* s);

/* Ideal file text: a "vars: x,y" header, then one polynomial per line. */
MFP_API mfp_status mfp_ideal_parse(const char* text, mfp_ideal** out);
MFP_API void mfp_ideal_free(mfp_ideal* ideal);
MFP_API mfp_status mfp_ideal_format(const mfp_ideal* ideal, char** out);
MFP_API size_t mfp_ideal_nvars(const mfp_ideal* ideal);

/* point: "c1,...,cn" with rational entries. options may be NULL. */
MFP_API mfp_status mfp_analyze(const mfp_ideal* ideal, const char* point, const mfp_analyze_options* options,
                               mfp_report** out);
/* l3 may be NULL for the singular family value l2 + l4 - 2. */
MFP_API mfp_status mfp_fourbar(const char* l2, const char* l3, const char* l4, const mfp_analyze_options* options,
                               mfp_report** out);
MFP_API void mfp_report_free(mfp_report* report);
MFP_API const char* mfp_report_verdict(const mfp_report* report);
MFP_API mfp_status mfp_report_render(const mfp_report* report, mfp_format format, char** out);

/* order: "lex", "grevlex" or "elim:K". Output: one basis element per line. */
MFP_API mfp_status mfp_groebner(const mfp_ideal* ideal, const char* order, char** out);
MFP_API mfp_status mfp_dimension(const mfp_ideal* ideal, int* out);
/* Generators of the singular locus ideal, one per line, and its dimension. */
MFP_API mfp_status mfp_singular_locus(const mfp_ideal* ideal, char** generators, int* dimension);
MFP_API mfp_status mfp_real_count(const mfp_ideal* ideal, size_t* complex_points, size_t* real_points);
/* radii: comma-separated decreasing rationals, or NULL for the default schedule. */
MFP_API mfp_status mfp_halfbranches(const mfp_ideal* ideal, const char* point, const char* radii, size_t* out);

#ifdef __cplusplus
}
#endif

#endif
