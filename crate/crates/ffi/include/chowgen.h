#ifndef CHOWGEN_H
#define CHOWGEN_H

/* Generated by cbindgen from chowgen-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Which presentation shape to build.
 */
typedef enum ChowgenForm {
  ChowgenForm_Closed = 0,
  ChowgenForm_GeneratingFunction = 1,
} ChowgenForm;

/**
 * Status codes returned by fallible entry points.
 */
typedef enum ChowgenStatus {
  ChowgenStatus_Ok = 0,
  /**
   * An argument was out of range (for example `r = 0`).
   */
  ChowgenStatus_InvalidArgument = 1,
  /**
   * A verification sweep found a failing check.
   */
  ChowgenStatus_VerifyFailed = 2,
} ChowgenStatus;

/**
 * Opaque handle to a computed presentation.
 */
typedef struct ChowgenPresentation ChowgenPresentation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Computes the presentation of the relation ideal for `r >= 1` and stores a
 * handle in `out`. On failure `out` is left untouched.
 *
 * # Safety
 * `out` must be a valid pointer to writable memory for one pointer.
 */
enum ChowgenStatus chowgen_presentation_new(uint32_t r,
                                            enum ChowgenForm form,
                                            struct ChowgenPresentation **out);

/**
 * Frees a presentation handle. A null pointer is a no-op.
 *
 * # Safety
 * `p` must have been returned by [`chowgen_presentation_new`] and not freed.
 */
void chowgen_presentation_free(struct ChowgenPresentation *p);

/**
 * Number of generators in the presentation (8 closed, 7 gf); 0 for null.
 *
 * # Safety
 * `p` must be a live handle or null.
 */
uintptr_t chowgen_presentation_generator_count(const struct ChowgenPresentation *p);

/**
 * JSON document for the presentation; null for a null handle. Free the
 * result with [`chowgen_string_free`].
 *
 * # Safety
 * `p` must be a live handle or null.
 */
char *chowgen_presentation_json(const struct ChowgenPresentation *p);

/**
 * Plain-text rendering of the presentation; null for a null handle. Free
 * the result with [`chowgen_string_free`].
 *
 * # Safety
 * `p` must be a live handle or null.
 */
char *chowgen_presentation_text(const struct ChowgenPresentation *p);

/**
 * Runs the full certificate sweep for `1..=r_max`.
 */
enum ChowgenStatus chowgen_verify(uint32_t r_max);

/**
 * Canonical text of the degree-`degree` component of generating function
 * `which` (1 or 2), in mod-2c3 normal form. Null for a bad index. Free the
 * result with [`chowgen_string_free`].
 */
char *chowgen_series_component(uint8_t which, uintptr_t degree);

/**
 * JSON document for the full r = 1, 2, 3 reference table. Free the result
 * with [`chowgen_string_free`].
 */
char *chowgen_table_json(void);

/**
 * Checks the computed table against the built-in reference corpus.
 */
enum ChowgenStatus chowgen_table_check(void);

/**
 * Frees a string returned by this library. A null pointer is a no-op.
 *
 * # Safety
 * `s` must have been returned by one of this library's functions and not
 * freed already.
 */
void chowgen_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHOWGEN_H */
