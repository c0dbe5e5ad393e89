#ifndef BRAIDBOOK_H
#define BRAIDBOOK_H

/* This file is generated by cbindgen from braidbook-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum BbStatus {
  BB_STATUS_OK = 0,
  BB_STATUS_DOMAIN_ERROR = 1,
  BB_STATUS_PARSE_ERROR = 2,
  BB_STATUS_NULL_POINTER = 3,
  BB_STATUS_INVALID_UTF8 = 4,
} BbStatus;

/**
 * Opaque handle to a torus-grid diagram.
 */
typedef struct BbDiagram BbDiagram;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent failure on this thread. The pointer
 * stays valid until the next failing call on the same thread; do not free.
 */
const char *bb_last_error_message(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `ptr` must be null or a pointer produced by this library.
 */
void bb_string_free(char *ptr);

/**
 * Braid word of the (p,q)-torus knot, in word text form.
 *
 * # Safety
 * `out` must point at writable storage for one `char*`.
 */
enum BbStatus bb_torus_braid_word(uint32_t p, uint32_t q, char **out);

/**
 * Braid word of the (k,l)-cable of the closure of `word_text`.
 *
 * # Safety
 * `word_text` must be a NUL-terminated string, `out` writable.
 */
enum BbStatus bb_cable_word(const char *word_text, uint32_t k, int64_t l, char **out);

/**
 * Writhe of a braid word.
 *
 * # Safety
 * As for [`bb_cable_word`]; `out` must point at an `int64_t`.
 */
enum BbStatus bb_writhe(const char *word_text, int64_t *out);

/**
 * HOMFLY-PT polynomial of the closure of `word_text`, in canonical text.
 *
 * # Safety
 * As for [`bb_cable_word`].
 */
enum BbStatus bb_homfly(const char *word_text, char **out);

/**
 * Canonical-genus lower bound of the knot closed up by `word_text`.
 *
 * # Safety
 * As for [`bb_writhe`].
 */
enum BbStatus bb_gc_lower_bound(const char *word_text, int64_t *out);

/**
 * Cable survey rows for n = 1..=max_n as tab-separated lines.
 *
 * # Safety
 * `out` must point at writable storage for one `char*`.
 */
enum BbStatus bb_survey_tsv(uint32_t max_n, char **out);

/**
 * Expands a band-generator word into Artin letters.
 *
 * # Safety
 * As for [`bb_cable_word`].
 */
enum BbStatus bb_bkl_expand(const char *bkl_text, char **out);

/**
 * Braided Stallings plumbing of two band words; `merger_text` may be null
 * for the identity merger (the connected sum).
 *
 * # Safety
 * String arguments must be NUL-terminated; `out` writable.
 */
enum BbStatus bb_plumb_word(const char *b1_text,
                            uint32_t n1,
                            const char *b2_text,
                            uint32_t n2,
                            const char *merger_text,
                            char **out);

/**
 * All mergers of size (l1, l2), one text form per line.
 *
 * # Safety
 * `out` must point at writable storage for one `char*`.
 */
enum BbStatus bb_mergers(uint32_t l1, uint32_t l2, char **out);

/**
 * Number of Seifert circles of an oriented PD diagram.
 *
 * # Safety
 * As for [`bb_writhe`] with a `uint64_t` output.
 */
enum BbStatus bb_seifert_circle_count(const char *pd_text, uint64_t *out);

/**
 * Canonical genus of a knot diagram.
 *
 * # Safety
 * As for [`bb_writhe`].
 */
enum BbStatus bb_canonical_genus(const char *pd_text, int64_t *out);

/**
 * Arc-presentation report of a diagram, in the line-oriented text form.
 *
 * # Safety
 * As for [`bb_cable_word`].
 */
enum BbStatus bb_arc_presentation(const char *pd_text, char **out);

/**
 * Parses a diagram file into a handle; null on failure (see
 * [`bb_last_error_message`]).
 *
 * # Safety
 * `text` must be a NUL-terminated string.
 */
struct BbDiagram *bb_diagram_parse(const char *text);

/**
 * Releases a diagram handle.
 *
 * # Safety
 * `diagram` must be null or a pointer produced by this library, not yet
 * freed.
 */
void bb_diagram_free(struct BbDiagram *diagram);

/**
 * Validates a diagram. Returns `Ok` when valid; otherwise `DomainError`
 * with the violation list as the error message (and in `out_report` when
 * non-null).
 *
 * # Safety
 * `diagram` must be a live handle; `out_report` may be null.
 */
enum BbStatus bb_diagram_validate(const struct BbDiagram *diagram, char **out_report);

/**
 * Band word at a vertical cut of the diagram, with a strands header.
 *
 * # Safety
 * `diagram` must be a live handle; `out` writable.
 */
enum BbStatus bb_diagram_extract_word(const struct BbDiagram *diagram, uintptr_t cut, char **out);

/**
 * Translates the cut circle `k` events to the right; null on failure.
 *
 * # Safety
 * `diagram` must be a live handle.
 */
struct BbDiagram *bb_diagram_translate(const struct BbDiagram *diagram, uintptr_t k);

/**
 * Glues two diagrams along a merger (null merger text = identity);
 * null on failure.
 *
 * # Safety
 * Both handles must be live; `merger_text` null or NUL-terminated.
 */
struct BbDiagram *bb_diagram_plumb(const struct BbDiagram *first,
                                   const struct BbDiagram *second,
                                   const char *merger_text);

/**
 * Canonical file text of a diagram handle.
 *
 * # Safety
 * `diagram` must be a live handle; `out` writable.
 */
enum BbStatus bb_diagram_to_text(const struct BbDiagram *diagram, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BRAIDBOOK_H */
