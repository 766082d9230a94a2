#ifndef CHORDGROUP_H
#define CHORDGROUP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CgStatus {
  CG_STATUS_OK = 0,
  CG_STATUS_NULL_POINTER = 1,
  CG_STATUS_INVALID_CHORD = 2,
  CG_STATUS_PARSE_ERROR = 3,
  CG_STATUS_WRONG_ARITY = 4,
  CG_STATUS_INVALID_SIZE = 5,
  CG_STATUS_BUFFER_TOO_SMALL = 6,
  CG_STATUS_INVALID_UTF8 = 7,
  CG_STATUS_ISOMORPHISM_VIOLATION = 8,
} CgStatus;

typedef enum CgClassKind {
  CG_CLASS_KIND_HARMONIC = 0,
  CG_CLASS_KIND_HARMONIC_UNLABELED = 1,
  CG_CLASS_KIND_NOT_HARMONIC = 2,
} CgClassKind;

/**
 * Opaque chord handle.
 */
typedef struct CgChord CgChord;

/**
 * Opaque list of chords.
 */
typedef struct CgChordList CgChordList;

/**
 * Opaque chord graph.
 */
typedef struct CgGraph CgGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *cg_last_error_message(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 */
void cg_string_free(char *s);

/**
 * Builds a chord from `len` tones, which must start at 0 and strictly increase.
 */
enum CgStatus cg_chord_new(const int32_t *tones, size_t len, struct CgChord **out);

/**
 * Like `cg_chord_new`, but accepts any pitch-class set and transposes it to 0.
 */
enum CgStatus cg_chord_normalize(const int32_t *tones, size_t len, struct CgChord **out);

/**
 * Parses `"0,4,7"` or `"(0,4,7)"`.
 */
enum CgStatus cg_chord_parse(const char *text, struct CgChord **out);

void cg_chord_free(struct CgChord *chord);

/**
 * Number of tones; 0 for NULL.
 */
size_t cg_chord_len(const struct CgChord *chord);

/**
 * Copies the tones into `buf`. `written` (optional) receives the tone count
 * even when the buffer is too small.
 */
enum CgStatus cg_chord_tones(const struct CgChord *chord,
                             uint8_t *buf,
                             size_t cap,
                             size_t *written);

/**
 * Copies the ordered gaps (summing to 12) into `buf`.
 */
enum CgStatus cg_chord_composition(const struct CgChord *chord,
                                   uint8_t *buf,
                                   size_t cap,
                                   size_t *written);

/**
 * Copies the gaps sorted ascending into `buf`.
 */
enum CgStatus cg_chord_partition(const struct CgChord *chord,
                                 uint8_t *buf,
                                 size_t cap,
                                 size_t *written);

/**
 * `"0,4,7"`; free with `cg_string_free`. NULL for a NULL chord.
 */
char *cg_chord_to_string(const struct CgChord *chord);

/**
 * 1 when both chords hold the same tones, 0 otherwise (including NULL).
 */
int32_t cg_chord_equal(const struct CgChord *a, const struct CgChord *b);

/**
 * Applies an operator word over `i`, `d`, `a` (left to right) and returns a
 * new chord.
 */
enum CgStatus cg_apply_word(const struct CgChord *chord, const char *word, struct CgChord **out);

/**
 * Orbit under a comma-separated generator list such as `"i,d,a"`, sorted.
 */
enum CgStatus cg_orbit(const struct CgChord *chord,
                       const char *generators,
                       struct CgChordList **out);

/**
 * Every chord with `k` tones, in lexicographic order.
 */
enum CgStatus cg_enumerate_chords(int32_t k, struct CgChordList **out);

size_t cg_chord_list_len(const struct CgChordList *list);

/**
 * Borrowed element, valid while the list lives; NULL when out of range.
 */
const struct CgChord *cg_chord_list_get(const struct CgChordList *list, size_t index);

void cg_chord_list_free(struct CgChordList *list);

/**
 * Classifies a three- or four-tone chord. `label` (optional) receives a
 * newly allocated label such as `"MM0"` for `CG_CLASS_KIND_HARMONIC`, and NULL
 * otherwise.
 */
enum CgStatus cg_classify(const struct CgChord *chord, enum CgClassKind *kind, char **label);

/**
 * Graph over the labeled four-tone chords; `include_dd` adds the isolated
 * diminished-diminished node.
 */
struct CgGraph *cg_graph_build(bool include_dd);

void cg_graph_free(struct CgGraph *graph);

size_t cg_graph_node_count(const struct CgGraph *graph);

/**
 * Undirected edges count once, self-loops included.
 */
size_t cg_graph_edge_count(const struct CgGraph *graph);

char *cg_graph_to_json(const struct CgGraph *graph);

char *cg_graph_to_dot(const struct CgGraph *graph);

/**
 * Checks the `MM->mm, mM->Mm, AM->dm` component isomorphism.
 */
enum CgStatus cg_graph_check_isomorphism(const struct CgGraph *graph);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHORDGROUP_H */
