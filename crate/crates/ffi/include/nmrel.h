#ifndef NMREL_H
#define NMREL_H

/* Generated by cbindgen from nmrel-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Property predicate over a square relation.
 */
typedef enum {
  NMR_PROPERTY_REFLEXIVE = 0,
  NMR_PROPERTY_SYMMETRIC = 1,
  NMR_PROPERTY_TRANSITIVE = 2,
  NMR_PROPERTY_EQUIVALENCE = 3,
} NmrProperty;

/**
 * Binary operation over relations.
 */
typedef enum {
  NMR_RELATION_OP_UNION = 0,
  NMR_RELATION_OP_INTERSECTION = 1,
  NMR_RELATION_OP_ADDITION = 2,
  NMR_RELATION_OP_MULTIPLICATION = 3,
} NmrRelationOp;

/**
 * Binary operation over sets.
 */
typedef enum {
  NMR_SET_OP_UNION = 0,
  NMR_SET_OP_INTERSECTION = 1,
  NMR_SET_OP_ADDITION = 2,
  NMR_SET_OP_MULTIPLICATION = 3,
} NmrSetOp;

/**
 * Result of a fallible call.
 */
typedef enum {
  /**
   * The call succeeded; out-parameters are valid.
   */
  NMR_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  NMR_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  NMR_STATUS_INVALID_UTF8 = 2,
  /**
   * The input document failed to parse or validate.
   */
  NMR_STATUS_PARSE_ERROR = 3,
  /**
   * The operands are incompatible (universe or dimension mismatch).
   */
  NMR_STATUS_DOMAIN_ERROR = 4,
  /**
   * The operation is undefined for this input (e.g. power zero).
   */
  NMR_STATUS_INVALID_ARGUMENT = 5,
  /**
   * The library hit an internal error; please report it.
   */
  NMR_STATUS_INTERNAL_ERROR = 6,
} NmrStatus;

/**
 * A neutrosophic multi relation (opaque).
 */
typedef struct NmrRelation NmrRelation;

/**
 * A neutrosophic multi set (opaque).
 */
typedef struct NmrSet NmrSet;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the most recent error message on this thread into `buffer`
 * (NUL-terminated, truncated to `length`). Returns the full message length
 * in bytes, excluding the terminator; 0 when no error has occurred.
 */
uintptr_t nmr_last_error_message(char *buffer, uintptr_t length);

/**
 * Frees a string returned by this library. Null is a no-op.
 */
void nmr_string_free(char *text);

/**
 * Frees a set handle. Null is a no-op.
 */
void nmr_set_free(NmrSet *set);

/**
 * Frees a relation handle. Null is a no-op.
 */
void nmr_relation_free(NmrRelation *relation);

/**
 * Parses a canonical `nmset` JSON document into a new handle.
 */
NmrStatus nmr_set_parse(const char *json, NmrSet **out);

/**
 * Serializes a set back to its canonical JSON document.
 */
NmrStatus nmr_set_serialize(const NmrSet *set, char **out);

/**
 * Parses a canonical `nmrelation` JSON document into a new handle.
 */
NmrStatus nmr_relation_parse(const char *json, NmrRelation **out);

/**
 * Serializes a relation back to its canonical JSON document.
 */
NmrStatus nmr_relation_serialize(const NmrRelation *relation, char **out);

/**
 * Applies a binary set operation; operands must share a universe.
 */
NmrStatus nmr_set_apply(NmrSetOp op, const NmrSet *left, const NmrSet *right, NmrSet **out);

/**
 * Complement of a set.
 */
NmrStatus nmr_set_complement(const NmrSet *set, NmrSet **out);

/**
 * Writes whether `left` is contained in `right` under the neutrosophic order.
 */
NmrStatus nmr_set_is_subset(const NmrSet *left, const NmrSet *right, bool *out);

/**
 * Writes whether the two sets are equal.
 */
NmrStatus nmr_set_equals(const NmrSet *left, const NmrSet *right, bool *out);

/**
 * Cartesian product A×B as a relation from A's universe to B's.
 */
NmrStatus nmr_set_product(const NmrSet *left, const NmrSet *right, NmrRelation **out);

/**
 * Applies a binary relation operation; operands must share universes.
 */
NmrStatus nmr_relation_apply(NmrRelationOp op,
                             const NmrRelation *left,
                             const NmrRelation *right,
                             NmrRelation **out);

/**
 * Sup-min composition S∘R for R: A→B and S: B→C.
 */
NmrStatus nmr_relation_compose(const NmrRelation *s, const NmrRelation *r, NmrRelation **out);

/**
 * Inverse (transpose) of a relation.
 */
NmrStatus nmr_relation_inverse(const NmrRelation *relation, NmrRelation **out);

/**
 * k-th composition power of a square relation; `k` must be positive.
 */
NmrStatus nmr_relation_power(const NmrRelation *relation, uintptr_t k, NmrRelation **out);

/**
 * Transitive closure of a square relation.
 */
NmrStatus nmr_relation_closure(const NmrRelation *relation, NmrRelation **out);

/**
 * Writes whether the relation has the property; the relation must be square.
 */
NmrStatus nmr_relation_has_property(const NmrRelation *relation, NmrProperty property, bool *out);

/**
 * Writes whether `left` is contained in `right`.
 */
NmrStatus nmr_relation_is_subset(const NmrRelation *left, const NmrRelation *right, bool *out);

/**
 * Writes whether the two relations are equal.
 */
NmrStatus nmr_relation_equals(const NmrRelation *left, const NmrRelation *right, bool *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* NMREL_H */
