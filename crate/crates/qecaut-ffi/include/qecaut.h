/* C interface to the qecaut stabilizer code toolkit. */

#ifndef QECAUT_H
#define QECAUT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Call outcome.
 */
typedef enum QecStatus {
  QecStatus_Ok = 0,
  /**
   * A required pointer argument was null.
   */
  QecStatus_NullArgument = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  QecStatus_InvalidUtf8 = 2,
  /**
   * Parsing or validation failed; see `qec_last_error`.
   */
  QecStatus_InvalidInput = 3,
  /**
   * A documented size guard was exceeded.
   */
  QecStatus_GuardExceeded = 4,
  /**
   * The library reported an internal inconsistency or panicked.
   */
  QecStatus_InternalError = 5,
} QecStatus;

/**
 * Membership of an operator in a group.
 */
typedef enum QecMembership {
  QecMembership_Absent = 0,
  /**
   * Present with the queried phase.
   */
  QecMembership_Exact = 1,
  /**
   * Present with the opposite sign.
   */
  QecMembership_UpToSign = 2,
} QecMembership;

/**
 * Which automorphism group to use.
 */
typedef enum QecAutKind {
  QecAutKind_Strong = 0,
  QecAutKind_Weak = 1,
  QecAutKind_Clifford = 2,
} QecAutKind;

/**
 * Opaque stabilizer group handle.
 */
typedef struct QecGroup QecGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copy the most recent error message for this thread into `buffer`
 * (NUL-terminated, truncated to `length` bytes). Returns the full message
 * length in bytes, excluding the terminator.
 *
 * # Safety
 * `buffer` must point to `length` writable bytes, or be null (query mode).
 */
uintptr_t qec_last_error(char *buffer, uintptr_t length);

/**
 * Build a stabilizer group from `count` signed Pauli strings.
 *
 * # Safety
 * `generators` must point to `count` valid NUL-terminated strings and `out`
 * must be a valid pointer.
 */
enum QecStatus qec_group_build(const char *const *generators,
                               uintptr_t count,
                               struct QecGroup **out);

/**
 * Build a stabilizer group from newline-separated text in the code file
 * format (`#` comments, blank lines ignored).
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum QecStatus qec_group_parse(const char *text, struct QecGroup **out);

/**
 * Build one of the built-in example codes by name (e.g. "513").
 *
 * # Safety
 * `name` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum QecStatus qec_group_from_catalog(const char *name, struct QecGroup **out);

/**
 * Release a group handle. Null is a no-op.
 *
 * # Safety
 * `group` must be a pointer returned by a `qec_group_*` constructor, not yet
 * freed.
 */
void qec_group_free(struct QecGroup *group);

/**
 * Physical qubit count, or 0 for a null handle.
 *
 * # Safety
 * `group` must be a live handle or null.
 */
uint32_t qec_group_qubits(const struct QecGroup *group);

/**
 * Independent generator count, or 0 for a null handle.
 *
 * # Safety
 * `group` must be a live handle or null.
 */
uint32_t qec_group_generator_count(const struct QecGroup *group);

/**
 * Logical qubit count `n - m`, or 0 for a null handle.
 *
 * # Safety
 * `group` must be a live handle or null.
 */
uint32_t qec_group_logical_qubits(const struct QecGroup *group);

/**
 * Code distance; `degenerate` (optional) reports whether the k = 0
 * convention applied.
 *
 * # Safety
 * `group` must be a live handle; `distance` must be valid; `degenerate` may
 * be null.
 */
enum QecStatus qec_group_distance(const struct QecGroup *group,
                                  uint32_t *distance,
                                  bool *degenerate);

/**
 * Membership of a signed Pauli string, with the group element's sign
 * (+1/-1) written to `sign` when present.
 *
 * # Safety
 * `group` must be a live handle; `pauli` a valid string; `membership` valid;
 * `sign` may be null.
 */
enum QecStatus qec_group_contains(const struct QecGroup *group,
                                  const char *pauli,
                                  enum QecMembership *membership,
                                  int8_t *sign);

/**
 * Order of the chosen automorphism group (full pruned search, n <= 12).
 *
 * # Safety
 * `group` must be a live handle and `order` a valid pointer.
 */
enum QecStatus qec_aut_order(const struct QecGroup *group, enum QecAutKind kind, uint64_t *order);

/**
 * Test one permutation, given in cycle notation such as "(1 3)(2 5)", for
 * membership in the chosen automorphism group.
 *
 * # Safety
 * `group` must be a live handle, `cycles` a valid string, `member` a valid
 * pointer.
 */
enum QecStatus qec_check_perm(const struct QecGroup *group,
                              enum QecAutKind kind,
                              const char *cycles,
                              bool *member);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QECAUT_H */
