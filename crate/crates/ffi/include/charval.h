#ifndef CHARVAL_H
#define CHARVAL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. Zero is success.
 */
typedef enum CharvalStatus {
  CHARVAL_STATUS_OK = 0,
  CHARVAL_STATUS_NULL_POINTER = 1,
  CHARVAL_STATUS_INVALID_UTF8 = 2,
  CHARVAL_STATUS_UNKNOWN_NAME = 3,
  CHARVAL_STATUS_PARSE = 4,
  CHARVAL_STATUS_ORDER_BOUND = 5,
  CHARVAL_STATUS_INVALID_ARGUMENT = 6,
  CHARVAL_STATUS_OUT_OF_RANGE = 7,
  CHARVAL_STATUS_COMPUTATION = 8,
  CHARVAL_STATUS_PANIC = 9,
} CharvalStatus;

/**
 * A finite permutation group.
 */
typedef struct CharvalGroup CharvalGroup;

/**
 * A character table together with its invariants.
 */
typedef struct CharvalTable CharvalTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next call into this library from the same thread.
 */
const char *charval_last_error(void);

/**
 * Static description of a status code.
 */
const char *charval_status_message(enum CharvalStatus status);

const char *charval_version(void);

/**
 * Builds a catalog group by name, e.g. `"S4"` or `"dihedral(10)"`.
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum CharvalStatus charval_group_from_catalog(const char *name, struct CharvalGroup **out);

/**
 * Parses a group file: a `degree N` line, then one generator per line in
 * cycle notation on points `1..=N`.
 *
 * # Safety
 * `source` must be a NUL-terminated string; `out` must be writable.
 */
enum CharvalStatus charval_group_from_text(const char *source,
                                           size_t max_order,
                                           struct CharvalGroup **out);

/**
 * # Safety
 * `group` must come from this library; `out` must be writable.
 */
enum CharvalStatus charval_group_order(const struct CharvalGroup *group, size_t *out);

/**
 * # Safety
 * `group` must come from this library and not be used afterwards. Null is
 * ignored.
 */
void charval_group_free(struct CharvalGroup *group);

/**
 * Computes the character table and invariants of `group`.
 *
 * # Safety
 * `group` must come from this library; `out` must be writable.
 */
enum CharvalStatus charval_table_compute(const struct CharvalGroup *group,
                                         uint64_t seed,
                                         struct CharvalTable **out);

/**
 * # Safety
 * `table` must come from this library and not be used afterwards. Null is
 * ignored.
 */
void charval_table_free(struct CharvalTable *table);

/**
 * # Safety
 * `table` must come from this library; `out` must be writable.
 */
enum CharvalStatus charval_table_class_count(const struct CharvalTable *table, size_t *out);

/**
 * # Safety
 * `table` must come from this library; `out` must be writable.
 */
enum CharvalStatus charval_table_degree(const struct CharvalTable *table,
                                        size_t row,
                                        uint64_t *out);

/**
 * Writes `χ_row(class)` as an owned string such as `-1` or `z(5)^2 + z(5)^3`.
 *
 * # Safety
 * `table` must come from this library; `out` must be writable.
 */
enum CharvalStatus charval_table_value(const struct CharvalTable *table,
                                       size_t row,
                                       size_t class_,
                                       char **out);

/**
 * The whole table as JSON.
 *
 * # Safety
 * `table` must come from this library; `out` must be writable.
 */
enum CharvalStatus charval_table_json(const struct CharvalTable *table, char **out);

/**
 * The invariant report as JSON.
 *
 * # Safety
 * `table` must come from this library; `out` must be writable.
 */
enum CharvalStatus charval_invariants_json(const struct CharvalTable *table, char **out);

/**
 * Runs a checker (`"a"` .. `"e"`, `"cd2"`, `"lemmas"` or `"all"`) and writes
 * the verdicts as a JSON array. `failures` receives the number of FAIL
 * verdicts and may be null.
 *
 * # Safety
 * `table` must come from this library; `theorem` must be a NUL-terminated
 * string; `out` must be writable.
 */
enum CharvalStatus charval_verify_json(const struct CharvalTable *table,
                                       const char *theorem,
                                       char **out,
                                       size_t *failures);

/**
 * `χ_λ(ρ)` for the symmetric group, both given as comma-separated parts.
 * The cycle type may be in any order.
 *
 * # Safety
 * Both strings must be NUL-terminated; `out` must be writable.
 */
enum CharvalStatus charval_mn_value(const char *partition, const char *cycle_type, int64_t *out);

/**
 * # Safety
 * `s` must come from this library and not be used afterwards. Null is
 * ignored.
 */
void charval_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHARVAL_H */
