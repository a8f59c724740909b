#ifndef HOMALG_H
#define HOMALG_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HomalgStatus {
  HOMALG_STATUS_OK = 0,
  /**
   * The call succeeded and at least one checked law fails.
   */
  HOMALG_STATUS_LAW_FAILED = 1,
  HOMALG_STATUS_INVALID_INPUT = 2,
  HOMALG_STATUS_NULL_POINTER = 3,
  HOMALG_STATUS_INTERNAL = 4,
} HomalgStatus;

/**
 * A parsed algebra, coalgebra, bialgebra or map.
 */
typedef struct HomalgStructure HomalgStructure;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses definition text into a new handle.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum HomalgStatus homalg_parse(const char *text, struct HomalgStructure **out);

/**
 * Loads a shipped catalog entry by name.
 *
 * # Safety
 * `name` must be a nul-terminated string; `out` must be writable.
 */
enum HomalgStatus homalg_catalog(const char *name, struct HomalgStructure **out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `h` must come from this library and not be used afterwards.
 */
void homalg_free(struct HomalgStructure *h);

/**
 * Checks a comma-separated list of law ids and writes the JSON report.
 * Returns `LawFailed` when the report's verdict is negative.
 *
 * # Safety
 * `h` must be a live handle, `laws` a nul-terminated string, `out_json` writable.
 */
enum HomalgStatus homalg_check(const struct HomalgStructure *h,
                               const char *laws,
                               bool exact,
                               char **out_json);

/**
 * Dual structure: algebras and coalgebras swap, bialgebras stay bialgebras.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum HomalgStatus homalg_dual(const struct HomalgStructure *h, struct HomalgStructure **out);

/**
 * Canonical definition text of a handle.
 *
 * # Safety
 * `h` must be a live handle; `out_text` must be writable.
 */
enum HomalgStatus homalg_print(const struct HomalgStructure *h, char **out_text);

/**
 * Dimension of the underlying space.
 *
 * # Safety
 * `h` must be a live handle; `out_dim` must be writable.
 */
enum HomalgStatus homalg_dim(const struct HomalgStructure *h, size_t *out_dim);

/**
 * Laurent σ-derivation checks; `check` is `jacobi`, `witt` or `delta`, `eta` may be null for 1.
 *
 * # Safety
 * String arguments must be nul-terminated; `out_json` must be writable.
 */
enum HomalgStatus homalg_sigma_laurent(const char *q,
                                       int64_t s,
                                       int64_t k,
                                       const char *eta,
                                       int64_t window,
                                       const char *check,
                                       char **out_json);

/**
 * q-Virasoro window check.
 *
 * # Safety
 * `out_json` must be writable.
 */
enum HomalgStatus homalg_virasoro(int64_t window, char **out_json);

/**
 * Message for the last failing call on this thread; empty after success.
 * Valid until the next call into this library on the same thread.
 */
const char *homalg_last_error_message(void);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void homalg_string_free(char *s);

/**
 * Library version, statically allocated.
 */
const char *homalg_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOMALG_H */
