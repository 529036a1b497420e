#ifndef SUBDEG_H
#define SUBDEG_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result codes.
 */
typedef enum SdStatus {
  SD_OK = 0,
  SD_ERR_NULL = 1,
  SD_ERR_UTF8 = 2,
  SD_ERR_PARSE = 3,
  SD_ERR_INVALID_ARGUMENT = 4,
  SD_ERR_MISSING_DATA = 5,
  SD_ERR_CAP_EXCEEDED = 6,
  SD_ERR_INCONCLUSIVE = 7,
  SD_ERR_OVERFLOW = 8,
  SD_ERR_BUFFER_TOO_SMALL = 9,
  SD_ERR_PANIC = 10,
  SD_ERR_OTHER = 11,
} SdStatus;

/**
 * Opaque matrix group over a finite field.
 */
typedef struct SdMatGroup SdMatGroup;

/**
 * Opaque permutation group.
 */
typedef struct SdPermGroup SdPermGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the last error message of this thread into `buf` (nul-terminated,
 * truncated to `len`). Returns the full message length without the nul.
 *
 * # Safety
 * `buf` must be null or valid for `len` bytes.
 */
size_t sd_last_error_message(char *buf, size_t len);

/**
 * Parses a permutation group from the `degree`/`gen` text format.
 *
 * # Safety
 * `spec` must be a nul-terminated string; output pointers must be writable.
 */
enum SdStatus sd_perm_group_parse(const char *spec, struct SdPermGroup **out_group);

/**
 * Releases a handle from [`sd_perm_group_parse`]. Null is ignored.
 *
 * # Safety
 * `group` must come from [`sd_perm_group_parse`] and not be used again.
 */
void sd_perm_group_free(struct SdPermGroup *group);

/**
 * # Safety
 * `group` must be a live handle; output pointers must be writable.
 */
enum SdStatus sd_perm_group_degree(const struct SdPermGroup *group, size_t *out_degree);

/**
 * Group order; `SD_ERR_OVERFLOW` when it exceeds 64 bits.
 *
 * # Safety
 * `group` must be a live handle; output pointers must be writable.
 */
enum SdStatus sd_perm_group_order(const struct SdPermGroup *group, uint64_t *out_order);

/**
 * # Safety
 * `group` must be a live handle; output pointers must be writable.
 */
enum SdStatus sd_perm_group_orbit_length(const struct SdPermGroup *group,
                                         uint32_t pt,
                                         size_t *out_length);

/**
 * Membership of the permutation with 1-based `images` of length `len`.
 *
 * # Safety
 * `images` must be valid for `len` reads; output pointers must be writable.
 */
enum SdStatus sd_perm_group_contains(const struct SdPermGroup *group,
                                     const uint32_t *images,
                                     size_t len,
                                     bool *out_member);

/**
 * Sorted subdegrees at the 1-based `base`. Writes up to `cap` values to
 * `buf` and the full count to `out_len`; `SD_ERR_BUFFER_TOO_SMALL` when
 * `cap` is short.
 *
 * # Safety
 * `buf` must be valid for `cap` writes (or null with `cap == 0`).
 */
enum SdStatus sd_perm_group_subdegrees(const struct SdPermGroup *group,
                                       uint32_t base,
                                       uint64_t *buf,
                                       size_t cap,
                                       size_t *out_len);

/**
 * Parses a matrix group from the `field`/`dim`/`gen` text format.
 *
 * # Safety
 * `spec` must be a nul-terminated string; output pointers must be writable.
 */
enum SdStatus sd_mat_group_parse(const char *spec, struct SdMatGroup **out_group);

/**
 * Releases a handle from [`sd_mat_group_parse`]. Null is ignored.
 *
 * # Safety
 * `group` must come from [`sd_mat_group_parse`] and not be used again.
 */
void sd_mat_group_free(struct SdMatGroup *group);

/**
 * # Safety
 * `group` must be a live handle; output pointers must be writable.
 */
enum SdStatus sd_mat_group_order(const struct SdMatGroup *group, uint64_t *out_order);

/**
 * Orbit length of a row vector given as `len` field-element codes.
 *
 * # Safety
 * `vector` must be valid for `len` reads; output pointers must be writable.
 */
enum SdStatus sd_mat_group_vec_orbit_length(const struct SdMatGroup *group,
                                            const uint32_t *vector,
                                            size_t len,
                                            size_t *out_length);

/**
 * Runs a registered verification case. On success `out_report` receives
 * the JSON-lines report (free it with [`sd_string_free`]) and
 * `out_exit` the exit code (0 pass, 1 fail, 3 skipped).
 *
 * # Safety
 * `case_id` must be a nul-terminated string; `data_dir` may be null.
 */
enum SdStatus sd_verify_case(const char *case_id,
                             uint64_t seed,
                             const char *data_dir,
                             char **out_report,
                             int32_t *out_exit);

/**
 * Frees a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used again.
 */
void sd_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SUBDEG_H */
