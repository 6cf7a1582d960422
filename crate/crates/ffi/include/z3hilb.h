/*
 * Conventions
 *   Fallible calls return Z3Status; on failure out pointers are untouched and
 *   z3_last_error_message() describes the error (per thread).
 *   Handles are released with z3_partition_free / z3_series_free, returned
 *   strings with z3_string_free.
 *   Slice outputs take (buf, cap, len_out): *len_out always gets the required
 *   length and Z3_BUFFER_TOO_SMALL is returned when cap is short.
 */

#ifndef Z3HILB_H
#define Z3HILB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum Z3Status {
  Z3_OK = 0,
  Z3_NULL_POINTER = 1,
  Z3_INVALID_ARGUMENT = 2,
  Z3_PARSE_ERROR = 3,
  Z3_UNDEFINED_MAP = 4,
  Z3_INADMISSIBLE = 5,
  Z3_CELL_OUT_OF_DIAGRAM = 6,
  Z3_DOMAIN_VIOLATION = 7,
  Z3_BUFFER_TOO_SMALL = 8,
  Z3_PANIC = 9,
} Z3Status;

typedef enum Z3WeightKind {
  /**
   * Cells with `(arm + 1) ≡ leg (mod 3)` and positive leg.
   */
  Z3_WT = 0,
  /**
   * Cells with `(arm + 1) ≡ leg (mod 3)`.
   */
  Z3_WT_TILDE = 1,
} Z3WeightKind;

typedef enum Z3Map {
  Z3_RHO1 = 0,
  Z3_PSI2 = 1,
  Z3_RHO1_INV = 2,
  Z3_PSI2_INV = 3,
} Z3Map;

typedef enum Z3Product {
  Z3_CONJ2_RHS = 0,
  Z3_CONJ3_RHS = 1,
  Z3_CORRECTION = 2,
  Z3_DBL_PRIME_WT_TILDE = 3,
  Z3_DBL_PRIME_WT = 4,
} Z3Product;

/**
 * Opaque partition handle.
 */
typedef struct Z3Partition Z3Partition;

/**
 * Opaque truncated `q,t`-series handle.
 */
typedef struct Z3Series Z3Series;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failing call on this thread; empty after a
 * successful call. Valid until the next call on the same thread.
 */
const char *z3_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void z3_string_free(char *s);

/**
 * Parses `"6,4"` style text; `"-"` is the empty partition.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum Z3Status z3_partition_parse(const char *text, struct Z3Partition **out);

/**
 * Builds a partition from weakly decreasing positive row lengths, bottom row first.
 *
 * # Safety
 * `rows` must point to `len` readable values (or be null when `len == 0`).
 */
enum Z3Status z3_partition_from_rows(const uint32_t *rows, size_t len, struct Z3Partition **out);

/**
 * # Safety
 * `p` must be null or a handle from this library that has not been freed.
 */
void z3_partition_free(struct Z3Partition *p);

/**
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum Z3Status z3_partition_size(const struct Z3Partition *p, uint32_t *out);

/**
 * # Safety
 * `p` must be a live handle; `*len_out` receives the required length.
 */
enum Z3Status z3_partition_rows(const struct Z3Partition *p,
                                uint32_t *buf,
                                size_t cap,
                                size_t *len_out);

/**
 * # Safety
 * `p` must be a live handle; `out` receives a string for [`z3_string_free`].
 */
enum Z3Status z3_partition_to_string(const struct Z3Partition *p, char **out);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum Z3Status z3_partition_equal(const struct Z3Partition *a,
                                 const struct Z3Partition *b,
                                 bool *out);

/**
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum Z3Status z3_partition_weight(const struct Z3Partition *p,
                                  enum Z3WeightKind kind,
                                  uint32_t *out);

/**
 * Arm and leg of the cell in column `col`, row `row` (both 1-based, row 1 at the bottom).
 *
 * # Safety
 * `p` must be a live handle; `arm` and `leg` must be writable.
 */
enum Z3Status z3_partition_arm_leg(const struct Z3Partition *p,
                                   uint32_t col,
                                   uint32_t row,
                                   uint32_t *arm,
                                   uint32_t *leg);

/**
 * Boundary labels walking from the top-left corner to the bottom-right corner.
 *
 * # Safety
 * `p` must be a live handle; `*len_out` receives the required length.
 */
enum Z3Status z3_partition_boundary(const struct Z3Partition *p,
                                    uint32_t *buf,
                                    size_t cap,
                                    size_t *len_out);

/**
 * Applies one Dyson map. Fails with `Z3_UNDEFINED_MAP` outside its domain.
 *
 * # Safety
 * `p` must be a live handle; `out` receives a new handle.
 */
enum Z3Status z3_partition_apply(const struct Z3Partition *p,
                                 enum Z3Map map,
                                 struct Z3Partition **out);

/**
 * The `{1,2}`-composition of `p`, outermost map first, as bytes 1 and 2.
 *
 * # Safety
 * `p` must be a live handle; `*len_out` receives the required length.
 */
enum Z3Status z3_partition_decompose(const struct Z3Partition *p,
                                     uint8_t *buf,
                                     size_t cap,
                                     size_t *len_out);

/**
 * Builds the partition of a `{1,2}`-composition. On `Z3_INADMISSIBLE`,
 * `*failed_step` (if non-null) receives the 1-based index of the failing entry.
 *
 * # Safety
 * `parts` must point to `len` readable bytes (or be null when `len == 0`);
 * `out` must be writable; `failed_step` may be null.
 */
enum Z3Status z3_build(const uint8_t *parts,
                       size_t len,
                       struct Z3Partition **out,
                       size_t *failed_step);

/**
 * # Safety
 * `p` must be a live handle; `is_stair` and `landing` must be writable.
 */
enum Z3Status z3_partition_stair(const struct Z3Partition *p, bool *is_stair, uint32_t *landing);

/**
 * Splits `p` into a factor with row multiplicities at most 2 and a factor
 * whose column heights are multiples of 3.
 *
 * # Safety
 * `p` must be a live handle; `lp` and `ldp` each receive a new handle.
 */
enum Z3Status z3_partition_split(const struct Z3Partition *p,
                                 struct Z3Partition **lp,
                                 struct Z3Partition **ldp);

/**
 * Inverse of [`z3_partition_split`]. Fails with `Z3_DOMAIN_VIOLATION` when
 * the factors are outside their classes.
 *
 * # Safety
 * `lp`, `ldp` must be live handles; `out` receives a new handle.
 */
enum Z3Status z3_partition_merge(const struct Z3Partition *lp,
                                 const struct Z3Partition *ldp,
                                 struct Z3Partition **out);

/**
 * `Σ_λ t^{weight(λ)} q^{|λ|}` over partitions of size at most `max_n`.
 * `jobs` is the worker count (0 is treated as 1); it never changes the result.
 *
 * # Safety
 * `out` receives a new handle.
 */
enum Z3Status z3_series_weight_sum(enum Z3WeightKind kind,
                                   uint32_t max_n,
                                   uint32_t jobs,
                                   struct Z3Series **out);

/**
 * Truncated expansion of one of the product formulas through `q^max_n`.
 *
 * # Safety
 * `out` receives a new handle.
 */
enum Z3Status z3_series_product(enum Z3Product which, uint32_t max_n, struct Z3Series **out);

/**
 * # Safety
 * `s` must be null or a handle from this library that has not been freed.
 */
void z3_series_free(struct Z3Series *s);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum Z3Status z3_series_equal(const struct Z3Series *a, const struct Z3Series *b, bool *out);

/**
 * Coefficient of `t^k q^n` as a decimal string.
 *
 * # Safety
 * `s` must be a live handle; `out` receives a string for [`z3_string_free`].
 */
enum Z3Status z3_series_coefficient(const struct Z3Series *s, uint32_t k, uint32_t n, char **out);

/**
 * CSV export with header `n,k,coefficient`.
 *
 * # Safety
 * `s` must be a live handle; `out` receives a string for [`z3_string_free`].
 */
enum Z3Status z3_series_to_csv(const struct Z3Series *s, char **out);

/**
 * JSON export: an object keyed by `n` holding `[k, "coefficient"]` pairs.
 *
 * # Safety
 * `s` must be a live handle; `out` receives a string for [`z3_string_free`].
 */
enum Z3Status z3_series_to_json(const struct Z3Series *s, char **out);

/**
 * Runs a named check (`conj2`, `conj3`, `prop-leg`, `transport`,
 * `top-coefficients`, `structure`) up to `max_n`; a negative `max_n` selects
 * the check's default. `*passed` receives the verdict and `*report_json` the
 * full report. A failed check is still `Z3_OK`.
 *
 * # Safety
 * `check` must be a NUL-terminated string; `passed` must be writable;
 * `report_json` may be null, otherwise it receives a string for [`z3_string_free`].
 */
enum Z3Status z3_verify(const char *check,
                        int64_t max_n,
                        uint32_t jobs,
                        bool *passed,
                        char **report_json);

/**
 * Library version string; static, do not free.
 */
const char *z3_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* Z3HILB_H */
