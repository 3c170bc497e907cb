#ifndef PADIC_GIBBS_H
#define PADIC_GIBBS_H

/* Generated by cbindgen from crates/ffi. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PgStatus {
  PG_STATUS_OK = 0,
  PG_STATUS_NULL_POINTER = 1,
  PG_STATUS_INVALID_ARGUMENT = 2,
  PG_STATUS_INVALID_PRIME = 3,
  PG_STATUS_ZERO_DENOMINATOR = 4,
  PG_STATUS_PRIME_MISMATCH = 5,
  PG_STATUS_DIVISION_BY_ZERO = 6,
  PG_STATUS_INSUFFICIENT_PRECISION = 7,
  PG_STATUS_NOT_A_SQUARE = 8,
  PG_STATUS_DOMAIN_ERROR = 9,
  PG_STATUS_ZERO_TO_PRECISION = 10,
  /**
   * Any other named error from the model or solvers.
   */
  PG_STATUS_COMPUTATION_ERROR = 11,
  PG_STATUS_INTERNAL_INCONSISTENCY = 12,
  PG_STATUS_PANIC = 13,
} PgStatus;

/**
 * Opaque p-adic value.
 */
typedef struct PgPadic PgPadic;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * `num / den` in `Q_prime` to absolute precision `precision`.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum PgStatus pg_padic_from_rational(int64_t num,
                                     int64_t den,
                                     uint64_t prime,
                                     int64_t precision,
                                     struct PgPadic **out);

/**
 * Like [`pg_padic_from_rational`] with decimal integer strings, for
 * numerators and denominators beyond 64 bits.
 *
 * # Safety
 * `num` and `den` must be NUL-terminated strings; `out` must be valid for a pointer write.
 */
enum PgStatus pg_padic_from_decimal(const char *num,
                                    const char *den,
                                    uint64_t prime,
                                    int64_t precision,
                                    struct PgPadic **out);

/**
 * # Safety
 * `a` and `b` must be live handles; `out` must be valid for a pointer write.
 */
enum PgStatus pg_padic_add(const struct PgPadic *a, const struct PgPadic *b, struct PgPadic **out);

/**
 * # Safety
 * `a` and `b` must be live handles; `out` must be valid for a pointer write.
 */
enum PgStatus pg_padic_sub(const struct PgPadic *a, const struct PgPadic *b, struct PgPadic **out);

/**
 * # Safety
 * `a` and `b` must be live handles; `out` must be valid for a pointer write.
 */
enum PgStatus pg_padic_mul(const struct PgPadic *a, const struct PgPadic *b, struct PgPadic **out);

/**
 * Fails with `DIVISION_BY_ZERO` when `b` is zero to precision.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be valid for a pointer write.
 */
enum PgStatus pg_padic_div(const struct PgPadic *a, const struct PgPadic *b, struct PgPadic **out);

/**
 * # Safety
 * `a` must be a live handle; `out` must be valid for a pointer write.
 */
enum PgStatus pg_padic_inv(const struct PgPadic *a, struct PgPadic **out);

/**
 * Square root on the canonical branch, or `NOT_A_SQUARE`.
 *
 * # Safety
 * `a` must be a live handle; `out` must be valid for a pointer write.
 */
enum PgStatus pg_padic_sqrt(const struct PgPadic *a, struct PgPadic **out);

/**
 * Valuation of `a`; `ZERO_TO_PRECISION` when every known digit vanishes.
 *
 * # Safety
 * `a` must be a live handle; `out` must be valid for a write.
 */
enum PgStatus pg_padic_valuation(const struct PgPadic *a, int64_t *out);

/**
 * Absolute precision, or -1 for a null handle.
 *
 * # Safety
 * `a` must be null or a live handle.
 */
int64_t pg_padic_precision(const struct PgPadic *a);

/**
 * # Safety
 * `a` must be null or a live handle.
 */
bool pg_padic_is_zero(const struct PgPadic *a);

/**
 * Copies up to `cap` little-endian unit digits into `buf` and stores the
 * full digit count in `len`. Pass `buf = NULL, cap = 0` to query the length.
 *
 * # Safety
 * `a` must be a live handle; `buf` must be valid for `cap` writes; `len` for one.
 */
enum PgStatus pg_padic_digits(const struct PgPadic *a, uint64_t *buf, size_t cap, size_t *len);

/**
 * JSON record `{prime, valuation, digits, abs_precision, zero_flag}` for `a`.
 *
 * # Safety
 * `a` must be a live handle; `out` must be valid for a pointer write.
 */
enum PgStatus pg_padic_to_json(const struct PgPadic *a, char **out);

/**
 * # Safety
 * `a` must be null or a handle not yet freed.
 */
void pg_padic_free(struct PgPadic *a);

/**
 * Classification report for `(p, J)` as JSON.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum PgStatus pg_classify_json(uint64_t p, int64_t j, int64_t precision, char **out);

/**
 * Existence of `√D(θ)` at coupling `j < 0` for `len` primes, as a JSON array.
 *
 * # Safety
 * `primes` must be valid for `len` reads; `out` must be valid for a pointer write.
 */
enum PgStatus pg_table1_json(const uint64_t *primes, size_t len, int64_t j, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void pg_string_free(char *s);

/**
 * Message of the last failure on this thread, or null. Valid until the
 * next failing call on the same thread; do not free.
 */
const char *pg_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PADIC_GIBBS_H */
