#ifndef ZIGZAG_H
#define ZIGZAG_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ZzStatus {
  ZZ_STATUS_OK = 0,
  ZZ_STATUS_NULL_POINTER = 1,
  ZZ_STATUS_INVALID_ARGUMENT = 2,
  ZZ_STATUS_PARSE_ERROR = 3,
  ZZ_STATUS_UTF8 = 4,
  ZZ_STATUS_PANIC = 5,
} ZzStatus;

// Opaque oriented paintbox.
typedef struct ZzPaintbox ZzPaintbox;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread; empty after a success.
// The pointer stays valid until the next call into this library on the same thread.
const char *zz_last_error(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void zz_string_free(char *s);

// Parses the paintbox text format (`left right up|down` per line).
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer.
enum ZzStatus zz_paintbox_parse(const char *text, struct ZzPaintbox **out);

// The empty paintbox, whose arrangements are uniform random permutations.
//
// # Safety
// `out` must be a valid pointer.
enum ZzStatus zz_paintbox_uniform(struct ZzPaintbox **out);

// # Safety
// `pb` must come from this library and not have been freed. Null is ignored.
void zz_paintbox_free(struct ZzPaintbox *pb);

// Number of intervals in the paintbox.
//
// # Safety
// `pb` must be a live handle and `out` a valid pointer.
enum ZzStatus zz_paintbox_interval_count(const struct ZzPaintbox *pb, size_t *out);

// `p(λ)` for the paintbox: exact value as a string and its nearest double.
// Either output may be null if not wanted.
//
// # Safety
// `pb` must be a live handle, `parts` must hold `len` values.
enum ZzStatus zz_evaluate(const struct ZzPaintbox *pb,
                          const uint32_t *parts,
                          size_t len,
                          char **out_exact,
                          double *out_value);

// Number of permutations with zigzag shape `λ`, as a decimal string.
//
// # Safety
// `parts` must hold `len` values and `out` be a valid pointer.
enum ZzStatus zz_dimension(const uint32_t *parts, size_t len, char **out);

// Zigzag shape of a permutation of `[n]`. `out_parts` needs room for `n`
// values; the number written goes to `out_len`.
//
// # Safety
// `values` must hold `n` values, `out_parts` room for `n`.
enum ZzStatus zz_zigzag_shape(const uint32_t *values,
                              size_t n,
                              uint32_t *out_parts,
                              size_t *out_len);

// Initial ranks `r_1..r_n` of one sampled arrangement, written to `out_ranks`.
//
// # Safety
// `pb` must be a live handle and `out_ranks` have room for `n` values.
enum ZzStatus zz_sample_ranks(const struct ZzPaintbox *pb,
                              size_t n,
                              uint64_t seed,
                              size_t *out_ranks);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ZIGZAG_H */
