#ifndef SIMPERM_H
#define SIMPERM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>

typedef enum SpStatus {
  SP_STATUS_OK = 0,
  SP_STATUS_NULL_POINTER = 1,
  SP_STATUS_INVALID_UTF8 = 2,
  SP_STATUS_PARSE = 3,
  SP_STATUS_NOT_A_PERMUTATION = 4,
  SP_STATUS_OUT_OF_RANGE = 5,
  SP_STATUS_NOT_SIMPLE = 6,
  SP_STATUS_NOT_A_PARALLEL_ALTERNATION = 7,
  SP_STATUS_TOO_SMALL = 8,
  SP_STATUS_TOO_LARGE = 9,
  SP_STATUS_BAD_ARGUMENTS = 10,
  SP_STATUS_BUFFER_TOO_SMALL = 11,
  SP_STATUS_PANIC = 12,
  SP_STATUS_INTERNAL = 13,
} SpStatus;

// The eight symmetries of the square.
typedef enum SpSymmetry {
  SP_SYMMETRY_IDENTITY = 0,
  SP_SYMMETRY_REVERSE = 1,
  SP_SYMMETRY_COMPLEMENT = 2,
  SP_SYMMETRY_REVERSE_COMPLEMENT = 3,
  SP_SYMMETRY_INVERSE = 4,
  SP_SYMMETRY_INVERSE_REVERSE = 5,
  SP_SYMMETRY_INVERSE_COMPLEMENT = 6,
  SP_SYMMETRY_INVERSE_REVERSE_COMPLEMENT = 7,
} SpSymmetry;

// Opaque permutation handle.
typedef struct SpPermutation SpPermutation;

// Message for the last failed call on this thread; empty after a success.
// The pointer stays valid until the next call on the same thread.
const char *sp_last_error(void);

// Library version as a static NUL-terminated string.
const char *sp_version(void);

// Builds a permutation from `len` values, each in `1..=len`.
//
// # Safety
// `values` must point to `len` readable elements (or be null when `len`
// is 0); `out` must be writable.
enum SpStatus sp_permutation_new(const size_t *values, size_t len, struct SpPermutation **out);

// Parses whitespace-separated, comma-separated or compact-digit text.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum SpStatus sp_permutation_parse(const char *text, struct SpPermutation **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `p` must be null or a handle from this library not yet freed.
void sp_permutation_free(struct SpPermutation *p);

// Length of the permutation, or 0 for a null handle.
//
// # Safety
// `p` must be null or a live handle.
size_t sp_permutation_len(const struct SpPermutation *p);

// Copies the values into `buf`, which must hold at least `len` elements.
//
// # Safety
// `p` must be a live handle and `buf` must point to `cap` writable elements.
enum SpStatus sp_permutation_values(const struct SpPermutation *p, size_t *buf, size_t cap);

// Space-separated one-line notation; free with `sp_string_free`.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum SpStatus sp_permutation_to_string(const struct SpPermutation *p, char **out);

// # Safety
// `s` must be null or a string returned by this library not yet freed.
void sp_string_free(char *s);

// # Safety
// `p` must be a live handle; `out` must be writable.
enum SpStatus sp_is_simple(const struct SpPermutation *p, bool *out);

// Number of nontrivial intervals (windows of size 2..n-1).
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum SpStatus sp_interval_count(const struct SpPermutation *p, size_t *out);

// Deletes the entry at `position` into a new handle.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum SpStatus sp_permutation_delete(const struct SpPermutation *p,
                                    size_t position,
                                    struct SpPermutation **out);

// Inserts a new entry at (`position`, `value`), both in `1..=len+1`.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum SpStatus sp_permutation_insert(const struct SpPermutation *p,
                                    size_t position,
                                    size_t value,
                                    struct SpPermutation **out);

// # Safety
// `p` must be a live handle; `out` must be writable.
enum SpStatus sp_permutation_apply_symmetry(const struct SpPermutation *p,
                                            enum SpSymmetry symmetry,
                                            struct SpPermutation **out);

// # Safety
// `p` must be a live handle; `out` must be writable.
enum SpStatus sp_is_parallel_alternation(const struct SpPermutation *p, bool *out);

// Number of entries whose removal leaves a simple permutation. The input
// must be simple and of length at least 2.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum SpStatus sp_inessential_count(const struct SpPermutation *p, size_t *out);

// Number of simple permutations of length `n`.
//
// # Safety
// `out` must be writable.
enum SpStatus sp_simple_count(size_t n, size_t *out);

// Checks exhaustively that every simple permutation of length `n` is a
// parallel alternation or has an inessential entry.
//
// # Safety
// `holds` must be writable.
enum SpStatus sp_verify_theorem(size_t n, bool *holds);

// One-point extension census of a simple permutation as JSON; free with
// `sp_string_free`.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum SpStatus sp_extension_report_json(const struct SpPermutation *p, char **out);

#endif  /* SIMPERM_H */
