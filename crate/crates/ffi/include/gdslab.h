#ifndef GDSLAB_H
#define GDSLAB_H

#include <stddef.h>

// Result codes. Values are stable.
typedef enum GdsStatus {
  GDS_STATUS_OK = 0,
  GDS_STATUS_NULL_ARGUMENT = 1,
  GDS_STATUS_INVALID_UTF8 = 2,
  GDS_STATUS_PARSE = 3,
  GDS_STATUS_DIVISOR_CHAIN = 4,
  GDS_STATUS_UNKNOWN = 5,
  GDS_STATUS_UNSUPPORTED_LEVEL = 6,
  GDS_STATUS_RANK_OUT_OF_RANGE = 7,
  GDS_STATUS_INVALID_GENERATOR = 8,
  GDS_STATUS_DIMENSION_MISMATCH = 9,
  GDS_STATUS_NOT_IN_GAMMA2 = 10,
  GDS_STATUS_DENOMINATOR_NOT_CONTAINED = 11,
  GDS_STATUS_INTERNAL = 12,
  GDS_STATUS_PANIC = 13,
  GDS_STATUS_INDEX_OUT_OF_RANGE = 14,
} GdsStatus;

// Outcome of a theorem check.
typedef enum GdsVerdict {
  GDS_VERDICT_PASS = 0,
  GDS_VERDICT_FAIL = 1,
  GDS_VERDICT_SKIPPED = 2,
} GdsVerdict;

// A validated divisor chain `e1, ..., em`.
typedef struct GdsDivisors GdsDivisors;

// A finitely generated abelian group stored by invariant factors.
typedef struct GdsGroup GdsGroup;

// Theorem checker for one rank; reusable across divisor chains of that rank.
typedef struct GdsVerifier GdsVerifier;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread. Owned by the library and
// valid until the next failing call on the same thread.
const char *gds_last_error(void);

// Library version as a static NUL-terminated string.
const char *gds_version(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed already.
void gds_string_free(char *s);

// Parses `"e1,e2,..."`. With `canonicalize` nonzero the entries are sorted
// into chain order first.
//
// # Safety
// `text_in` must be a NUL-terminated string and `out` writable.
enum GdsStatus gds_divisors_parse(const char *text_in, int canonicalize, struct GdsDivisors **out);

// # Safety
// `d` must be null or a handle from [`gds_divisors_parse`].
void gds_divisors_free(struct GdsDivisors *d);

// Number of entries, or 0 for a null handle.
//
// # Safety
// `d` must be null or a live handle.
size_t gds_divisors_rank(const struct GdsDivisors *d);

// # Safety
// `g` must be null or a handle returned by this library.
void gds_group_free(struct GdsGroup *g);

// Number of invariant factors (0 for the trivial group).
//
// # Safety
// `g` must be null or a live handle.
size_t gds_group_len(const struct GdsGroup *g);

// The `index`-th invariant factor in decimal (0 for a copy of Z).
//
// # Safety
// `g` must be a live handle and `out` writable; free the result with
// [`gds_string_free`].
enum GdsStatus gds_group_factor(const struct GdsGroup *g, size_t index, char **out);

// Invariant factors as a JSON integer array, e.g. `[3,9]`.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum GdsStatus gds_group_json(const struct GdsGroup *g, char **out);

// A row of the functor table (`"L1SP3"`, `"Tor(A,Z/2)"`, ...) for
// `A = Z/e1 + ... + Z/em`. Rows that are only bounded for `A` fail with
// `GDS_INTERNAL`.
//
// # Safety
// Pointers must be valid; `out` receives a group handle.
enum GdsStatus gds_functor(const struct GdsDivisors *d, const char *name, struct GdsGroup **out);

// Invariant factors of `D(level, ideal) / denominator`, where `denominator`
// is a subgroup tag such as `"RRF.g4"`.
//
// # Safety
// Pointers must be valid; `out` receives a group handle.
enum GdsStatus gds_dimsub_quotient(const struct GdsDivisors *d,
                                   const char *ideal,
                                   size_t level,
                                   const char *denominator,
                                   struct GdsGroup **out);

// Writes 1 to `out` when `word ∈ 1 + ideal + f^level`, else 0.
//
// # Safety
// Pointers must be valid.
enum GdsStatus gds_member(const struct GdsDivisors *d,
                          const char *word,
                          const char *ideal,
                          size_t level,
                          int *out);

// # Safety
// `out` must be writable.
enum GdsStatus gds_verifier_new(size_t rank, struct GdsVerifier **out);

// # Safety
// `v` must be null or a handle from [`gds_verifier_new`].
void gds_verifier_free(struct GdsVerifier *v);

// Runs one checker. `verdict` receives the outcome; `report_json`, when not
// null, receives the full report as canonical JSON.
//
// # Safety
// Pointers must be valid; free `*report_json` with [`gds_string_free`].
enum GdsStatus gds_verify(const struct GdsVerifier *v,
                          const char *theorem,
                          const struct GdsDivisors *d,
                          enum GdsVerdict *verdict,
                          char **report_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GDSLAB_H */
