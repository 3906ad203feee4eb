#ifndef GLQ_H
#define GLQ_H

/* Generated with cbindgen:0.29.4 */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible entry point.
typedef enum GlqStatus {
  GlqStatus_Ok = 0,
  // A parameter was outside its documented domain or failed to parse.
  GlqStatus_InvalidParameter = 1,
  // An exact randomized decision hit the refinement cap.
  GlqStatus_RefinementExhausted = 2,
  // A sampled partition outgrew the configured guard.
  GlqStatus_GuardExceeded = 3,
  // An enumeration would exceed the candidate budget.
  GlqStatus_BudgetExceeded = 4,
  // A required pointer argument was NULL.
  GlqStatus_NullPointer = 5,
  // A string argument was not valid UTF-8.
  GlqStatus_InvalidUtf8 = 6,
  // The requested verification ran and did not hold.
  GlqStatus_MismatchFound = 7,
  // An unexpected internal failure (a bug; never expected).
  GlqStatus_InternalError = 8,
} GlqStatus;

// Group families exposed through the counting entry points.
typedef enum GlqGroupKind {
  GlqGroupKind_Gl = 0,
  GlqGroupKind_Unitary = 1,
} GlqGroupKind;

// An owned sampling stream behind an opaque pointer.
typedef struct GlqSampler GlqSampler;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static string; do not free.
const char *glq_version(void);

// Releases a string allocated by this library. NULL is ignored.
//
// # Safety
// `s` must have been returned by a `glq_*` function and not freed before.
void glq_string_free(char *s);

// Creates a sampling stream for the measure with parameters `u`, `q`
// (exact rationals as strings, `0 < u <= 1 < q`). The pair
// `(seed, stream_id)` fixes the random byte stream; `max_size_guard`
// bounds any single draw (0 selects the default guard).
//
// # Safety
// `u` and `q` must be NUL-terminated strings; `out` must be valid.
enum GlqStatus glq_sampler_new(const char *u,
                               const char *q,
                               uint64_t seed,
                               uint64_t stream_id,
                               uint64_t max_size_guard,
                               struct GlqSampler **out);

// Draws one partition and writes the sample record as a JSON line
// (`{"partition":[...],"size":n,"k":...,"h":[...],"tableau":[[...]]}`).
//
// # Safety
// `sampler` must be a live handle from [`glq_sampler_new`]; `out` valid.
enum GlqStatus glq_sampler_sample_json(struct GlqSampler *sampler, char **out);

// Releases a sampler handle. NULL is ignored.
//
// # Safety
// `sampler` must come from [`glq_sampler_new`] and not be freed twice.
void glq_sampler_free(struct GlqSampler *sampler);

// Writes the exact rational weight `w(lambda)` of the measure (the factor
// multiplying the infinite-product prefactor) as a `p/q` string.
// `signed_mode` evaluates at `(-u, -q)`. The partition is comma-joined
// parts or `-`.
//
// # Safety
// All pointers must be valid NUL-terminated strings / out-slots.
enum GlqStatus glq_measure_weight(const char *u,
                                  const char *q,
                                  bool signed_mode,
                                  const char *partition,
                                  char **out);

// Writes the enclosure `[lo, hi]` of the full measure value
// `prefactor * w(lambda)` as two `p/q` strings, with prefactor width at
// most `eps`.
//
// # Safety
// All pointers must be valid; `out_lo`/`out_hi` receive owned strings.
enum GlqStatus glq_measure_enclosure(const char *u,
                                     const char *q,
                                     bool signed_mode,
                                     const char *partition,
                                     const char *eps,
                                     char **out_lo,
                                     char **out_hi);

// Runs one named series identity (`sizegen`, `interp`, `hw`, `stong`,
// `prodgl`) at truncation `degree` with parameter `k` where applicable.
// Returns `Ok` when the identity holds, `MismatchFound` when it does not.
//
// # Safety
// `name` and `q` must be valid NUL-terminated strings.
enum GlqStatus glq_verify_identity(const char *name, const char *q, size_t degree, uint32_t k);

// Writes the unipotent count `q^(n(n-1))` of the group as a decimal
// string.
//
// # Safety
// `out` must be a valid out-slot.
enum GlqStatus glq_unipotent_count(enum GlqGroupKind kind, uint32_t n, uint64_t q, char **out);

// Runs an exhaustive census (`statistic` one of `fixed_dim`,
// `unipotent_partition`, `nilpotent_rank`) and writes the table as a JSON
// object `{"group":...,"statistic":...,"counts":{key: count}}`.
//
// # Safety
// `statistic` must be a valid NUL-terminated string; `out` valid.
enum GlqStatus glq_census_json(enum GlqGroupKind kind,
                               uint32_t n,
                               uint64_t q,
                               const char *statistic,
                               uint64_t budget,
                               uint32_t workers,
                               char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GLQ_H */
