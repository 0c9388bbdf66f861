#ifndef BRICKWORK_CAPI_H
#define BRICKWORK_CAPI_H

/* Generated from src/lib.rs by cbindgen; regenerate rather than editing. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible entry point.
 */
typedef enum BwStatus {
  /**
   * The call succeeded and every output parameter is set.
   */
  BW_STATUS_OK = 0,
  /**
   * A precondition on the inputs does not hold.
   */
  BW_STATUS_INVALID_INPUT = 1,
  /**
   * Text input could not be parsed.
   */
  BW_STATUS_PARSE = 2,
  /**
   * A series did not reach a constant tail within its truncation.
   */
  BW_STATUS_NOT_STABILIZED = 3,
  /**
   * The request exceeds the configured desk-scale resource caps.
   */
  BW_STATUS_RESOURCE_LIMIT = 4,
  /**
   * An internal consistency check failed; report this as a bug.
   */
  BW_STATUS_INTERNAL = 5,
  /**
   * A required pointer argument was null.
   */
  BW_STATUS_NULL_POINTER = 6,
  /**
   * A string argument was not valid UTF-8.
   */
  BW_STATUS_UTF8 = 7,
  /**
   * The caller's buffer is too small; the required length is in the
   * length output parameter.
   */
  BW_STATUS_BUFFER_TOO_SMALL = 8,
  /**
   * A panic was caught at the boundary; state may be stale but the
   * process is intact.
   */
  BW_STATUS_PANIC = 9,
} BwStatus;

/**
 * Opaque handle to a memoized character table of one symmetric group.
 */
typedef struct BwCharacterTable BwCharacterTable;

/**
 * Scalar summary of the alternating tiling identity for one instance.
 */
typedef struct BwAlternatingReport {
  uint32_t n;
  uint32_t j;
  /**
   * Signed sum of ordered tiling counts over compositions of j.
   */
  int64_t lhs;
  /**
   * Signed sum of crackless counts over partitions of j.
   */
  int64_t rhs;
  /**
   * Euler characteristic of the chain complex, sign-normalized.
   */
  int64_t euler;
  /**
   * Alternating sum of homology dimensions, sign-normalized.
   */
  int64_t homology_sum;
  /**
   * 1 when all four quantities agree, else 0.
   */
  uint8_t all_equal;
} BwAlternatingReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The library version as a static string; never freed by the caller.
 */
const char *bw_version(void);

/**
 * The most recent error message on this thread, or null if the last
 * call succeeded. The pointer stays valid until the next failing call
 * on the same thread; the caller must not free it.
 */
const char *bw_last_error_message(void);

/**
 * Ordered, unordered, and crackless tiling counts of one shape.
 *
 * `perm` is cycle notation like "(3,1)(4)(5,2)" or a one-line word;
 * `shape` points to `shape_len` row lengths, weakly decreasing. A
 * shape weight exceeding n is not an error: all three counts are 0.
 *
 * # Safety
 * `perm` must be a valid C string; `shape` must point to `shape_len`
 * readable values; the three output pointers must be writable.
 */
enum BwStatus bw_tiling_counts(const char *perm,
                               const uint32_t *shape,
                               size_t shape_len,
                               uint64_t *out_zeta,
                               uint64_t *out_xi,
                               uint64_t *out_eta);

/**
 * Builds the character table of S_n and returns an owned handle.
 *
 * # Safety
 * `out` must be writable. The handle must be released with
 * `bw_character_table_free`.
 */
enum BwStatus bw_character_table_new(uint32_t n, struct BwCharacterTable **out);

/**
 * Releases a character table handle. Null is accepted and ignored.
 *
 * # Safety
 * `table` must be a handle from `bw_character_table_new` that has not
 * been freed already.
 */
void bw_character_table_free(struct BwCharacterTable *table);

/**
 * Number of conjugacy classes (and irreducibles) in the table, or 0
 * for a null handle.
 *
 * # Safety
 * `table` must be a live handle or null.
 */
size_t bw_character_table_class_count(const struct BwCharacterTable *table);

/**
 * One character value: the irreducible indexed by `lambda` evaluated
 * on the class of cycle type `cls`. Both partitions are weakly
 * decreasing part lists of the table's n.
 *
 * # Safety
 * `table` must be a live handle; the part arrays must match their
 * lengths; `out` must be writable.
 */
enum BwStatus bw_character_table_value(const struct BwCharacterTable *table,
                                       const uint32_t *lambda,
                                       size_t lambda_len,
                                       const uint32_t *cls,
                                       size_t cls_len,
                                       int64_t *out);

/**
 * Builds the tiling complex of `perm` at weight `j`, computes its
 * GF(2) homology, and reports the four quantities of the alternating
 * identity.
 *
 * # Safety
 * `perm` must be a valid C string and `out` writable.
 */
enum BwStatus bw_alternating_report(const char *perm, uint32_t j, struct BwAlternatingReport *out);

/**
 * Homology dimensions of the same complex, written into a caller
 * buffer. `out_len` always receives the required length; when the
 * buffer is too small nothing else is written and the call returns
 * the buffer-too-small status.
 *
 * # Safety
 * `perm` must be a valid C string, `out_len` writable, and `buf`
 * writable for `buf_len` values (null allowed when `buf_len` is 0).
 */
enum BwStatus bw_homology_dims(const char *perm,
                               uint32_t j,
                               uint64_t *buf,
                               size_t buf_len,
                               size_t *out_len);

/**
 * One Kronecker coefficient. The three partitions must share one
 * weight.
 *
 * # Safety
 * Part arrays must match their lengths; `out` must be writable.
 */
enum BwStatus bw_kronecker(const uint32_t *lambda,
                           size_t lambda_len,
                           const uint32_t *mu,
                           size_t mu_len,
                           const uint32_t *nu,
                           size_t nu_len,
                           uint64_t *out);

/**
 * Class-weighted mean count of k-cycles over S_n as an exact
 * fraction. For k <= n this is always 1/k.
 *
 * # Safety
 * Both output pointers must be writable.
 */
enum BwStatus bw_expected_k_cycles(uint32_t n, uint32_t k, int64_t *out_numer, uint64_t *out_denom);

/**
 * Runs a verification suite by name ("alternating", "doubilet",
 * "young", "charpoly", "rosas", "permutohedron", or "all"). Negative
 * bounds select each suite's default. `out_failed` receives the
 * number of failing instances; the status only reports whether the
 * suite could run.
 *
 * # Safety
 * `suite` must be a valid C string and `out_failed` writable.
 */
enum BwStatus bw_verify_suite(const char *suite, int32_t max_n, int32_t max_k, size_t *out_failed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BRICKWORK_CAPI_H */
