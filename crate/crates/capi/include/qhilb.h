/* C ABI for the qhilb exact-arithmetic toolkit.
 *
 * Every function returns a QhilbStatus; results are written through out
 * pointers only on QHILB_OK. Collections are opaque handles released with
 * their _free function; strings are UTF-8, NUL terminated and released
 * with qhilb_string_free.
 *
 * Kept in sync with the Rust exports by the crate's header_matches_exports
 * test.
 */

#ifndef QHILB_H
#define QHILB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum QhilbStatus {
  QHILB_OK = 0,
  QHILB_NULL_POINTER = 1,
  QHILB_INVALID_ARGUMENT = 2,
  QHILB_OUT_OF_RANGE = 3,
  QHILB_BUDGET_EXCEEDED = 4,
  QHILB_CHECK_FAILED = 5,
  QHILB_BUFFER_TOO_SMALL = 6,
} QhilbStatus;

/* Opaque list of Castelnuovo polynomials. */
typedef struct QhilbEnumeration QhilbEnumeration;

/* Number of Castelnuovo polynomials of even weight ne and odd weight no;
 * zero exactly outside the invariant range N. */
QhilbStatus qhilb_castelnuovo_count(uint64_t ne, uint64_t no, uint64_t *out_count);

/* Enumerate the polynomials of the given weights (descending
 * lexicographic order). Release the handle with qhilb_enumeration_free. */
QhilbStatus qhilb_castelnuovo_enumerate(uint64_t ne, uint64_t no,
                                        QhilbEnumeration **out_handle);

QhilbStatus qhilb_enumeration_len(const QhilbEnumeration *handle, size_t *out_len);

/* Number of coefficients of entry `index`. */
QhilbStatus qhilb_enumeration_coeff_count(const QhilbEnumeration *handle,
                                          size_t index, size_t *out_len);

/* Copy the coefficients of entry `index` (lowest degree first). */
QhilbStatus qhilb_enumeration_coeffs(const QhilbEnumeration *handle, size_t index,
                                     uint64_t *buf, size_t buf_len);

void qhilb_enumeration_free(QhilbEnumeration *handle);

/* Validate the staircase-then-nonincreasing shape; on success writes the
 * staircase length sigma and the even/odd weights. */
QhilbStatus qhilb_castelnuovo_validate(const uint64_t *coeffs, size_t len,
                                       size_t *out_sigma, uint64_t *out_ne,
                                       uint64_t *out_no);

/* Hilbert coefficients of the normalized module attached to a Castelnuovo
 * polynomial, degrees 0..=order; buf needs order + 1 slots. */
QhilbStatus qhilb_castelnuovo_hilbert(const uint64_t *coeffs, size_t len,
                                      int64_t order, int64_t *buf, size_t buf_len);

/* Unique boundary decomposition of a point of the invariant range:
 * out_case is 1 or 2, the boundary point is (k^2, k(k+1)) resp.
 * ((k+1)^2, k(k+1)), offset by l. */
QhilbStatus qhilb_n_membership(uint64_t ne, uint64_t no, uint64_t *out_k,
                               uint64_t *out_l, uint32_t *out_case);

/* Euler form of two classes given as (r, a, b, c) coordinate arrays of
 * length 4 in the basis [O], [S], [Q], [P]. */
QhilbStatus qhilb_k0_chi(const int64_t *x, const int64_t *y, int64_t *out_chi);

/* Normalize a rank-one class; writes the normalizing shift and the
 * invariants (n_e, n_o). */
QhilbStatus qhilb_k0_invariants(int64_t r, int64_t a, int64_t b, int64_t c,
                                int64_t *out_shift, int64_t *out_ne,
                                int64_t *out_no);

/* Number of admissible Betti tables for the characteristic polynomial
 * sum_i coeffs[i] * t^{degrees[i]}. */
QhilbStatus qhilb_betti_table_count(const int64_t *degrees, const int64_t *coeffs,
                                    size_t len, size_t *out_count);

/* Exact member count of the matrix variety over F_p by enumeration;
 * QHILB_BUDGET_EXCEEDED when 4*ne*no*log2(p) > 24. */
QhilbStatus qhilb_moduli_count(size_t ne, size_t no, uint64_t p,
                               uint64_t *out_count);

/* Expansion of q(t)/((1-t)^2(1-t^2)) for degrees 0..=order, with q given
 * as parallel degree/coefficient arrays. */
QhilbStatus qhilb_hilbert_expand(const int64_t *degrees, const int64_t *coeffs,
                                 size_t len, int64_t order, int64_t *buf,
                                 size_t buf_len);

/* Regenerate the reference table and compare it byte-for-byte with the
 * checked-in data. */
QhilbStatus qhilb_appendix_check(void);

/* The regenerated reference table as JSON; release with
 * qhilb_string_free. */
QhilbStatus qhilb_appendix_json(char **out_json);

void qhilb_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif /* QHILB_H */
