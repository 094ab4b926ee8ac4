#ifndef SOCREP_H
#define SOCREP_H

/*
 * C interface to the socrep library: second-order cone (2x2 LMI)
 * representations of planar convex sets given as epigraphs of convex
 * rational polynomials, with exactly checkable certificates, plus the
 * combinatorial obstruction test on finite point sets.
 *
 * All payloads cross this boundary as UTF-8 JSON strings in the documented
 * file schemas. Strings returned through `char **` out-parameters are owned
 * by the caller and must be released with socrep_string_free(). Certificate
 * bundles are opaque handles released with socrep_bundle_free().
 *
 * Every function returns SOCREP_OK on success. On failure the out-parameters
 * are left untouched and socrep_last_error() describes the problem for the
 * calling thread.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum socrep_status {
    SOCREP_OK = 0,
    /* Domain preconditions violated (e.g. polynomial not convex at 0). */
    SOCREP_ERROR_INVALID_ARGUMENT = 1,
    /* Malformed JSON or rational literal. */
    SOCREP_ERROR_PARSE = 2,
    /* An exact certificate check failed. */
    SOCREP_ERROR_VERIFY = 3,
    SOCREP_ERROR_INTERNAL = 4
} socrep_status;

typedef struct socrep_bundle socrep_bundle;

const char *socrep_version(void);

/* Message for the most recent failure on this thread; never NULL. */
const char *socrep_last_error(void);

void socrep_string_free(char *s);
void socrep_bundle_free(socrep_bundle *b);

/*
 * Builds the certificate bundle for the epigraph piece of the polynomial in
 * `poly_json` (UniPoly schema): decomposition, certified radius (at most
 * `cap`, located within `precision` of the supremum), interval certificates,
 * and, in the strictly convex case, the PSD factorization and sampled
 * tangent certificates. `cap` and `precision` are rational literals like
 * "2/5". A non-convex input with negative leading coefficient is reflected
 * and the bundle marked "hypograph-reflected".
 */
socrep_status socrep_bundle_build(const char *poly_json, const char *cap, const char *precision,
                                  socrep_bundle **out);

socrep_status socrep_bundle_from_json(const char *json, socrep_bundle **out);
socrep_status socrep_bundle_to_json(const socrep_bundle *b, char **json_out);

/*
 * Runs every exact check on the bundle. `ok_out` receives 1 or 0;
 * `report_json_out` (optional, may be NULL) receives
 * {"ok": bool, "failures": [...]}. Returns SOCREP_OK whenever the checks
 * could be evaluated, whatever their outcome.
 */
socrep_status socrep_bundle_verify(const socrep_bundle *b, int *ok_out, char **report_json_out);

/* The S-polynomial S(m, n) as {"m", "n", "value"}; requires 1 <= m < n. */
socrep_status socrep_spoly_to_json(long m, long n, char **json_out);

/*
 * PSD factorization for the polynomial and decomposition (TensorDecomposition
 * schema) at the given rational radius. Fails with SOCREP_ERROR_VERIFY when a
 * factor is not nonnegative on [-radius, radius].
 */
socrep_status socrep_factorize(const char *poly_json, const char *radius,
                               const char *decomp_json, char **fac_json_out);

/*
 * Decides condition (*) for all d-subsets of the point set (PointSet schema).
 * `jobs` > 1 solves the subset LPs concurrently. `holds_out` receives 1 or 0;
 * `report_json_out` (optional) receives the report with witnesses or the
 * failing subset.
 */
socrep_status socrep_obstruct(const char *points_json, long d, long jobs, int *holds_out,
                              char **report_json_out);

#ifdef __cplusplus
}
#endif

#endif /* SOCREP_H */
