/* C interface to the equichain series engine.
 *
 * Handles are opaque. Structured data crosses the boundary as JSON strings
 * in the schemas documented in the core crate's io module. Every fallible
 * call returns a status code; on failure, eqc_last_error() gives the message
 * for the most recent failing call on the current thread.
 *
 * Strings written through a char** output parameter are owned by the caller
 * and must be released with eqc_string_free().
 */

#ifndef EQUICHAIN_H
#define EQUICHAIN_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define EQC_OK 0
#define EQC_ERR_NULL 1
#define EQC_ERR_UTF8 2
#define EQC_ERR_PARSE 3
#define EQC_ERR_COMPUTE 4

typedef struct EqcChain EqcChain;
typedef struct EqcSeries EqcSeries;

/* Message for the most recent failure on this thread. Borrowed; valid until
 * the next failing call on the same thread. */
const char *eqc_last_error(void);

/* Releases a string returned through a char** output parameter. */
void eqc_string_free(char *s);

/* Parses a chain spec from its JSON form:
 * { "c", "i", "r", "seed": { "c", "width", "gens": [...] }, "prefix"? }. */
int32_t eqc_chain_parse(const char *json, EqcChain **out);

void eqc_chain_free(EqcChain *chain);

/* Chain member at width n, as ideal JSON. */
int32_t eqc_chain_materialize(const EqcChain *chain, uint32_t n, char **json_out);

/* Bigraded series of the chain. With verify_up_to > 0 the result is
 * cross-checked against the single-width oracle for widths 1..=verify_up_to. */
int32_t eqc_equivariant_hilbert(const EqcChain *chain, uint32_t verify_up_to,
                                EqcSeries **out);

void eqc_series_free(EqcSeries *series);

/* The series in its JSON form: { "num": [[s,t,coeff]...], "a", "factors" }. */
int32_t eqc_series_to_json(const EqcSeries *series, char **json_out);

/* Coefficient of s^n: { "num": [...], "pole" }. */
int32_t eqc_series_coeff(const EqcSeries *series, uint32_t n, char **json_out);

/* Asymptotic profile cross-checked over widths lo..=hi:
 * { "A", "B", "M", "L", "limit": "p/q", "onset" }. */
int32_t eqc_asymptotic_profile(const EqcSeries *series, uint32_t lo, uint32_t hi,
                               char **json_out);

#ifdef __cplusplus
}
#endif

#endif /* EQUICHAIN_H */
