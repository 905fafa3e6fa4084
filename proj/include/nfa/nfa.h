/* nfa.h — C interface to the null-filiform second-product library.
 *
 * All functions return a status code; NFA_OK is 0. String outputs are
 * heap-allocated JSON documents owned by the caller and released with
 * nfa_string_free. On failure, nfa_last_error_message() returns a
 * thread-local description of the most recent error.
 *
 * JSON formats (shared with the command-line tool):
 *   scalar    rationals "p/q", field elements {"fp": p, "v": k},
 *             polynomials {"terms": [{"c": "p/q", "m": {"A1": 2}}]}
 *   domain    "q" | "fp:<p>" | "poly:<v1,v2,...>" | "ratfun:<vars>"
 *   algebra   {"dim": n, "domain": d, "dot": [[i,j,k,scalar],...], "star": [...]}
 *   params    {"kind": "id"|"twelve", "domain": d, "alpha": [...], "beta": [...]}
 *   auto      {"A": [scalar, ...]}
 */

#ifndef NFA_H
#define NFA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nfa_status {
    NFA_OK = 0,
    NFA_ERR_DOMAIN_MISMATCH = 1,
    NFA_ERR_DIVISION_BY_ZERO = 2,
    NFA_ERR_NON_INVERTIBLE = 3,
    NFA_ERR_SINGULAR_COEFFICIENT = 4,
    NFA_ERR_DIMENSION_MISMATCH = 5,
    NFA_ERR_NOT_CENTRAL = 6,
    NFA_ERR_INDEX_OUT_OF_RANGE = 7,
    NFA_ERR_NON_UNIT = 8,
    NFA_ERR_SINGULAR_MAP = 9,
    NFA_ERR_INCONSISTENT_SEED = 10,
    NFA_ERR_UNRECOGNIZED_FAMILY = 11,
    NFA_ERR_SEARCH_SPACE_TOO_LARGE = 12,
    NFA_ERR_INVALID_INDICES = 13,
    NFA_ERR_INVALID_ARGUMENT = 14,
    NFA_ERR_PARSE = 15,
    NFA_ERR_INTERNAL = 16
} nfa_status;

/* opaque two-product algebra handle */
typedef struct nfa_algebra nfa_algebra;

const char* nfa_version(void);
const char* nfa_last_error_message(void);
void nfa_string_free(char* s);

/* --- algebra handles --------------------------------------------------- */

/* the null-filiform algebra with a zero second product */
nfa_status nfa_algebra_make_null_filiform(int n, const char* domain, nfa_algebra** out);
nfa_status nfa_algebra_from_json(const char* json_text, nfa_algebra** out);
nfa_status nfa_algebra_to_json(const nfa_algebra* alg, char** json_out);
/* kind: associativity | compatible | id-matching | twelve-matching |
 * interchangeable | totally-compatible. holds_out receives 0/1. */
nfa_status nfa_algebra_check(const nfa_algebra* alg, const char* kind, int threads,
                             char** report_json_out, int* holds_out);
nfa_status nfa_algebra_quotient_by_last(const nfa_algebra* alg, nfa_algebra** out);
void nfa_algebra_free(nfa_algebra* alg);

/* --- derivation, transforms, canonical forms ---------------------------- */

/* seed: {"kind": "id"|"twelve", "domain": d, "alpha": [...], "beta": [...]}
 * id seeds produce an algebra document; twelve seeds produce
 * {"branch": ..., "constraints": [...], "algebra": ..., ...} */
nfa_status nfa_derive(const char* seed_json, char** out_json);

/* params (id or twelve) transformed along the automorphism */
nfa_status nfa_transform(const char* params_json, const char* auto_json, char** out_json);

/* params -> {"form": ..., "witness": ...} */
nfa_status nfa_normalize(const char* params_json, char** out_json);

/* canonical form -> its two-product algebra document */
nfa_status nfa_realize(const char* form_json, int n, const char* domain, char** out_json);

/* --- oracles ------------------------------------------------------------ */

nfa_status nfa_oracle_dims(int n, const char* kind, unsigned long long p, int* dim_out);
nfa_status nfa_oracle_census(int n, const char* kind, unsigned long long p, int threads,
                             char** report_json_out);
/* found_out receives 0/1; witness written only when found */
nfa_status nfa_oracle_iso(const char* algebra_a_json, const char* algebra_b_json,
                          unsigned long long p, char** witness_json_out, int* found_out);
nfa_status nfa_oracle_audit(int n, int trials, unsigned long long rng_seed, char** report_json_out);

#ifdef __cplusplus
}
#endif

#endif /* NFA_H */
