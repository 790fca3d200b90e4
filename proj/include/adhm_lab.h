#ifndef ADHM_LAB_H
#define ADHM_LAB_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct adhm_context adhm_context;

typedef enum {
    ADHM_OK = 0,
    ADHM_INVALID_ARGUMENT,
    ADHM_SHAPE_MISMATCH,
    ADHM_SINGULAR,
    ADHM_NON_SPLIT_SPECTRUM,
    ADHM_NOT_IN_P,
    ADHM_NOT_SCALAR,
    ADHM_SIZE_MISMATCH,
    ADHM_INVALID_PARTITION,
    ADHM_INVALID_DIAGRAM,
    ADHM_NOT_NILPOTENT,
    ADHM_NO_MATCH,
    ADHM_NOT_CI,
    ADHM_INHOMOGENEOUS_GENERATORS,
    ADHM_UNSUPPORTED_SIZE,
    ADHM_UNSUPPORTED_GROUP,
    ADHM_UNSUPPORTED_SETTING,
    ADHM_BUDGET_EXCEEDED,
    ADHM_SPECTRA_OVERLAP,
    ADHM_DEGENERATE_RESTRICTION,
    ADHM_BLOCK_MOMENT_NONZERO,
    ADHM_TOO_LARGE,
    ADHM_UNKNOWN_CHECK,
    ADHM_PARSE,
    ADHM_INTERNAL
} adhm_status;

adhm_context* adhm_context_new(void);
void adhm_context_free(adhm_context* ctx);

adhm_status adhm_set_seed(adhm_context* ctx, uint64_t seed);
/* "q" or "fp:<prime>" */
adhm_status adhm_set_field(adhm_context* ctx, const char* field);
/* Groebner budget in S-pair reductions; 0 restores the default */
adhm_status adhm_set_budget(adhm_context* ctx, uint64_t budget);

/* Message of the last failing call on this context, "" if none. */
const char* adhm_last_error(const adhm_context* ctx);
const char* adhm_status_name(adhm_status s);

/*
 * Every call below writes a JSON document to *out. The string is owned by the
 * context and stays valid until the next call on the same context.
 */

/* Runs registry checks whose id matches the glob (NULL or "" = all).
 * *exit_code: 0 all pass, 1 some fail, 2 budget exceeded. */
adhm_status adhm_verify(adhm_context* ctx, const char* filter, int with_runtime, const char** out, int* exit_code);
adhm_status adhm_list_checks(adhm_context* ctx, const char** out);

/* input: a fixture name or an ADHM datum in JSON */
adhm_status adhm_abdiagram(adhm_context* ctx, const char* input, const char** out);

/* kind: mu, mu_traceless, rho, pi_image_tags, commutator, product; flavor "so" or "sp" */
adhm_status adhm_build_ideal(adhm_context* ctx, const char* kind, uint32_t N, uint32_t k, const char* flavor, const char** out);
/* ideal JSON in; reduced basis, dimension and reduction count out */
adhm_status adhm_groebner(adhm_context* ctx, const char* ideal_json, const char** out);

/* datum: fixture name or datum JSON; supports like "1/2,1/2;-1/2,-1/2", NULL for default */
adhm_status adhm_factorize(adhm_context* ctx, const char* datum, const char* supports, const char** out);

adhm_status adhm_nekrasov(adhm_context* ctx, const char* flavor, uint32_t N, uint32_t k_max, int32_t order, const char** out);

adhm_status adhm_list_fixtures(adhm_context* ctx, const char** out);
adhm_status adhm_fixture(adhm_context* ctx, const char* name, const char** out);

#ifdef __cplusplus
}
#endif

#endif
