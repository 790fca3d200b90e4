/* Exercises the C interface from plain C. */
#include <stdio.h>
#include <string.h>

#include "adhm_lab.h"

static int failures = 0;

#define EXPECT(cond)                                               \
    do {                                                           \
        if (!(cond)) {                                             \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                            \
        }                                                          \
    } while (0)

int main(void) {
    adhm_context* ctx = adhm_context_new();
    const char* out = NULL;
    int code = -1;

    EXPECT(adhm_list_fixtures(ctx, &out) == ADHM_OK);
    EXPECT(strstr(out, "x_I") != NULL);

    EXPECT(adhm_abdiagram(ctx, "x_IV", &out) == ADHM_OK);
    EXPECT(strstr(out, "\"orbit_dim\":6") != NULL);

    EXPECT(adhm_fixture(ctx, "no_such_fixture", &out) == ADHM_INVALID_ARGUMENT);
    EXPECT(strlen(adhm_last_error(ctx)) > 0);
    EXPECT(adhm_abdiagram(ctx, "{not json", &out) == ADHM_PARSE);
    EXPECT(adhm_set_field(ctx, "fp:banana") != ADHM_OK);
    EXPECT(adhm_abdiagram(ctx, NULL, &out) == ADHM_INVALID_ARGUMENT);

    EXPECT(adhm_set_seed(ctx, 3) == ADHM_OK);
    EXPECT(adhm_verify(ctx, "stabilizer.*", 0, &out, &code) == ADHM_OK);
    EXPECT(code == 0);
    EXPECT(strstr(out, "\"status\":\"pass\"") != NULL);
    EXPECT(adhm_verify(ctx, "nothing.matches", 0, &out, &code) == ADHM_OK);
    EXPECT(code == 0);
    EXPECT(strstr(out, "\"reports\":[]") != NULL);

    EXPECT(adhm_factorize(ctx, "x_I", NULL, &out) == ADHM_OK);
    EXPECT(strstr(out, "\"eta\":\"(2,2)\"") != NULL);
    EXPECT(adhm_factorize(ctx, "x_I", "1/2,-1/2;1/2,-1/2", &out) != ADHM_OK);

    EXPECT(adhm_build_ideal(ctx, "rho", 3, 2, "so", &out) == ADHM_OK);
    char ideal[65536];
    strncpy(ideal, out, sizeof ideal - 1);
    ideal[sizeof ideal - 1] = 0;
    EXPECT(adhm_groebner(ctx, ideal, &out) == ADHM_OK);
    EXPECT(strstr(out, "\"dimension\":3") != NULL);

    EXPECT(adhm_set_budget(ctx, 1) == ADHM_OK);
    EXPECT(adhm_groebner(ctx, ideal, &out) == ADHM_BUDGET_EXCEEDED);
    EXPECT(strcmp(adhm_status_name(ADHM_BUDGET_EXCEEDED), "BudgetExceeded") == 0);

    EXPECT(adhm_nekrasov(ctx, "sp", 2, 1, 2, &out) == ADHM_OK);
    EXPECT(adhm_nekrasov(ctx, "sp", 9, 1, 2, &out) == ADHM_UNSUPPORTED_SIZE);

    adhm_context_free(ctx);
    if (failures) fprintf(stderr, "%d failures\n", failures);
    return failures ? 1 : 0;
}
