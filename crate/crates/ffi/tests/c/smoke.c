#include <stdio.h>
#include <string.h>

#include "steenrod_harmonics.h"

#define CHECK(cond)                                          \
    do {                                                     \
        if (!(cond)) {                                       \
            fprintf(stderr, "failed at line %d: %s\n", __LINE__, #cond); \
            return 1;                                        \
        }                                                    \
    } while (0)

int main(void) {
    SteenrodFamily *fam = NULL;
    CHECK(steenrod_family_new("tilde", 3, NULL, &fam) == STEENROD_STATUS_OK);
    CHECK(steenrod_family_n_vars(fam) == 3);

    SteenrodKernel *ker = NULL;
    CHECK(steenrod_kernel_solve(fam, 7, true, &ker) == STEENROD_STATUS_OK);
    size_t h[8];
    size_t written = 0;
    CHECK(steenrod_kernel_hilbert(ker, h, 8, &written) == STEENROD_STATUS_OK);
    CHECK(written == 8);
    size_t expected[8] = {1, 3, 3, 4, 2, 2, 1, 0};
    CHECK(memcmp(h, expected, sizeof expected) == 0);

    char *poly = NULL;
    CHECK(steenrod_kernel_basis_element(ker, 6, 0, &poly) == STEENROD_STATUS_OK);
    CHECK(strlen(poly) > 0);
    steenrod_string_free(poly);
    CHECK(steenrod_kernel_basis_element(ker, 7, 0, &poly) == STEENROD_STATUS_OUT_OF_RANGE);
    CHECK(steenrod_last_error() != NULL);

    steenrod_kernel_free(ker);
    steenrod_family_free(fam);

    CHECK(steenrod_family_new("nonsense", 3, NULL, &fam) == STEENROD_STATUS_PARSE);

    bool regular = true;
    CHECK(steenrod_is_regular("1,2,-3", &regular) == STEENROD_STATUS_OK);
    CHECK(!regular);

    SteenrodReport *rep = NULL;
    CHECK(steenrod_experiment_run("wood-basis", 3, NULL, NULL, NULL, NULL, 1, -1, 0, &rep) == STEENROD_STATUS_OK);
    CHECK(steenrod_report_passed(rep));
    char *text = NULL;
    CHECK(steenrod_report_render(rep, "json", &text) == STEENROD_STATUS_OK);
    CHECK(strstr(text, "\"schema_version\"") != NULL);
    steenrod_string_free(text);
    steenrod_report_free(rep);

    printf("ok %s\n", steenrod_version());
    return 0;
}
