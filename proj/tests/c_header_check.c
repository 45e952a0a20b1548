/* Compiles the public header as C and exercises a few calls. */
#include <stdio.h>

#include "norm0/norm0.h"

int main(void) {
    norm0_ctx *ctx = NULL;
    norm0_group *g = NULL;
    size_t idx = 0;
    int ok;
    if (norm0_ctx_new(&ctx) != NORM0_OK) return 1;
    ok = norm0_group_build(ctx, 9, &g) == NORM0_OK && norm0_group_order(g) == 12 &&
         norm0_group_eval(ctx, g, "(w9 S3)^3", &idx) == NORM0_OK && idx == 0;
    norm0_group_free(g);
    norm0_ctx_free(ctx);
    printf("%s\n", ok ? "ok" : "failed");
    return ok ? 0 : 1;
}
