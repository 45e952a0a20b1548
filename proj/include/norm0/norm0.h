/*
 * norm0: structure of Norm(Gamma_0(N)) / Gamma_0(N).
 *
 * C interface over opaque handles. Every fallible call returns a
 * norm0_status; on failure the context keeps a message retrievable with
 * norm0_ctx_last_error(). Strings returned through `char **` are owned by
 * the caller and must be released with norm0_string_free().
 *
 * A context must not be used from two threads at once. Group handles are
 * immutable after construction and may be shared freely.
 */
#ifndef NORM0_H
#define NORM0_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define NORM0_API __declspec(dllexport)
#else
#  define NORM0_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum norm0_status {
    NORM0_OK = 0,
    NORM0_ERR_INVALID_ARGUMENT = 1,
    NORM0_ERR_SINGULAR = 2,
    NORM0_ERR_ORIENTATION = 3,
    NORM0_ERR_CAP_EXCEEDED = 4,
    NORM0_ERR_BUDGET_EXCEEDED = 5,
    NORM0_ERR_NOT_EXACT_DIVISOR = 6,
    NORM0_ERR_NOT_IN_NORMALIZER = 7,
    NORM0_ERR_PARSE = 8,
    NORM0_ERR_UNKNOWN_GENERATOR = 9,
    NORM0_ERR_DECOMPOSITION = 10,
    NORM0_ERR_IO = 11,
    NORM0_ERR_INTERNAL = 12
} norm0_status;

typedef enum norm0_export_format {
    NORM0_EXPORT_JSON = 0,
    NORM0_EXPORT_GAP = 1,
    NORM0_EXPORT_DOT = 2
} norm0_export_format;

typedef struct norm0_ctx norm0_ctx;
typedef struct norm0_group norm0_group;

NORM0_API const char *norm0_version(void);
NORM0_API const char *norm0_status_name(norm0_status status);

/* Contexts carry the closure budget, factorization cap, optional cache
 * directory and the last error message. */
NORM0_API norm0_status norm0_ctx_new(norm0_ctx **out);
NORM0_API void norm0_ctx_free(norm0_ctx *ctx);
NORM0_API norm0_status norm0_ctx_set_budget(norm0_ctx *ctx, uint64_t budget);
NORM0_API norm0_status norm0_ctx_set_factor_cap(norm0_ctx *ctx, uint64_t cap);
/* NULL or "" disables the cache. */
NORM0_API norm0_status norm0_ctx_set_cache_dir(norm0_ctx *ctx, const char *dir);
NORM0_API norm0_status norm0_ctx_set_timing(norm0_ctx *ctx, int enabled);
NORM0_API const char *norm0_ctx_last_error(const norm0_ctx *ctx);

NORM0_API void norm0_string_free(char *s);

/* Full quotient for level n. */
NORM0_API norm0_status norm0_group_build(norm0_ctx *ctx, uint64_t n, norm0_group **out);
NORM0_API void norm0_group_free(norm0_group *group);
NORM0_API uint64_t norm0_group_level(const norm0_group *group);
NORM0_API size_t norm0_group_order(const norm0_group *group);

/* Evaluates a word such as "(w16 S4)^3"; *index_out receives the element
 * index (0 is the identity). */
NORM0_API norm0_status norm0_group_eval(norm0_ctx *ctx, const norm0_group *group, const char *word,
                                        size_t *index_out);
/* {"index", "matrix": [a,b,c,d] as strings, "det", "word", "identity"} */
NORM0_API norm0_status norm0_group_element_json(norm0_ctx *ctx, const norm0_group *group, size_t index,
                                                char **json_out);
/* For DOT exports above the node cap, *warning_out (if non-NULL) receives a
 * message, otherwise NULL. */
NORM0_API norm0_status norm0_group_export(norm0_ctx *ctx, const norm0_group *group, norm0_export_format format,
                                          char **out, char **warning_out);

/* "norm0-report/1" JSON document. */
NORM0_API norm0_status norm0_structure_report(norm0_ctx *ctx, uint64_t n, char **json_out);
/* Plain-text rendering of a report JSON document. */
NORM0_API norm0_status norm0_report_text(norm0_ctx *ctx, const char *report_json, char **text_out);
/* *holds_out = 1 if the direct-product claim holds; json_out receives
 * {"holds", "stage", "witness": [...], "message"}. */
NORM0_API norm0_status norm0_check_claim(norm0_ctx *ctx, uint64_t n, int *holds_out, char **json_out);
/* quad = "a,b,c,d". json_out receives {"N", "matrix", "det", "member",
 * "witness": {"delta","Delta","lambda"} | null, "in_gamma0"}. */
NORM0_API norm0_status norm0_member(norm0_ctx *ctx, uint64_t n, const char *quad, char **json_out);
/* json_out receives {"passed": bool, "checks": [{"name","passed","detail"}]} */
NORM0_API norm0_status norm0_selftest(norm0_ctx *ctx, int *passed_out, char **json_out);

#ifdef __cplusplus
}
#endif

#endif /* NORM0_H */
