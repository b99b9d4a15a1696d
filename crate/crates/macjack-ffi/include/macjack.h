#ifndef MACJACK_H
#define MACJACK_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Success.
 */
#define MJ_OK 0

/**
 * A pointer argument was NULL.
 */
#define MJ_ERR_NULL 1

/**
 * An argument failed validation (bad partition syntax, bad bounds, ...).
 */
#define MJ_ERR_INVALID 2

/**
 * An exact-arithmetic operation failed; see mj_last_error.
 */
#define MJ_ERR_MATH 3

/**
 * A string argument was not valid UTF-8.
 */
#define MJ_ERR_UTF8 4

/**
 * Opaque handle to a symmetric function expansion.
 */
typedef struct MjSymFunc MjSymFunc;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Construct the integral Macdonald polynomial J_lambda(q,t).
 *
 * # Safety
 * `partition` must be a NUL-terminated string and `out` a valid pointer.
 */
int32_t mj_macdonald_j(const char *partition, uintptr_t n_vars, struct MjSymFunc **out);

/**
 * Construct the monic Macdonald polynomial P_lambda(q,t).
 *
 * # Safety
 * `partition` must be a NUL-terminated string and `out` a valid pointer.
 */
int32_t mj_macdonald_p(const char *partition, uintptr_t n_vars, struct MjSymFunc **out);

/**
 * Construct the integral Jack polynomial J_lambda(alpha).
 *
 * # Safety
 * `partition` must be a NUL-terminated string and `out` a valid pointer.
 */
int32_t mj_jack_j(const char *partition, uintptr_t n_vars, struct MjSymFunc **out);

/**
 * Construct the monic Jack polynomial P_lambda(alpha).
 *
 * # Safety
 * `partition` must be a NUL-terminated string and `out` a valid pointer.
 */
int32_t mj_jack_p(const char *partition, uintptr_t n_vars, struct MjSymFunc **out);

/**
 * Number of monomial-basis terms in the expansion.
 *
 * # Safety
 * `handle` must be a live handle from this library; `out` must be valid.
 */
int32_t mj_symfunc_num_terms(const struct MjSymFunc *handle, uintptr_t *out);

/**
 * Render the expansion as text, e.g. "(1-t)*m[1]". The returned string
 * must be released with mj_string_free.
 *
 * # Safety
 * `handle` must be a live handle from this library; `out` must be valid.
 */
int32_t mj_symfunc_render(const struct MjSymFunc *handle, char **out);

/**
 * Exact limit check at integer alpha: writes 1 to `out_equal` when the
 * q = t^a limit of the (q,t) polynomial matches the alpha-side build.
 *
 * # Safety
 * `partition` must be a NUL-terminated string and `out_equal` valid.
 */
int32_t mj_limit_bridge(const char *partition,
                        uintptr_t n_vars,
                        uint32_t alpha,
                        int32_t *out_equal);

/**
 * Release a handle. NULL is a no-op.
 *
 * # Safety
 * `handle` must come from this library and not be used afterwards.
 */
void mj_symfunc_free(struct MjSymFunc *handle);

/**
 * Release a string returned by this library. NULL is a no-op.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void mj_string_free(char *s);

/**
 * Message describing the most recent error on this thread. The pointer is
 * owned by the library and valid until the next failing call.
 */
const char *mj_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MACJACK_H */
