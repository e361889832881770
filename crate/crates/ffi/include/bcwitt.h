#ifndef BCWITT_H
#define BCWITT_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BcConstruction {
  BC_CONSTRUCTION_QUOTIENT = 0,
  BC_CONSTRUCTION_STRUCTURAL = 1,
  BC_CONSTRUCTION_FIBER_PRODUCT = 2,
} BcConstruction;

typedef enum BcStatus {
  BC_STATUS_OK = 0,
  /**
   * Mathematical input error.
   */
  BC_STATUS_INPUT = 1,
  /**
   * Internal verification failure.
   */
  BC_STATUS_VERIFICATION = 2,
  /**
   * Malformed arguments.
   */
  BC_STATUS_USAGE = 3,
  BC_STATUS_NULL_POINTER = 4,
  BC_STATUS_PANIC = 5,
} BcStatus;

/**
 * A Deligne-Ribet monoid together with its field.
 */
typedef struct BcDrMonoid BcDrMonoid;

/**
 * A number field.
 */
typedef struct BcField BcField;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Owned by the
 * library and valid until the next failing call.
 */
const char *bc_last_error(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be null or a string obtained from this library, freed once.
 */
void bc_string_free(char *s);

/**
 * Builds the field defined by a polynomial in `x`.
 *
 * # Safety
 * `poly` must be a nul-terminated string and `out` a valid pointer.
 */
enum BcStatus bc_field_new(const char *poly, struct BcField **out);

/**
 * # Safety
 * `field` must be null or a handle from [`bc_field_new`], freed once.
 */
void bc_field_free(struct BcField *field);

/**
 * # Safety
 * `field` must be a live handle and `out` a valid pointer.
 */
enum BcStatus bc_field_degree(const struct BcField *field, size_t *out);

/**
 * Field discriminant as a decimal string.
 *
 * # Safety
 * `field` must be a live handle and `out` a valid pointer.
 */
enum BcStatus bc_field_discriminant(const struct BcField *field, char **out);

/**
 * Builds `DR_f` for the modulus given by comma-separated generators in `t`.
 *
 * # Safety
 * `field` must be a live handle, `modulus` a nul-terminated string and
 * `out` a valid pointer.
 */
enum BcStatus bc_dr_new(const struct BcField *field,
                        const char *modulus,
                        enum BcConstruction construction,
                        struct BcDrMonoid **out);

/**
 * # Safety
 * `monoid` must be null or a handle from [`bc_dr_new`], freed once.
 */
void bc_dr_free(struct BcDrMonoid *monoid);

/**
 * # Safety
 * `monoid` must be a live handle and `out` a valid pointer.
 */
enum BcStatus bc_dr_size(const struct BcDrMonoid *monoid, size_t *out);

/**
 * # Safety
 * `monoid` must be a live handle and `out` a valid pointer.
 */
enum BcStatus bc_dr_identity(const struct BcDrMonoid *monoid, size_t *out);

/**
 * Product of elements `i` and `j`.
 *
 * # Safety
 * `monoid` must be a live handle and `out` a valid pointer.
 */
enum BcStatus bc_dr_mul(const struct BcDrMonoid *monoid, size_t i, size_t j, size_t *out);

/**
 * Element containing the integral ideal with the given generators.
 *
 * # Safety
 * `monoid` must be a live handle, `ideal` a nul-terminated string and
 * `out` a valid pointer.
 */
enum BcStatus bc_dr_classify(const struct BcDrMonoid *monoid, const char *ideal, size_t *out);

/**
 * Writes `a(1), ..., a(bound)` for the Dedekind zeta function into `out`,
 * which must hold `bound` entries.
 *
 * # Safety
 * `field` must be a live handle and `out` valid for `bound` writes.
 */
enum BcStatus bc_zeta_coefficients(const struct BcField *field, uint64_t bound, uint64_t *out);

/**
 * Whether the hom-set of `prod_{d | n} Q(zeta_d)` is equivariantly
 * isomorphic to `DR_(n)`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum BcStatus bc_ggc_check(uint64_t n, bool *out);

/**
 * Runs one acceptance criterion (1 to 10).
 *
 * # Safety
 * `passed` must be a valid pointer; `detail` may be null.
 */
enum BcStatus bc_verify_criterion(uint8_t id, uint64_t seed, bool *passed, char **detail);

/**
 * Runs the command line with `argc` arguments (excluding the program name)
 * and returns its exit code; the payload and diagnostics are returned as
 * strings.
 *
 * # Safety
 * `argv` must hold `argc` nul-terminated strings; `out` and `err` must be
 * valid pointers.
 */
int32_t bc_cli_run(const char *const *argv, size_t argc, char **out, char **err);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BCWITT_H */
