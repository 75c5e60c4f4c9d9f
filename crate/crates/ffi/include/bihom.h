#ifndef BIHOM_H
#define BIHOM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible function.
typedef enum BihomStatus {
  BIHOM_STATUS_OK = 0,
  BIHOM_STATUS_NULL_POINTER = 1,
  BIHOM_STATUS_INVALID_UTF8 = 2,
  BIHOM_STATUS_PARSE = 3,
  BIHOM_STATUS_INVALID_INPUT = 4,
  BIHOM_STATUS_INVALID_PARAMS = 5,
  BIHOM_STATUS_DIMENSION_MISMATCH = 6,
  BIHOM_STATUS_NOT_REGULAR = 7,
  BIHOM_STATUS_INVALID_REPRESENTATION = 8,
  BIHOM_STATUS_INVALID_COCYCLE_COMPATIBILITY = 9,
  BIHOM_STATUS_NOT_COHOMOLOGOUS = 10,
  BIHOM_STATUS_DEGREE_OUT_OF_RANGE = 11,
  BIHOM_STATUS_SINGULAR_MATRIX = 12,
  BIHOM_STATUS_INTERNAL_INVARIANT_VIOLATION = 13,
  BIHOM_STATUS_PANIC = 14,
} BihomStatus;

// Opaque Bihom-Lie algebra.
typedef struct BihomAlgebra BihomAlgebra;

// Opaque representation of a Bihom-Lie algebra.
typedef struct BihomRepresentation BihomRepresentation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or NULL. Valid until the
// next failing call on the same thread.
const char *bihom_last_error(void);

// # Safety
// `s` must be NULL or a string returned by this library that was not yet freed.
void bihom_string_free(char *s);

// Parses a Bihom-Lie algebra from JSON. A Bihom-associative file is turned
// into its commutator algebra.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum BihomStatus bihom_algebra_from_json(const char *json, struct BihomAlgebra **out);

// # Safety
// `alg` must be a live handle; `out` must be writable. Free the result with
// [`bihom_string_free`].
enum BihomStatus bihom_algebra_to_json(const struct BihomAlgebra *alg, char **out);

// # Safety
// `alg` must be NULL or a handle not yet freed.
void bihom_algebra_free(struct BihomAlgebra *alg);

// # Safety
// `alg` must be a live handle; `out` must be writable.
enum BihomStatus bihom_algebra_dim(const struct BihomAlgebra *alg, size_t *out);

// Runs the Bihom-Lie axiom checks. `passed` receives 1 when every axiom
// holds; `report` (optional) receives the printed report.
//
// # Safety
// `alg` must be a live handle; `passed` must be writable; `report` may be NULL.
enum BihomStatus bihom_algebra_check(const struct BihomAlgebra *alg, int *passed, char **report);

// JSON for a named example; `params` is a comma-separated list such as
// `"k=1,l=2"` and may be NULL or empty.
//
// # Safety
// `name` must be a NUL-terminated string, `params` NULL or NUL-terminated,
// `out` writable.
enum BihomStatus bihom_example_json(const char *name, const char *params, char **out);

// Yau twist `{a, b} = [α a, β b]` of the bracket of `alg` by its own twists.
//
// # Safety
// `alg` must be a live handle; `out` must be writable.
enum BihomStatus bihom_yau_twist(const struct BihomAlgebra *alg, struct BihomAlgebra **out);

// # Safety
// Both handles must be live; `out` must be writable.
enum BihomStatus bihom_direct_sum(const struct BihomAlgebra *a,
                                  const struct BihomAlgebra *b,
                                  struct BihomAlgebra **out);

// Dimensions of the twisted derivation space and its inner part.
//
// # Safety
// `alg` must be a live handle; `der` and `inner` must be writable.
enum BihomStatus bihom_derivation_dims(const struct BihomAlgebra *alg,
                                       int64_t k,
                                       int64_t l,
                                       size_t *der,
                                       size_t *inner);

// # Safety
// `alg` must be a live handle; `out` must be writable.
enum BihomStatus bihom_representation_trivial(const struct BihomAlgebra *alg,
                                              struct BihomRepresentation **out);

// Adjoint representation twisted by `α^s β^t`.
//
// # Safety
// `alg` must be a live handle; `out` must be writable.
enum BihomStatus bihom_representation_adjoint(const struct BihomAlgebra *alg,
                                              int64_t s,
                                              int64_t t,
                                              struct BihomRepresentation **out);

// # Safety
// `json` must be NUL-terminated; `alg` a live handle; `out` writable. Any
// algebra reference inside the file is ignored in favour of `alg`.
enum BihomStatus bihom_representation_from_json(const char *json,
                                                const struct BihomAlgebra *alg,
                                                struct BihomRepresentation **out);

// # Safety
// `rep` must be NULL or a handle not yet freed.
void bihom_representation_free(struct BihomRepresentation *rep);

// Semidirect product of the represented algebra with its module.
//
// # Safety
// `rep` must be a live handle; `out` must be writable.
enum BihomStatus bihom_semidirect_product(const struct BihomRepresentation *rep,
                                          struct BihomAlgebra **out);

// Dimensions of cocycles, coboundaries and cohomology in one degree.
//
// # Safety
// `rep` must be a live handle; the three outputs must be writable.
enum BihomStatus bihom_cohomology_dims(const struct BihomRepresentation *rep,
                                       size_t degree,
                                       size_t *dim_z,
                                       size_t *dim_b,
                                       size_t *dim_h);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BIHOM_H */
