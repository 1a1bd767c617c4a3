#ifndef CASIMIR_H
#define CASIMIR_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define CASIMIR_METHOD_CLOSED_FORM 0

#define CASIMIR_METHOD_NUMERIC 1

#define CASIMIR_METHOD_PLATE_LIMIT 2

// An energy evaluated by one route.
typedef struct CasimirEnergyResult CasimirEnergyResult;

// Two concentric spheres.
typedef struct CasimirGeometry CasimirGeometry;

typedef int32_t CasimirStatus;

#define CASIMIR_OK 0

#define CASIMIR_ERR_NULL_POINTER 1

#define CASIMIR_ERR_INVALID_INPUT 2

#define CASIMIR_ERR_DOMAIN 3

#define CASIMIR_ERR_UNSUPPORTED_DIMENSION 4

#define CASIMIR_ERR_OUT_OF_REGIME 5

#define CASIMIR_ERR_ROOT_LOSS 6

#define CASIMIR_ERR_CONVERGENCE 7

#define CASIMIR_ERR_NON_CONVERGENT_TAIL 8

#define CASIMIR_ERR_BUFFER_TOO_SMALL 9

#define CASIMIR_ERR_PANIC 10

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL. The pointer is
// valid until the next failing call on the same thread.
const char *casimir_last_error_message(void);

// Static name of a status code.
const char *casimir_status_name(CasimirStatus status);

// Create a geometry with radii `inner < outer` in `dim >= 3` dimensions.
//
// # Safety
// `out` must be valid for a pointer write.
CasimirStatus casimir_geometry_new(uint32_t dim,
                                   double inner,
                                   double outer,
                                   struct CasimirGeometry **out);

// Create the geometry with `sqrt(ab) = 1` and `b - a = eta`.
//
// # Safety
// `out` must be valid for a pointer write.
CasimirStatus casimir_geometry_from_eta(uint32_t dim, double eta, struct CasimirGeometry **out);

// Release a geometry. NULL is ignored.
//
// # Safety
// `g` must come from a `casimir_geometry_*` constructor and not be used again.
void casimir_geometry_free(struct CasimirGeometry *g);

// `eta = (b - a) / sqrt(ab)`.
//
// # Safety
// `g` must be a live geometry handle and `out` valid for writes.
CasimirStatus casimir_geometry_eta(const struct CasimirGeometry *g, double *out);

// Closed-form energy (`4 <= D <= 11`, `eta < 1`).
//
// # Safety
// `g` must be a live geometry handle and `out` valid for a pointer write.
CasimirStatus casimir_energy_closed_form(const struct CasimirGeometry *g,
                                         struct CasimirEnergyResult **out);

// Numeric regularized mode sum. `k_max = 0` selects the automatic stop.
//
// # Safety
// `g` must be a live geometry handle and `out` valid for a pointer write.
CasimirStatus casimir_energy_numeric(const struct CasimirGeometry *g,
                                     double rel_tol,
                                     double abs_tol,
                                     double truncation,
                                     uint32_t k_max,
                                     struct CasimirEnergyResult **out);

// Parallel-plate energy at the shell's gap, over the inner sphere.
//
// # Safety
// `g` must be a live geometry handle and `out` valid for a pointer write.
CasimirStatus casimir_energy_plate_limit(const struct CasimirGeometry *g,
                                         struct CasimirEnergyResult **out);

// Release a result. NULL is ignored.
//
// # Safety
// `r` must come from a `casimir_energy_*` call and not be used again.
void casimir_result_free(struct CasimirEnergyResult *r);

// # Safety
// `r` must be a live result handle and `out` valid for writes.
CasimirStatus casimir_result_total(const struct CasimirEnergyResult *r, double *out);

// Energy per unit inner-sphere area.
//
// # Safety
// `r` must be a live result handle and `out` valid for writes.
CasimirStatus casimir_result_per_area(const struct CasimirEnergyResult *r, double *out);

// One of the `CASIMIR_METHOD_*` constants.
//
// # Safety
// `r` must be a live result handle and `out` valid for writes.
CasimirStatus casimir_result_method(const struct CasimirEnergyResult *r, int32_t *out);

// Angular modes summed; 0 for routes without a mode sum.
//
// # Safety
// `r` must be a live result handle and `out` valid for writes.
CasimirStatus casimir_result_k_max(const struct CasimirEnergyResult *r, uint32_t *out);

// Bound on the omitted k-sum tail; 0 for routes without a mode sum.
//
// # Safety
// `r` must be a live result handle and `out` valid for writes.
CasimirStatus casimir_result_truncation_estimate(const struct CasimirEnergyResult *r, double *out);

// First `n_max` eigenfrequencies of angular mode `k`, written to `buf`.
//
// # Safety
// `g` must be a live geometry handle; `buf` must be valid for `buf_len`
// writes.
CasimirStatus casimir_find_roots(const struct CasimirGeometry *g,
                                 uint32_t k,
                                 uint32_t n_max,
                                 double *buf,
                                 size_t buf_len);

// Number of modes sharing angular index `k` in `dim` dimensions.
//
// # Safety
// `out` must be valid for writes.
CasimirStatus casimir_degeneracy(uint32_t dim, uint32_t k, uint64_t *out);

// Plate energy per unit area at separation `d`.
//
// # Safety
// `out` must be valid for writes.
CasimirStatus casimir_plate_limit(uint32_t dim, double d, double *out);

// `J_nu(x)` for `nu` in `{0, 1/2, 1, 3/2, ...}`.
//
// # Safety
// `out` must be valid for writes.
CasimirStatus casimir_bessel_j(double nu, double x, double *out);

// `Y_nu(x)` for `nu` in `{0, 1/2, 1, 3/2, ...}`, `x > 0`.
//
// # Safety
// `out` must be valid for writes.
CasimirStatus casimir_bessel_y(double nu, double x, double *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* CASIMIR_H */
