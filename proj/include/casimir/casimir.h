/*
 * casimir.h - C interface to the N-plate Casimir energy library.
 *
 * All functions return a casimir_status; on failure a human-readable message
 * is available from casimir_last_error() on the calling thread. Stacks are
 * opaque handles created with casimir_stack_create and released with
 * casimir_stack_destroy. A stack handle may be read from several threads at
 * once but must not be modified concurrently.
 */
#ifndef CASIMIR_CASIMIR_H
#define CASIMIR_CASIMIR_H

#include <stddef.h>
#include <stdint.h>

#if defined(CASIMIR_BUILDING_LIBRARY)
#define CASIMIR_API __attribute__((visibility("default")))
#else
#define CASIMIR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum casimir_status {
  CASIMIR_OK = 0,
  CASIMIR_ERROR_INVALID_ARGUMENT = 1, /* null pointer, unknown enum value */
  CASIMIR_ERROR_DOMAIN = 2,           /* parameter outside its valid range */
  CASIMIR_ERROR_CONVERGENCE = 3,      /* adaptive quadrature gave up */
  CASIMIR_ERROR_NUMERICAL = 4,        /* Delta <= 0, root inside unit disk, ... */
  CASIMIR_ERROR_OUT_OF_MEMORY = 5,
  CASIMIR_ERROR_INTERNAL = 6
} casimir_status;

typedef enum casimir_plate_kind {
  CASIMIR_PLATE_CONDUCTIVITY = 0,     /* p1 = sigma */
  CASIMIR_PLATE_DELTA = 1,            /* p1 = lambda_e, p2 = lambda_g (kappa-scaled) */
  CASIMIR_PLATE_PERFECT_ELECTRIC = 2,
  CASIMIR_PLATE_PERFECT_MAGNETIC = 3,
  CASIMIR_PLATE_TRANSPARENT = 4
} casimir_plate_kind;

typedef enum casimir_polarization {
  CASIMIR_TM = 0,
  CASIMIR_TE = 1
} casimir_polarization;

typedef enum casimir_method {
  CASIMIR_METHOD_AUTO = 0,
  CASIMIR_METHOD_POLYLOG = 1,
  CASIMIR_METHOD_QUADRATURE = 2,
  CASIMIR_METHOD_IDEAL = 3
} casimir_method;

typedef struct casimir_quadrature {
  double rel_tol;
  double abs_tol;
  int max_subdivisions;
} casimir_quadrature;

typedef struct casimir_result {
  double ratio;          /* Delta E / Delta E^c_(12); > 0 is attractive */
  double per_plate;      /* ratio / plates */
  double error_estimate;
  casimir_method method; /* method actually used (never AUTO) */
  size_t plates;
} casimir_result;

typedef struct casimir_stack casimir_stack;

CASIMIR_API const char* casimir_version(void);
CASIMIR_API const char* casimir_last_error(void);
CASIMIR_API const char* casimir_status_string(casimir_status status);
CASIMIR_API const char* casimir_method_name(casimir_method method);
CASIMIR_API casimir_quadrature casimir_default_quadrature(void);
CASIMIR_API double casimir_graphene_sigma(void);

CASIMIR_API casimir_status casimir_stack_create(casimir_stack** out);
CASIMIR_API void casimir_stack_destroy(casimir_stack* stack);
CASIMIR_API casimir_status casimir_stack_add_plate(casimir_stack* stack, casimir_plate_kind kind,
                                                   double p1, double p2);
/* count == 0 restores unit gaps. Otherwise count must equal plates - 1 when
   the stack is evaluated. */
CASIMIR_API casimir_status casimir_stack_set_gaps(casimir_stack* stack, const double* gaps,
                                                  size_t count);
CASIMIR_API casimir_status casimir_stack_plate_count(const casimir_stack* stack, size_t* out);
CASIMIR_API casimir_status casimir_stack_set_sigma(casimir_stack* stack, size_t index,
                                                   double sigma);

CASIMIR_API casimir_status casimir_plate_coefficients(casimir_plate_kind kind, double p1,
                                                      double p2, casimir_polarization pol,
                                                      double t, double* r, double* t_coef);

/* quad may be NULL for the defaults. */
CASIMIR_API casimir_status casimir_resolve_method(const casimir_stack* stack,
                                                  casimir_method requested,
                                                  casimir_method* resolved);
CASIMIR_API casimir_status casimir_energy_ratio(const casimir_stack* stack, casimir_method method,
                                                const casimir_quadrature* quad,
                                                casimir_result* out);
/* Exact ratio for all-ideal unit-gap stacks, reduced fraction. */
CASIMIR_API casimir_status casimir_ideal_ratio(const casimir_stack* stack, int64_t* numerator,
                                               int64_t* denominator);
/* Evaluates the stack once per sigma in `sigmas` (strictly increasing),
   writing sigma into the conductivity plates listed in `slots` (0-based; all
   conductivity plates when slot_count == 0). `results` must hold `count`
   entries. On failure *failed_index (if non-NULL) is the first failing grid
   index. workers == 0 uses the hardware concurrency. */
CASIMIR_API casimir_status casimir_sweep(const casimir_stack* stack, const double* sigmas,
                                         size_t count, const size_t* slots, size_t slot_count,
                                         casimir_method method, const casimir_quadrature* quad,
                                         unsigned workers, casimir_result* results,
                                         size_t* failed_index);
CASIMIR_API casimir_status casimir_absolute_energy(double ratio, double gap_m, double area_m2,
                                                   double* joules);

#ifdef __cplusplus
}
#endif

#endif /* CASIMIR_CASIMIR_H */
