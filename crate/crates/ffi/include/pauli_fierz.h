#ifndef PAULI_FIERZ_H
#define PAULI_FIERZ_H

/* This file is generated by cbindgen from pauli-fierz-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Which side of the threshold `min{...}` produced `alpha_max`.
typedef enum {
  PF_BRANCH_ERROR_VS_CORRECTION = 0,
  PF_BRANCH_APRIORI_CONSTRAINT = 1,
} PfBranch;

// Status codes returned by every fallible `pf_` function.
typedef enum {
  PF_STATUS_OK = 0,
  // A parameter failed validation (range, finiteness, ordering).
  PF_STATUS_INVALID_ARGUMENT = 1,
  // The coupling violates the admissibility bound `a*pi/(4*lambda)`.
  PF_STATUS_COUPLING_TOO_LARGE = 2,
  // Adaptive quadrature exhausted its subdivision budget.
  PF_STATUS_NO_CONVERGENCE = 3,
  // The integrand produced NaN.
  PF_STATUS_NAN_INTEGRAND = 4,
  // A root finder was called without a sign change on its bracket.
  PF_STATUS_NOT_BRACKETED = 5,
  // A one-photon amplitude carries no field energy.
  PF_STATUS_ZERO_ENERGY_STATE = 6,
  // No integer charge in 1..=137 satisfies the threshold inequality.
  PF_STATUS_CHARGE_OUT_OF_RANGE = 7,
  // A required pointer argument was null.
  PF_STATUS_NULL_POINTER = 8,
} PfStatus;

// Opaque handle: coupling constant, ultraviolet cutoff, splitting parameter.
typedef struct PfFieldParams PfFieldParams;

// Opaque handle: nuclear charge and fine-structure constant.
typedef struct PfHydrogenModel PfHydrogenModel;

// Self-energy quantities at one parameter point (all energies in units
// hbar = c = 1, m = 1/2).
typedef struct {
  double leading;
  double variational_upper;
  double err_envelope;
  double secular_value;
  double kinetic_apriori;
  double field_apriori;
} PfSelfEnergyReport;

// Threshold summary: the largest admissible coupling with guaranteed
// enhancement, and its charge-independent first-branch coefficient.
typedef struct {
  double alpha_max;
  double coefficient;
  double a_used;
  PfBranch branch;
} PfThresholdReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the most recent failure on this thread, or null if the
// most recent `pf_` call on this thread succeeded. The pointer is
// invalidated by the next `pf_` call on the same thread.
const char *pf_last_error_message(void);

// Library version as a static NUL-terminated string.
const char *pf_version(void);

// The default fine-structure constant 1/137.
double pf_fine_structure(void);

// Validate and allocate a field-parameter handle.
//
// # Safety
// `out` must be a valid pointer. The handle must be released with
// [`pf_field_params_free`].
PfStatus pf_field_params_new(double alpha, double lambda, double a, PfFieldParams **out);

// Release a handle created by [`pf_field_params_new`]. Null is a no-op.
//
// # Safety
// `params` must be a pointer returned by [`pf_field_params_new`] that has
// not already been freed.
void pf_field_params_free(PfFieldParams *params);

// Validate and allocate a hydrogen-model handle.
//
// # Safety
// `out` must be a valid pointer. The handle must be released with
// [`pf_hydrogen_model_free`].
PfStatus pf_hydrogen_model_new(uint32_t z, double beta, PfHydrogenModel **out);

// Release a handle created by [`pf_hydrogen_model_new`]. Null is a no-op.
//
// # Safety
// `model` must be a pointer returned by [`pf_hydrogen_model_new`] that has
// not already been freed.
void pf_hydrogen_model_free(PfHydrogenModel *model);

// Leading-order self-energy `2(alpha/pi)(Lambda - ln(1+Lambda))`.
//
// # Safety
// `params` must be a live handle; `out` must be a valid pointer.
PfStatus pf_sigma_leading(const PfFieldParams *params, double *out);

// Variational upper bound on the self-energy.
//
// # Safety
// `params` must be a live handle; `out` must be a valid pointer.
PfStatus pf_sigma_upper_bound(const PfFieldParams *params, double *out);

// Restricted-sector (vacuum + one photon) self-energy eigenvalue.
//
// # Safety
// `params` must be a live handle; `out` must be a valid pointer.
PfStatus pf_sigma_secular(const PfFieldParams *params, double tol, double *out);

// The `alpha^2` error envelope on the self-energy expansion.
//
// # Safety
// `params` must be a live handle; `out` must be a valid pointer.
PfStatus pf_err_envelope(const PfFieldParams *params, double *out);

// Full self-energy report; uses the library's default secular tolerance if
// `secular_tol <= 0`.
//
// # Safety
// `params` must be a live handle; `out` must be a valid pointer.
PfStatus pf_self_energy_report(const PfFieldParams *params,
                               double secular_tol,
                               PfSelfEnergyReport *out);

// Closed form of the electric-field second-order integral.
//
// # Safety
// `out` must be a valid pointer.
PfStatus pf_e_field_integral(double lambda, double *out);

// Closed form of the `[D, D*]` commutator trace.
//
// # Safety
// `out` must be a valid pointer.
PfStatus pf_dd_commutator(double lambda, double *out);

// Mixed form-factor overlap for component pair `(i, j)`, `i, j` in 1..=3;
// vanishes by transversality.
//
// # Safety
// `out` must be a valid pointer.
PfStatus pf_gh_cross_integral(double lambda, uint32_t i, uint32_t j, double *out);

// Hydrogenic level energy `e0/n^2`.
//
// # Safety
// `model` must be a live handle; `out` must be a valid pointer.
PfStatus pf_level_energy(const PfHydrogenModel *model, uint32_t n, double *out);

// Dipole overlap between the ground state and the `(n, l=1)` level.
//
// # Safety
// `model` must be a live handle; `out` must be a valid pointer.
PfStatus pf_dipole_coefficient(const PfHydrogenModel *model, uint32_t n, double *out);

// Partial dipole sum `sum |c_n|^2` for `n = 2..=n_max`.
//
// # Safety
// `model` must be a live handle; `out` must be a valid pointer.
PfStatus pf_sum_rule_partial(const PfHydrogenModel *model, uint32_t n_max, double *out);

// Photon-momentum integral of one dipole channel with excitation `gap`.
//
// # Safety
// `out` must be a valid pointer.
PfStatus pf_excitation_integral(double lambda, double gap, double *out);

// Radiative correction with the dipole sum frozen at 2/15 and gaps dropped.
//
// # Safety
// `model` and `params` must be live handles; `out` must be a valid pointer.
PfStatus pf_radiative_correction_approx(const PfHydrogenModel *model,
                                        const PfFieldParams *params,
                                        double *out);

// Radiative correction from the explicit bound-state spectral sum.
//
// # Safety
// `model` and `params` must be live handles; `out` must be a valid pointer.
PfStatus pf_radiative_correction_spectral(const PfHydrogenModel *model,
                                          const PfFieldParams *params,
                                          uint32_t n_max,
                                          double *out);

// Upper bound on the binding-energy gain.
//
// # Safety
// `model` and `params` must be live handles; `out` must be a valid pointer.
PfStatus pf_binding_gain_upper(const PfHydrogenModel *model,
                               const PfFieldParams *params,
                               double *out);

// Threshold coupling `alpha_max` and its active branch at `(lambda, a)`.
//
// # Safety
// `model` must be a live handle; `out` must be a valid pointer.
PfStatus pf_threshold_report(const PfHydrogenModel *model,
                             double lambda,
                             double a,
                             PfThresholdReport *out);

// Smallest integer charge in 1..=137 with `alpha <= coefficient*(beta*Z)^2`.
//
// # Safety
// `out` must be a valid pointer.
PfStatus pf_z_min(double beta, double alpha, double lambda, double coefficient, uint32_t *out);

// Enhancement certificate: `enhanced` is nonzero iff the radiative
// correction strictly dominates the error envelope; `margin` receives the
// difference.
//
// # Safety
// `model` and `params` must be live handles; `enhanced` and `margin` must be
// valid pointers.
PfStatus pf_enhancement_certificate(const PfHydrogenModel *model,
                                    const PfFieldParams *params,
                                    int32_t *enhanced,
                                    double *margin);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* PAULI_FIERZ_H */
