/* SPDX-License-Identifier: Apache-2.0 */

#ifndef DQS_H
#define DQS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  DQS_STATUS_OK = 0,
  DQS_STATUS_NULL_POINTER = 1,
  DQS_STATUS_INVALID_ARGUMENT = 2,
  DQS_STATUS_SIZE = 3,
  DQS_STATUS_NOT_EIGENVALUE = 4,
  DQS_STATUS_DEGENERATE_INSTANCE = 5,
  DQS_STATUS_DOMAIN = 6,
  DQS_STATUS_NO_SUCCESS = 7,
  DQS_STATUS_THRESHOLD_UNREACHED = 8,
  DQS_STATUS_OUT_OF_RANGE = 9,
  DQS_STATUS_PANIC = 10,
} DqsStatus;

typedef enum {
  DQS_MODEL_GROVER = 0,
  DQS_MODEL_DAMPED = 1,
  DQS_MODEL_CLASSICAL_REPLACE = 2,
  DQS_MODEL_CLASSICAL_NOREPLACE = 3,
  DQS_MODEL_CLASSICAL_FULLY_DAMPED = 4,
} DqsModel;

/**
 * Angle convention for the damped recurrence.
 */
typedef enum {
  DQS_ANGLE_DOUBLED = 0,
  DQS_ANGLE_AMPLITUDE = 1,
} DqsAngle;

/**
 * Success-probability curve `P(1..=j_max)`.
 */
typedef struct DqsCurve DqsCurve;

/**
 * Spectrum of an open Ising chain, sorted by eigenvalue.
 */
typedef struct DqsSpectrum DqsSpectrum;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code. Never null.
 */
const char *dqs_status_message(DqsStatus status);

/**
 * Message for the last failing call on this thread, or null if none.
 * Valid until the next failing call on the same thread.
 */
const char *dqs_last_error_message(void);

/**
 * Builds the spectrum of an `spins`-site open chain.
 *
 * # Safety
 * `out_spectrum` must be null or valid for writes.
 */
DqsStatus dqs_spectrum_new(uint32_t spins, DqsSpectrum **out_spectrum);

/**
 * Number of distinct eigenvalues.
 *
 * # Safety
 * `spectrum` must come from [`dqs_spectrum_new`]; `out_len` must be null or writable.
 */
DqsStatus dqs_spectrum_len(const DqsSpectrum *spectrum, size_t *out_len);

/**
 * Eigenvalue (units of epsilon) and degeneracy of entry `index`.
 *
 * # Safety
 * `spectrum` must come from [`dqs_spectrum_new`]; out pointers must be null or writable.
 */
DqsStatus dqs_spectrum_entry(const DqsSpectrum *spectrum,
                             size_t index,
                             int64_t *out_lambda,
                             uint64_t *out_degeneracy);

/**
 * Degeneracy of `lambda`; fails with `NOT_EIGENVALUE` when it is absent.
 *
 * # Safety
 * `spectrum` must come from [`dqs_spectrum_new`]; `out_degeneracy` must be null or writable.
 */
DqsStatus dqs_spectrum_degeneracy(const DqsSpectrum *spectrum,
                                  int64_t lambda,
                                  uint64_t *out_degeneracy);

/**
 * # Safety
 * `spectrum` must be null or come from [`dqs_spectrum_new`] and not be used afterwards.
 */
void dqs_spectrum_free(DqsSpectrum *spectrum);

/**
 * Generates `P(1..=j_max)` for `targets` marked items out of `items`.
 *
 * `cos_phi` applies to the damped model only; pass NaN for critical
 * damping. `j_max = 0` selects the default scan length.
 *
 * # Safety
 * `out_curve` must be null or valid for writes.
 */
DqsStatus dqs_curve_new(uint64_t items,
                        uint64_t targets,
                        DqsModel model,
                        DqsAngle angle,
                        double cos_phi,
                        size_t j_max,
                        DqsCurve **out_curve);

/**
 * # Safety
 * `curve` must come from [`dqs_curve_new`]; `out_j_max` must be null or writable.
 */
DqsStatus dqs_curve_len(const DqsCurve *curve, size_t *out_j_max);

/**
 * `P(j)` for `0 ≤ j ≤ j_max`.
 *
 * # Safety
 * `curve` must come from [`dqs_curve_new`]; `out_p` must be null or writable.
 */
DqsStatus dqs_curve_get(const DqsCurve *curve, size_t j, double *out_p);

/**
 * Pointer to the `j_max` values `P(1..=j_max)`, owned by the curve.
 *
 * # Safety
 * `curve` must come from [`dqs_curve_new`]; `out_data` must be null or writable.
 */
DqsStatus dqs_curve_data(const DqsCurve *curve, const double **out_data);

/**
 * Minimizes `E(j) = j / P(j)` over the curve. `out_saturated` is set when
 * the minimum sits at `j_max`.
 *
 * # Safety
 * `curve` must come from [`dqs_curve_new`]; out pointers must be null or writable.
 */
DqsStatus dqs_curve_minimize_expected(const DqsCurve *curve,
                                      size_t *out_j_star,
                                      double *out_e_min,
                                      bool *out_saturated);

/**
 * Smallest `j` with `P(j) ≥ p_target`, for `p_target` in (0, 1).
 *
 * # Safety
 * `curve` must come from [`dqs_curve_new`]; `out_j` must be null or writable.
 */
DqsStatus dqs_curve_queries_to_reach(const DqsCurve *curve, double p_target, size_t *out_j);

/**
 * # Safety
 * `curve` must be null or come from [`dqs_curve_new`] and not be used afterwards.
 */
void dqs_curve_free(DqsCurve *curve);

/**
 * Ideal Grover success probability after `j` iterations.
 *
 * # Safety
 * `out_p` must be null or valid for writes.
 */
DqsStatus dqs_grover_success_probability(uint64_t items,
                                         uint64_t targets,
                                         uint64_t j,
                                         double *out_p);

/**
 * Critical damping parameter `cos φ` for the instance.
 *
 * # Safety
 * `out_cos_phi` must be null or valid for writes.
 */
DqsStatus dqs_critical_damping(uint64_t items,
                               uint64_t targets,
                               DqsAngle angle,
                               double *out_cos_phi);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DQS_H */
