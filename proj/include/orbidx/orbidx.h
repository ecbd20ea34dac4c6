/* Copyright (C) 2026 The orbidx Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

/* C interface to the orbifold-cone index engine.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns an orbidx_status;
 * on failure the out-parameters are left untouched and
 * orbidx_last_error_message() describes the problem (per thread). Strings
 * returned through char** out-parameters are heap-allocated and must be
 * released with orbidx_string_free().
 */

#ifndef ORBIDX_ORBIDX_H
#define ORBIDX_ORBIDX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ORBIDX_BUILDING_LIBRARY)
#    define ORBIDX_API __declspec(dllexport)
#  else
#    define ORBIDX_API __declspec(dllimport)
#  endif
#else
#  define ORBIDX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum orbidx_status {
  ORBIDX_OK = 0,
  ORBIDX_ERR_INVALID_ARGUMENT = 1,
  ORBIDX_ERR_ORDER_MISMATCH = 2,
  ORBIDX_ERR_DIVISION_BY_ZERO = 3,
  ORBIDX_ERR_NOT_RATIONAL = 4,
  ORBIDX_ERR_NON_UNIT = 5,
  ORBIDX_ERR_NOT_DIVISIBLE = 6,
  ORBIDX_ERR_PARSE = 7,
  ORBIDX_ERR_INTERNAL = 8,
  ORBIDX_ERR_NULL_POINTER = 9,
  ORBIDX_ERR_BUFFER_TOO_SMALL = 10
} orbidx_status;

typedef enum orbidx_duality { ORBIDX_ASD = 0, ORBIDX_SD = 1 } orbidx_duality;

typedef enum orbidx_route {
  ORBIDX_ROUTE_KAWASAKI = 0,
  ORBIDX_ROUTE_CLOSED_FORM = 1,
  ORBIDX_ROUTE_SMOOTH = 2
} orbidx_route;

/* Bundles whose equivariant Chern characters the engine evaluates. */
typedef enum orbidx_bundle {
  ORBIDX_BUNDLE_THETA1 = 0,
  ORBIDX_BUNDLE_THETA1_BAR,
  ORBIDX_BUNDLE_THETA2,
  ORBIDX_BUNDLE_THETA2_BAR,
  ORBIDX_BUNDLE_TRIVIAL,
  ORBIDX_BUNDLE_COTANGENT,
  ORBIDX_BUNDLE_LAMBDA_PLUS,
  ORBIDX_BUNDLE_LAMBDA_MINUS,
  ORBIDX_BUNDLE_S20_COTANGENT,
  ORBIDX_BUNDLE_S20_LAMBDA_PLUS,
  ORBIDX_BUNDLE_SYMBOL,
  ORBIDX_BUNDLE_THOM,
  /* the per-element fixed-point term; identity rejected */
  ORBIDX_BUNDLE_CORRECTION
} orbidx_bundle;

typedef enum orbidx_monomial {
  ORBIDX_MONO_ONE = 0,
  ORBIDX_MONO_E,
  ORBIDX_MONO_H,
  ORBIDX_MONO_EE,
  ORBIDX_MONO_EH,
  ORBIDX_MONO_HH
} orbidx_monomial;

typedef enum orbidx_surface {
  ORBIDX_SURFACE_SPHERE = 0,
  ORBIDX_SURFACE_ORIENTABLE = 1,
  ORBIDX_SURFACE_NON_ORIENTABLE = 2
} orbidx_surface;

typedef enum orbidx_fault { ORBIDX_FAULT_NONE = 0, ORBIDX_FAULT_THOM_SIGN = 1 } orbidx_fault;

/* chi(M), tau(M), chi(Sigma), [Sigma]^2 and the cone order p (angle 2pi/p). */
typedef struct orbidx_topology {
  int64_t chi_m;
  int64_t tau_m;
  int64_t chi_sigma;
  int64_t sigma_sq;
  uint32_t p;
} orbidx_topology;

typedef struct orbidx_rational orbidx_rational;
typedef struct orbidx_cyclotomic orbidx_cyclotomic;
typedef struct orbidx_cohom orbidx_cohom;
typedef struct orbidx_report orbidx_report;

ORBIDX_API const char* orbidx_version(void);
ORBIDX_API const char* orbidx_status_name(orbidx_status status);
ORBIDX_API const char* orbidx_last_error_message(void);
ORBIDX_API void orbidx_string_free(char* s);

/* ---- rationals ---- */
ORBIDX_API orbidx_status orbidx_rational_parse(const char* text, orbidx_rational** out);
ORBIDX_API orbidx_status orbidx_rational_from_int(int64_t num, int64_t den, orbidx_rational** out);
ORBIDX_API orbidx_status orbidx_rational_to_string(const orbidx_rational* r, char** out);
/* fails with ORBIDX_ERR_INVALID_ARGUMENT unless integral and in range */
ORBIDX_API orbidx_status orbidx_rational_to_int64(const orbidx_rational* r, int64_t* out);
ORBIDX_API orbidx_status orbidx_rational_add(const orbidx_rational* a, const orbidx_rational* b,
                                             orbidx_rational** out);
ORBIDX_API orbidx_status orbidx_rational_mul(const orbidx_rational* a, const orbidx_rational* b,
                                             orbidx_rational** out);
ORBIDX_API orbidx_status orbidx_rational_div(const orbidx_rational* a, const orbidx_rational* b,
                                             orbidx_rational** out);
/* *out is -1, 0 or 1 */
ORBIDX_API orbidx_status orbidx_rational_compare(const orbidx_rational* a, const orbidx_rational* b, int* out);
ORBIDX_API void orbidx_rational_free(orbidx_rational* r);

/* ---- cyclotomic field Q(zeta_p) ---- */
/* JSON array of decimal integer strings, ascending degree */
ORBIDX_API orbidx_status orbidx_cyclotomic_polynomial_json(uint32_t p, char** out);
ORBIDX_API orbidx_status orbidx_cyclotomic_from_rational(uint32_t p, const orbidx_rational* r,
                                                         orbidx_cyclotomic** out);
ORBIDX_API orbidx_status orbidx_cyclotomic_from_json(const char* json, orbidx_cyclotomic** out);
ORBIDX_API orbidx_status orbidx_zeta_power(uint32_t p, int64_t k, orbidx_cyclotomic** out);
ORBIDX_API orbidx_status orbidx_cos_of(uint32_t p, int64_t j, orbidx_cyclotomic** out);
ORBIDX_API orbidx_status orbidx_sin_times_i_of(uint32_t p, int64_t j, orbidx_cyclotomic** out);
ORBIDX_API orbidx_status orbidx_cyclotomic_add(const orbidx_cyclotomic* a, const orbidx_cyclotomic* b,
                                               orbidx_cyclotomic** out);
ORBIDX_API orbidx_status orbidx_cyclotomic_mul(const orbidx_cyclotomic* a, const orbidx_cyclotomic* b,
                                               orbidx_cyclotomic** out);
ORBIDX_API orbidx_status orbidx_cyclotomic_inverse(const orbidx_cyclotomic* a, orbidx_cyclotomic** out);
/* ORBIDX_ERR_NOT_RATIONAL when a nonconstant coefficient survives */
ORBIDX_API orbidx_status orbidx_cyclotomic_as_rational(const orbidx_cyclotomic* a, orbidx_rational** out);
ORBIDX_API orbidx_status orbidx_cyclotomic_equal(const orbidx_cyclotomic* a, const orbidx_cyclotomic* b,
                                                 int* out);
/* {"order": p, "coeffs": ["a0/b0", ...]} */
ORBIDX_API orbidx_status orbidx_cyclotomic_to_json(const orbidx_cyclotomic* a, char** out);
ORBIDX_API void orbidx_cyclotomic_free(orbidx_cyclotomic* a);

/* sum over j = 1..p-1 of cos, cos^2 and 1/(1 - cos) at 2 pi j / p, p >= 2 */
ORBIDX_API orbidx_status orbidx_trig_sums(uint32_t p, orbidx_rational** sum_cos, orbidx_rational** sum_cos_sq,
                                          orbidx_rational** sum_inv_one_minus_cos);

/* ---- truncated cohomology classes over Q(zeta_p) ---- */
/* coeffs in orbidx_monomial order; all must share order p */
ORBIDX_API orbidx_status orbidx_cohom_from_coefficients(const orbidx_cyclotomic* const coeffs[6],
                                                        orbidx_cohom** out);
/* ch_gamma of a bundle at gamma_j in Z/p */
ORBIDX_API orbidx_status orbidx_character(orbidx_bundle bundle, uint32_t p, uint32_t j, orbidx_cohom** out);
ORBIDX_API orbidx_status orbidx_cohom_coefficient(const orbidx_cohom* a, orbidx_monomial m,
                                                  orbidx_cyclotomic** out);
ORBIDX_API orbidx_status orbidx_cohom_add(const orbidx_cohom* a, const orbidx_cohom* b, orbidx_cohom** out);
ORBIDX_API orbidx_status orbidx_cohom_mul(const orbidx_cohom* a, const orbidx_cohom* b, orbidx_cohom** out);
ORBIDX_API orbidx_status orbidx_cohom_invert_unit(const orbidx_cohom* a, orbidx_cohom** out);
ORBIDX_API orbidx_status orbidx_cohom_divide_by_e(const orbidx_cohom* a, orbidx_cohom** out);
/* <a, [Sigma]> with <e,[Sigma]> = chi_sigma, <h,[Sigma]> = sigma_sq / p */
ORBIDX_API orbidx_status orbidx_cohom_pair(const orbidx_cohom* a, int64_t chi_sigma, int64_t sigma_sq,
                                           orbidx_cyclotomic** out);
/* {"1": s, "e": s, "h": s, "ee": s, "eh": s, "hh": s} */
ORBIDX_API orbidx_status orbidx_cohom_to_json(const orbidx_cohom* a, char** out);
ORBIDX_API void orbidx_cohom_free(orbidx_cohom* a);
/* every character at every group element of Z/p, as a JSON document */
ORBIDX_API orbidx_status orbidx_character_dump_json(uint32_t p, char** out);

/* ---- index ---- */
ORBIDX_API orbidx_status orbidx_correction_sum(uint32_t p, orbidx_rational** coeff_e, orbidx_rational** coeff_h);
ORBIDX_API orbidx_status orbidx_correction_sum_closed_form(uint32_t p, orbidx_rational** coeff_e,
                                                           orbidx_rational** coeff_h);
/* {"p", "brute_force": {"e","h"}, "closed_form": {"e","h"} | null, "agree", "summed_class"} */
ORBIDX_API orbidx_status orbidx_correction_json(uint32_t p, char** out);
ORBIDX_API orbidx_status orbidx_index(const orbidx_topology* d, orbidx_duality dual, orbidx_route route,
                                      int64_t* out);
/* {"index": n, "route": ..., "correction": {"e", "h"}, "inputs": {...}} */
ORBIDX_API orbidx_status orbidx_index_json(const orbidx_topology* d, orbidx_duality dual, orbidx_route route,
                                           char** out);
ORBIDX_API orbidx_status orbidx_index_smooth(int64_t chi_m, int64_t tau_m, orbidx_duality dual,
                                             orbidx_rational** out);
/* cone angle 2 pi beta, beta > 0 */
ORBIDX_API orbidx_status orbidx_orbifold_characteristics(int64_t chi_m, int64_t tau_m, int64_t chi_sigma,
                                                         int64_t sigma_sq, const orbidx_rational* beta,
                                                         orbidx_rational** chi_orb, orbidx_rational** tau_orb);

/* ---- applications ---- */
/* j: genus or crosscap count, ignored for the sphere */
ORBIDX_API orbidx_status orbidx_conf_dim(orbidx_surface kind, uint32_t j, int64_t* out);
ORBIDX_API orbidx_status orbidx_h0_bound(orbidx_surface kind, uint32_t j, int64_t* out);
/* Writes up to `capacity` values; *count receives the full length. Passing
 * capacity 0 queries the length. ORBIDX_ERR_BUFFER_TOO_SMALL if truncated. */
ORBIDX_API orbidx_status orbidx_whitney_massey_values(uint32_t j, int64_t* values, size_t capacity,
                                                      size_t* count);
ORBIDX_API orbidx_status orbidx_feasible_self_intersections(uint32_t j, int64_t* values, size_t capacity,
                                                            size_t* count);
/* {"j", "surface", "euler_char", "massey", "bound", "h0_bound", "feasible"} */
ORBIDX_API orbidx_status orbidx_surfaces_json(uint32_t j, char** out);

ORBIDX_API orbidx_status orbidx_orientable_verdict(uint32_t genus, orbidx_report** out);
ORBIDX_API orbidx_status orbidx_hitchin_report(uint32_t k, orbidx_report** out);
ORBIDX_API orbidx_status orbidx_lebrun_report(uint32_t n, uint32_t p, orbidx_report** out);
ORBIDX_API orbidx_status orbidx_ricci_flat_report(const orbidx_topology* d, orbidx_report** out);
ORBIDX_API orbidx_status orbidx_ricci_flat_moduli_dim(const orbidx_topology* d, int64_t* out);

ORBIDX_API orbidx_status orbidx_report_index(const orbidx_report* r, int64_t* out);
/* known flags are 0 when the dimension is not determined */
ORBIDX_API orbidx_status orbidx_report_dims(const orbidx_report* r, int64_t* dim_h0, int64_t* dim_h1,
                                            int* h1_known, int64_t* dim_h2, int* h2_known);
/* "rigid", "moduli_dimension", "nonexistence" or "inconclusive"; owned by the report */
ORBIDX_API const char* orbidx_report_verdict(const orbidx_report* r);
ORBIDX_API orbidx_status orbidx_report_to_json(const orbidx_report* r, char** out);
ORBIDX_API void orbidx_report_free(orbidx_report* r);

/* ---- verification ---- */
/* Runs every consistency suite for p in [2, p_max]. *all_passed is 0 on any
 * failure; the call itself still returns ORBIDX_OK. */
ORBIDX_API orbidx_status orbidx_verify(uint32_t p_max, uint32_t threads, char** report_json, int* all_passed);

/* Test hook: corrupt a constructor so verification can be seen to fail. */
ORBIDX_API orbidx_status orbidx_debug_set_fault(orbidx_fault fault);

#ifdef __cplusplus
}
#endif

#endif /* ORBIDX_ORBIDX_H */
