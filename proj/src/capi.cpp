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

#include "orbidx/orbidx.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>

#include "orbidx/applications.hpp"
#include "orbidx/bundles.hpp"
#include "orbidx/error.hpp"
#include "orbidx/index.hpp"
#include "orbidx/serialize.hpp"
#include "orbidx/trig.hpp"
#include "orbidx/verify.hpp"

struct orbidx_rational {
  orbidx::Rational v;
};
struct orbidx_cyclotomic {
  orbidx::Cyclotomic v;
};
struct orbidx_cohom {
  orbidx::CyclotomicClass v;
};
struct orbidx_report {
  orbidx::ModuliReport v;
  std::string verdict;
};

namespace {

using namespace orbidx;

thread_local std::string t_last_error;

struct NullArgument {};

orbidx_status to_status(Errc code) { return static_cast<orbidx_status>(static_cast<int>(code)); }

template <typename F>
orbidx_status guard(F&& body) {
  try {
    body();
    t_last_error.clear();
    return ORBIDX_OK;
  } catch (const NullArgument&) {
    t_last_error = "null pointer argument";
    return ORBIDX_ERR_NULL_POINTER;
  } catch (const Error& e) {
    t_last_error = e.what();
    return to_status(e.code());
  } catch (const nlohmann::json::exception& e) {
    t_last_error = e.what();
    return ORBIDX_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    t_last_error = "out of memory";
    return ORBIDX_ERR_INTERNAL;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return ORBIDX_ERR_INTERNAL;
  }
}

template <typename... T>
void non_null(const T*... ptrs) {
  if (((ptrs == nullptr) || ...)) throw NullArgument{};
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

char* dump(const json& j) { return dup_string(j.dump()); }

TopologicalData topology(const orbidx_topology* d) {
  non_null(d);
  return {d->chi_m, d->tau_m, d->chi_sigma, d->sigma_sq, d->p};
}

Duality duality(orbidx_duality d) {
  switch (d) {
    case ORBIDX_ASD: return Duality::asd;
    case ORBIDX_SD: return Duality::sd;
  }
  fail(Errc::invalid_argument, "unknown duality");
}

Route route(orbidx_route r) {
  switch (r) {
    case ORBIDX_ROUTE_KAWASAKI: return Route::kawasaki;
    case ORBIDX_ROUTE_CLOSED_FORM: return Route::closed_form;
    case ORBIDX_ROUTE_SMOOTH: return Route::smooth;
  }
  fail(Errc::invalid_argument, "unknown route");
}

SurfaceKind surface(orbidx_surface kind, std::uint32_t j) {
  switch (kind) {
    case ORBIDX_SURFACE_SPHERE: return SurfaceKind::sphere();
    case ORBIDX_SURFACE_ORIENTABLE: return SurfaceKind::orientable(j);
    case ORBIDX_SURFACE_NON_ORIENTABLE: return SurfaceKind::non_orientable(j);
  }
  fail(Errc::invalid_argument, "unknown surface kind");
}

Monomial monomial(orbidx_monomial m) {
  if (m < ORBIDX_MONO_ONE || m > ORBIDX_MONO_HH) fail(Errc::invalid_argument, "unknown monomial");
  return static_cast<Monomial>(static_cast<std::size_t>(m));
}

CyclotomicClass character(orbidx_bundle b, std::uint32_t p, std::uint32_t j) {
  const GroupElement g(p, j);
  if (b == ORBIDX_BUNDLE_CORRECTION) return correction_at(g);
  if (b < ORBIDX_BUNDLE_THETA1 || b > ORBIDX_BUNDLE_THOM) fail(Errc::invalid_argument, "unknown bundle");
  return ch(static_cast<Bundle>(static_cast<int>(b)), g);
}

orbidx_rational* make(Rational r) { return new orbidx_rational{std::move(r)}; }
orbidx_cyclotomic* make(Cyclotomic c) { return new orbidx_cyclotomic{std::move(c)}; }
orbidx_cohom* make(CyclotomicClass c) { return new orbidx_cohom{std::move(c)}; }
orbidx_report* make(ModuliReport r) {
  std::string v(verdict_name(r.verdict));
  return new orbidx_report{std::move(r), std::move(v)};
}

orbidx_status copy_list(const std::vector<std::int64_t>& list, int64_t* values, size_t capacity, size_t* count) {
  *count = list.size();
  if (capacity == 0) return ORBIDX_OK;
  non_null(values);
  const std::size_t n = std::min(capacity, list.size());
  for (std::size_t i = 0; i < n; ++i) values[i] = list[i];
  if (capacity < list.size()) {
    t_last_error = "buffer holds " + std::to_string(capacity) + " of " + std::to_string(list.size()) + " values";
    return ORBIDX_ERR_BUFFER_TOO_SMALL;
  }
  return ORBIDX_OK;
}

}  // namespace

extern "C" {

const char* orbidx_version(void) { return "1.0.0"; }

const char* orbidx_status_name(orbidx_status status) {
  switch (status) {
    case ORBIDX_OK: return "ok";
    case ORBIDX_ERR_NULL_POINTER: return "null pointer";
    case ORBIDX_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    default: break;
  }
  if (status >= ORBIDX_ERR_INVALID_ARGUMENT && status <= ORBIDX_ERR_INTERNAL)
    return errc_name(static_cast<Errc>(static_cast<int>(status)));
  return "unknown status";
}

const char* orbidx_last_error_message(void) { return t_last_error.c_str(); }

void orbidx_string_free(char* s) { std::free(s); }

// ---- rationals ----

orbidx_status orbidx_rational_parse(const char* text, orbidx_rational** out) {
  return guard([&] {
    non_null(text, out);
    *out = make(Rational::parse(text));
  });
}

orbidx_status orbidx_rational_from_int(int64_t num, int64_t den, orbidx_rational** out) {
  return guard([&] {
    non_null(out);
    *out = make(Rational(num, den));
  });
}

orbidx_status orbidx_rational_to_string(const orbidx_rational* r, char** out) {
  return guard([&] {
    non_null(r, out);
    *out = dup_string(r->v.to_string());
  });
}

orbidx_status orbidx_rational_to_int64(const orbidx_rational* r, int64_t* out) {
  return guard([&] {
    non_null(r, out);
    *out = r->v.to_int64();
  });
}

orbidx_status orbidx_rational_add(const orbidx_rational* a, const orbidx_rational* b, orbidx_rational** out) {
  return guard([&] {
    non_null(a, b, out);
    *out = make(a->v + b->v);
  });
}

orbidx_status orbidx_rational_mul(const orbidx_rational* a, const orbidx_rational* b, orbidx_rational** out) {
  return guard([&] {
    non_null(a, b, out);
    *out = make(a->v * b->v);
  });
}

orbidx_status orbidx_rational_div(const orbidx_rational* a, const orbidx_rational* b, orbidx_rational** out) {
  return guard([&] {
    non_null(a, b, out);
    *out = make(a->v / b->v);
  });
}

orbidx_status orbidx_rational_compare(const orbidx_rational* a, const orbidx_rational* b, int* out) {
  return guard([&] {
    non_null(a, b, out);
    auto c = a->v <=> b->v;
    *out = c < 0 ? -1 : (c > 0 ? 1 : 0);
  });
}

void orbidx_rational_free(orbidx_rational* r) { delete r; }

// ---- cyclotomic ----

orbidx_status orbidx_cyclotomic_polynomial_json(uint32_t p, char** out) {
  return guard([&] {
    non_null(out);
    *out = dump(to_json(cyclotomic_polynomial(p)));
  });
}

orbidx_status orbidx_cyclotomic_from_rational(uint32_t p, const orbidx_rational* r, orbidx_cyclotomic** out) {
  return guard([&] {
    non_null(r, out);
    require(p >= 1, Errc::invalid_argument, "cyclotomic order must be >= 1");
    *out = make(Cyclotomic(p, r->v));
  });
}

orbidx_status orbidx_cyclotomic_from_json(const char* text, orbidx_cyclotomic** out) {
  return guard([&] {
    non_null(text, out);
    *out = make(cyclotomic_from_json(json::parse(text)));
  });
}

orbidx_status orbidx_zeta_power(uint32_t p, int64_t k, orbidx_cyclotomic** out) {
  return guard([&] {
    non_null(out);
    *out = make(zeta_power(p, k));
  });
}

orbidx_status orbidx_cos_of(uint32_t p, int64_t j, orbidx_cyclotomic** out) {
  return guard([&] {
    non_null(out);
    require(p >= 1, Errc::invalid_argument, "cyclotomic order must be >= 1");
    *out = make(cos_of(p, j));
  });
}

orbidx_status orbidx_sin_times_i_of(uint32_t p, int64_t j, orbidx_cyclotomic** out) {
  return guard([&] {
    non_null(out);
    require(p >= 1, Errc::invalid_argument, "cyclotomic order must be >= 1");
    *out = make(sin_times_i_of(p, j));
  });
}

orbidx_status orbidx_cyclotomic_add(const orbidx_cyclotomic* a, const orbidx_cyclotomic* b,
                                    orbidx_cyclotomic** out) {
  return guard([&] {
    non_null(a, b, out);
    *out = make(a->v + b->v);
  });
}

orbidx_status orbidx_cyclotomic_mul(const orbidx_cyclotomic* a, const orbidx_cyclotomic* b,
                                    orbidx_cyclotomic** out) {
  return guard([&] {
    non_null(a, b, out);
    *out = make(cyc_mul(a->v, b->v));
  });
}

orbidx_status orbidx_cyclotomic_inverse(const orbidx_cyclotomic* a, orbidx_cyclotomic** out) {
  return guard([&] {
    non_null(a, out);
    *out = make(cyc_inverse(a->v));
  });
}

orbidx_status orbidx_cyclotomic_as_rational(const orbidx_cyclotomic* a, orbidx_rational** out) {
  return guard([&] {
    non_null(a, out);
    auto r = a->v.as_rational();
    if (!r) fail(Errc::not_rational, "element has nonconstant coefficients");
    *out = make(*r);
  });
}

orbidx_status orbidx_cyclotomic_equal(const orbidx_cyclotomic* a, const orbidx_cyclotomic* b, int* out) {
  return guard([&] {
    non_null(a, b, out);
    *out = a->v == b->v ? 1 : 0;
  });
}

orbidx_status orbidx_cyclotomic_to_json(const orbidx_cyclotomic* a, char** out) {
  return guard([&] {
    non_null(a, out);
    *out = dump(to_json(a->v));
  });
}

void orbidx_cyclotomic_free(orbidx_cyclotomic* a) { delete a; }

orbidx_status orbidx_trig_sums(uint32_t p, orbidx_rational** sum_cos, orbidx_rational** sum_cos_sq,
                               orbidx_rational** sum_inv_one_minus_cos) {
  return guard([&] {
    non_null(sum_cos, sum_cos_sq, sum_inv_one_minus_cos);
    TrigSums t = trig_sums(p);
    *sum_cos = make(t.sum_cos);
    *sum_cos_sq = make(t.sum_cos_sq);
    *sum_inv_one_minus_cos = make(t.sum_inv_one_minus_cos);
  });
}

// ---- cohomology ----

orbidx_status orbidx_cohom_from_coefficients(const orbidx_cyclotomic* const coeffs[6], orbidx_cohom** out) {
  return guard([&] {
    non_null(coeffs, out);
    for (int i = 0; i < 6; ++i) non_null(coeffs[i]);
    const std::uint32_t p = coeffs[0]->v.order();
    for (int i = 1; i < 6; ++i)
      if (coeffs[i]->v.order() != p) fail(Errc::order_mismatch, "coefficients of different orders");
    *out = make(CyclotomicClass(coeffs[0]->v, coeffs[1]->v, coeffs[2]->v, coeffs[3]->v, coeffs[4]->v,
                                coeffs[5]->v));
  });
}

orbidx_status orbidx_character(orbidx_bundle bundle, uint32_t p, uint32_t j, orbidx_cohom** out) {
  return guard([&] {
    non_null(out);
    *out = make(character(bundle, p, j));
  });
}

orbidx_status orbidx_cohom_coefficient(const orbidx_cohom* a, orbidx_monomial m, orbidx_cyclotomic** out) {
  return guard([&] {
    non_null(a, out);
    *out = make(a->v[monomial(m)]);
  });
}

orbidx_status orbidx_cohom_add(const orbidx_cohom* a, const orbidx_cohom* b, orbidx_cohom** out) {
  return guard([&] {
    non_null(a, b, out);
    *out = make(a->v + b->v);
  });
}

orbidx_status orbidx_cohom_mul(const orbidx_cohom* a, const orbidx_cohom* b, orbidx_cohom** out) {
  return guard([&] {
    non_null(a, b, out);
    *out = make(a->v * b->v);
  });
}

orbidx_status orbidx_cohom_invert_unit(const orbidx_cohom* a, orbidx_cohom** out) {
  return guard([&] {
    non_null(a, out);
    *out = make(invert_unit(a->v));
  });
}

orbidx_status orbidx_cohom_divide_by_e(const orbidx_cohom* a, orbidx_cohom** out) {
  return guard([&] {
    non_null(a, out);
    *out = make(divide_by_e(a->v));
  });
}

orbidx_status orbidx_cohom_pair(const orbidx_cohom* a, int64_t chi_sigma, int64_t sigma_sq,
                                orbidx_cyclotomic** out) {
  return guard([&] {
    non_null(a, out);
    const auto pairing = PairingData::from_self_intersection(chi_sigma, sigma_sq, a->v.c0().order());
    *out = make(pair_with_sigma(a->v, pairing));
  });
}

orbidx_status orbidx_cohom_to_json(const orbidx_cohom* a, char** out) {
  return guard([&] {
    non_null(a, out);
    *out = dump(to_json(a->v));
  });
}

void orbidx_cohom_free(orbidx_cohom* a) { delete a; }

orbidx_status orbidx_character_dump_json(uint32_t p, char** out) {
  return guard([&] {
    non_null(out);
    require(p >= 1, Errc::invalid_argument, "group order must be >= 1");
    json elements = json::array();
    for (std::uint32_t j = 0; j < p; ++j) {
      const GroupElement g(p, j);
      json chars = json::object();
      for (int b = ORBIDX_BUNDLE_THETA1; b <= ORBIDX_BUNDLE_THOM; ++b) {
        const auto bundle = static_cast<Bundle>(b);
        chars[std::string(bundle_name(bundle))] = to_json(ch(bundle, g));
      }
      if (!g.is_identity()) chars["correction"] = to_json(correction_at(g));
      elements.push_back({{"j", j}, {"characters", std::move(chars)}});
    }
    *out = dump({{"p", p}, {"elements", std::move(elements)}});
  });
}

// ---- index ----

orbidx_status orbidx_correction_sum(uint32_t p, orbidx_rational** coeff_e, orbidx_rational** coeff_h) {
  return guard([&] {
    non_null(coeff_e, coeff_h);
    CorrectionSum c = correction_sum(p);
    *coeff_e = make(c.coeff_e);
    *coeff_h = make(c.coeff_h);
  });
}

orbidx_status orbidx_correction_sum_closed_form(uint32_t p, orbidx_rational** coeff_e, orbidx_rational** coeff_h) {
  return guard([&] {
    non_null(coeff_e, coeff_h);
    CorrectionSum c = correction_sum_closed_form(p);
    *coeff_e = make(c.coeff_e);
    *coeff_h = make(c.coeff_h);
  });
}

orbidx_status orbidx_correction_json(uint32_t p, char** out) {
  return guard([&] {
    non_null(out);
    const RationalClass summed = summed_correction(p);
    const CorrectionSum brute{summed.ce(), summed.ch()};
    json j = {{"p", p}, {"brute_force", to_json(brute)}};
    if (p >= 2) {
      const CorrectionSum closed = correction_sum_closed_form(p);
      j["closed_form"] = to_json(closed);
      j["agree"] = brute == closed;
    } else {
      j["closed_form"] = nullptr;
      j["agree"] = nullptr;
    }
    j["summed_class"] = to_json(summed);
    *out = dump(j);
  });
}

orbidx_status orbidx_index(const orbidx_topology* d, orbidx_duality dual, orbidx_route r, int64_t* out) {
  return guard([&] {
    non_null(out);
    *out = compute_index(topology(d), duality(dual), route(r)).index;
  });
}

orbidx_status orbidx_index_json(const orbidx_topology* d, orbidx_duality dual, orbidx_route r, char** out) {
  return guard([&] {
    non_null(out);
    *out = dump(to_json(compute_index(topology(d), duality(dual), route(r))));
  });
}

orbidx_status orbidx_index_smooth(int64_t chi_m, int64_t tau_m, orbidx_duality dual, orbidx_rational** out) {
  return guard([&] {
    non_null(out);
    *out = make(index_smooth(chi_m, tau_m, duality(dual)));
  });
}

orbidx_status orbidx_orbifold_characteristics(int64_t chi_m, int64_t tau_m, int64_t chi_sigma, int64_t sigma_sq,
                                              const orbidx_rational* beta, orbidx_rational** chi_out,
                                              orbidx_rational** tau_out) {
  return guard([&] {
    non_null(beta, chi_out, tau_out);
    Rational c = chi_orb(chi_m, beta->v, chi_sigma);
    Rational t = tau_orb(tau_m, beta->v, sigma_sq);
    *chi_out = make(std::move(c));
    *tau_out = make(std::move(t));
  });
}

// ---- applications ----

orbidx_status orbidx_conf_dim(orbidx_surface kind, uint32_t j, int64_t* out) {
  return guard([&] {
    non_null(out);
    *out = conf_dim(surface(kind, j));
  });
}

orbidx_status orbidx_h0_bound(orbidx_surface kind, uint32_t j, int64_t* out) {
  return guard([&] {
    non_null(out);
    *out = h0_bound(surface(kind, j));
  });
}

orbidx_status orbidx_whitney_massey_values(uint32_t j, int64_t* values, size_t capacity, size_t* count) {
  orbidx_status status = ORBIDX_OK;
  orbidx_status g = guard([&] {
    non_null(count);
    status = copy_list(whitney_massey_values(j), values, capacity, count);
  });
  return g != ORBIDX_OK ? g : status;
}

orbidx_status orbidx_feasible_self_intersections(uint32_t j, int64_t* values, size_t capacity, size_t* count) {
  orbidx_status status = ORBIDX_OK;
  orbidx_status g = guard([&] {
    non_null(count);
    status = copy_list(feasible_self_intersections(j), values, capacity, count);
  });
  return g != ORBIDX_OK ? g : status;
}

orbidx_status orbidx_surfaces_json(uint32_t j, char** out) {
  return guard([&] {
    non_null(out);
    const SurfaceKind kind = SurfaceKind::non_orientable(j);
    *out = dump({{"j", j},
                 {"surface", kind.name()},
                 {"euler_char", kind.euler_char()},
                 {"massey", whitney_massey_values(j)},
                 {"bound", to_json(self_intersection_bound(j))},
                 {"h0_bound", h0_bound(kind)},
                 {"feasible", feasible_self_intersections(j)}});
  });
}

orbidx_status orbidx_orientable_verdict(uint32_t genus, orbidx_report** out) {
  return guard([&] {
    non_null(out);
    *out = make(orientable_verdict(genus));
  });
}

orbidx_status orbidx_hitchin_report(uint32_t k, orbidx_report** out) {
  return guard([&] {
    non_null(out);
    *out = make(hitchin_report(k));
  });
}

orbidx_status orbidx_lebrun_report(uint32_t n, uint32_t p, orbidx_report** out) {
  return guard([&] {
    non_null(out);
    *out = make(lebrun_report(n, p));
  });
}

orbidx_status orbidx_ricci_flat_report(const orbidx_topology* d, orbidx_report** out) {
  return guard([&] {
    non_null(out);
    *out = make(ricci_flat_report(topology(d)));
  });
}

orbidx_status orbidx_ricci_flat_moduli_dim(const orbidx_topology* d, int64_t* out) {
  return guard([&] {
    non_null(out);
    *out = ricci_flat_moduli_dim(topology(d));
  });
}

orbidx_status orbidx_report_index(const orbidx_report* r, int64_t* out) {
  return guard([&] {
    non_null(r, out);
    *out = r->v.index;
  });
}

orbidx_status orbidx_report_dims(const orbidx_report* r, int64_t* dim_h0, int64_t* dim_h1, int* h1_known,
                                 int64_t* dim_h2, int* h2_known) {
  return guard([&] {
    non_null(r, dim_h0, dim_h1, h1_known, dim_h2, h2_known);
    *dim_h0 = r->v.dim_h0;
    *h1_known = r->v.dim_h1.has_value();
    *dim_h1 = r->v.dim_h1.value_or(0);
    *h2_known = r->v.dim_h2.has_value();
    *dim_h2 = r->v.dim_h2.value_or(0);
  });
}

const char* orbidx_report_verdict(const orbidx_report* r) { return r ? r->verdict.c_str() : nullptr; }

orbidx_status orbidx_report_to_json(const orbidx_report* r, char** out) {
  return guard([&] {
    non_null(r, out);
    *out = dump(to_json(r->v));
  });
}

void orbidx_report_free(orbidx_report* r) { delete r; }

// ---- verification ----

orbidx_status orbidx_verify(uint32_t p_max, uint32_t threads, char** report_json, int* all_passed) {
  return guard([&] {
    non_null(report_json, all_passed);
    VerificationReport r = run_verification(p_max, threads == 0 ? 1 : threads);
    *report_json = dump(to_json(r));
    *all_passed = r.all_passed() ? 1 : 0;
  });
}

orbidx_status orbidx_debug_set_fault(orbidx_fault fault) {
  return guard([&] {
    switch (fault) {
      case ORBIDX_FAULT_NONE: set_fault(Fault::none); return;
      case ORBIDX_FAULT_THOM_SIGN: set_fault(Fault::thom_sign); return;
    }
    fail(Errc::invalid_argument, "unknown fault");
  });
}

}  // extern "C"
