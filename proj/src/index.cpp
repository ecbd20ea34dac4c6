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

#include "orbidx/index.hpp"

#include <map>
#include <mutex>
#include <string>

#include "orbidx/error.hpp"

namespace orbidx {

namespace {

// correction_at(gamma) at the generator of each order m, and the summed class
// per p. Skipped while a fault is injected so corrupted values never persist.
struct CorrectionCache {
  std::mutex mu;
  std::map<std::uint32_t, CyclotomicClass> at_generator;
  std::map<std::uint32_t, RationalClass> summed;
};

CorrectionCache& cache() {
  static CorrectionCache c;
  return c;
}

bool caching() { return current_fault() == Fault::none; }

CyclotomicClass correction_at_generator(std::uint32_t m) {
  auto& c = cache();
  if (caching()) {
    std::lock_guard lock(c.mu);
    if (auto it = c.at_generator.find(m); it != c.at_generator.end()) return it->second;
  }
  CyclotomicClass value = correction_at(GroupElement(m, 1));
  if (caching()) {
    std::lock_guard lock(c.mu);
    c.at_generator.emplace(m, value);
  }
  return value;
}

RationalClass rational_or_internal(const CyclotomicClass& sum, std::uint32_t p) {
  try {
    return to_rational_class(sum);
  } catch (const Error& e) {
    fail(Errc::internal, "group-summed correction at p = " + std::to_string(p) + ": " + e.what());
  }
}

Rational pair_rational(const CorrectionSum& c, const TopologicalData& d) {
  return c.coeff_e * Rational(d.chi_sigma) + c.coeff_h * d.sigma_hat_sq();
}

std::int64_t integral_or_internal(const Rational& r, const char* route) {
  if (!r.is_integer())
    fail(Errc::internal, std::string(route) + " index " + r.to_string() + " is not an integer");
  return r.to_int64();
}

}  // namespace

void TopologicalData::validate() const {
  require(p >= 1, Errc::invalid_argument, "cone order p must be >= 1");
  require((chi_m - tau_m) % 2 == 0, Errc::invalid_argument,
          "chi(M) and tau(M) must have the same parity (chi = " + std::to_string(chi_m) +
              ", tau = " + std::to_string(tau_m) + ")");
}

std::string_view duality_name(Duality d) noexcept { return d == Duality::asd ? "asd" : "sd"; }

std::string_view route_name(Route r) noexcept {
  switch (r) {
    case Route::kawasaki: return "kawasaki";
    case Route::closed_form: return "closed_form";
    case Route::smooth: return "smooth";
  }
  return "?";
}

CyclotomicClass correction_at(const GroupElement& g) {
  require(!g.is_identity(), Errc::invalid_argument,
          "the identity has no fixed-point correction (its Thom character is not a unit)");
  const CyclotomicClass quotient = divide_by_e(ch_symbol(g));
  return quotient * invert_unit(ch_thom(g)) * a_hat_squared(Cyclotomic(g.order()));
}

RationalClass summed_correction(std::uint32_t p) {
  require(p >= 1, Errc::invalid_argument, "cone order p must be >= 1");
  auto& c = cache();
  if (caching()) {
    std::lock_guard lock(c.mu);
    if (auto it = c.summed.find(p); it != c.summed.end()) return it->second;
  }
  CyclotomicClass sum{Cyclotomic(p)};
  for (Monomial mono : kMonomials)
    sum[mono] = sum_over_nontrivial(p, [mono](std::uint32_t m) { return correction_at_generator(m)[mono]; });
  RationalClass result = rational_or_internal(sum, p);
  result.scale(Rational(1, static_cast<std::int64_t>(p)));
  if (caching()) {
    std::lock_guard lock(c.mu);
    c.summed.emplace(p, result);
  }
  return result;
}

RationalClass summed_correction_direct(std::uint32_t p) {
  require(p >= 1, Errc::invalid_argument, "cone order p must be >= 1");
  CyclotomicClass sum{Cyclotomic(p)};
  for (std::uint32_t j = 1; j < p; ++j) sum += correction_at(GroupElement(p, j));
  RationalClass result = rational_or_internal(sum, p);
  result.scale(Rational(1, static_cast<std::int64_t>(p)));
  return result;
}

CorrectionSum correction_sum(std::uint32_t p) {
  RationalClass s = summed_correction(p);
  return {s.ce(), s.ch()};
}

CorrectionSum correction_sum_closed_form(std::uint32_t p) {
  require(p >= 2, Errc::invalid_argument,
          "the closed-form correction needs p >= 2 (p = 1 is the empty sum)");
  const Rational n(p);
  return {-(7 * n - 15) / (2 * n), (Rational(4) - Rational(5, 6) * (n * n - 1)) / n};
}

TopologicalData dualize(const TopologicalData& d, Duality dual) {
  if (dual == Duality::asd) return d;
  TopologicalData r = d;
  r.tau_m = -d.tau_m;
  r.sigma_sq = -d.sigma_sq;
  return r;
}

std::int64_t index_kawasaki(const TopologicalData& d, Duality dual) {
  d.validate();
  const TopologicalData a = dualize(d, dual);
  const Rational n(a.p);
  Rational index = Rational(15 * a.chi_m + 29 * a.tau_m) / 2;
  index -= Rational(15, 2) * (Rational(1) - n.inverse()) * Rational(a.chi_sigma);
  index -= Rational(29, 6) * ((n * n - 1) / n) * a.sigma_hat_sq();
  index -= pair_rational(correction_sum(a.p), a);
  return integral_or_internal(index, "Kawasaki");
}

std::int64_t index_closed_form(const TopologicalData& d, Duality dual) {
  d.validate();
  require(d.p >= 2, Errc::invalid_argument,
          "the closed form holds for cone order p >= 2; p = 1 is smooth, use the smooth route");
  const std::int64_t sign = dual == Duality::asd ? 1 : -1;
  const Rational index = Rational(15 * d.chi_m + sign * 29 * d.tau_m) / 2 -
                         Rational(4 * d.chi_sigma) - Rational(sign * 4 * d.sigma_sq);
  return integral_or_internal(index, "closed-form");
}

Rational index_smooth(std::int64_t chi_m, std::int64_t tau_m, Duality dual) {
  const std::int64_t sign = dual == Duality::asd ? 1 : -1;
  return Rational(15 * chi_m + sign * 29 * tau_m) / 2;
}

Rational chi_orb(std::int64_t chi_m, const Rational& beta, std::int64_t chi_sigma) {
  require(beta.sign() > 0, Errc::invalid_argument, "beta must be positive");
  return Rational(chi_m) - (Rational(1) - beta) * Rational(chi_sigma);
}

Rational tau_orb(std::int64_t tau_m, const Rational& beta, std::int64_t sigma_sq) {
  require(beta.sign() > 0, Errc::invalid_argument, "beta must be positive");
  return Rational(tau_m) - Rational(1, 3) * (Rational(1) - beta * beta) * Rational(sigma_sq);
}

IndexResult compute_index(const TopologicalData& d, Duality dual, Route route) {
  d.validate();
  IndexResult r;
  r.route = route;
  r.duality = dual;
  r.inputs = d;
  switch (route) {
    case Route::kawasaki:
      r.index = index_kawasaki(d, dual);
      r.correction = correction_sum(d.p);
      break;
    case Route::closed_form:
      r.index = index_closed_form(d, dual);
      r.correction = correction_sum_closed_form(d.p);
      break;
    case Route::smooth:
      require(d.p == 1, Errc::invalid_argument, "the smooth route applies only to p = 1");
      r.index = integral_or_internal(index_smooth(d.chi_m, d.tau_m, dual), "smooth");
      r.correction = {Rational(0), Rational(0)};
      break;
  }
  return r;
}

}  // namespace orbidx
