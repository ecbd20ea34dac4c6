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

#ifndef ORBIDX_INDEX_HPP
#define ORBIDX_INDEX_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "orbidx/bundles.hpp"
#include "orbidx/cohomology.hpp"
#include "orbidx/rational.hpp"

namespace orbidx {

// Topology of the pair (M, Sigma) together with the cone order p (cone angle
// 2 pi / p). [Sigma-hat]^2 = sigma_sq / p.
struct TopologicalData {
  std::int64_t chi_m = 0;
  std::int64_t tau_m = 0;
  std::int64_t chi_sigma = 0;
  std::int64_t sigma_sq = 0;
  std::uint32_t p = 1;

  Rational sigma_hat_sq() const { return Rational(sigma_sq, static_cast<std::int64_t>(p)); }
  PairingData pairing() const { return PairingData::from_self_intersection(chi_sigma, sigma_sq, p); }
  // p >= 1 and chi(M) = tau(M) mod 2, as for any closed oriented 4-manifold.
  void validate() const;

  friend bool operator==(const TopologicalData&, const TopologicalData&) = default;
};

enum class Duality { asd, sd };
enum class Route { kawasaki, closed_form, smooth };

std::string_view duality_name(Duality d) noexcept;
std::string_view route_name(Route r) noexcept;

// Degree-2 coefficients of (1/p) sum_{j=1}^{p-1} ch(i* sigma) / (ch(thom) e) * A-hat^2.
struct CorrectionSum {
  Rational coeff_e;
  Rational coeff_h;

  friend bool operator==(const CorrectionSum&, const CorrectionSum&) = default;
};

// Per-element fixed-point term; rejects the identity.
CyclotomicClass correction_at(const GroupElement& g);

// The whole summed class (1/p) sum_j correction_at(gamma_j) with every
// coefficient checked rational. Terms come from one evaluation per element
// order via Galois conjugation; p = 1 is the empty sum.
RationalClass summed_correction(std::uint32_t p);
// Same sum, evaluating the full pipeline in Q(zeta_p) separately for every j.
// Slow; kept as an independent cross-check.
RationalClass summed_correction_direct(std::uint32_t p);

CorrectionSum correction_sum(std::uint32_t p);
// (-(7p - 15) / (2p), (4 - 5 (p^2 - 1) / 6) / p), valid for p >= 2 only.
CorrectionSum correction_sum_closed_form(std::uint32_t p);

// The ASD route at (tau, sigma_sq) negated gives the SD index.
TopologicalData dualize(const TopologicalData& d, Duality dual);

// (1/2)(15 chi +- 29 tau) - (15/2)(1 - 1/p) chi(Sigma)
//   - (29/6)((p^2 - 1)/p) [Sigma-hat]^2 - <correction, [Sigma]>
std::int64_t index_kawasaki(const TopologicalData& d, Duality dual);
// ASD: (1/2)(15 chi + 29 tau) - 4 chi(Sigma) - 4 [Sigma]^2
// SD:  (1/2)(15 chi - 29 tau) - 4 chi(Sigma) + 4 [Sigma]^2
// Rejects p = 1, where the smooth formula applies instead.
std::int64_t index_closed_form(const TopologicalData& d, Duality dual);
Rational index_smooth(std::int64_t chi_m, std::int64_t tau_m, Duality dual);

// Orbifold Euler characteristic and signature of an edge-cone metric with
// cone angle 2 pi beta.
Rational chi_orb(std::int64_t chi_m, const Rational& beta, std::int64_t chi_sigma);
Rational tau_orb(std::int64_t tau_m, const Rational& beta, std::int64_t sigma_sq);

struct IndexResult {
  std::int64_t index = 0;
  Route route = Route::kawasaki;
  Duality duality = Duality::asd;
  TopologicalData inputs;
  CorrectionSum correction;
};

// Dispatches to one route; Route::smooth requires p == 1.
IndexResult compute_index(const TopologicalData& d, Duality dual, Route route);

}  // namespace orbidx

#endif  // ORBIDX_INDEX_HPP
