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

#ifndef ORBIDX_APPLICATIONS_HPP
#define ORBIDX_APPLICATIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbidx/index.hpp"
#include "orbidx/rational.hpp"

namespace orbidx {

// Closed surface: sphere, connected sum of j tori, or of j projective planes.
struct SurfaceKind {
  enum class Type { sphere, orientable, non_orientable };
  Type type = Type::sphere;
  std::uint32_t j = 0;

  static SurfaceKind sphere() { return {Type::sphere, 0}; }
  static SurfaceKind orientable(std::uint32_t genus);
  static SurfaceKind non_orientable(std::uint32_t crosscaps);

  std::int64_t euler_char() const;
  std::string name() const;
};

enum class Verdict { rigid, moduli_dimension, nonexistence, inconclusive };
std::string_view verdict_name(Verdict v) noexcept;

struct ModuliReport {
  std::string example;
  TopologicalData data;
  Duality duality = Duality::sd;
  std::int64_t index = 0;
  std::int64_t dim_h0 = 0;
  std::optional<std::int64_t> dim_h1;
  std::optional<std::int64_t> dim_h2;
  std::optional<std::int64_t> h0_bound;
  std::optional<std::int64_t> moduli_dim;
  Verdict verdict = Verdict::inconclusive;
  // Analytic inputs taken as given, e.g. "unobstructed", "dim_h0=1".
  std::vector<std::string> assumptions;

  // dim_h0 - dim_h1 + dim_h2 == index whenever both are known.
  bool euler_identity_holds() const;
};

// Dimension bound for the conformal group of Sigma.
std::int64_t conf_dim(const SurfaceKind& k);
// conf_dim + 5
std::int64_t h0_bound(const SurfaceKind& k);

// Self-intersections realizable by j#RP^2 in S^4: -2j, -2j + 4, ..., 2j.
std::vector<std::int64_t> whitney_massey_values(std::uint32_t j);
// Upper bound on [Sigma]^2 from index_SD(S^4, j#RP^2) <= h0_bound:
// -3/4 (j = 1), -2 (j = 2), -1/2 - j (j >= 3).
Rational self_intersection_bound(std::uint32_t j);
// Massey values not exceeding that bound.
std::vector<std::int64_t> feasible_self_intersections(std::uint32_t j);

// Genus-j surface in S^4; j = 0 is the sphere.
ModuliReport orientable_verdict(std::uint32_t j);
// Hitchin's metrics on (S^4, RP^2), cone angle 2 pi / (k - 2), k >= 3.
ModuliReport hitchin_report(std::uint32_t k);
// LeBrun's metrics on n#CP^2 with Sigma = S^2, cone order p >= 2.
ModuliReport lebrun_report(std::uint32_t n, std::uint32_t p);
// -index_closed_form(d, ASD); the caller vouches for the parallel-section
// hypotheses.
std::int64_t ricci_flat_moduli_dim(const TopologicalData& d);
ModuliReport ricci_flat_report(const TopologicalData& d);

}  // namespace orbidx

#endif  // ORBIDX_APPLICATIONS_HPP
