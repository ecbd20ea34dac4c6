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

#include "orbidx/applications.hpp"

#include <string>

#include "orbidx/error.hpp"

namespace orbidx {

namespace {

TopologicalData s4_with(std::int64_t chi_sigma, std::int64_t sigma_sq, std::uint32_t p) {
  return {2, 0, chi_sigma, sigma_sq, p};
}

}  // namespace

SurfaceKind SurfaceKind::orientable(std::uint32_t genus) {
  require(genus >= 1, Errc::invalid_argument, "orientable genus must be >= 1 (use sphere)");
  return {Type::orientable, genus};
}

SurfaceKind SurfaceKind::non_orientable(std::uint32_t crosscaps) {
  require(crosscaps >= 1, Errc::invalid_argument, "crosscap number must be >= 1");
  return {Type::non_orientable, crosscaps};
}

std::int64_t SurfaceKind::euler_char() const {
  switch (type) {
    case Type::sphere: return 2;
    case Type::orientable: return 2 - 2 * static_cast<std::int64_t>(j);
    case Type::non_orientable: return 2 - static_cast<std::int64_t>(j);
  }
  return 0;
}

std::string SurfaceKind::name() const {
  switch (type) {
    case Type::sphere: return "S^2";
    case Type::orientable: return j == 1 ? "T^2" : std::to_string(j) + "#T^2";
    case Type::non_orientable: return j == 1 ? "RP^2" : std::to_string(j) + "#RP^2";
  }
  return "?";
}

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::rigid: return "rigid";
    case Verdict::moduli_dimension: return "moduli_dimension";
    case Verdict::nonexistence: return "nonexistence";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

bool ModuliReport::euler_identity_holds() const {
  if (!dim_h1 || !dim_h2) return true;
  return dim_h0 - *dim_h1 + *dim_h2 == index;
}

std::int64_t conf_dim(const SurfaceKind& k) {
  switch (k.type) {
    case SurfaceKind::Type::sphere: return 6;
    case SurfaceKind::Type::orientable: return k.j == 1 ? 2 : 0;
    case SurfaceKind::Type::non_orientable: return k.j == 1 ? 3 : (k.j == 2 ? 2 : 0);
  }
  return 0;
}

std::int64_t h0_bound(const SurfaceKind& k) { return conf_dim(k) + 5; }

std::vector<std::int64_t> whitney_massey_values(std::uint32_t j) {
  require(j >= 1, Errc::invalid_argument, "crosscap number must be >= 1");
  const auto jj = static_cast<std::int64_t>(j);
  std::vector<std::int64_t> out;
  for (std::int64_t s = -2 * jj; s <= 2 * jj; s += 4) out.push_back(s);
  return out;
}

Rational self_intersection_bound(std::uint32_t j) {
  // index_SD = 7 + 4j + 4 [Sigma]^2 <= h0_bound(j#RP^2)
  const auto bound = h0_bound(SurfaceKind::non_orientable(j));
  return Rational(bound - 7 - 4 * static_cast<std::int64_t>(j), 4);
}

std::vector<std::int64_t> feasible_self_intersections(std::uint32_t j) {
  const Rational bound = self_intersection_bound(j);
  std::vector<std::int64_t> out;
  for (std::int64_t s : whitney_massey_values(j))
    if (Rational(s) <= bound) out.push_back(s);
  return out;
}

ModuliReport orientable_verdict(std::uint32_t j) {
  const SurfaceKind kind = j == 0 ? SurfaceKind::sphere() : SurfaceKind::orientable(j);
  ModuliReport r;
  r.example = "orientable";
  r.data = s4_with(kind.euler_char(), 0, 2);
  r.duality = Duality::sd;
  r.index = index_closed_form(r.data, Duality::sd);
  r.h0_bound = h0_bound(kind);
  r.dim_h2 = 0;
  r.assumptions = {"unobstructed", "Sigma=" + kind.name(), "[Sigma]^2=0"};
  // unobstructed: dim H0 - dim H1 = index, and dim H0 <= bound forces index <= bound
  if (r.index > *r.h0_bound) {
    r.verdict = Verdict::nonexistence;
  } else {
    r.verdict = Verdict::inconclusive;
  }
  r.dim_h0 = *r.h0_bound;
  r.assumptions.push_back("dim_h0<=" + std::to_string(*r.h0_bound));
  return r;
}

ModuliReport hitchin_report(std::uint32_t k) {
  require(k >= 3, Errc::invalid_argument, "Hitchin metrics need k >= 3");
  ModuliReport r;
  r.example = "hitchin";
  r.duality = Duality::sd;
  const std::uint32_t p = k - 2;
  r.data = s4_with(1, -2, p);
  // The index formula does not involve p; evaluate it at any cone order.
  r.index = index_closed_form(s4_with(1, -2, 2), Duality::sd);
  if (p >= 2) {
    const std::int64_t kawasaki = index_kawasaki(r.data, Duality::sd);
    if (kawasaki != r.index)
      fail(Errc::internal, "Hitchin index routes disagree at p = " + std::to_string(p));
  } else {
    r.assumptions.push_back("k=3: standard round metric, cone angle 2pi");
    r.assumptions.push_back("smooth_index=" +
                            std::to_string(index_kawasaki(r.data, Duality::sd)));
  }
  r.dim_h0 = 3;
  r.dim_h2 = 0;
  r.dim_h1 = r.dim_h0 + *r.dim_h2 - r.index;
  r.moduli_dim = *r.dim_h1;
  r.verdict = *r.dim_h1 == 0 ? Verdict::rigid : Verdict::moduli_dimension;
  r.assumptions.insert(r.assumptions.begin(), {"unobstructed", "dim_h0=3"});
  return r;
}

ModuliReport lebrun_report(std::uint32_t n, std::uint32_t p) {
  require(n >= 1, Errc::invalid_argument, "LeBrun metrics need n >= 1");
  require(p >= 2, Errc::invalid_argument, "LeBrun report needs cone order p >= 2");
  const auto nn = static_cast<std::int64_t>(n);
  ModuliReport r;
  r.example = "lebrun";
  r.duality = Duality::sd;
  r.data = {nn + 2, nn, 2, nn, p};
  r.index = index_closed_form(r.data, Duality::sd);
  if (index_kawasaki(r.data, Duality::sd) != r.index)
    fail(Errc::internal, "LeBrun index routes disagree at n = " + std::to_string(n));
  r.dim_h0 = 1;
  r.dim_h2 = 0;
  r.assumptions = {"unobstructed", "dim_h0=1", "Sigma=S^2"};
  if (n >= 3) {
    r.dim_h1 = r.dim_h0 + *r.dim_h2 - r.index;
    r.moduli_dim = *r.dim_h1;
    r.verdict = Verdict::moduli_dimension;
    r.assumptions.push_back("nearby self-dual deformations are S^1-equivariant");
  } else {
    r.verdict = Verdict::inconclusive;
  }
  return r;
}

std::int64_t ricci_flat_moduli_dim(const TopologicalData& d) {
  return -index_closed_form(d, Duality::asd);
}

ModuliReport ricci_flat_report(const TopologicalData& d) {
  ModuliReport r;
  r.example = "ricci-flat";
  r.data = d;
  r.duality = Duality::asd;
  r.index = index_closed_form(d, Duality::asd);
  r.dim_h0 = 0;
  r.dim_h2 = 0;
  r.dim_h1 = -r.index;
  r.assumptions = {"no parallel vector fields", "no parallel sections of S^2_0(Lambda^2_+)"};
  if (*r.dim_h1 >= 0) {
    r.moduli_dim = *r.dim_h1;
    r.verdict = Verdict::moduli_dimension;
  } else {
    // a negative count means the hypotheses cannot all hold
    r.verdict = Verdict::inconclusive;
  }
  return r;
}

}  // namespace orbidx
