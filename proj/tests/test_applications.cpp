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

#include <doctest.h>

#include <algorithm>

#include "orbidx/applications.hpp"
#include "orbidx/error.hpp"
#include "support.hpp"

using namespace orbidx;
using orbidx::test::q;
using List = std::vector<std::int64_t>;

TEST_CASE("surface dimensions") {
  CHECK(conf_dim(SurfaceKind::sphere()) == 6);
  CHECK(conf_dim(SurfaceKind::orientable(1)) == 2);
  CHECK(conf_dim(SurfaceKind::non_orientable(2)) == 2);
  CHECK(h0_bound(SurfaceKind::sphere()) == 11);
  CHECK(h0_bound(SurfaceKind::non_orientable(1)) == 8);
  CHECK(h0_bound(SurfaceKind::orientable(3)) == 5);
  for (std::uint32_t j = 1; j <= 10; ++j)
    for (const SurfaceKind k : {SurfaceKind::orientable(j), SurfaceKind::non_orientable(j)})
      CHECK(h0_bound(k) == conf_dim(k) + 5);
  CHECK(SurfaceKind::orientable(2).euler_char() == -2);
  CHECK(SurfaceKind::non_orientable(3).euler_char() == -1);
}

TEST_CASE("Whitney-Massey values") {
  CHECK(whitney_massey_values(1) == List{-2, 2});
  CHECK(whitney_massey_values(2) == List{-4, 0, 4});
  CHECK(whitney_massey_values(3) == List{-6, -2, 2, 6});
  for (std::uint32_t j = 1; j <= 50; ++j)
    for (std::int64_t v : whitney_massey_values(j)) {
      const std::int64_t r = ((v - 2 * (2 - static_cast<std::int64_t>(j))) % 4 + 4) % 4;
      CHECK(r == 0);
    }
}

TEST_CASE("feasible self-intersections") {
  CHECK(self_intersection_bound(1) == q("-3/4"));
  CHECK(self_intersection_bound(2) == Rational(-2));
  CHECK(self_intersection_bound(7) == q("-15/2"));
  CHECK(feasible_self_intersections(1) == List{-2});
  CHECK(feasible_self_intersections(2) == List{-4});
  CHECK(feasible_self_intersections(5) == List{-10, -6});
  for (std::uint32_t j = 3; j <= 50; ++j) {
    List expected;
    for (std::int64_t v : whitney_massey_values(j))
      if (v >= -2 * static_cast<std::int64_t>(j) && v < -static_cast<std::int64_t>(j)) expected.push_back(v);
    CHECK(feasible_self_intersections(j) == expected);
  }
}

TEST_CASE("orientable surfaces") {
  const ModuliReport r1 = orientable_verdict(1);
  CHECK(r1.index == 15);
  CHECK(r1.h0_bound == 7);
  CHECK(r1.verdict == Verdict::nonexistence);
  const ModuliReport r2 = orientable_verdict(2);
  CHECK(r2.index == 23);
  CHECK(r2.h0_bound == 5);
  const ModuliReport r0 = orientable_verdict(0);
  CHECK(r0.index == 7);
  CHECK(r0.h0_bound == 11);
  CHECK(r0.verdict == Verdict::inconclusive);
  for (std::uint32_t j = 1; j <= 20; ++j) {
    const ModuliReport r = orientable_verdict(j);
    CHECK(r.index == 7 + 8 * static_cast<std::int64_t>(j));
    CHECK(r.index > *r.h0_bound);
    CHECK(r.verdict == Verdict::nonexistence);
  }
}

TEST_CASE("Hitchin metrics") {
  for (std::uint32_t k = 3; k <= 100; ++k) {
    const ModuliReport r = hitchin_report(k);
    CHECK(r.index == 3);
    CHECK(r.dim_h1 == 0);
    CHECK(r.dim_h2 == 0);
    CHECK(r.verdict == Verdict::rigid);
    CHECK(r.euler_identity_holds());
  }
  const auto a = hitchin_report(3).assumptions;
  CHECK(std::find(a.begin(), a.end(), "smooth_index=15") != a.end());
  CHECK_THROWS_AS(hitchin_report(2), Error);
}

TEST_CASE("LeBrun metrics") {
  CHECK(lebrun_report(3, 2).index == -2);
  CHECK(lebrun_report(3, 2).dim_h1 == 3);
  CHECK(lebrun_report(3, 2).moduli_dim == 3);
  CHECK(lebrun_report(5, 4).index == -8);
  CHECK(lebrun_report(5, 4).moduli_dim == 9);
  CHECK(lebrun_report(2, 2).index == 1);
  CHECK(lebrun_report(2, 2).verdict == Verdict::inconclusive);
  for (std::uint32_t n = 1; n <= 30; ++n)
    for (std::uint32_t p = 2; p <= 10; ++p) CHECK(lebrun_report(n, p).index + 3 * static_cast<std::int64_t>(n) == 7);
  for (std::uint32_t n = 3; n <= 30; ++n) {
    const ModuliReport r = lebrun_report(n, 3);
    CHECK(r.moduli_dim == 3 * static_cast<std::int64_t>(n) - 6);
    CHECK(r.euler_identity_holds());
  }
  CHECK_THROWS_AS(lebrun_report(3, 1), Error);
}

TEST_CASE("Ricci-flat moduli") {
  CHECK(ricci_flat_moduli_dim({2, 0, 2, 0, 2}) == -7);
  CHECK(ricci_flat_moduli_dim({24, -16, 2, -4, 2}) == 44);
  const TopologicalData d{6, 4, -3, 5, 3};
  CHECK(ricci_flat_moduli_dim(d) == -index_closed_form(d, Duality::asd));
  const ModuliReport r = ricci_flat_report({24, -16, 2, -4, 2});
  CHECK(r.moduli_dim == 44);
  CHECK(r.duality == Duality::asd);
}
