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

#include "poly.hpp"

#include <algorithm>

#include "orbidx/error.hpp"

namespace orbidx::detail {

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t k = 0; k < b.size(); ++k)
      if (!b[k].is_zero()) r[i + k] += a[i] * b[k];
  }
  trim(r);
  return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  long db = degree(b);
  if (db < 0) fail(Errc::division_by_zero, "polynomial division by zero");
  trim(a);
  long da = degree(a);
  if (da < db) return {QPoly{}, std::move(a)};
  QPoly q(static_cast<std::size_t>(da - db + 1));
  const Rational lead_inv = b[static_cast<std::size_t>(db)].inverse();
  for (long i = da; i >= db; --i) {
    const auto ui = static_cast<std::size_t>(i);
    if (a[ui].is_zero()) continue;
    Rational c = a[ui] * lead_inv;
    const auto shift = static_cast<std::size_t>(i - db);
    for (long k = 0; k <= db; ++k) {
      const auto uk = static_cast<std::size_t>(k);
      if (!b[uk].is_zero()) a[shift + uk] -= c * b[uk];
    }
    q[shift] = std::move(c);
  }
  a.resize(static_cast<std::size_t>(db));
  trim(a);
  trim(q);
  return {std::move(q), std::move(a)};
}

std::pair<QPoly, QPoly> half_xgcd(const QPoly& a, const QPoly& m) {
  // Invariant: s0*a = r0 (mod m), s1*a = r1 (mod m).
  QPoly r0 = m, r1 = a, s0, s1{Rational(1)};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    // keep the remainder monic to curb coefficient growth
    if (!r1.empty()) {
      Rational inv = r1.back().inverse();
      for (auto& c : r1) c *= inv;
      for (auto& c : s1) c *= inv;
    }
  }
  if (!r0.empty()) {
    Rational inv = r0.back().inverse();
    for (auto& c : r0) c *= inv;
    for (auto& c : s0) c *= inv;
  }
  return {std::move(r0), std::move(s0)};
}

}  // namespace orbidx::detail
