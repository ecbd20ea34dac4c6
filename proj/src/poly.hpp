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

// Dense univariate polynomials over Q, ascending coefficients. Internal.

#ifndef ORBIDX_SRC_POLY_HPP
#define ORBIDX_SRC_POLY_HPP

#include <utility>
#include <vector>

#include "orbidx/rational.hpp"

namespace orbidx::detail {

using QPoly = std::vector<Rational>;

inline void trim(QPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

// -1 for the zero polynomial.
inline long degree(const QPoly& a) {
  for (long i = static_cast<long>(a.size()) - 1; i >= 0; --i)
    if (!a[static_cast<std::size_t>(i)].is_zero()) return i;
  return -1;
}

QPoly mul(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
// a = q*b + r with deg r < deg b; b nonzero.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b);
// s with s*a = g (mod m) where g = gcd(a, m) made monic; returns {g, s}.
std::pair<QPoly, QPoly> half_xgcd(const QPoly& a, const QPoly& m);

}  // namespace orbidx::detail

#endif  // ORBIDX_SRC_POLY_HPP
