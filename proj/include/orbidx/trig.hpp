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

#ifndef ORBIDX_TRIG_HPP
#define ORBIDX_TRIG_HPP

#include <cstdint>

#include "orbidx/rational.hpp"

namespace orbidx {

// Sums over theta_j = 2 pi j / p, j = 1..p-1.
struct TrigSums {
  Rational sum_cos;
  Rational sum_cos_sq;
  Rational sum_inv_one_minus_cos;

  friend bool operator==(const TrigSums&, const TrigSums&) = default;
};

// Term-by-term exact evaluation in Q(zeta_p).
TrigSums trig_sums_brute_force(std::uint32_t p);
// (-1, (p-2)/2, (p^2-1)/6), except that the cos^2 sum is 1 at p = 2
TrigSums trig_sums_closed_form(std::uint32_t p);
// Both of the above; throws Errc::internal if they disagree. p >= 2.
TrigSums trig_sums(std::uint32_t p);

}  // namespace orbidx

#endif  // ORBIDX_TRIG_HPP
