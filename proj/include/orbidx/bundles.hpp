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

#ifndef ORBIDX_BUNDLES_HPP
#define ORBIDX_BUNDLES_HPP

#include <cstdint>
#include <string_view>

#include "orbidx/cohomology.hpp"

namespace orbidx {

// gamma_j in the cyclic group of order p, acting on the normal plane by the
// angle theta = 2 pi j / p. j = 0 is the identity.
class GroupElement {
 public:
  GroupElement(std::uint32_t p, std::uint32_t j);
  std::uint32_t order() const { return p_; }
  std::uint32_t power() const { return j_; }
  bool is_identity() const { return j_ == 0; }
  // gamma_{p-j}
  GroupElement inverse() const { return GroupElement(p_, j_ == 0 ? 0 : p_ - j_); }

  // e^{i theta}, cos theta, i sin theta as exact elements of Q(zeta_p).
  Cyclotomic phase() const { return zeta_power(p_, j_); }
  Cyclotomic cos() const { return cos_of(p_, j_); }
  Cyclotomic i_sin() const { return sin_times_i_of(p_, j_); }

 private:
  std::uint32_t p_;
  std::uint32_t j_;
};

// Line bundles of the splitting T*_C + N*_C over Sigma. Theta1 and its
// conjugate span the tangent part (trivial action), Theta2 and its conjugate
// the normal part (weights e^{+i theta}, e^{-i theta}).
enum class LineBundle { theta1, theta1_bar, theta2, theta2_bar, trivial };

// Every bundle whose equivariant Chern character enters the index.
enum class Bundle {
  theta1,
  theta1_bar,
  theta2,
  theta2_bar,
  trivial,
  cotangent,        // i*(T*M_C)
  lambda_plus,      // Lambda^2_+ restricted to Sigma
  lambda_minus,     // Lambda^2_-
  s20_cotangent,    // S^2_0 T*M = Lambda^2_+ (x) Lambda^2_-
  s20_lambda_plus,  // S^2_0 Lambda^2_+
  symbol,           // i* sigma
  thom,             // lambda_{-1} N*_C
};

std::string_view bundle_name(Bundle b) noexcept;
// Inverse of bundle_name; throws invalid_argument on unknown names.
Bundle bundle_from_name(std::string_view name);

CyclotomicClass ch_line(LineBundle id, const GroupElement& g);
CyclotomicClass ch_cotangent(const GroupElement& g);
CyclotomicClass ch_lambda_plus(const GroupElement& g);
CyclotomicClass ch_lambda_minus(const GroupElement& g);
CyclotomicClass ch_s20_cotangent(const GroupElement& g);
CyclotomicClass ch_s20_lambda_plus(const GroupElement& g);
// ch(i*T*M) - ch(S^2_0 T*M) + ch(S^2_0 Lambda^2_+); every monomial carries e.
CyclotomicClass ch_symbol(const GroupElement& g);
// 2 - ch(N*_C)
CyclotomicClass ch_thom(const GroupElement& g);

CyclotomicClass ch(Bundle b, const GroupElement& g);

// Test hook: corrupts ch_thom so that verification sweeps can be shown to
// catch a wrong sign. Process-global.
enum class Fault { none, thom_sign };
void set_fault(Fault f) noexcept;
Fault current_fault() noexcept;

}  // namespace orbidx

#endif  // ORBIDX_BUNDLES_HPP
