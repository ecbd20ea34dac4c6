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

#include "orbidx/cohomology.hpp"

namespace orbidx {

const char* monomial_key(Monomial m) noexcept {
  switch (m) {
    case Monomial::one: return "1";
    case Monomial::e: return "e";
    case Monomial::h: return "h";
    case Monomial::ee: return "ee";
    case Monomial::eh: return "eh";
    case Monomial::hh: return "hh";
  }
  return "?";
}

RationalClass to_rational_class(const CyclotomicClass& a) {
  RationalClass r{Rational(0)};
  for (Monomial m : kMonomials) {
    auto q = a[m].as_rational();
    if (!q) fail(Errc::not_rational, std::string("coefficient of ") + monomial_key(m) + " is not rational");
    r[m] = *q;
  }
  return r;
}

CyclotomicClass to_cyclotomic_class(const RationalClass& a, std::uint32_t order) {
  CyclotomicClass r{Cyclotomic(order)};
  for (Monomial m : kMonomials) r[m] = Cyclotomic(order, a[m]);
  return r;
}

}  // namespace orbidx
