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

#ifndef ORBIDX_PHASE_POLY_HPP
#define ORBIDX_PHASE_POLY_HPP

#include <cstdint>
#include <map>

#include "orbidx/bundles.hpp"
#include "orbidx/cohomology.hpp"
#include "orbidx/cyclotomic.hpp"
#include "orbidx/rational.hpp"

namespace orbidx::detail {

// Laurent polynomial in a formal phase z with rational coefficients. Every
// equivariant character is built over these and then specialised at
// z = zeta_p^j, which is a ring homomorphism into Q(zeta_p).
class PhasePoly {
 public:
  PhasePoly() = default;
  explicit PhasePoly(const Rational& c) { add_term(0, c); }
  static PhasePoly monomial(int k, const Rational& c = Rational(1)) {
    PhasePoly r;
    r.add_term(k, c);
    return r;
  }

  const std::map<int, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  PhasePoly& operator+=(const PhasePoly& o) {
    for (const auto& [k, c] : o.t_) add_term(k, c);
    return *this;
  }
  PhasePoly& operator-=(const PhasePoly& o) {
    for (const auto& [k, c] : o.t_) add_term(k, -c);
    return *this;
  }
  PhasePoly& operator*=(const Rational& s) {
    if (s.is_zero()) t_.clear();
    for (auto& [k, c] : t_) c *= s;
    return *this;
  }
  PhasePoly& operator*=(const PhasePoly& o) { return *this = *this * o; }

  friend PhasePoly operator*(const PhasePoly& a, const PhasePoly& b) {
    PhasePoly r;
    for (const auto& [i, x] : a.t_)
      for (const auto& [k, y] : b.t_) r.add_term(i + k, x * y);
    return r;
  }
  friend PhasePoly operator*(PhasePoly a, const Rational& s) { return a *= s; }
  friend PhasePoly operator+(PhasePoly a, const PhasePoly& b) { return a += b; }
  friend PhasePoly operator-(PhasePoly a, const PhasePoly& b) { return a -= b; }
  PhasePoly operator-() const {
    PhasePoly r = *this;
    for (auto& [k, c] : r.t_) c = -c;
    return r;
  }
  friend bool operator==(const PhasePoly&, const PhasePoly&) = default;

  // Substitutes z = zeta_p^j.
  Cyclotomic evaluate(std::uint32_t p, std::uint32_t j) const {
    const auto n = static_cast<std::int64_t>(p);
    std::vector<Rational> lifted(p);
    for (const auto& [k, c] : t_) lifted[static_cast<std::size_t>(((k * static_cast<std::int64_t>(j)) % n + n) % n)] += c;
    return Cyclotomic::from_coeffs(p, std::move(lifted));
  }

 private:
  void add_term(int k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  std::map<int, Rational> t_;
};

inline PhasePoly zero_like(const PhasePoly&) { return PhasePoly(); }
inline PhasePoly one_like(const PhasePoly&) { return PhasePoly(Rational(1)); }
inline bool scalar_is_zero(const PhasePoly& c) { return c.is_zero(); }

using PhaseClass = CohomElement<PhasePoly>;

inline CyclotomicClass evaluate(const PhaseClass& a, std::uint32_t p, std::uint32_t j) {
  return CyclotomicClass(a.c0().evaluate(p, j), a.ce().evaluate(p, j), a.ch().evaluate(p, j),
                         a.cee().evaluate(p, j), a.ceh().evaluate(p, j), a.chh().evaluate(p, j));
}

}  // namespace orbidx::detail

namespace orbidx {
// The character of a bundle before specialising the phase; honours the
// active fault.
detail::PhaseClass symbolic_character(Bundle b);
}  // namespace orbidx

#endif  // ORBIDX_PHASE_POLY_HPP
