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

#ifndef ORBIDX_COHOMOLOGY_HPP
#define ORBIDX_COHOMOLOGY_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

#include "orbidx/cyclotomic.hpp"
#include "orbidx/error.hpp"
#include "orbidx/rational.hpp"

namespace orbidx {

// Monomials of the truncated ring, in storage order.
enum class Monomial : std::size_t { one = 0, e = 1, h = 2, ee = 3, eh = 4, hh = 5 };

inline constexpr std::array<Monomial, 6> kMonomials = {Monomial::one, Monomial::e,  Monomial::h,
                                                       Monomial::ee,  Monomial::eh, Monomial::hh};

// "1", "e", "h", "ee", "eh", "hh"
const char* monomial_key(Monomial m) noexcept;

// Scalars need a zero and one of matching order for Cyclotomic.
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Cyclotomic zero_like(const Cyclotomic& c) { return Cyclotomic(c.order()); }
inline Cyclotomic one_like(const Cyclotomic& c) { return Cyclotomic(c.order(), Rational(1)); }

inline bool scalar_is_zero(const Rational& r) { return r.is_zero(); }
inline bool scalar_is_zero(const Cyclotomic& c) { return c.is_zero(); }

// Truncated polynomial ring S[e, h] / (cohomological degree > 4), e and h of
// degree 2: an element is c0 + ce e + ch h + cee e^2 + ceh eh + chh h^2.
template <typename S>
class CohomElement {
 public:
  explicit CohomElement(const S& c0)
      : c_{c0, zero_like(c0), zero_like(c0), zero_like(c0), zero_like(c0), zero_like(c0)} {}
  CohomElement(S c0, S ce, S ch, S cee, S ceh, S chh)
      : c_{std::move(c0), std::move(ce), std::move(ch), std::move(cee), std::move(ceh), std::move(chh)} {}

  static CohomElement generator_e(const S& like) {
    CohomElement r(zero_like(like));
    r[Monomial::e] = one_like(like);
    return r;
  }
  static CohomElement generator_h(const S& like) {
    CohomElement r(zero_like(like));
    r[Monomial::h] = one_like(like);
    return r;
  }

  const S& operator[](Monomial m) const { return c_[static_cast<std::size_t>(m)]; }
  S& operator[](Monomial m) { return c_[static_cast<std::size_t>(m)]; }

  const S& c0() const { return (*this)[Monomial::one]; }
  const S& ce() const { return (*this)[Monomial::e]; }
  const S& ch() const { return (*this)[Monomial::h]; }
  const S& cee() const { return (*this)[Monomial::ee]; }
  const S& ceh() const { return (*this)[Monomial::eh]; }
  const S& chh() const { return (*this)[Monomial::hh]; }

  CohomElement& operator+=(const CohomElement& o) {
    for (std::size_t i = 0; i < 6; ++i) c_[i] += o.c_[i];
    return *this;
  }
  CohomElement& operator-=(const CohomElement& o) {
    for (std::size_t i = 0; i < 6; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  template <typename T>
  CohomElement& scale(const T& s) {
    for (auto& c : c_) c *= s;
    return *this;
  }

  // Products of total degree above 4 are dropped.
  friend CohomElement operator*(const CohomElement& a, const CohomElement& b) {
    const auto& [a0, ae, ah, aee, aeh, ahh] = a.c_;
    const auto& [b0, be, bh, bee, beh, bhh] = b.c_;
    return CohomElement(a0 * b0,
                        a0 * be + ae * b0,
                        a0 * bh + ah * b0,
                        a0 * bee + ae * be + aee * b0,
                        a0 * beh + ae * bh + ah * be + aeh * b0,
                        a0 * bhh + ah * bh + ahh * b0);
  }
  friend CohomElement operator+(CohomElement a, const CohomElement& b) { return a += b; }
  friend CohomElement operator-(CohomElement a, const CohomElement& b) { return a -= b; }
  CohomElement operator-() const {
    CohomElement r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend CohomElement operator*(const S& s, CohomElement a) { return a.scale(s); }

  friend bool operator==(const CohomElement&, const CohomElement&) = default;

 private:
  std::array<S, 6> c_;
};

using RationalClass = CohomElement<Rational>;
using CyclotomicClass = CohomElement<Cyclotomic>;

template <typename S>
CohomElement<S> ring_add(const CohomElement<S>& a, const CohomElement<S>& b) { return a + b; }
template <typename S>
CohomElement<S> ring_mul(const CohomElement<S>& a, const CohomElement<S>& b) { return a * b; }
template <typename S, typename T>
CohomElement<S> scalar_mul(const T& s, CohomElement<S> a) { return a.scale(s); }

// exp(a e + b h) = 1 + (a e + b h) + (a e + b h)^2 / 2
template <typename S>
CohomElement<S> exp_class(const S& a, const S& b) {
  const Rational half(1, 2);
  S one = one_like(a);
  return CohomElement<S>(one, a, b, a * a * half, a * b, b * b * half);
}

// (1/c0)(1 + D + D^2) with D = 1 - a/c0, which is nilpotent: D^3 = 0.
template <typename S>
CohomElement<S> invert_unit(const CohomElement<S>& a) {
  if (scalar_is_zero(a.c0())) fail(Errc::non_unit, "cohomology class with zero constant term is not a unit");
  const S inv0 = a.c0().inverse();
  CohomElement<S> one(one_like(a.c0()));
  CohomElement<S> d = one - inv0 * a;
  return inv0 * (one + d + d * d);
}

// The quotient b with e * b = a. Requires c0 = ch = chh = 0; the degree-4
// coefficients of b are set to zero since only degree <= 2 can be recovered.
template <typename S>
CohomElement<S> divide_by_e(const CohomElement<S>& a) {
  if (!scalar_is_zero(a.c0()) || !scalar_is_zero(a.ch()) || !scalar_is_zero(a.chh()))
    fail(Errc::not_divisible, "class has a monomial without an e factor");
  S z = zero_like(a.c0());
  return CohomElement<S>(a.ce(), a.cee(), a.ceh(), z, z, z);
}

// A-hat(Sigma)^2 = Td(l) Td(l-bar) = 1 - e^2 / 12 with c1(l) = e.
template <typename S>
CohomElement<S> a_hat_squared(const S& like) {
  CohomElement<S> r(one_like(like));
  r[Monomial::ee] = one_like(like) * Rational(-1, 12);
  return r;
}

// <e, [Sigma]> = chi(Sigma), <h, [Sigma]> = [Sigma-hat]^2 = [Sigma]^2 / p.
struct PairingData {
  std::int64_t chi_sigma = 0;
  Rational sigma_hat_sq;

  static PairingData from_self_intersection(std::int64_t chi_sigma, std::int64_t sigma_sq, std::uint32_t p) {
    require(p >= 1, Errc::invalid_argument, "cone order must be >= 1");
    return {chi_sigma, Rational(sigma_sq, static_cast<std::int64_t>(p))};
  }
};

// Only the H^2 part pairs with the fundamental class of a surface.
template <typename S>
S pair_with_sigma(const CohomElement<S>& a, const PairingData& d) {
  return a.ce() * Rational(d.chi_sigma) + a.ch() * d.sigma_hat_sq;
}

// Coefficient-wise rational part; Errc::not_rational if any coefficient is
// irrational.
RationalClass to_rational_class(const CyclotomicClass& a);
CyclotomicClass to_cyclotomic_class(const RationalClass& a, std::uint32_t order);

}  // namespace orbidx

#endif  // ORBIDX_COHOMOLOGY_HPP
