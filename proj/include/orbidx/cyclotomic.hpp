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

#ifndef ORBIDX_CYCLOTOMIC_HPP
#define ORBIDX_CYCLOTOMIC_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "orbidx/rational.hpp"

namespace orbidx {

// Integer polynomial, coefficients in ascending degree.
using IntPoly = std::vector<mpz_class>;

// Phi_n, the minimal polynomial of a primitive n-th root of unity. Computed by
// exact division of x^n - 1 by Phi_d for the proper divisors d of n, memoized.
IntPoly cyclotomic_polynomial(std::uint32_t n);

std::uint32_t euler_phi(std::uint32_t n);

namespace detail {
struct CyclotomicModulus;
}

// An element of Q(zeta_n), stored as a polynomial in zeta of degree below
// phi(n), reduced modulo Phi_n. Elements of different orders never mix.
class Cyclotomic {
 public:
  explicit Cyclotomic(std::uint32_t order, const Rational& constant = Rational(0));

  // Any coefficient vector; reduced modulo Phi_n.
  static Cyclotomic from_coeffs(std::uint32_t order, std::vector<Rational> coeffs);
  // zeta_n^(k mod n).
  static Cyclotomic zeta_power(std::uint32_t order, std::int64_t k);

  std::uint32_t order() const;
  // phi(order), the field degree; also the length of coeffs().
  std::size_t degree() const { return c_.size(); }
  std::span<const Rational> coeffs() const { return c_; }
  const Rational& coeff(std::size_t i) const { return c_[i]; }

  bool is_zero() const;
  std::optional<Rational> as_rational() const;

  // Throws division_by_zero on zero. Extended Euclid against Phi_n.
  Cyclotomic inverse() const;
  // The automorphism zeta -> zeta^k; k must be coprime to the order.
  Cyclotomic galois(std::int64_t k) const;
  Cyclotomic conjugate() const { return galois(-1); }

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& s);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& s) { return a *= s; }
  friend Cyclotomic operator*(const Rational& s, Cyclotomic a) { return a *= s; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(std::shared_ptr<const detail::CyclotomicModulus> mod, std::vector<Rational> c);
  void check_order(const Cyclotomic& o) const;

  std::shared_ptr<const detail::CyclotomicModulus> mod_;
  std::vector<Rational> c_;
};

inline Cyclotomic zeta_power(std::uint32_t p, std::int64_t k) { return Cyclotomic::zeta_power(p, k); }
Cyclotomic cyc_mul(const Cyclotomic& a, const Cyclotomic& b);
Cyclotomic cyc_inverse(const Cyclotomic& a);
// cos(2 pi j / p) = (zeta^j + zeta^-j) / 2
Cyclotomic cos_of(std::uint32_t p, std::int64_t j);
// i sin(2 pi j / p) = (zeta^j - zeta^-j) / 2
Cyclotomic sin_times_i_of(std::uint32_t p, std::int64_t j);
inline std::optional<Rational> as_rational(const Cyclotomic& a) { return a.as_rational(); }

// Sum over the nontrivial group elements zeta_p^j, j = 1..p-1, of a quantity
// that is a polynomial in the group element with rational coefficients.
// `at_generator(m)` gives the value at zeta_m for each order m | p, m > 1; the
// term for zeta_p^j (of order m = p / gcd(j, p)) is its image under
// zeta_m -> zeta_p^j. Terms are accumulated in Q[x]/(x^p - 1) and reduced
// modulo Phi_p once. p == 1 gives the empty sum.
Cyclotomic sum_over_nontrivial(std::uint32_t p,
                               const std::function<Cyclotomic(std::uint32_t)>& at_generator);

}  // namespace orbidx

#endif  // ORBIDX_CYCLOTOMIC_HPP
