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

#include "orbidx/cyclotomic.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <span>
#include <string>

#include "orbidx/error.hpp"
#include "poly.hpp"

namespace orbidx {

namespace detail {

struct CyclotomicModulus {
  std::uint32_t order = 1;
  std::size_t phi = 1;
  // Nonzero coefficients of Phi_n below the (monic) leading term.
  std::vector<std::pair<std::size_t, Rational>> tail;
  std::vector<std::pair<std::size_t, mpz_class>> tail_z;
  std::vector<std::pair<std::size_t, long>> tail_small;
  bool tail_fits = true;
  QPoly poly;
};

namespace {

std::mutex g_phi_mutex;
std::map<std::uint32_t, IntPoly> g_phi_cache;

std::mutex g_mod_mutex;
std::map<std::uint32_t, std::shared_ptr<const CyclotomicModulus>> g_mod_cache;

// Exact division by a monic integer polynomial.
IntPoly divide_monic(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  IntPoly q(a.size() - db);
  for (std::size_t i = a.size(); i-- > db;) {
    mpz_class c = a[i];
    if (c == 0) continue;
    for (std::size_t k = 0; k <= db; ++k) a[i - db + k] -= c * b[k];
    q[i - db] = c;
  }
  for (std::size_t i = 0; i < db; ++i)
    if (a[i] != 0) fail(Errc::internal, "cyclotomic division left a remainder");
  return q;
}

}  // namespace

std::shared_ptr<const CyclotomicModulus> modulus(std::uint32_t order) {
  {
    std::lock_guard lock(g_mod_mutex);
    if (auto it = g_mod_cache.find(order); it != g_mod_cache.end()) return it->second;
  }
  IntPoly phi = cyclotomic_polynomial(order);
  auto m = std::make_shared<CyclotomicModulus>();
  m->order = order;
  m->phi = phi.size() - 1;
  m->poly.reserve(phi.size());
  for (const auto& c : phi) m->poly.emplace_back(c);
  for (std::size_t k = 0; k < m->phi; ++k)
    if (phi[k] != 0) {
      m->tail.emplace_back(k, Rational(phi[k]));
      m->tail_z.emplace_back(k, phi[k]);
      if (phi[k].fits_slong_p())
        m->tail_small.emplace_back(k, phi[k].get_si());
      else
        m->tail_fits = false;
    }
  std::lock_guard lock(g_mod_mutex);
  return g_mod_cache.emplace(order, std::move(m)).first->second;
}

namespace {

// Common denominator and integer numerators of a coefficient list.
mpz_class clear_denominators(std::span<const Rational> c, std::vector<mpz_class>& num) {
  mpz_class den = 1;
  for (const auto& r : c)
    if (!r.is_zero()) den = lcm(den, r.denominator());
  num.resize(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    num[i] = c[i].is_zero() ? mpz_class(0) : mpz_class(c[i].numerator() * (den / c[i].denominator()));
  return den;
}

bool to_small(const std::vector<mpz_class>& a, std::vector<long>& out) {
  out.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].fits_slong_p()) return false;
    out[i] = a[i].get_si();
  }
  return true;
}

// Reduction modulo Phi_n over machine words; false on overflow.
bool reduce_small(std::vector<long>& a, const CyclotomicModulus& m) {
  for (std::size_t i = a.size(); i-- > m.phi;) {
    const long c = a[i];
    if (c == 0) continue;
    const std::size_t shift = i - m.phi;
    for (const auto& [k, t] : m.tail_small) {
      long prod;
      if (__builtin_mul_overflow(c, t, &prod) || __builtin_sub_overflow(a[shift + k], prod, &a[shift + k]))
        return false;
    }
  }
  return true;
}

void reduce_big(std::vector<mpz_class>& a, const CyclotomicModulus& m) {
  for (std::size_t i = a.size(); i-- > m.phi;) {
    if (a[i] == 0) continue;
    const mpz_class c = a[i];
    const std::size_t shift = i - m.phi;
    for (const auto& [k, t] : m.tail_z) a[shift + k] -= c * t;
  }
}

// The low phi integer coefficients divided by `den`.
template <typename Int>
QPoly to_rationals(const std::vector<Int>& num, const mpz_class& den, std::size_t phi) {
  QPoly result(phi);
  for (std::size_t i = 0; i < phi && i < num.size(); ++i)
    if (num[i] != 0) result[i] = Rational(mpz_class(num[i]), den);
  return result;
}

// Product over machine words; false on overflow.
bool multiply_small(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b, std::vector<long>& out) {
  std::vector<long> x, y;
  if (!to_small(a, x) || !to_small(b, y)) return false;
  out.assign(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t k = 0; k < y.size(); ++k) {
      long t;
      if (__builtin_mul_overflow(x[i], y[k], &t) || __builtin_add_overflow(out[i + k], t, &out[i + k]))
        return false;
    }
  }
  return true;
}

}  // namespace

// Reduces `a` in place modulo Phi_n and pads it to exactly phi coefficients.
void reduce(QPoly& a, const CyclotomicModulus& m) {
  if (a.size() <= m.phi) {
    a.resize(m.phi);
    return;
  }
  std::vector<mpz_class> num;
  const mpz_class den = clear_denominators(a, num);
  std::vector<long> small;
  if (m.tail_fits && to_small(num, small) && reduce_small(small, m)) {
    a = to_rationals(small, den, m.phi);
    return;
  }
  reduce_big(num, m);
  a = to_rationals(num, den, m.phi);
}

QPoly multiply_reduce(std::span<const Rational> a, std::span<const Rational> b, const CyclotomicModulus& m) {
  std::vector<mpz_class> na, nb;
  const mpz_class den = clear_denominators(a, na) * clear_denominators(b, nb);
  std::vector<long> small;
  if (m.tail_fits && multiply_small(na, nb, small) && reduce_small(small, m)) return to_rationals(small, den, m.phi);
  std::vector<mpz_class> prod(na.size() + nb.size() - 1);
  for (std::size_t i = 0; i < na.size(); ++i) {
    if (na[i] == 0) continue;
    for (std::size_t k = 0; k < nb.size(); ++k) prod[i + k] += na[i] * nb[k];
  }
  reduce_big(prod, m);
  return to_rationals(prod, den, m.phi);
}

}  // namespace detail

IntPoly cyclotomic_polynomial(std::uint32_t n) {
  require(n >= 1, Errc::invalid_argument, "cyclotomic order must be >= 1");
  {
    std::lock_guard lock(detail::g_phi_mutex);
    if (auto it = detail::g_phi_cache.find(n); it != detail::g_phi_cache.end()) return it->second;
  }
  // x^n - 1
  IntPoly num(n + 1);
  num[0] = -1;
  num[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d)
    if (n % d == 0) num = detail::divide_monic(std::move(num), cyclotomic_polynomial(d));
  std::lock_guard lock(detail::g_phi_mutex);
  return detail::g_phi_cache.emplace(n, std::move(num)).first->second;
}

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t result = n;
  for (std::uint32_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    while (n % q == 0) n /= q;
    result -= result / q;
  }
  if (n > 1) result -= result / n;
  return result;
}

Cyclotomic::Cyclotomic(std::uint32_t order, const Rational& constant)
    : mod_(detail::modulus(order)), c_(mod_->phi) {
  c_[0] = constant;
}

Cyclotomic::Cyclotomic(std::shared_ptr<const detail::CyclotomicModulus> mod, std::vector<Rational> c)
    : mod_(std::move(mod)), c_(std::move(c)) {}

Cyclotomic Cyclotomic::from_coeffs(std::uint32_t order, std::vector<Rational> coeffs) {
  auto mod = detail::modulus(order);
  detail::reduce(coeffs, *mod);
  return Cyclotomic(std::move(mod), std::move(coeffs));
}

Cyclotomic Cyclotomic::zeta_power(std::uint32_t order, std::int64_t k) {
  require(order >= 1, Errc::invalid_argument, "cyclotomic order must be >= 1");
  const auto n = static_cast<std::int64_t>(order);
  const auto e = static_cast<std::size_t>(((k % n) + n) % n);
  std::vector<Rational> c(e + 1);
  c[e] = Rational(1);
  return from_coeffs(order, std::move(c));
}

std::uint32_t Cyclotomic::order() const { return mod_->order; }

bool Cyclotomic::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

std::optional<Rational> Cyclotomic::as_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return std::nullopt;
  return c_[0];
}

void Cyclotomic::check_order(const Cyclotomic& o) const {
  if (mod_->order != o.mod_->order)
    fail(Errc::order_mismatch, "cyclotomic orders differ: " + std::to_string(mod_->order) +
                                   " vs " + std::to_string(o.mod_->order));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  check_order(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  check_order(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  check_order(o);
  if (auto r = o.as_rational()) return *this *= *r;
  if (auto r = as_rational()) {
    Rational s = *r;
    c_ = o.c_;
    return *this *= s;
  }
  c_ = detail::multiply_reduce(c_, o.c_, *mod_);
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return a.order() == b.order() && a.c_ == b.c_;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) fail(Errc::division_by_zero, "inverse of zero in Q(zeta_" + std::to_string(order()) + ")");
  if (auto r = as_rational()) return Cyclotomic(order(), r->inverse());
  auto [g, s] = detail::half_xgcd(c_, mod_->poly);
  // Phi_n is irreducible, so the gcd with a nonzero element of lower degree is 1
  if (g.size() != 1) fail(Errc::internal, "nontrivial gcd with the cyclotomic polynomial");
  return from_coeffs(order(), std::move(s));
}

Cyclotomic Cyclotomic::galois(std::int64_t k) const {
  const auto n = static_cast<std::int64_t>(order());
  const std::int64_t kk = ((k % n) + n) % n;
  require(std::gcd(kk, n) == 1, Errc::invalid_argument,
          "galois exponent " + std::to_string(k) + " not coprime to " + std::to_string(n));
  std::vector<Rational> lifted(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero())
      lifted[static_cast<std::size_t>((static_cast<std::int64_t>(i) * kk) % n)] += c_[i];
  return from_coeffs(order(), std::move(lifted));
}

Cyclotomic cyc_mul(const Cyclotomic& a, const Cyclotomic& b) { return a * b; }

Cyclotomic cyc_inverse(const Cyclotomic& a) { return a.inverse(); }

Cyclotomic cos_of(std::uint32_t p, std::int64_t j) {
  Cyclotomic c = zeta_power(p, j) + zeta_power(p, -j);
  return c * Rational(1, 2);
}

Cyclotomic sin_times_i_of(std::uint32_t p, std::int64_t j) {
  Cyclotomic c = zeta_power(p, j) - zeta_power(p, -j);
  return c * Rational(1, 2);
}

namespace {

// Adds sum_{k in (Z/m)^x} c(x^(g k)) into `total` (length p = g m), where c is
// the coefficient list of an element of Q(zeta_m).
void accumulate_orbit(std::vector<Rational>& total, std::uint32_t p, std::uint32_t m,
                      std::span<const Rational> c) {
  const std::uint32_t g = p / m;
  mpz_class den = 1;
  for (const auto& r : c) den = lcm(den, r.denominator());
  std::vector<mpz_class> num(c.size());
  mpz_class bound = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    num[i] = c[i].numerator() * (den / c[i].denominator());
    mpz_class a = abs(num[i]);
    if (a > bound) bound = a;
  }
  // every slot receives at most phi(m) * c.size() contributions
  const mpz_class worst = bound * mpz_class(static_cast<unsigned long>(m)) *
                          mpz_class(static_cast<unsigned long>(c.size() + 1));
  const bool small = worst < mpz_class(std::numeric_limits<long>::max());

  std::vector<long> acc_small(small ? p : 0, 0);
  std::vector<mpz_class> acc_big(small ? 0 : p);
  std::vector<long> num_small(small ? c.size() : 0);
  if (small)
    for (std::size_t i = 0; i < c.size(); ++i) num_small[i] = num[i].get_si();

  for (std::uint32_t k = 1; k < m; ++k) {
    if (std::gcd(k, m) != 1) continue;
    const std::uint32_t j = g * k;
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (small)
        acc_small[r] += num_small[i];
      else
        acc_big[r] += num[i];
      r += j;
      if (r >= p) r -= p;
    }
  }
  for (std::uint32_t t = 0; t < p; ++t) {
    if (small) {
      if (acc_small[t] != 0) total[t] += Rational(mpz_class(acc_small[t]), den);
    } else if (acc_big[t] != 0) {
      total[t] += Rational(acc_big[t], den);
    }
  }
}

}  // namespace

Cyclotomic sum_over_nontrivial(std::uint32_t p,
                               const std::function<Cyclotomic(std::uint32_t)>& at_generator) {
  require(p >= 1, Errc::invalid_argument, "group order must be >= 1");
  std::vector<Rational> total(p);
  for (std::uint32_t m = 2; m <= p; ++m) {
    if (p % m != 0) continue;
    Cyclotomic value = at_generator(m);
    if (value.order() != m)
      fail(Errc::internal, "generator value of order " + std::to_string(value.order()) +
                               " supplied for order " + std::to_string(m));
    accumulate_orbit(total, p, m, value.coeffs());
  }
  return Cyclotomic::from_coeffs(p, std::move(total));
}

}  // namespace orbidx
