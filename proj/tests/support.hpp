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

#ifndef ORBIDX_TESTS_SUPPORT_HPP
#define ORBIDX_TESTS_SUPPORT_HPP

#include <cmath>
#include <complex>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "orbidx/cyclotomic.hpp"
#include "orbidx/rational.hpp"

namespace orbidx::test {

inline const nlohmann::json& oracles() {
  static const nlohmann::json data = [] {
    std::ifstream in(ORBIDX_ORACLE_FILE);
    if (!in) throw std::runtime_error("cannot open " ORBIDX_ORACLE_FILE);
    return nlohmann::json::parse(in);
  }();
  return data;
}

inline Rational q(const std::string& s) { return Rational::parse(s); }

// The embedding zeta_n -> exp(2 pi i / n).
inline std::complex<long double> embed(const Cyclotomic& c) {
  std::complex<long double> z = 0;
  const long double n = c.order();
  for (std::size_t k = 0; k < c.degree(); ++k) {
    const long double t = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) / n;
    const auto& r = c.coeff(k);
    z += std::complex<long double>(std::cos(t), std::sin(t)) * static_cast<long double>(r.numerator().get_d() / r.denominator().get_d());
  }
  return z;
}

inline std::complex<long double> oracle_complex(const nlohmann::json& pair) {
  return {std::stold(pair[0].get<std::string>()), std::stold(pair[1].get<std::string>())};
}

// Random element of Q(zeta_n) with small coefficients.
inline Cyclotomic random_element(std::uint32_t n, std::mt19937_64& rng, bool nonzero = false) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  for (;;) {
    std::vector<Rational> c(euler_phi(n));
    for (auto& x : c) x = Rational(num(rng), den(rng));
    Cyclotomic r = Cyclotomic::from_coeffs(n, std::move(c));
    if (!nonzero || !r.is_zero()) return r;
  }
}

}  // namespace orbidx::test

#endif  // ORBIDX_TESTS_SUPPORT_HPP
