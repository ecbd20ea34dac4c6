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

#include "orbidx/rational.hpp"

#include <limits>
#include <ostream>

#include "orbidx/error.hpp"

namespace orbidx {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid argument";
    case Errc::order_mismatch: return "order mismatch";
    case Errc::division_by_zero: return "division by zero";
    case Errc::not_rational: return "not rational";
    case Errc::non_unit: return "non-unit";
    case Errc::not_divisible: return "not divisible";
    case Errc::parse_error: return "parse error";
    case Errc::internal: return "internal consistency failure";
  }
  return "unknown";
}

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!is_digits(s))
    fail(Errc::parse_error, "malformed rational '" + std::string(whole) + "'");
  mpz_class z(std::string(s), 10);
  return neg ? mpz_class(-z) : z;
}

}  // namespace

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (d == 0) fail(Errc::division_by_zero, "rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  auto num = parse_integer(text.substr(0, slash), text);
  auto den_text = text.substr(slash + 1);
  // the denominator carries no sign of its own
  if (!is_digits(den_text))
    fail(Errc::parse_error, "malformed rational '" + std::string(text) + "'");
  mpz_class den(std::string(den_text), 10);
  if (den == 0)
    fail(Errc::parse_error, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::int64_t Rational::to_int64() const {
  if (!is_integer()) fail(Errc::invalid_argument, to_string() + " is not an integer");
  const mpz_class& n = v_.get_num();
  if (!n.fits_slong_p()) fail(Errc::invalid_argument, to_string() + " does not fit in 64 bits");
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return static_cast<std::int64_t>(n.get_si());
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(Errc::division_by_zero, "division by zero rational");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace orbidx
