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

#include "orbidx/serialize.hpp"

#include <string>

#include "orbidx/error.hpp"

namespace orbidx {

namespace {

template <typename S>
json class_to_json(const CohomElement<S>& a) {
  json out = json::object();
  for (Monomial m : kMonomials) out[monomial_key(m)] = to_json(a[m]);
  return out;
}

json optional_int(const std::optional<std::int64_t>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json to_json(const Rational& r) { return r.to_string(); }

json to_json(const Cyclotomic& c) {
  json coeffs = json::array();
  for (const auto& r : c.coeffs()) coeffs.push_back(r.to_string());
  return {{"order", c.order()}, {"coeffs", std::move(coeffs)}};
}

json to_json(const RationalClass& a) { return class_to_json(a); }
json to_json(const CyclotomicClass& a) { return class_to_json(a); }

json to_json(const IntPoly& poly) {
  json out = json::array();
  for (const auto& c : poly) out.push_back(c.get_str());
  return out;
}

json to_json(const TopologicalData& d) {
  return {{"chi", d.chi_m},
          {"tau", d.tau_m},
          {"sigma_chi", d.chi_sigma},
          {"sigma_sq", d.sigma_sq},
          {"p", d.p},
          {"sigma_hat_sq", to_json(d.sigma_hat_sq())}};
}

json to_json(const CorrectionSum& c) { return {{"e", to_json(c.coeff_e)}, {"h", to_json(c.coeff_h)}}; }

json to_json(const TrigSums& t) {
  return {{"sum_cos", to_json(t.sum_cos)},
          {"sum_cos_sq", to_json(t.sum_cos_sq)},
          {"sum_inv_one_minus_cos", to_json(t.sum_inv_one_minus_cos)}};
}

json to_json(const IndexResult& r) {
  json inputs = to_json(r.inputs);
  inputs["duality"] = std::string(duality_name(r.duality));
  return {{"index", r.index},
          {"route", std::string(route_name(r.route))},
          {"correction", to_json(r.correction)},
          {"inputs", std::move(inputs)}};
}

json to_json(const ModuliReport& r) {
  json inputs = to_json(r.data);
  inputs["duality"] = std::string(duality_name(r.duality));
  return {{"example", r.example},
          {"index", r.index},
          {"dim_h0", r.dim_h0},
          {"dim_h1", optional_int(r.dim_h1)},
          {"dim_h2", optional_int(r.dim_h2)},
          {"h0_bound", optional_int(r.h0_bound)},
          {"moduli_dim", optional_int(r.moduli_dim)},
          {"verdict", std::string(verdict_name(r.verdict))},
          {"assumptions", r.assumptions},
          {"inputs", std::move(inputs)}};
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) fail(Errc::parse_error, "rational must be a string or integer");
  return Rational::parse(j.get<std::string>());
}

Cyclotomic cyclotomic_from_json(const json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs") || !j["coeffs"].is_array())
    fail(Errc::parse_error, "cyclotomic must be {\"order\": p, \"coeffs\": [...]}");
  const auto order = j["order"].get<std::int64_t>();
  if (order < 1) fail(Errc::parse_error, "cyclotomic order must be >= 1");
  std::vector<Rational> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.push_back(rational_from_json(c));
  const auto p = static_cast<std::uint32_t>(order);
  if (coeffs.size() != euler_phi(p))
    fail(Errc::parse_error, "cyclotomic of order " + std::to_string(p) + " needs " +
                                std::to_string(euler_phi(p)) + " coefficients");
  return Cyclotomic::from_coeffs(p, std::move(coeffs));
}

}  // namespace orbidx
