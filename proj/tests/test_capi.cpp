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

// Exercises the shared library through its C interface only.

#include <doctest.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "orbidx/orbidx.h"

namespace {

std::string str(orbidx_rational* r) {
  char* s = nullptr;
  REQUIRE(orbidx_rational_to_string(r, &s) == ORBIDX_OK);
  std::string out(s);
  orbidx_string_free(s);
  orbidx_rational_free(r);
  return out;
}

nlohmann::json take(char* s) {
  auto j = nlohmann::json::parse(s);
  orbidx_string_free(s);
  return j;
}

}  // namespace

TEST_CASE("status names and errors") {
  CHECK(std::string(orbidx_status_name(ORBIDX_OK)) == "ok");
  CHECK(std::string(orbidx_version()) == "1.0.0");
  orbidx_rational* r = nullptr;
  CHECK(orbidx_rational_parse("1/0", &r) == ORBIDX_ERR_PARSE);
  CHECK(r == nullptr);
  CHECK(std::string(orbidx_last_error_message()).size() > 0);
  CHECK(orbidx_rational_parse(nullptr, &r) == ORBIDX_ERR_NULL_POINTER);
  CHECK(orbidx_rational_parse("3/4", nullptr) == ORBIDX_ERR_NULL_POINTER);
}

TEST_CASE("rational arithmetic") {
  orbidx_rational *a = nullptr, *b = nullptr, *c = nullptr;
  REQUIRE(orbidx_rational_parse("3/4", &a) == ORBIDX_OK);
  REQUIRE(orbidx_rational_from_int(-1, 6, &b) == ORBIDX_OK);
  REQUIRE(orbidx_rational_add(a, b, &c) == ORBIDX_OK);
  CHECK(str(c) == "7/12");
  REQUIRE(orbidx_rational_mul(a, b, &c) == ORBIDX_OK);
  CHECK(str(c) == "-1/8");
  int cmp = 0;
  REQUIRE(orbidx_rational_compare(a, b, &cmp) == ORBIDX_OK);
  CHECK(cmp == 1);
  orbidx_rational* zero = nullptr;
  REQUIRE(orbidx_rational_from_int(0, 1, &zero) == ORBIDX_OK);
  CHECK(orbidx_rational_div(a, zero, &c) == ORBIDX_ERR_DIVISION_BY_ZERO);
  int64_t v = 0;
  CHECK(orbidx_rational_to_int64(a, &v) == ORBIDX_ERR_INVALID_ARGUMENT);
  CHECK(orbidx_rational_from_int(1, 0, &c) == ORBIDX_ERR_DIVISION_BY_ZERO);
  orbidx_rational_free(a);
  orbidx_rational_free(b);
  orbidx_rational_free(zero);
}

TEST_CASE("cyclotomic handles") {
  orbidx_cyclotomic *z = nullptr, *zz = nullptr, *inv = nullptr, *w = nullptr;
  REQUIRE(orbidx_zeta_power(4, 1, &z) == ORBIDX_OK);
  REQUIRE(orbidx_cyclotomic_mul(z, z, &zz) == ORBIDX_OK);
  orbidx_rational* r = nullptr;
  REQUIRE(orbidx_cyclotomic_as_rational(zz, &r) == ORBIDX_OK);
  CHECK(str(r) == "-1");
  CHECK(orbidx_cyclotomic_as_rational(z, &r) == ORBIDX_ERR_NOT_RATIONAL);
  REQUIRE(orbidx_cyclotomic_inverse(z, &inv) == ORBIDX_OK);
  char* s = nullptr;
  REQUIRE(orbidx_cyclotomic_to_json(inv, &s) == ORBIDX_OK);
  const auto j = take(s);
  CHECK(j["coeffs"] == nlohmann::json{"0", "-1"});
  REQUIRE(orbidx_cyclotomic_from_json(j.dump().c_str(), &w) == ORBIDX_OK);
  int eq = 0;
  REQUIRE(orbidx_cyclotomic_equal(w, inv, &eq) == ORBIDX_OK);
  CHECK(eq == 1);
  orbidx_cyclotomic* other = nullptr;
  REQUIRE(orbidx_zeta_power(3, 1, &other) == ORBIDX_OK);
  orbidx_cyclotomic* bad = nullptr;
  CHECK(orbidx_cyclotomic_add(z, other, &bad) == ORBIDX_ERR_ORDER_MISMATCH);
  CHECK(orbidx_cyclotomic_from_json("{not json", &bad) == ORBIDX_ERR_PARSE);
  REQUIRE(orbidx_cyclotomic_polynomial_json(6, &s) == ORBIDX_OK);
  CHECK(take(s) == nlohmann::json{"1", "-1", "1"});
  for (auto* h : {z, zz, inv, w, other}) orbidx_cyclotomic_free(h);
}

TEST_CASE("trig sums") {
  orbidx_rational *a = nullptr, *b = nullptr, *c = nullptr;
  REQUIRE(orbidx_trig_sums(4, &a, &b, &c) == ORBIDX_OK);
  CHECK(str(a) == "-1");
  CHECK(str(b) == "1");
  CHECK(str(c) == "5/2");
  CHECK(orbidx_trig_sums(1, &a, &b, &c) == ORBIDX_ERR_INVALID_ARGUMENT);
}

TEST_CASE("cohomology handles") {
  orbidx_cohom *sym = nullptr, *q = nullptr, *thom = nullptr, *inv = nullptr, *one = nullptr;
  REQUIRE(orbidx_character(ORBIDX_BUNDLE_SYMBOL, 2, 1, &sym) == ORBIDX_OK);
  REQUIRE(orbidx_cohom_divide_by_e(sym, &q) == ORBIDX_OK);
  char* s = nullptr;
  REQUIRE(orbidx_cohom_to_json(q, &s) == ORBIDX_OK);
  auto j = take(s);
  CHECK(j["e"]["coeffs"] == nlohmann::json{"2"});
  CHECK(j["h"]["coeffs"] == nlohmann::json{"6"});
  REQUIRE(orbidx_character(ORBIDX_BUNDLE_THOM, 2, 1, &thom) == ORBIDX_OK);
  REQUIRE(orbidx_cohom_invert_unit(thom, &inv) == ORBIDX_OK);
  REQUIRE(orbidx_cohom_mul(thom, inv, &one) == ORBIDX_OK);
  orbidx_cyclotomic* c = nullptr;
  REQUIRE(orbidx_cohom_coefficient(one, ORBIDX_MONO_HH, &c) == ORBIDX_OK);
  orbidx_rational* r = nullptr;
  REQUIRE(orbidx_cyclotomic_as_rational(c, &r) == ORBIDX_OK);
  CHECK(str(r) == "0");
  orbidx_cyclotomic_free(c);
  orbidx_cohom* bad = nullptr;
  CHECK(orbidx_cohom_divide_by_e(thom, &bad) == ORBIDX_ERR_NOT_DIVISIBLE);
  CHECK(orbidx_cohom_invert_unit(sym, &bad) == ORBIDX_ERR_NON_UNIT);
  CHECK(orbidx_character(ORBIDX_BUNDLE_CORRECTION, 5, 0, &bad) == ORBIDX_ERR_INVALID_ARGUMENT);
  CHECK(orbidx_character(ORBIDX_BUNDLE_THOM, 5, 5, &bad) == ORBIDX_ERR_INVALID_ARGUMENT);
  orbidx_cyclotomic* paired = nullptr;
  orbidx_cohom* corr = nullptr;
  REQUIRE(orbidx_character(ORBIDX_BUNDLE_CORRECTION, 2, 1, &corr) == ORBIDX_OK);
  REQUIRE(orbidx_cohom_pair(corr, 1, -2, &paired) == ORBIDX_OK);
  REQUIRE(orbidx_cyclotomic_as_rational(paired, &r) == ORBIDX_OK);
  CHECK(str(r) == "-1");  // 1/2 * 1 + 3/2 * (-2/2)
  orbidx_cyclotomic_free(paired);
  for (auto* h : {sym, q, thom, inv, one, corr}) orbidx_cohom_free(h);
  REQUIRE(orbidx_character_dump_json(3, &s) == ORBIDX_OK);
  j = take(s);
  CHECK(j["elements"].size() == 3);
  CHECK(!j["elements"][0]["characters"].contains("correction"));
  CHECK(j["elements"][1]["characters"].contains("correction"));
}

TEST_CASE("index entry points") {
  orbidx_topology hitchin{2, 0, 1, -2, 5};
  int64_t v = 0;
  REQUIRE(orbidx_index(&hitchin, ORBIDX_SD, ORBIDX_ROUTE_KAWASAKI, &v) == ORBIDX_OK);
  CHECK(v == 3);
  REQUIRE(orbidx_index(&hitchin, ORBIDX_SD, ORBIDX_ROUTE_CLOSED_FORM, &v) == ORBIDX_OK);
  CHECK(v == 3);
  orbidx_topology smooth{2, 0, 2, 0, 1};
  CHECK(orbidx_index(&smooth, ORBIDX_ASD, ORBIDX_ROUTE_CLOSED_FORM, &v) == ORBIDX_ERR_INVALID_ARGUMENT);
  REQUIRE(orbidx_index(&smooth, ORBIDX_ASD, ORBIDX_ROUTE_SMOOTH, &v) == ORBIDX_OK);
  CHECK(v == 15);
  orbidx_topology odd{3, 0, 2, 0, 2};
  CHECK(orbidx_index(&odd, ORBIDX_ASD, ORBIDX_ROUTE_KAWASAKI, &v) == ORBIDX_ERR_INVALID_ARGUMENT);
  CHECK(orbidx_index(nullptr, ORBIDX_ASD, ORBIDX_ROUTE_KAWASAKI, &v) == ORBIDX_ERR_NULL_POINTER);
  orbidx_rational *e = nullptr, *h = nullptr;
  REQUIRE(orbidx_correction_sum(15, &e, &h) == ORBIDX_OK);
  CHECK(str(e) == "-3");
  CHECK(str(h) == "-548/45");
  char* s = nullptr;
  REQUIRE(orbidx_correction_json(1, &s) == ORBIDX_OK);
  auto j = take(s);
  CHECK(j["closed_form"].is_null());
  REQUIRE(orbidx_correction_json(7, &s) == ORBIDX_OK);
  CHECK(take(s)["agree"] == true);
  orbidx_rational* beta = nullptr;
  REQUIRE(orbidx_rational_parse("1/2", &beta) == ORBIDX_OK);
  orbidx_rational *chi = nullptr, *tau = nullptr;
  REQUIRE(orbidx_orbifold_characteristics(2, 0, 1, -2, beta, &chi, &tau) == ORBIDX_OK);
  CHECK(str(chi) == "3/2");
  CHECK(str(tau) == "1/2");
  orbidx_rational_free(beta);
  orbidx_rational* idx = nullptr;
  REQUIRE(orbidx_index_smooth(3, 1, ORBIDX_ASD, &idx) == ORBIDX_OK);
  CHECK(str(idx) == "37");
}

TEST_CASE("application entry points") {
  int64_t v = 0;
  REQUIRE(orbidx_h0_bound(ORBIDX_SURFACE_SPHERE, 0, &v) == ORBIDX_OK);
  CHECK(v == 11);
  REQUIRE(orbidx_conf_dim(ORBIDX_SURFACE_NON_ORIENTABLE, 1, &v) == ORBIDX_OK);
  CHECK(v == 3);
  std::vector<int64_t> buf(8);
  size_t n = 0;
  REQUIRE(orbidx_whitney_massey_values(3, buf.data(), buf.size(), &n) == ORBIDX_OK);
  CHECK(n == 4);
  CHECK(std::vector<int64_t>(buf.begin(), buf.begin() + 4) == std::vector<int64_t>{-6, -2, 2, 6});
  CHECK(orbidx_whitney_massey_values(3, buf.data(), 2, &n) == ORBIDX_ERR_BUFFER_TOO_SMALL);
  CHECK(n == 4);
  REQUIRE(orbidx_feasible_self_intersections(5, nullptr, 0, &n) == ORBIDX_OK);
  CHECK(n == 2);
  REQUIRE(orbidx_feasible_self_intersections(5, buf.data(), buf.size(), &n) == ORBIDX_OK);
  CHECK(buf[0] == -10);
  CHECK(buf[1] == -6);

  orbidx_report* r = nullptr;
  REQUIRE(orbidx_lebrun_report(4, 3, &r) == ORBIDX_OK);
  REQUIRE(orbidx_report_index(r, &v) == ORBIDX_OK);
  CHECK(v == -5);
  int64_t h0 = 0, h1 = 0, h2 = 0;
  int k1 = 0, k2 = 0;
  REQUIRE(orbidx_report_dims(r, &h0, &h1, &k1, &h2, &k2) == ORBIDX_OK);
  CHECK(h0 == 1);
  CHECK(k1 == 1);
  CHECK(h1 == 6);
  CHECK(std::string(orbidx_report_verdict(r)) == "moduli_dimension");
  orbidx_report_free(r);
  REQUIRE(orbidx_hitchin_report(7, &r) == ORBIDX_OK);
  CHECK(std::string(orbidx_report_verdict(r)) == "rigid");
  orbidx_report_free(r);
  CHECK(orbidx_hitchin_report(2, &r) == ORBIDX_ERR_INVALID_ARGUMENT);
  orbidx_topology rf{24, -16, 2, -4, 2};
  REQUIRE(orbidx_ricci_flat_moduli_dim(&rf, &v) == ORBIDX_OK);
  CHECK(v == 44);
  char* s = nullptr;
  REQUIRE(orbidx_surfaces_json(1, &s) == ORBIDX_OK);
  auto j = take(s);
  CHECK(j["feasible"] == nlohmann::json{-2});
  CHECK(j["bound"] == "-3/4");
}

TEST_CASE("verification and fault injection") {
  char* s = nullptr;
  int ok = 0;
  REQUIRE(orbidx_verify(8, 2, &s, &ok) == ORBIDX_OK);
  CHECK(ok == 1);
  CHECK(take(s)["all_passed"] == true);
  REQUIRE(orbidx_debug_set_fault(ORBIDX_FAULT_THOM_SIGN) == ORBIDX_OK);
  REQUIRE(orbidx_verify(5, 1, &s, &ok) == ORBIDX_OK);
  orbidx_string_free(s);
  REQUIRE(orbidx_debug_set_fault(ORBIDX_FAULT_NONE) == ORBIDX_OK);
  CHECK(ok == 0);
}
