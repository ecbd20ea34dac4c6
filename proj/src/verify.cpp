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

#include "orbidx/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <random>
#include <thread>

#include "orbidx/bundles.hpp"
#include "orbidx/error.hpp"
#include "orbidx/trig.hpp"

namespace orbidx {

namespace {

constexpr Bundle kConstructors[] = {Bundle::cotangent,     Bundle::lambda_plus,     Bundle::lambda_minus,
                                    Bundle::s20_cotangent, Bundle::s20_lambda_plus, Bundle::symbol,
                                    Bundle::thom};

using Check = std::function<std::string(std::uint32_t)>;  // empty string on success

std::string check_correction_sum(std::uint32_t p) {
  const CorrectionSum brute = correction_sum(p);
  const CorrectionSum closed = correction_sum_closed_form(p);
  if (brute == closed) return {};
  return "brute force (" + brute.coeff_e.to_string() + ", " + brute.coeff_h.to_string() +
         ") vs closed form (" + closed.coeff_e.to_string() + ", " + closed.coeff_h.to_string() + ")";
}

std::string check_trig(std::uint32_t p) {
  if (trig_sums_brute_force(p) == trig_sums_closed_form(p)) return {};
  return "trig sums differ from closed form";
}

std::string check_conjugation(std::uint32_t p) {
  for (std::uint32_t j = 1; j <= p / 2; ++j) {
    const GroupElement g(p, j);
    for (Bundle b : kConstructors) {
      CyclotomicClass lhs = ch(b, g.inverse());
      CyclotomicClass rhs = ch(b, g);
      for (Monomial m : kMonomials) rhs[m] = rhs[m].conjugate();
      if (!(lhs == rhs))
        return std::string(bundle_name(b)) + " at j = " + std::to_string(j) + " breaks conjugation symmetry";
    }
  }
  return {};
}

std::string check_rank(std::uint32_t p) {
  const GroupElement id(p, 0);
  const std::pair<Bundle, int> ranks[] = {{Bundle::cotangent, 4},     {Bundle::lambda_plus, 3},
                                          {Bundle::lambda_minus, 3},  {Bundle::s20_cotangent, 9},
                                          {Bundle::s20_lambda_plus, 5}};
  for (const auto& [b, rank] : ranks) {
    auto c0 = ch(b, id).c0().as_rational();
    if (!c0 || *c0 != Rational(rank))
      return std::string(bundle_name(b)) + " has rank " + (c0 ? c0->to_string() : "?") + ", expected " +
             std::to_string(rank);
  }
  return {};
}

std::string check_divisibility(std::uint32_t p) {
  for (std::uint32_t j = 1; j < p; ++j) {
    try {
      (void)divide_by_e(ch_symbol(GroupElement(p, j)));
    } catch (const Error&) {
      return "symbol character at j = " + std::to_string(j) + " is not divisible by e";
    }
  }
  return {};
}

std::string check_p_independence(std::uint32_t p) {
  for (const TopologicalData& base : p_independence_samples()) {
    for (Duality dual : {Duality::asd, Duality::sd}) {
      TopologicalData d = base;
      d.p = 2;
      const std::int64_t reference = index_kawasaki(d, dual);
      d.p = p;
      const std::int64_t at_p = index_kawasaki(d, dual);
      const std::int64_t closed = index_closed_form(d, dual);
      if (at_p != reference || at_p != closed)
        return std::string(duality_name(dual)) + " index " + std::to_string(at_p) + " at p vs " +
               std::to_string(reference) + " at p = 2, closed form " + std::to_string(closed);
    }
  }
  return {};
}

const std::vector<Check>& checks() {
  static const std::vector<Check> c = {check_correction_sum, check_trig,         check_conjugation,
                                       check_rank,           check_divisibility, check_p_independence};
  return c;
}

std::vector<CheckOutcome> run_row(std::uint32_t p) {
  std::vector<CheckOutcome> row;
  const auto& names = verification_checks();
  for (std::size_t i = 0; i < names.size(); ++i) {
    CheckOutcome o{names[i], p, false, {}};
    try {
      o.detail = checks()[i](p);
      o.passed = o.detail.empty();
    } catch (const std::exception& e) {
      o.detail = e.what();
    }
    row.push_back(std::move(o));
  }
  return row;
}

}  // namespace

const std::vector<std::string>& verification_checks() {
  static const std::vector<std::string> names = {"correction_sum", "trig_identities", "conjugation",
                                                 "rank",           "divisibility",    "p_independence"};
  return names;
}

bool VerificationReport::all_passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  std::size_t n = 0;
  for (const auto& row : rows)
    for (const auto& o : row) n += o.passed ? 0 : 1;
  return n;
}

std::vector<TopologicalData> p_independence_samples() {
  std::vector<TopologicalData> out = {
      {2, 0, 1, -2, 1},   // Hitchin
      {5, 3, 2, 3, 1},    // LeBrun, n = 3
      {2, 0, -2, 0, 1},   // genus 2 in S^4
      {24, -16, 2, -4, 1},
  };
  std::mt19937_64 rng(0x0b1d5eedULL);
  std::uniform_int_distribution<std::int64_t> dist(-20, 20);
  while (out.size() < 10) {
    TopologicalData d{dist(rng), dist(rng), dist(rng), dist(rng), 1};
    if ((d.chi_m - d.tau_m) % 2 == 0) out.push_back(d);
  }
  return out;
}

VerificationReport run_verification(std::uint32_t p_max, unsigned threads) {
  require(p_max >= 2, Errc::invalid_argument, "verification needs p_max >= 2");
  VerificationReport report;
  report.p_max = p_max;
  report.rows.resize(p_max - 1);
  std::atomic<std::uint32_t> next{2};
  auto worker = [&] {
    for (std::uint32_t p = next++; p <= p_max; p = next++) report.rows[p - 2] = run_row(p);
  };
  threads = std::clamp(threads, 1u, p_max - 1);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return report;
}

json to_json(const VerificationReport& r) {
  json summary = json::object();
  for (std::size_t i = 0; i < verification_checks().size(); ++i) {
    json failed = json::array();
    for (const auto& row : r.rows)
      if (!row[i].passed) failed.push_back({{"p", row[i].p}, {"detail", row[i].detail}});
    summary[verification_checks()[i]] = {{"passed", failed.empty()}, {"failures", std::move(failed)}};
  }
  json matrix = json::array();
  for (const auto& row : r.rows) {
    json cells = json::object();
    cells["p"] = row.front().p;
    for (const auto& o : row) cells[o.check] = o.passed;
    matrix.push_back(std::move(cells));
  }
  return {{"p_max", r.p_max},
          {"all_passed", r.all_passed()},
          {"checks", std::move(summary)},
          {"matrix", std::move(matrix)}};
}

}  // namespace orbidx
