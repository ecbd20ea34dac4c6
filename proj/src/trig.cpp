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

#include "orbidx/trig.hpp"

#include <map>
#include <mutex>
#include <string>

#include "orbidx/cyclotomic.hpp"
#include "orbidx/error.hpp"

namespace orbidx {

namespace {

struct GeneratorTerms {
  Cyclotomic cos;
  Cyclotomic cos_sq;
  Cyclotomic inv_one_minus_cos;
};

// Values at the generator zeta_m, shared by every p divisible by m.
const GeneratorTerms& generator_terms(std::uint32_t m) {
  static std::mutex mu;
  static std::map<std::uint32_t, GeneratorTerms> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  Cyclotomic c = cos_of(m, 1);
  GeneratorTerms t{c, c * c, (Cyclotomic(m, Rational(1)) - c).inverse()};
  std::lock_guard lock(mu);
  return cache.emplace(m, std::move(t)).first->second;
}

Rational rational_sum(std::uint32_t p, Cyclotomic GeneratorTerms::*field, const char* what) {
  Cyclotomic s = sum_over_nontrivial(p, [field](std::uint32_t m) { return generator_terms(m).*field; });
  auto r = s.as_rational();
  if (!r) fail(Errc::internal, std::string(what) + " over the group of order " + std::to_string(p) +
                                   " is not rational");
  return *r;
}

void require_order(std::uint32_t p) {
  require(p >= 2, Errc::invalid_argument, "trig sums need p >= 2, got " + std::to_string(p));
}

}  // namespace

TrigSums trig_sums_brute_force(std::uint32_t p) {
  require_order(p);
  return {rational_sum(p, &GeneratorTerms::cos, "sum of cos"),
          rational_sum(p, &GeneratorTerms::cos_sq, "sum of cos^2"),
          rational_sum(p, &GeneratorTerms::inv_one_minus_cos, "sum of 1/(1-cos)")};
}

TrigSums trig_sums_closed_form(std::uint32_t p) {
  require_order(p);
  const Rational n(p);
  // cos^2 = (1 + cos 2t) / 2 and the doubled angles sum to -1 unless they all
  // collapse to 1, which happens only for p = 2 (cos^2 pi = 1).
  const Rational cos_sq = p == 2 ? Rational(1) : (n - 2) / 2;
  return {Rational(-1), cos_sq, (n * n - 1) / 6};
}

TrigSums trig_sums(std::uint32_t p) {
  TrigSums brute = trig_sums_brute_force(p);
  if (brute != trig_sums_closed_form(p))
    fail(Errc::internal, "trig sums disagree with the closed form at p = " + std::to_string(p));
  return brute;
}

}  // namespace orbidx
