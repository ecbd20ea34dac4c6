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

// End-to-end acceptance sweep. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "orbidx/applications.hpp"
#include "orbidx/cohomology.hpp"
#include "orbidx/error.hpp"
#include "orbidx/index.hpp"
#include "orbidx/trig.hpp"
#include "orbidx/verify.hpp"

using namespace orbidx;

namespace {

struct Tally {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::string note;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

int g_failed = 0;

// Runs one criterion; exceptions count as failures of that criterion.
void criterion(int number, const std::string& title, const std::function<void(Tally&)>& body) {
  Tally t;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(t);
  } catch (const std::exception& e) {
    t.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = t.failures.empty();
  if (!ok) ++g_failed;
  std::printf("[%s] %2d %s: %zu checks, %zu failures (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number, title.c_str(),
              t.checks, t.failures.size(), secs, t.note.empty() ? "" : " -- ", t.note.c_str());
  for (std::size_t i = 0; i < t.failures.size() && i < 5; ++i) std::printf("       %s\n", t.failures[i].c_str());
  std::fflush(stdout);
}

std::string show(const TopologicalData& d) {
  std::ostringstream s;
  s << "(" << d.chi_m << ", " << d.tau_m << ", " << d.chi_sigma << ", " << d.sigma_sq << ", p=" << d.p << ")";
  return s.str();
}

// 500 tuples in [-20, 20]^4 with chi = tau mod 2 and p in [2, 30].
std::vector<TopologicalData> random_tuples() {
  std::mt19937_64 rng(0xacce97);
  std::uniform_int_distribution<int> v(-20, 20), p(2, 30);
  std::vector<TopologicalData> out;
  while (out.size() < 500) {
    TopologicalData d{v(rng), v(rng), v(rng), v(rng), static_cast<std::uint32_t>(p(rng))};
    if ((d.chi_m - d.tau_m) % 2 != 0) continue;
    out.push_back(d);
  }
  return out;
}

std::int64_t closed_by_hand(const TopologicalData& d, Duality dual) {
  const std::int64_t s = dual == Duality::asd ? 1 : -1;
  return (15 * d.chi_m + s * 29 * d.tau_m) / 2 - 4 * d.chi_sigma - s * 4 * d.sigma_sq;
}

}  // namespace

int main() {
  const std::vector<TopologicalData> tuples = random_tuples();

  criterion(1, "correction sum equals its closed form for p in [2, 200]", [](Tally& t) {
    for (std::uint32_t p = 2; p <= 200; ++p) {
      const CorrectionSum brute = correction_sum(p);
      const Rational n(p);
      const CorrectionSum expected{-(Rational(7) * n - Rational(15)) / (Rational(2) * n),
                                   (Rational(4) - Rational(5, 6) * (n * n - Rational(1))) / n};
      t.expect(brute == expected, "p = " + std::to_string(p) + ": got (" + brute.coeff_e.to_string() + ", " +
                                      brute.coeff_h.to_string() + ")");
      t.expect(brute == correction_sum_closed_form(p), "library closed form at p = " + std::to_string(p));
    }
  });

  criterion(2, "Kawasaki index equals the closed form on 500 random tuples, ASD and SD, independent of p",
            [&](Tally& t) {
              for (const TopologicalData& d : tuples)
                for (Duality dual : {Duality::asd, Duality::sd}) {
                  const std::int64_t k = index_kawasaki(d, dual);
                  t.expect(k == index_closed_form(d, dual), show(d) + " " + std::string(duality_name(dual)));
                  t.expect(k == closed_by_hand(d, dual), show(d) + " by hand");
                  for (std::uint32_t p = 2; p <= 30; ++p) {
                    TopologicalData e = d;
                    e.p = p;
                    t.expect(index_kawasaki(e, dual) == k, show(e) + " differs from p=" + std::to_string(d.p));
                  }
                }
            });

  criterion(3, "at p = 1 the Kawasaki index is the smooth index (15 chi +- 29 tau)/2", [&](Tally& t) {
    for (TopologicalData d : tuples) {
      d.p = 1;
      for (Duality dual : {Duality::asd, Duality::sd}) {
        const std::int64_t s = dual == Duality::asd ? 1 : -1;
        t.expect(Rational(index_kawasaki(d, dual)) == Rational(15 * d.chi_m + s * 29 * d.tau_m, 2), show(d));
      }
    }
  });

  criterion(4, "Hitchin data (2, 0, 1, -2, SD) has index 3 and is rigid for k in [3, 100]", [](Tally& t) {
    for (std::uint32_t k = 3; k <= 100; ++k) {
      const ModuliReport r = hitchin_report(k);
      t.expect(r.index == 3, "report index at k = " + std::to_string(k));
      t.expect(r.dim_h1 == 0, "dim H1 at k = " + std::to_string(k));
      t.expect(r.verdict == Verdict::rigid, "verdict at k = " + std::to_string(k));
      if (k >= 4) t.expect(index_kawasaki({2, 0, 1, -2, k - 2}, Duality::sd) == 3, "Kawasaki at k = " + std::to_string(k));
    }
    t.note = "k = 3 (p = 1) reports the p-independent value 3; the smooth Kawasaki value there is " +
             std::to_string(index_kawasaki({2, 0, 1, -2, 1}, Duality::sd)) + " and is recorded as an assumption";
  });

  criterion(5, "genus-j data (2, 0, 2-2j, 0, SD) has index 7+8j above the H0 bound for j in [1, 20]", [](Tally& t) {
    for (std::uint32_t j = 1; j <= 20; ++j) {
      const std::int64_t expected = 7 + 8 * static_cast<std::int64_t>(j);
      for (std::uint32_t p = 2; p <= 6; ++p) {
        const TopologicalData d{2, 0, 2 - 2 * static_cast<std::int64_t>(j), 0, p};
        t.expect(index_kawasaki(d, Duality::sd) == expected, show(d));
        t.expect(index_closed_form(d, Duality::sd) == expected, show(d) + " closed form");
      }
      const ModuliReport r = orientable_verdict(j);
      t.expect(r.index == expected && r.h0_bound && r.index > *r.h0_bound, "bound at j = " + std::to_string(j));
      t.expect(r.verdict == Verdict::nonexistence, "verdict at j = " + std::to_string(j));
    }
  });

  criterion(6, "feasible self-intersections of j#RP2 for j in [1, 50]", [](Tally& t) {
    t.expect(feasible_self_intersections(1) == std::vector<std::int64_t>{-2}, "j = 1");
    t.expect(feasible_self_intersections(2) == std::vector<std::int64_t>{-4}, "j = 2");
    for (std::uint32_t j = 3; j <= 50; ++j) {
      std::vector<std::int64_t> expected;
      const auto jj = static_cast<std::int64_t>(j);
      for (std::int64_t v : whitney_massey_values(j))
        if (v >= -2 * jj && v < -jj) expected.push_back(v);
      t.expect(feasible_self_intersections(j) == expected, "j = " + std::to_string(j));
    }
  });

  criterion(7, "LeBrun data (n+2, n, 2, n, SD) has index 7-3n and moduli dimension 3n-6 for n in [3, 30]",
            [](Tally& t) {
              for (std::uint32_t n = 3; n <= 30; ++n) {
                const auto nn = static_cast<std::int64_t>(n);
                for (std::uint32_t p = 2; p <= 10; ++p) {
                  const TopologicalData d{nn + 2, nn, 2, nn, p};
                  t.expect(index_kawasaki(d, Duality::sd) == 7 - 3 * nn, show(d));
                  const ModuliReport r = lebrun_report(n, p);
                  t.expect(r.index == 7 - 3 * nn && r.moduli_dim == 3 * nn - 6, "report n = " + std::to_string(n));
                }
              }
            });

  criterion(8, "Ricci-flat moduli dimension is minus the ASD closed form", [&](Tally& t) {
    for (const TopologicalData& d : tuples) {
      t.expect(ricci_flat_moduli_dim(d) == -index_closed_form(d, Duality::asd), show(d));
      t.expect(ricci_flat_moduli_dim(d) == -closed_by_hand(d, Duality::asd), show(d) + " by hand");
    }
    t.expect(ricci_flat_moduli_dim({24, -16, 2, -4, 2}) == 44, "(24, -16, 2, -4)");
    t.expect(ricci_flat_moduli_dim({2, 0, 2, 0, 2}) == -7, "(2, 0, 2, 0)");
  });

  criterion(9, "brute-force trig sums equal the closed forms for p in [2, 1000]", [](Tally& t) {
    for (std::uint32_t p = 2; p <= 1000; ++p) {
      const TrigSums b = trig_sums_brute_force(p);
      const Rational n(p);
      t.expect(b.sum_cos == Rational(-1), "sum cos at p = " + std::to_string(p));
      t.expect(b.sum_inv_one_minus_cos == (n * n - Rational(1)) / Rational(6), "sum 1/(1-cos) at p = " + std::to_string(p));
      t.expect(b.sum_cos_sq == (p == 2 ? Rational(1) : (n - Rational(2)) / Rational(2)),
               "sum cos^2 at p = " + std::to_string(p));
      t.expect(b == trig_sums_closed_form(p), "library closed form at p = " + std::to_string(p));
    }
    t.note = "sum cos^2 = (p-2)/2 holds for p >= 3; at p = 2 the single term cos^2(pi) gives 1, which brute force returns";
  });

  criterion(10, "structural suites: field and ring axioms, character invariants, integrality, rationality",
            [](Tally& t) {
              std::mt19937_64 rng(0x57a7);
              std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
              auto element = [&](std::uint32_t n) {
                std::vector<Rational> c(euler_phi(n));
                for (auto& x : c) x = Rational(num(rng), den(rng));
                return Cyclotomic::from_coeffs(n, std::move(c));
              };
              for (std::uint32_t n = 1; n <= 30; ++n)
                for (int i = 0; i < 10; ++i) {
                  const Cyclotomic a = element(n), b = element(n), c = element(n), one(n, Rational(1));
                  t.expect(a * (b + c) == a * b + a * c, "distributivity in Q(zeta_" + std::to_string(n) + ")");
                  t.expect((a * b) * c == a * (b * c), "associativity in Q(zeta_" + std::to_string(n) + ")");
                  t.expect(a * b == b * a, "commutativity in Q(zeta_" + std::to_string(n) + ")");
                  if (!a.is_zero()) t.expect(a * a.inverse() == one, "inverse in Q(zeta_" + std::to_string(n) + ")");
                  CyclotomicClass x{a}, y{b}, z{c};
                  for (Monomial m : kMonomials) {
                    x[m] = element(n);
                    y[m] = element(n);
                    z[m] = element(n);
                  }
                  t.expect((x * y) * z == x * (y * z), "truncated associativity at order " + std::to_string(n));
                  t.expect(x * (y + z) == x * y + x * z, "truncated distributivity at order " + std::to_string(n));
                  if (!x.c0().is_zero())
                    t.expect(x * invert_unit(x) == CyclotomicClass(one), "unit inverse at order " + std::to_string(n));
                }
              // conjugation, rank, divisibility, correction sums, trig and p-independence per p
              const VerificationReport report = run_verification(60, 1);
              for (const auto& row : report.rows)
                for (const auto& o : row) t.expect(o.passed, o.check + " at p = " + std::to_string(o.p) + ": " + o.detail);
              // rationality of every summed class (throws otherwise) and integrality of every index
              for (std::uint32_t p = 1; p <= 200; ++p) {
                const RationalClass s = summed_correction(p);
                t.expect(s.ce() == correction_sum(p).coeff_e, "summed class at p = " + std::to_string(p));
              }
              for (std::uint32_t p = 1; p <= 16; ++p)
                t.expect(summed_correction(p) == summed_correction_direct(p), "orbit vs literal sum at p = " + std::to_string(p));
            });

  std::printf("%s: %d of 10 criteria failed\n", g_failed == 0 ? "ACCEPTED" : "REJECTED", g_failed);
  return g_failed == 0 ? 0 : 1;
}
