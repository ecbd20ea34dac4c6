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

#include "orbidx/bundles.hpp"

#include <atomic>
#include <iterator>
#include <string>
#include <vector>

#include "orbidx/error.hpp"
#include "phase_poly.hpp"

namespace orbidx {

namespace {

std::atomic<Fault> g_fault{Fault::none};

constexpr std::pair<Bundle, std::string_view> kBundleNames[] = {
    {Bundle::theta1, "theta1"},
    {Bundle::theta1_bar, "theta1_bar"},
    {Bundle::theta2, "theta2"},
    {Bundle::theta2_bar, "theta2_bar"},
    {Bundle::trivial, "trivial"},
    {Bundle::cotangent, "cotangent"},
    {Bundle::lambda_plus, "lambda_plus"},
    {Bundle::lambda_minus, "lambda_minus"},
    {Bundle::s20_cotangent, "s20_cotangent"},
    {Bundle::s20_lambda_plus, "s20_lambda_plus"},
    {Bundle::symbol, "symbol"},
    {Bundle::thom, "thom"},
};


}  // namespace

GroupElement::GroupElement(std::uint32_t p, std::uint32_t j) : p_(p), j_(j) {
  require(p >= 1, Errc::invalid_argument, "group order must be >= 1");
  require(j < p, Errc::invalid_argument,
          "group element power " + std::to_string(j) + " outside [0, " + std::to_string(p) + ")");
}

std::string_view bundle_name(Bundle b) noexcept {
  for (const auto& [k, name] : kBundleNames)
    if (k == b) return name;
  return "?";
}

Bundle bundle_from_name(std::string_view name) {
  for (const auto& [k, n] : kBundleNames)
    if (n == name) return k;
  fail(Errc::invalid_argument, "unknown bundle '" + std::string(name) + "'");
}

namespace {

using detail::PhaseClass;
using detail::PhasePoly;

// Characters as classes over Q[z, 1/z]; z stands for the rotation phase.
PhaseClass phase_constant(const Rational& c) { return PhaseClass(PhasePoly(c)); }

PhaseClass phase_line(LineBundle id) {
  const PhasePoly one(Rational(1));
  const PhasePoly zero;
  switch (id) {
    case LineBundle::theta1: return exp_class(one, zero);
    case LineBundle::theta1_bar: return exp_class(-one, zero);
    case LineBundle::theta2: return PhasePoly::monomial(1) * exp_class(zero, one);
    case LineBundle::theta2_bar: return PhasePoly::monomial(-1) * exp_class(zero, -one);
    case LineBundle::trivial: return PhaseClass(one);
  }
  fail(Errc::invalid_argument, "unknown line bundle");
}

PhaseClass phase_cotangent() {
  return phase_line(LineBundle::theta1) + phase_line(LineBundle::theta1_bar) + phase_line(LineBundle::theta2) +
         phase_line(LineBundle::theta2_bar);
}

// Theta1 Theta2 + Theta1-bar Theta2-bar
PhaseClass phase_self_dual_part() {
  return phase_line(LineBundle::theta1) * phase_line(LineBundle::theta2) +
         phase_line(LineBundle::theta1_bar) * phase_line(LineBundle::theta2_bar);
}

PhaseClass phase_lambda_plus() { return phase_line(LineBundle::trivial) + phase_self_dual_part(); }

PhaseClass phase_lambda_minus() {
  // C_- + Theta1-bar Theta2 + Theta1 Theta2-bar
  return phase_line(LineBundle::trivial) + phase_line(LineBundle::theta1_bar) * phase_line(LineBundle::theta2) +
         phase_line(LineBundle::theta1) * phase_line(LineBundle::theta2_bar);
}

PhaseClass phase_s20_cotangent() { return phase_lambda_plus() * phase_lambda_minus(); }

PhaseClass phase_s20_lambda_plus() {
  // V + (ch(V)^2 - 2) + C_tr. The -2 removes the two copies of the trivial
  // Theta1 Theta2 (x) conjugate term.
  const PhaseClass v = phase_self_dual_part();
  return v + (v * v - phase_constant(Rational(2))) + phase_constant(Rational(1));
}

PhaseClass phase_symbol() { return phase_cotangent() - phase_s20_cotangent() + phase_s20_lambda_plus(); }

PhaseClass phase_thom(Fault fault) {
  PhaseClass normal = phase_line(LineBundle::theta2) + phase_line(LineBundle::theta2_bar);
  if (fault == Fault::thom_sign) normal[Monomial::h] = -normal[Monomial::h];
  return phase_constant(Rational(2)) - normal;
}

PhaseClass build(Bundle b, Fault fault) {
  switch (b) {
    case Bundle::theta1: return phase_line(LineBundle::theta1);
    case Bundle::theta1_bar: return phase_line(LineBundle::theta1_bar);
    case Bundle::theta2: return phase_line(LineBundle::theta2);
    case Bundle::theta2_bar: return phase_line(LineBundle::theta2_bar);
    case Bundle::trivial: return phase_line(LineBundle::trivial);
    case Bundle::cotangent: return phase_cotangent();
    case Bundle::lambda_plus: return phase_lambda_plus();
    case Bundle::lambda_minus: return phase_lambda_minus();
    case Bundle::s20_cotangent: return phase_s20_cotangent();
    case Bundle::s20_lambda_plus: return phase_s20_lambda_plus();
    case Bundle::symbol: return phase_symbol();
    case Bundle::thom: return phase_thom(fault);
  }
  fail(Errc::invalid_argument, "unknown bundle");
}

constexpr std::size_t kBundleCount = std::size(kBundleNames);

// Fault-free characters are fixed, so they are built once.
const PhaseClass& symbolic(Bundle b) {
  static const std::vector<PhaseClass> table = [] {
    std::vector<PhaseClass> t;
    for (std::size_t i = 0; i < kBundleCount; ++i) t.push_back(build(static_cast<Bundle>(i), Fault::none));
    return t;
  }();
  const auto i = static_cast<std::size_t>(b);
  if (i >= kBundleCount) fail(Errc::invalid_argument, "unknown bundle");
  return table[i];
}

}  // namespace

detail::PhaseClass symbolic_character(Bundle b) {
  const Fault f = g_fault.load(std::memory_order_relaxed);
  return f == Fault::none ? symbolic(b) : build(b, f);
}

CyclotomicClass ch(Bundle b, const GroupElement& g) {
  const Fault f = g_fault.load(std::memory_order_relaxed);
  if (f == Fault::none) return detail::evaluate(symbolic(b), g.order(), g.power());
  return detail::evaluate(build(b, f), g.order(), g.power());
}

CyclotomicClass ch_line(LineBundle id, const GroupElement& g) {
  return detail::evaluate(phase_line(id), g.order(), g.power());
}
CyclotomicClass ch_cotangent(const GroupElement& g) { return ch(Bundle::cotangent, g); }
CyclotomicClass ch_lambda_plus(const GroupElement& g) { return ch(Bundle::lambda_plus, g); }
CyclotomicClass ch_lambda_minus(const GroupElement& g) { return ch(Bundle::lambda_minus, g); }
CyclotomicClass ch_s20_cotangent(const GroupElement& g) { return ch(Bundle::s20_cotangent, g); }
CyclotomicClass ch_s20_lambda_plus(const GroupElement& g) { return ch(Bundle::s20_lambda_plus, g); }
CyclotomicClass ch_symbol(const GroupElement& g) { return ch(Bundle::symbol, g); }
CyclotomicClass ch_thom(const GroupElement& g) { return ch(Bundle::thom, g); }

void set_fault(Fault f) noexcept { g_fault.store(f, std::memory_order_relaxed); }
Fault current_fault() noexcept { return g_fault.load(std::memory_order_relaxed); }

}  // namespace orbidx
