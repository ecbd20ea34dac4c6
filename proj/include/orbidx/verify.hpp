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

#ifndef ORBIDX_VERIFY_HPP
#define ORBIDX_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "orbidx/index.hpp"
#include "orbidx/serialize.hpp"

namespace orbidx {

// Names of the per-p consistency suites, in report order.
const std::vector<std::string>& verification_checks();

struct CheckOutcome {
  std::string check;
  std::uint32_t p = 0;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::uint32_t p_max = 0;
  // One row per p in [2, p_max], columns in verification_checks() order.
  std::vector<std::vector<CheckOutcome>> rows;

  bool all_passed() const;
  std::size_t failures() const;
};

// Fixed sample of topological data used by the p-independence suite.
std::vector<TopologicalData> p_independence_samples();

// Runs every suite for each p in [2, p_max] on up to `threads` workers; the
// report is identical for any thread count.
VerificationReport run_verification(std::uint32_t p_max, unsigned threads = 1);

json to_json(const VerificationReport& r);

}  // namespace orbidx

#endif  // ORBIDX_VERIFY_HPP
