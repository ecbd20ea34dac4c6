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

#ifndef ORBIDX_SERIALIZE_HPP
#define ORBIDX_SERIALIZE_HPP

#include <json.hpp>

#include "orbidx/applications.hpp"
#include "orbidx/cohomology.hpp"
#include "orbidx/cyclotomic.hpp"
#include "orbidx/index.hpp"
#include "orbidx/rational.hpp"
#include "orbidx/trig.hpp"

namespace orbidx {

using json = nlohmann::ordered_json;

// "num/den", or "n" when den = 1
json to_json(const Rational& r);
// {"order": p, "coeffs": ["a0/b0", ...]}
json to_json(const Cyclotomic& c);
// {"1": s, "e": s, "h": s, "ee": s, "eh": s, "hh": s}
json to_json(const RationalClass& a);
json to_json(const CyclotomicClass& a);
json to_json(const IntPoly& poly);
json to_json(const TopologicalData& d);
json to_json(const CorrectionSum& c);
json to_json(const TrigSums& t);
// {"index": n, "route": ..., "correction": {"e", "h"}, "inputs": {...}}
json to_json(const IndexResult& r);
// Includes an explicit "assumptions" array.
json to_json(const ModuliReport& r);

Rational rational_from_json(const json& j);
Cyclotomic cyclotomic_from_json(const json& j);

}  // namespace orbidx

#endif  // ORBIDX_SERIALIZE_HPP
