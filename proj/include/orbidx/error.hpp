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

#ifndef ORBIDX_ERROR_HPP
#define ORBIDX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace orbidx {

// Failure categories. The numeric values are mirrored by orbidx_status in
// the C API, so keep them in sync.
enum class Errc {
  invalid_argument = 1,
  order_mismatch = 2,
  division_by_zero = 3,
  not_rational = 4,
  non_unit = 5,
  not_divisible = 6,
  parse_error = 7,
  internal = 8,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace orbidx

#endif  // ORBIDX_ERROR_HPP
