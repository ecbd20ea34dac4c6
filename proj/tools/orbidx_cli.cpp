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

// orbifold-index: batch front end over the orbidx C API.

#include <unistd.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "orbidx/orbidx.h"

namespace {

using json = nlohmann::ordered_json;

enum Exit : int { kOk = 0, kUsage = 1, kVerifyFailed = 2, kInternal = 3 };

struct Failure {
  int code;
  std::string message;
};

int exit_for(orbidx_status s) {
  switch (s) {
    case ORBIDX_ERR_INVALID_ARGUMENT:
    case ORBIDX_ERR_PARSE:
    case ORBIDX_ERR_ORDER_MISMATCH:
    case ORBIDX_ERR_DIVISION_BY_ZERO:
    case ORBIDX_ERR_NULL_POINTER:
      return kUsage;
    default:
      return kInternal;
  }
}

void check(orbidx_status s) {
  if (s != ORBIDX_OK)
    throw Failure{exit_for(s), std::string(orbidx_status_name(s)) + ": " + orbidx_last_error_message()};
}

// Takes ownership of a malloc'd string from the library.
json take_json(char* raw) {
  json j = json::parse(raw);
  orbidx_string_free(raw);
  return j;
}

std::string take_string(char* raw) {
  std::string s(raw);
  orbidx_string_free(raw);
  return s;
}

std::string rational_string(orbidx_rational* r) {
  char* s = nullptr;
  orbidx_status st = orbidx_rational_to_string(r, &s);
  orbidx_rational_free(r);
  check(st);
  return take_string(s);
}

// Flattened "path  value" rows; rationals already arrive as strings.
void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    if (j.empty()) rows.emplace_back(prefix, "{}");
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else if (j.is_string()) {
    rows.emplace_back(prefix, j.get<std::string>());
  } else {
    rows.emplace_back(prefix, j.dump());
  }
}

void render_table(const json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  for (const auto& [k, v] : rows) std::cout << k << std::string(width - k.size() + 2, ' ') << v << '\n';
}

struct Output {
  bool force_json = false;
  void emit(const json& j) const {
    if (force_json || !isatty(STDOUT_FILENO))
      std::cout << j.dump(2) << '\n';
    else
      render_table(j);
  }
};

unsigned thread_cap() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ORBIFOLD_INDEX_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) throw Failure{kUsage, "ORBIFOLD_INDEX_THREADS must be a positive integer"};
    n = std::min<unsigned>(n, static_cast<unsigned>(v));
  }
  return n;
}

orbidx_duality parse_duality(const std::string& s) { return s == "sd" ? ORBIDX_SD : ORBIDX_ASD; }

struct TopologyFlags {
  std::int64_t chi = 0, tau = 0, sigma_chi = 0, sigma_sq = 0;
  std::uint32_t p = 1;
  orbidx_topology get() const { return {chi, tau, sigma_chi, sigma_sq, p}; }
};

void add_topology(CLI::App* cmd, TopologyFlags& t, bool with_p) {
  cmd->add_option("--chi", t.chi, "Euler characteristic of M")->required();
  cmd->add_option("--tau", t.tau, "signature of M")->required();
  cmd->add_option("--sigma-chi", t.sigma_chi, "Euler characteristic of the surface")->required();
  cmd->add_option("--sigma-sq", t.sigma_sq, "self-intersection of the surface")->required();
  if (with_p) cmd->add_option("--p", t.p, "order of the cone angle group")->check(CLI::PositiveNumber);
}

json index_route(const orbidx_topology& d, orbidx_duality dual, orbidx_route route) {
  char* out = nullptr;
  check(orbidx_index_json(&d, dual, route, &out));
  return take_json(out);
}

int cmd_index(const TopologyFlags& t, const std::string& dual_s, const std::string& route_s, const Output& out) {
  const orbidx_topology d = t.get();
  const orbidx_duality dual = parse_duality(dual_s);
  if (route_s == "closed" && d.p == 1)
    throw Failure{kUsage,
                  "--route closed needs p >= 2: at p = 1 there is no singular locus and the index is the smooth "
                  "formula; use --route kawasaki"};
  if (route_s == "kawasaki") {
    out.emit(index_route(d, dual, ORBIDX_ROUTE_KAWASAKI));
    return kOk;
  }
  if (route_s == "closed") {
    out.emit(index_route(d, dual, ORBIDX_ROUTE_CLOSED_FORM));
    return kOk;
  }
  json k = index_route(d, dual, ORBIDX_ROUTE_KAWASAKI);
  json c = index_route(d, dual, d.p == 1 ? ORBIDX_ROUTE_SMOOTH : ORBIDX_ROUTE_CLOSED_FORM);
  const bool agree = k["index"] == c["index"];
  json r = {{"index", k["index"]}, {"agree", agree}, {"kawasaki", k}, {"closed_form", c}};
  out.emit(r);
  return agree ? kOk : kVerifyFailed;
}

int cmd_correction(std::uint32_t p, bool dump_characters, const Output& out) {
  char* raw = nullptr;
  check(orbidx_correction_json(p, &raw));
  json j = take_json(raw);
  if (dump_characters) {
    check(orbidx_character_dump_json(p, &raw));
    j["characters"] = take_json(raw)["elements"];
  }
  out.emit(j);
  if (j["agree"].is_boolean() && !j["agree"].get<bool>()) return kVerifyFailed;
  return kOk;
}

int cmd_verify(std::uint32_t p_max, const std::string& fault, const Output& out) {
  if (p_max < 2) throw Failure{kUsage, "--p-max must be at least 2"};
  if (!fault.empty()) {
    if (fault != "thom-sign") throw Failure{kUsage, "unknown fault: " + fault};
    check(orbidx_debug_set_fault(ORBIDX_FAULT_THOM_SIGN));
  }
  char* raw = nullptr;
  int passed = 0;
  check(orbidx_verify(p_max, thread_cap(), &raw, &passed));
  out.emit(take_json(raw));
  return passed ? kOk : kVerifyFailed;
}

int cmd_orbifold_char(const TopologyFlags& t, const std::string& beta_s, const Output& out) {
  orbidx_rational* beta = nullptr;
  if (orbidx_rational_parse(beta_s.c_str(), &beta) != ORBIDX_OK)
    throw Failure{kUsage, "--beta expects a rational a/b, got '" + beta_s + "'"};
  orbidx_rational* chi = nullptr;
  orbidx_rational* tau = nullptr;
  orbidx_status st = orbidx_orbifold_characteristics(t.chi, t.tau, t.sigma_chi, t.sigma_sq, beta, &chi, &tau);
  char* beta_str = nullptr;
  orbidx_rational_to_string(beta, &beta_str);
  orbidx_rational_free(beta);
  const std::string beta_norm = take_string(beta_str);
  check(st);
  json j = {{"inputs",
             {{"chi_m", t.chi}, {"tau_m", t.tau}, {"chi_sigma", t.sigma_chi}, {"sigma_sq", t.sigma_sq},
              {"beta", beta_norm}}},
            {"chi_orb", rational_string(chi)},
            {"tau_orb", rational_string(tau)}};
  out.emit(j);
  return kOk;
}

int cmd_surfaces(std::uint32_t j, const Output& out) {
  char* raw = nullptr;
  check(orbidx_surfaces_json(j, &raw));
  out.emit(take_json(raw));
  return kOk;
}

int emit_report(orbidx_report* r, const Output& out) {
  char* raw = nullptr;
  orbidx_status st = orbidx_report_to_json(r, &raw);
  orbidx_report_free(r);
  check(st);
  out.emit(take_json(raw));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact index computations for deformations of edge-cone anti-self-dual metrics", "orbifold-index"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.force_json, "always emit JSON");
  app.set_version_flag("--version", std::string(orbidx_version()));

  TopologyFlags t;
  std::string duality = "asd";
  std::string route = "kawasaki";
  auto* index = app.add_subcommand("index", "index of the deformation complex");
  add_topology(index, t, true);
  index->add_option("--duality", duality)->check(CLI::IsMember({"asd", "sd"}));
  index->add_option("--route", route)->check(CLI::IsMember({"kawasaki", "closed", "both"}));

  std::uint32_t corr_p = 2;
  bool dump_chars = false;
  auto* correction = app.add_subcommand("correction", "summed fixed-point correction for Z/p");
  correction->add_option("--p", corr_p)->required()->check(CLI::PositiveNumber);
  correction->add_flag("--characters", dump_chars, "include every equivariant Chern character");

  std::uint32_t p_max = 50;
  std::string fault;
  auto* verify = app.add_subcommand("verify", "run the invariant suites for all p <= N");
  verify->add_option("--p-max", p_max)->required();
  verify->add_option("--inject-fault", fault)->group("");

  TopologyFlags oc;
  std::string beta;
  auto* orbchar = app.add_subcommand("orbifold-char", "orbifold Euler characteristic and signature");
  add_topology(orbchar, oc, false);
  orbchar->add_option("--beta", beta, "cone angle parameter a/b")->required();

  std::uint32_t surf_j = 1;
  auto* surfaces = app.add_subcommand("surfaces", "feasible self-intersections for non-orientable surfaces");
  surfaces->add_option("--j", surf_j, "number of crosscaps")->required()->check(CLI::PositiveNumber);

  auto* example = app.add_subcommand("example", "worked families");
  example->require_subcommand(1);
  std::uint32_t k = 3;
  auto* hitchin = example->add_subcommand("hitchin", "Hitchin metrics with cone angle 2pi/(k-2)");
  hitchin->add_option("--k", k)->required();
  std::uint32_t n = 3, lp = 2;
  auto* lebrun = example->add_subcommand("lebrun", "LeBrun metrics on n#CP2");
  lebrun->add_option("--n", n)->required();
  lebrun->add_option("--p", lp)->required();
  std::uint32_t genus = 1;
  auto* orientable = example->add_subcommand("orientable", "nonexistence test for an orientable surface");
  orientable->add_option("--genus", genus)->required();
  TopologyFlags rf;
  rf.p = 2;
  auto* ricci = example->add_subcommand("ricci-flat", "Ricci-flat edge-cone metrics");
  add_topology(ricci, rf, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*index) return cmd_index(t, duality, route, out);
    if (*correction) return cmd_correction(corr_p, dump_chars, out);
    if (*verify) return cmd_verify(p_max, fault, out);
    if (*orbchar) return cmd_orbifold_char(oc, beta, out);
    if (*surfaces) return cmd_surfaces(surf_j, out);
    orbidx_report* r = nullptr;
    if (*hitchin) {
      check(orbidx_hitchin_report(k, &r));
    } else if (*lebrun) {
      check(orbidx_lebrun_report(n, lp, &r));
    } else if (*orientable) {
      check(orbidx_orientable_verdict(genus, &r));
    } else {
      const orbidx_topology d = rf.get();
      check(orbidx_ricci_flat_report(&d, &r));
    }
    return emit_report(r, out);
  } catch (const Failure& f) {
    std::cerr << "orbifold-index: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "orbifold-index: " << e.what() << '\n';
    return kInternal;
  }
}
