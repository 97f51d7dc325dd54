// Copyright 2026 The cfdyn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// JSON views of the report types. Field order is fixed; rationals are
// strings "p/q" in lowest terms; reals are fixed-point decimal strings.

#ifndef CFDYN_REPORT_JSON_HPP_
#define CFDYN_REPORT_JSON_HPP_

#include <string>

#include "json.hpp"

#include "cfdyn/lemmas.hpp"
#include "cfdyn/orbit_density.hpp"
#include "cfdyn/scramble.hpp"

namespace cfdyn {

using ordered_json = nlohmann::ordered_json;

inline std::string real_str(const Real& v, int digits10) {
  return v.str(digits10, std::ios_base::fixed);
}

inline ordered_json to_json(const ScrambleReport& r) {
  ordered_json j;
  j["kind"] = "scramble_report";
  j["n_a"] = r.n_a;
  j["n_b"] = r.n_b;
  j["seed_a"] = r.seed_a;
  j["seed_b"] = r.seed_b;
  j["count_target"] = r.count_target;
  j["j_max"] = r.j_max;
  j["min_gap"] = to_fraction(r.min_gap);
  ordered_json seps = ordered_json::array();
  for (const auto& s : r.separations) {
    ordered_json e;
    e["n"] = s.shift;
    e["depth"] = s.depth;
    e["gap_lower"] = to_fraction(s.gap);
    seps.push_back(e);
  }
  j["separations"] = seps;
  ordered_json prox = ordered_json::array();
  for (const auto& p : r.proximities) {
    ordered_json e;
    e["j"] = p.level;
    e["l"] = p.shift;
    e["common"] = p.common;
    e["gap_upper"] = to_fraction(p.gap_upper);
    prox.push_back(e);
  }
  j["proximities"] = prox;
  j["separations_ok"] = r.separations_ok;
  j["proximities_ok"] = r.proximities_ok;
  j["verdict"] = r.verdict;
  j["notes"] = r.notes;
  return j;
}

inline ordered_json to_json(const HolderReport& r, int digits10,
                            bool with_samples = false) {
  ordered_json j;
  j["kind"] = "holder_report";
  j["n_bound"] = r.n_bound;
  j["epsilon"] = to_fraction(r.epsilon);
  j["threshold"] = r.threshold;
  if (r.c_exact)
    j["c_exact"] = to_fraction(*r.c_exact);
  else
    j["c_exact"] = nullptr;
  j["c_approx"] = real_str(r.c_approx, digits10);
  j["sample_count"] = r.sample_count;
  j["failures"] = r.failures;
  j["chain_failures"] = r.chain_failures;
  j["max_ratio"] = real_str(r.max_ratio, digits10);
  j["verdict"] = r.verdict;
  if (with_samples) {
    ordered_json samples = ordered_json::array();
    for (const auto& s : r.samples) {
      ordered_json e;
      e["common"] = s.common;
      e["gap"] = to_fraction(s.gap);
      e["image_gap"] = to_fraction(s.image_gap);
      e["chain_ok"] = s.chain_ok;
      e["pass"] = s.pass;
      samples.push_back(e);
    }
    j["samples"] = samples;
  }
  return j;
}

inline ordered_json to_json(const GapCheck& g) {
  ordered_json j;
  j["kind"] = "gap_check";
  j["lhs_lower"] = to_fraction(g.gap);
  j["rhs"] = to_fraction(g.bound);
  j["extension"] = g.ext_used;
  j["pass"] = g.pass;
  return j;
}

inline ordered_json to_json(const CoverageReport& r) {
  ordered_json j;
  j["kind"] = "coverage_report";
  j["k_max"] = r.k_max;
  j["m_max"] = r.m_max;
  j["horizon"] = r.horizon;
  ordered_json missing = ordered_json::array();
  for (const auto& w : r.missing) missing.push_back(w.str());
  j["missing"] = missing;
  return j;
}

inline ordered_json to_json(const InvarianceReport& r, int digits10) {
  ordered_json j;
  j["kind"] = "invariance_report";
  j["lhs"] = real_str(r.lhs, digits10);
  j["rhs"] = real_str(r.rhs, digits10);
  j["residual"] = real_str(r.residual, digits10);
  j["ok"] = r.ok;
  return j;
}

inline ordered_json to_json(const BoundedPoint& p) {
  ordered_json j;
  j["kind"] = "bounded_point";
  j["word"] = p.word.str();
  j["tail_bound"] = p.tail_bound;
  j["box_lo"] = to_fraction(p.box.lo);
  j["box_hi"] = to_fraction(p.box.hi);
  j["point_lo"] = to_fraction(p.point.lo);
  j["point_hi"] = to_fraction(p.point.hi);
  return j;
}

inline ordered_json to_json(const BatteryResult& r) {
  ordered_json j;
  j["kind"] = "battery";
  j["name"] = r.name;
  j["cases"] = r.cases;
  j["failures"] = r.failures;
  j["pass"] = r.pass;
  ordered_json details = ordered_json::object();
  for (const auto& [k, v] : r.details) details[k] = v;
  j["details"] = details;
  return j;
}

inline ordered_json sample_to_json(const DigitSample& s) {
  ordered_json j;
  j["seed"] = s.seed;
  j["B"] = s.b_bits;
  ordered_json digits = ordered_json::array();
  for (std::size_t i = 0; i < s.digits.size(); ++i)
    digits.push_back(s.digits[i]);
  j["digits"] = digits;
  return j;
}

}  // namespace cfdyn

#endif  // CFDYN_REPORT_JSON_HPP_
