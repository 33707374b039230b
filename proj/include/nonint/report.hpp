// Copyright 2026 The nonint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON reports. Rationals are always written as "num/den" strings.

#ifndef NONINT_REPORT_HPP
#define NONINT_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "nonint/engine.hpp"
#include "nonint/legendre.hpp"
#include "nonint/numeric.hpp"
#include "nonint/obstruction.hpp"

namespace nonint::report {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0.0";

/// Fixed notices about conventions the pipeline commits to.
inline std::vector<std::string> convention_notices() {
  return {
      "legendre: the 1/(1 - z^2) coefficient is read as q^2 with q = 1/6",
      "variational: normal forms carry -3 H^2 x^6 in the numerator of r1 and r2",
      "variational: operators at infinity use b11 = -((9 tau^2 - 4)/16) / (x^2 (H x^3 + 1)); substituting "
      "w = 1/x into the w-form gives the same shape with /8",
      "variational: the homogeneous zeta22 term at infinity carries -15/4",
      "obstruction: the bottom-right entry of X^-1 is zeta12(1), as forced by X X^-1 = I",
  };
}

inline json envelope(const std::string& command, json inputs) {
  json j;
  j["schemaVersion"] = kSchemaVersion;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["result"] = json::object();
  j["trace"] = json::array();
  j["warnings"] = json::array();
  return j;
}

inline json quad(const QuadValue& q) {
  json j;
  j["text"] = q.str();
  j["rational"] = q.is_rational() ? json(q.rational_part().str()) : json(nullptr);
  if (!q.is_rational()) {
    j["a"] = q.rational_part().str();
    j["b"] = q.surd_coefficient().str();
    j["radicand"] = q.radicand().str();
  }
  return j;
}

inline json param_coeff(const ParamCoeff& c) {
  json j;
  j["text"] = c.str();
  auto poly = [](const RPoly& p) {
    json arr = json::array();
    for (const auto& x : p.coefficients()) arr.push_back(x.str());
    return arr;
  };
  j["a"] = poly(c.d_free());
  j["b"] = poly(c.d_part());
  return j;
}

inline json trace(const std::vector<EvidenceRecord>& records) {
  json arr = json::array();
  for (const auto& r : records) {
    json fields = json::object();
    for (const auto& [k, v] : r.fields) fields[k] = v;
    arr.push_back({{"step", r.step}, {"summary", r.summary}, {"fields", fields}});
  }
  return arr;
}

inline json verdict(const Verdict& v) {
  json j;
  j["conclusion"] = to_string(v.conclusion);
  j["rule"] = v.rule ? json(to_string(*v.rule)) : json(nullptr);
  if (v.cross_check_agrees) j["crossCheckAgrees"] = *v.cross_check_agrees;
  return j;
}

inline json solvability(const LegendreParams& lp, const SolvabilityVerdict& v) {
  json j;
  const ExponentData ex = exponents(lp);
  auto pair = [](const ExponentPair& p) { return json::array({quad(p.first), quad(p.second)}); };
  j["exponents"] = {{"atPlusOne", pair(ex.at_plus_one)},
                    {"atMinusOne", pair(ex.at_minus_one)},
                    {"atInfinity", pair(ex.at_infinity)}};
  json gens = json::array();
  for (const auto& g : monodromy_generators(lp))
    gens.push_back({{"diagonal", json::array({quad(g.diagonal.exponent()), quad(g.lower_right().exponent())})},
                    {"offDiagonal", g.symbol}});
  j["monodromyDiagonalExponents"] = gens;
  j["conclusion"] = to_string(v.conclusion);
  j["firedRules"] = v.fired_rules;
  json ev = json::array();
  for (const auto& e : v.evidence) ev.push_back({{"rule", e.id}, {"held", e.held}, {"witness", e.witness}});
  j["evidence"] = ev;
  return j;
}

/// Residues with their value at a given H (for quick reading).
inline json residues(const ResidueReport& rep, const Rational& H) {
  json j;
  j["k"] = rep.k;
  j["anyNonzeroWithoutD"] = rep.any_nonzero_without_d;
  j["nonzeroRequiresD"] = rep.nonzero_requires_d;
  json branches = json::array();
  for (const auto& b : rep.branches) {
    json entries = json::array();
    for (const auto& e : b.entries) {
      json x = param_coeff(e.residue);
      x["component"] = e.selector.str();
      x["row"] = to_string(e.selector.row);
      x["i"] = e.selector.i;
      x["j"] = e.selector.j;
      x["aAtH"] = e.residue.evaluate(H, Rational(0)).str();
      x["bAtH"] = (e.residue.evaluate(H, Rational(1)) - e.residue.evaluate(H, Rational(0))).str();
      entries.push_back(x);
    }
    branches.push_back({{"family", to_string(b.family)}, {"tau", b.tau.str()}, {"entries", entries}});
  }
  j["branches"] = branches;
  return j;
}

/// Parses "r", "sqrt(r)", "-sqrt(r)" or "c*sqrt(r)" with rationals r, c.
inline QuadValue parse_quad(const std::string& text) {
  const auto pos = text.find("sqrt(");
  if (pos == std::string::npos) return QuadValue(Rational::parse(text));
  if (text.empty() || text.back() != ')') throw ParseError(text, "malformed surd: '" + text + "'");
  const std::string inner = text.substr(pos + 5, text.size() - pos - 6);
  const std::string head = text.substr(0, pos);
  Rational coeff(1);
  if (head == "-") {
    coeff = Rational(-1);
  } else if (!head.empty()) {
    if (head.back() != '*') throw ParseError(text, "malformed surd: '" + text + "'");
    coeff = Rational::parse(head.substr(0, head.size() - 1));
  }
  const Rational radicand = Rational::parse(inner);
  return QuadValue::affine(Rational(0), coeff, radicand);
}

inline json series(const StrandSeries<ParamCoeff>& s) {
  json terms = json::array();
  for (const auto& [e, c] : s.terms()) {
    json t = param_coeff(c);
    t["exponent"] = e.str();
    terms.push_back(t);
  }
  json j;
  j["terms"] = terms;
  j["truncation"] = s.truncation() ? json(s.truncation()->str()) : json(nullptr);
  return j;
}

inline json validation(const ValidationReport& r) {
  return {{"maxRelDeviation", r.max_rel_deviation},
          {"wronskianDeviation", r.wronskian_deviation},
          {"samples", r.samples},
          {"steps", r.steps}};
}

}  // namespace nonint::report

#endif  // NONINT_REPORT_HPP
