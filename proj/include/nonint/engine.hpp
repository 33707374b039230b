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

#ifndef NONINT_ENGINE_HPP
#define NONINT_ENGINE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nonint/exactnum.hpp"
#include "nonint/legendre.hpp"
#include "nonint/model.hpp"
#include "nonint/obstruction.hpp"
#include "nonint/variational.hpp"

namespace nonint {

enum class Conclusion { NonIntegrable, Inconclusive, OutOfScope };

inline std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::NonIntegrable: return "NonIntegrable";
    case Conclusion::Inconclusive: return "Inconclusive";
    case Conclusion::OutOfScope: return "OutOfScope";
  }
  return "?";
}

enum class Rule {
  IrrationalTau,       // ThV6-i
  NonResonantTau,      // ThV6-ii
  ResonantKNotOne,     // ThV6-iii
  ResonantKOneWithD,   // ThV6-iv
};

inline std::string to_string(Rule r) {
  switch (r) {
    case Rule::IrrationalTau: return "ThV6-i";
    case Rule::NonResonantTau: return "ThV6-ii";
    case Rule::ResonantKNotOne: return "ThV6-iii";
    case Rule::ResonantKOneWithD: return "ThV6-iv";
  }
  return "?";
}

struct EvidenceRecord {
  std::string step;
  std::string summary;
  std::vector<std::pair<std::string, std::string>> fields;
};

struct Verdict {
  Conclusion conclusion = Conclusion::Inconclusive;
  std::optional<Rule> rule;
  std::vector<EvidenceRecord> trace;
  /// Set when the residue cross-check ran.
  std::optional<bool> cross_check_agrees;
};

struct DecideOptions {
  bool residue_cross_check = false;
  ObstructionConfig obstruction = ObstructionConfig::from_env();
};

namespace detail {

inline std::string realizations_str(const ResonanceClass& rc) {
  std::string s;
  for (const auto& r : rc.realizations) {
    if (!s.empty()) s += "; ";
    s += std::string(r.sign > 0 ? "+tau" : "-tau") + " in " + to_string(r.family) + " at k=" + std::to_string(r.k);
  }
  return s.empty() ? "none" : s;
}

inline void cross_check(Verdict& v, const ResonanceClass& rc, const PotentialParams& params,
                        const DecideOptions& opt) {
  bool live_nonintegrable = false;
  std::vector<std::pair<std::string, std::string>> fields;
  for (const auto& r : rc.realizations) {
    const Rational tau = r.sign > 0 ? *rc.tau : -*rc.tau;
    const BranchResidues b = residues_for_tau(tau, r.family, r.k, opt.obstruction);
    bool free_nz = false, d_nz = false;
    for (const auto& e : b.entries) {
      if (!e.residue.d_free().is_zero()) free_nz = true;
      if (!e.residue.d_part().is_zero()) d_nz = true;
    }
    const bool branch = free_nz || (d_nz && !params.D.is_zero());
    live_nonintegrable = live_nonintegrable || branch;
    fields.emplace_back("tau=" + tau.pretty() + " (k=" + std::to_string(r.k) + ")",
                        std::string(free_nz ? "d-free residue" : (d_nz ? "d residue only" : "all residues zero")));
  }
  const bool rule_nonintegrable = v.conclusion == Conclusion::NonIntegrable;
  v.cross_check_agrees = live_nonintegrable == rule_nonintegrable;
  fields.emplace_back("live_conclusion", live_nonintegrable ? "NonIntegrable" : "no residue obstruction");
  v.trace.push_back({"residue_cross_check",
                     *v.cross_check_agrees ? "live residues agree with the rule table"
                                           : "live residues disagree with the rule table",
                     std::move(fields)});
}

}  // namespace detail

inline Verdict decide(const PotentialParams& params, const DecideOptions& opt = {}) {
  Verdict v;
  v.trace.push_back({"input",
                     "potential coefficients",
                     {{"A", params.A.str()}, {"B", params.B.str()}, {"C", params.C.str()}, {"D", params.D.str()}}});
  if (params.C.is_zero()) {
    v.conclusion = Conclusion::OutOfScope;
    v.trace.push_back({"scope", "C = 0: the invariant plane solution needs C != 0", {}});
    return v;
  }
  const ResonanceClass rc = classify_tau(params.A, params.C);
  v.trace.push_back({"classify_tau",
                     "tau^2 = (2A + 4C)/(9C)",
                     {{"tau_squared", rc.tau_squared.str()},
                      {"status", to_string(rc.status)},
                      {"tau", rc.tau ? rc.tau->str() : std::string("-")},
                      {"realizations", detail::realizations_str(rc)}}});
  const LegendreReduction lr = reduce_to_legendre(params);
  v.trace.push_back({"legendre_reduction",
                     "q = 1/6, p = -1/2 +/- tau/2",
                     {{"q", lr.q.str()}, {"p_plus", lr.p[0].str()}, {"p_minus", lr.p[1].str()}}});

  if (rc.irrational()) {
    v.conclusion = Conclusion::NonIntegrable;
    v.rule = Rule::IrrationalTau;
    v.trace.push_back({"rule",
                       rc.status == TauStatus::NonReal ? "tau is not real, so p is irrational"
                                                       : "tau is irrational, so p is irrational",
                       {}});
    return v;
  }
  if (!rc.resonant) {
    v.conclusion = Conclusion::NonIntegrable;
    v.rule = Rule::NonResonantTau;
    v.trace.push_back({"rule", "rational tau outside both resonant families", {}});
    if (opt.residue_cross_check) v.cross_check_agrees = true;
    return v;
  }
  // |tau| = 2/3 realizes k = 0 (+2/3) and k = 1 (-2/3); it is the only case gated on D.
  const bool gated = *rc.tau == Rational(2, 3);
  if (!gated) {
    v.conclusion = Conclusion::NonIntegrable;
    v.rule = Rule::ResonantKNotOne;
    v.trace.push_back({"rule", "resonant tau realized by some k != 1", {}});
  } else {
    v.trace.push_back({"k1_gate",
                       "|tau| = 2/3 (A = 0): k = 1 branch needs D != 0; the +2/3 reading as k = 0 is not used",
                       {{"D", params.D.str()}}});
    if (!params.D.is_zero()) {
      v.conclusion = Conclusion::NonIntegrable;
      v.rule = Rule::ResonantKOneWithD;
    } else {
      v.conclusion = Conclusion::Inconclusive;
    }
  }
  if (opt.residue_cross_check) detail::cross_check(v, rc, params, opt);
  return v;
}

}  // namespace nonint

#endif  // NONINT_ENGINE_HPP
