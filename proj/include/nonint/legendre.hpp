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

// Associated Legendre equation
//   (1 - z^2) w'' - 2 z w' + (p(p+1) - q^2/(1 - z^2)) w = 0
// local exponents, local monodromy and a sufficient test for non-solvability.

#ifndef NONINT_LEGENDRE_HPP
#define NONINT_LEGENDRE_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "nonint/errors.hpp"
#include "nonint/exactnum.hpp"

namespace nonint {

struct LegendreParams {
  QuadValue p;
  QuadValue q;

  LegendreParams(QuadValue p_, QuadValue q_) : p(std::move(p_)), q(std::move(q_)) {
    if (p.is_rational() && q.is_rational()) {
      const Rational s = p.rational_part() + q.rational_part();
      if (s.is_integer() && s.sign() < 0)
        throw OutOfScopeError("Legendre parameters need p + q not in {-1, -2, ...}, got " + s.pretty());
    }
  }
};

using ExponentPair = std::pair<QuadValue, QuadValue>;

struct ExponentData {
  ExponentPair at_plus_one;
  ExponentPair at_minus_one;
  ExponentPair at_infinity;
};

inline ExponentData exponents(const LegendreParams& lp) {
  const Rational half(1, 2);
  const QuadValue one(1);
  const ExponentPair finite{(one + lp.q) * half, (one - lp.q) * half};
  return {finite, finite, {-lp.p - one, lp.p}};
}

/// Generators around +1, -1 (two each for the two solutions at infinity) with
/// diagonal exponents 1+q, 1-q, -2(1+p), 2p.
inline std::array<TriangularMonodromy, 4> monodromy_generators(const LegendreParams& lp) {
  const QuadValue one(1);
  const std::array<QuadValue, 4> e{one + lp.q, one - lp.q, Rational(-2) * (one + lp.p), Rational(2) * lp.p};
  std::array<TriangularMonodromy, 4> out;
  for (std::size_t i = 0; i < 4; ++i)
    out[i] = TriangularMonodromy{UnitRootExp(e[i]), "alpha" + std::to_string(i + 1), OffDiagonalConstraint::Free};
  return out;
}

enum class Solvability { NonSolvable, PossiblySolvable };

inline std::string to_string(Solvability s) {
  return s == Solvability::NonSolvable ? "NonSolvable" : "PossiblySolvable";
}

struct RuleEvidence {
  std::string id;
  bool held = false;
  std::string witness;
};

struct SolvabilityVerdict {
  Solvability conclusion = Solvability::PossiblySolvable;
  std::vector<std::string> fired_rules;  // conditions that held
  std::vector<RuleEvidence> evidence;    // every condition checked, in order
};

namespace detail {

inline bool is_odd_integer(const Rational& v) { return v.is_integer() && v.mod(Rational(2)) == Rational(1); }

enum class Parity { Any, Odd, Even };

struct KimuraPattern {
  const char* id;
  Rational p_offset;  // p = (-1 +/- (p_offset + m)) / 2
  Rational q_offset;  // q = +/-(q_offset + l)
  Parity m_parity;
};

inline const std::array<KimuraPattern, 4>& kimura_patterns() {
  static const std::array<KimuraPattern, 4> pats{{
      {"ThLeg-ii", Rational(1, 2), Rational(1, 2), Parity::Any},
      {"ThLeg-iii", Rational(1, 3), Rational(2, 3), Parity::Odd},
      {"ThLeg-iv", Rational(2, 5), Rational(2, 5), Parity::Even},
      {"ThLeg-v", Rational(1, 5), Rational(4, 5), Parity::Odd},
  }};
  return pats;
}

// Closed-form membership: m = s(2p+1) - p_offset, l = t q - q_offset for signs s, t.
inline std::optional<std::pair<Rational, Rational>> match_pattern(const KimuraPattern& pat, const Rational& p,
                                                                  const Rational& q) {
  std::optional<Rational> m;
  for (int s : {1, -1}) {
    const Rational cand = Rational(s) * (Rational(2) * p + Rational(1)) - pat.p_offset;
    if (!cand.is_integer()) continue;
    const bool odd = cand.mod(Rational(2)) == Rational(1);
    if (pat.m_parity == Parity::Odd && !odd) continue;
    if (pat.m_parity == Parity::Even && odd) continue;
    m = cand;
    break;
  }
  if (!m) return std::nullopt;
  for (int t : {1, -1}) {
    const Rational l = Rational(t) * q - pat.q_offset;
    if (l.is_integer()) return std::make_pair(*m, l);
  }
  return std::nullopt;
}

}  // namespace detail

inline SolvabilityVerdict solvability_verdict(const LegendreParams& lp) {
  SolvabilityVerdict v;
  if (!lp.p.is_rational() || !lp.q.is_rational()) {
    std::string w;
    if (!lp.p.is_rational()) w += "p = " + lp.p.str() + " is irrational";
    if (!lp.q.is_rational()) w += std::string(w.empty() ? "" : "; ") + "q = " + lp.q.str() + " is irrational";
    v.conclusion = Solvability::NonSolvable;
    v.fired_rules.push_back("NonRational");
    v.evidence.push_back({"NonRational", true, w});
    return v;
  }
  const Rational p = lp.p.rational_part();
  const Rational q = lp.q.rational_part();
  v.evidence.push_back({"NonRational", false, "p and q are rational"});

  const std::array<Rational, 3> vals{Rational(2) * p + Rational(1), Rational(2) * (q - p) + Rational(1),
                                     Rational(2) * (p + q) + Rational(1)};
  bool cond_i = true;
  std::string w_i = "2p+1 = " + vals[0].pretty() + ", 2(q-p)+1 = " + vals[1].pretty() +
                    ", 2(p+q)+1 = " + vals[2].pretty();
  for (const auto& x : vals)
    if (detail::is_odd_integer(x)) cond_i = false;
  w_i += cond_i ? "; none is an odd integer" : "; an odd integer occurs";
  v.evidence.push_back({"ThLeg-i", cond_i, w_i});

  bool all = cond_i;
  for (const auto& pat : detail::kimura_patterns()) {
    const auto hit = detail::match_pattern(pat, p, q);
    std::string w = hit ? "matches with m = " + hit->first.pretty() + ", l = " + hit->second.pretty()
                        : "no integers m, l fit";
    v.evidence.push_back({pat.id, !hit, w});
    all = all && !hit;
  }
  for (const auto& e : v.evidence)
    if (e.held && e.id != "NonRational") v.fired_rules.push_back(e.id);
  v.conclusion = all ? Solvability::NonSolvable : Solvability::PossiblySolvable;
  return v;
}

}  // namespace nonint

#endif  // NONINT_LEGENDRE_HPP
