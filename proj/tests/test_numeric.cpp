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
#include <gtest/gtest.h>

#include <algorithm>
#include <boost/math/constants/constants.hpp>

#include "nonint/numeric.hpp"

namespace {

using nonint::FrobeniusPair;
using nonint::IntegrationConfig;
using nonint::MPoly;
using nonint::ParamCoeff;
using nonint::Rational;
using nonint::Real;

IntegrationConfig tight(double tol = 1e-24, unsigned bits = 160) {
  IntegrationConfig c;
  c.rel_tol = c.abs_tol = tol;
  c.precision_bits = bits;
  return c;
}

struct Case {
  nonint::NormalFormEquation nf;
  FrobeniusPair pair;
};

Case r2_case() {
  const auto nf = nonint::normal_form(nonint::ve1_at_infinity(MPoly(0)).xi12);
  return {nf, nonint::normalize_wronskian(nonint::frobenius_pair(nf, Rational(5, 2), Rational(-3, 2), 40))};
}

Case r1_case() {
  const auto nf = nonint::normal_form(nonint::ve1_at_infinity(MPoly(Rational(-14, 3))).xi11);
  return {nf, nonint::normalize_wronskian(nonint::frobenius_pair(nf, Rational(4), Rational(-3), 40))};
}

double worst(const nonint::ValidationReport& r) {
  return *std::max_element(r.max_rel_deviation.begin(), r.max_rel_deviation.end());
}

TEST(Integrator, HarmonicOscillator) {
  nonint::PrecisionScope scope(128);
  const nonint::System sys = [](const nonint::State& s, nonint::State& d, const Real&) {
    d[0] = s[1];
    d[1] = -s[0];
  };
  const Real T = 2 * boost::math::constants::pi<Real>();
  IntegrationConfig cfg = tight(1e-14, 128);
  const auto tr = nonint::integrate(sys, {Real(1), Real(0)}, Real(0), {T}, cfg);
  EXPECT_LE(abs(tr.states[0][0] - 1), Real(1e-10));
  EXPECT_LE(abs(tr.states[0][1]), Real(1e-10));
  EXPECT_EQ(tr.times[0], T);
}

TEST(Integrator, ConfigAndLimits) {
  IntegrationConfig bad;
  bad.rel_tol = 1e-5;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = IntegrationConfig{};
  bad.precision_bits = 64;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  EXPECT_NO_THROW(IntegrationConfig{}.validate());

  nonint::PrecisionScope scope(128);
  const nonint::System sys = [](const nonint::State& s, nonint::State& d, const Real&) {
    d[0] = s[1];
    d[1] = -s[0];
  };
  IntegrationConfig few;
  few.max_steps = 5;
  EXPECT_THROW(nonint::integrate(sys, {Real(1), Real(0)}, Real(0), {Real(100)}, few), nonint::StepLimitExceeded);
  EXPECT_THROW(nonint::integrate(sys, {Real(1), Real(0)}, Real(1), {Real(0)}, IntegrationConfig{}),
               std::invalid_argument);
}

TEST(Validation, R2Pair) {
  const Case c = r2_case();
  const auto rep = nonint::validate_pair(c.nf, c.pair, 0.01, 0.1, Rational(1), tight());
  ASSERT_EQ(rep.max_rel_deviation.size(), 2u);
  EXPECT_LE(worst(rep), 1e-10);
  EXPECT_LE(rep.wronskian_deviation, 1e-10);
  EXPECT_EQ(rep.samples, 20);
}

TEST(Validation, R1PairAtMinusFourteenThirds) {
  const Case c = r1_case();
  const auto rep = nonint::validate_pair(c.nf, c.pair, 0.01, 0.1, Rational(1), tight());
  EXPECT_LE(worst(rep), 1e-10);
  EXPECT_LE(rep.wronskian_deviation, 1e-10);
}

TEST(Validation, DetectsCorruptedCoefficient) {
  Case c = r2_case();
  c.pair.second.add(Rational(-3, 2) + Rational(3), ParamCoeff(Rational(1, 1000)));
  const auto rep = nonint::validate_pair(c.nf, c.pair, 0.01, 0.1, Rational(1), tight());
  EXPECT_GT(worst(rep), 1e-6);
}

TEST(Validation, ToleranceMonotone) {
  const Case c = r1_case();
  const auto loose = nonint::validate_pair(c.nf, c.pair, 0.01, 0.1, Rational(1), tight(1e-16));
  const auto fine = nonint::validate_pair(c.nf, c.pair, 0.01, 0.1, Rational(1), tight(1e-20));
  for (std::size_t i = 0; i < 2; ++i) EXPECT_LE(fine.max_rel_deviation[i], 2 * loose.max_rel_deviation[i]);
  EXPECT_LE(fine.wronskian_deviation, 2 * loose.wronskian_deviation);
}

TEST(Validation, Deterministic) {
  const Case c = r2_case();
  const auto a = nonint::validate_pair(c.nf, c.pair, 0.01, 0.1, Rational(1), tight(1e-18));
  const auto b = nonint::validate_pair(c.nf, c.pair, 0.01, 0.1, Rational(1), tight(1e-18));
  EXPECT_EQ(a.max_rel_deviation, b.max_rel_deviation);
  EXPECT_EQ(a.wronskian_deviation, b.wronskian_deviation);
  EXPECT_EQ(a.steps, b.steps);
}

TEST(Validation, RejectsBadWindows) {
  const Case c = r2_case();
  // H = -1 puts a pole of r at x = 1
  EXPECT_THROW(nonint::validate_pair(c.nf, c.pair, 0.5, 1.5, Rational(-1), tight()), std::domain_error);
  EXPECT_THROW(nonint::validate_pair(c.nf, c.pair, 0.0, 0.1, Rational(1), tight()), std::invalid_argument);
  EXPECT_THROW(nonint::validate_pair(c.nf, c.pair, 0.1, 0.05, Rational(1), tight()), std::invalid_argument);
}

TEST(Validation, WronskianOfArbitrarySolutions) {
  const Case c = r1_case();
  nonint::PrecisionScope scope(160);
  const nonint::RealFunction r(c.nf.r, Real(1));
  const nonint::System sys = [&r](const nonint::State& s, nonint::State& d, const Real& x) {
    d[0] = s[1];
    d[1] = r(x) * s[0];
  };
  std::vector<Real> ts;
  for (int i = 1; i <= 10; ++i) ts.push_back(Real("0.05") + Real("0.05") * i / 10);
  const auto a = nonint::integrate(sys, {Real(1), Real(0)}, Real("0.05"), ts, tight());
  const auto b = nonint::integrate(sys, {Real(0), Real(1)}, Real("0.05"), ts, tight());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const Real w = a.states[i][0] * b.states[i][1] - b.states[i][0] * a.states[i][1];
    EXPECT_LE(abs(w - 1), Real(1e-10));
  }
}

}  // namespace
