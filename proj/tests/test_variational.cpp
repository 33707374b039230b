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

#include "common.hpp"
#include "nonint/variational.hpp"

namespace {

using nonint::Cubic;
using nonint::FactoredFunction;
using nonint::MPoly;
using nonint::MPolyV;
using nonint::PotentialParams;
using nonint::QuadValue;
using nonint::Rational;
using testing_util::random_nonzero;
using testing_util::random_rational;

const MPoly H = MPoly::H();
const MPoly T = MPoly::tau();

FactoredFunction ff(MPolyV num, int vp, int cp, Cubic c) { return {std::move(num), vp, cp, c}; }
FactoredFunction constant_over(MPoly k, int vp, int cp, Cubic c) { return ff(MPolyV::constant(std::move(k)), vp, cp, c); }

PotentialParams params(const Rational& A, const Rational& C, const Rational& B = 0, const Rational& D = 0) {
  return {A, B, C, D, Rational(1)};
}

// numerator n0 + n3 x^3 + n6 x^6 over 16 x^2 (H x^3 + 1)^2
FactoredFunction over_sixteen(const MPoly& n0, const MPoly& n3, const MPoly& n6) {
  const MPoly s(Rational(1, 16));
  return ff(MPolyV{s * n0, MPoly(), MPoly(), s * n3, MPoly(), MPoly(), s * n6}, -2, -2, Cubic::X);
}

TEST(BuildVe1, Coefficients) {
  const auto ve = nonint::build_ve1(params(Rational(16), Rational(1)));
  EXPECT_EQ(ve.xi11.b, constant_over(MPoly(-4), 1, -1, Cubic::W));
  EXPECT_EQ(ve.xi12.b, constant_over(MPoly(Rational(-15, 4)), 1, -1, Cubic::W));
  // a(w) = (4 w^3 + H) / (2 w (w^3 + H))
  EXPECT_EQ(ve.xi11.a, ff(MPolyV{Rational(1, 2) * H, MPoly(), MPoly(), MPoly(2)}, -1, -1, Cubic::W));
  EXPECT_EQ(ve.xi11.var, "w");
}

TEST(BuildVe1, SecondOperatorIsUniversal) {
  const auto ref = nonint::build_ve1(params(Rational(0), Rational(1)));
  for (int i = 0; i < 100; ++i) {
    const auto ve = nonint::build_ve1(params(random_rational(), random_nonzero(), random_rational(), random_rational()));
    EXPECT_EQ(ve.xi12.a, ref.xi12.a);
    EXPECT_EQ(ve.xi12.b, ref.xi12.b);
  }
}

TEST(BuildVe1, TauIdentity) {
  for (int i = 0; i < 200; ++i) {
    const Rational A = random_rational(), C = random_nonzero();
    const auto rc = nonint::classify_tau(A, C);
    EXPECT_EQ(-A / (Rational(4) * C), -(Rational(9) * rc.tau_squared - Rational(4)) / Rational(8));
  }
}

TEST(BuildVe1, Scope) {
  EXPECT_THROW(nonint::build_ve1(params(Rational(1), Rational(0))), nonint::OutOfScopeError);
  PotentialParams p = params(Rational(1), Rational(1));
  p.h = Rational(0);
  EXPECT_THROW(nonint::build_ve1(p), nonint::OutOfScopeError);
}

TEST(BuildVe1, Singularities) {
  const auto ve = nonint::build_ve1(params(Rational(16), Rational(1)));
  ASSERT_EQ(ve.xi12.singularities.size(), 3u);  // 0, the three cubic roots, infinity
  const auto& zero = ve.xi12.singularities[0];
  ASSERT_TRUE(zero.exponents.has_value());
  EXPECT_EQ(zero.exponents->first + zero.exponents->second, QuadValue(Rational(1, 2)));
  EXPECT_EQ(zero.exponents->first * zero.exponents->second, QuadValue(Rational(0)));
  const auto& cubic = ve.xi12.singularities[1];
  ASSERT_TRUE(cubic.exponents.has_value());
  EXPECT_EQ(cubic.exponents->first + cubic.exponents->second, QuadValue(Rational(1, 2)));
  const auto& inf = ve.xi12.singularities[2];
  ASSERT_TRUE(inf.exponents.has_value());
  EXPECT_EQ(inf.exponents->first, QuadValue(Rational(5, 2)));
  EXPECT_EQ(inf.exponents->second, QuadValue(Rational(-3, 2)));
}

TEST(ReduceToLegendre, Examples) {
  const auto a = nonint::reduce_to_legendre(params(Rational(0), Rational(1)));
  EXPECT_EQ(a.q, QuadValue(Rational(1, 6)));
  EXPECT_EQ(a.p[0], QuadValue(Rational(-1, 6)));
  EXPECT_EQ(a.p[1], QuadValue(Rational(-5, 6)));
  const auto b = nonint::reduce_to_legendre(params(Rational(16), Rational(1)));
  EXPECT_EQ(b.p[0], QuadValue(Rational(1, 2)));
  EXPECT_EQ(b.p[1], QuadValue(Rational(-3, 2)));
  EXPECT_THROW(nonint::reduce_to_legendre(params(Rational(1), Rational(0))), nonint::OutOfScopeError);
}

TEST(ReduceToLegendre, ConstantTermIdentity) {
  for (int i = 0; i < 200; ++i) {
    const Rational A = random_rational(), C = random_nonzero();
    const auto lr = nonint::reduce_to_legendre(params(A, C));
    const QuadValue expected((Rational(2) * A - Rational(5) * C) / (Rational(36) * C));
    for (const auto& p : lr.p) EXPECT_EQ(p * (p + QuadValue(1)), expected) << "A=" << A << " C=" << C;
    EXPECT_EQ(lr.q, QuadValue(Rational(1, 6)));
  }
}

TEST(TransformToInfinity, TauFormCoefficients) {
  const auto at_inf = nonint::ve1_at_infinity(T);
  const FactoredFunction a = constant_over(Rational(3, 2) * H, 2, -1, Cubic::X);
  EXPECT_EQ(at_inf.xi11.a, a);
  EXPECT_EQ(at_inf.xi12.b, constant_over(MPoly(Rational(-15, 4)), -2, -1, Cubic::X));
  EXPECT_EQ(at_inf.xi11.b,
            constant_over(MPoly(Rational(-1, 16)) * (MPoly(9) * T * T - MPoly(4)), -2, -1, Cubic::X));

  const auto ve = nonint::build_ve1(params(Rational(16), Rational(1)));
  const auto t12 = nonint::transform_to_infinity(ve.xi12);
  EXPECT_EQ(t12.var, "x");
  EXPECT_EQ(t12.a, a);
  EXPECT_EQ(t12.b, constant_over(MPoly(Rational(-15, 4)), -2, -1, Cubic::X));
}

// Substituting w = 1/x into b11 = -(A/4C) w/(w^3 + H) gives -(A/4C)/(x^2 (H x^3 + 1)),
// i.e. (9 tau^2 - 4)/8 where the operator at infinity carries /16.
TEST(TransformToInfinity, Xi11FromTheWForm) {
  for (long A : {-3, 0, 16, 30}) {
    const auto ve = nonint::build_ve1(params(Rational(A), Rational(1)));
    const auto t = nonint::transform_to_infinity(ve.xi11);
    EXPECT_EQ(t.b, constant_over(MPoly(Rational(-A, 4)), -2, -1, Cubic::X));
    const Rational tau2 = nonint::classify_tau(Rational(A), Rational(1)).tau_squared;
    EXPECT_EQ(t.b, constant_over(MPoly(-(Rational(9) * tau2 - Rational(4)) / Rational(8)), -2, -1, Cubic::X));
  }
}

TEST(TransformToInfinity, Involution) {
  for (long A : {-7, 0, 5, 16}) {
    const auto ve = nonint::build_ve1(params(Rational(A), Rational(3)));
    for (const auto* op : {&ve.xi11, &ve.xi12}) {
      const auto back = nonint::transform_to_infinity(nonint::transform_to_infinity(*op));
      EXPECT_EQ(back.a, op->a);
      EXPECT_EQ(back.b, op->b);
      EXPECT_EQ(back.var, op->var);
    }
  }
}

TEST(TransformToInfinity, StaysFuchsian) {
  for (long A : {-7, 0, 5, 16}) {
    const auto ve = nonint::build_ve1(params(Rational(A), Rational(2)));
    for (const auto* op : {&ve.xi11, &ve.xi12}) {
      const auto t = nonint::transform_to_infinity(*op);
      EXPECT_LE(t.a.pole_order_at_zero(), 1);
      EXPECT_LE(t.a.pole_order_at_cubic(), 1);
      EXPECT_LE(t.b.pole_order_at_zero(), 2);
      EXPECT_LE(t.b.pole_order_at_cubic(), 2);
    }
  }
}

TEST(NormalForm, R2) {
  const auto nf = nonint::normal_form(nonint::ve1_at_infinity(T).xi12);
  EXPECT_EQ(nf.r, over_sixteen(MPoly(60), MPoly(84) * H, MPoly(-3) * H * H));
}

TEST(NormalForm, R1Symbolic) {
  const auto nf = nonint::normal_form(nonint::ve1_at_infinity(T).xi11);
  const MPoly t2 = T * T;
  EXPECT_EQ(nf.r, over_sixteen(MPoly(9) * t2 - MPoly(4), H * (MPoly(9) * t2 + MPoly(20)), MPoly(-3) * H * H));
}

TEST(NormalForm, R1AtTauTwo) {
  const auto nf = nonint::normal_form(nonint::ve1_at_infinity(MPoly(2)).xi11);
  EXPECT_EQ(nf.r, over_sixteen(MPoly(32), MPoly(56) * H, MPoly(-3) * H * H));
}

TEST(NormalForm, SharedDenominator) {
  for (long n = -20; n <= 20; ++n) {
    const auto nf = nonint::normal_form(nonint::ve1_at_infinity(MPoly(Rational(n, 3))).xi11);
    EXPECT_EQ(nf.r.v_power(), n == 2 || n == -2 ? 1 : -2);  // 9 tau^2 = 4 leaves x (24 H - 3 H^2 x^3)
    EXPECT_EQ(nf.r.cubic_power(), -2);
  }
}

TEST(NormalForm, ZeroDamping) {
  const FactoredFunction b = constant_over(MPoly(Rational(7, 3)), -2, -1, Cubic::X);
  const auto op = nonint::make_operator("x", FactoredFunction(Cubic::X), b);
  const auto nf = nonint::normal_form(op);
  EXPECT_EQ(nf.r, -b);
}

// xi = g zeta turns xi'' + a xi' + b xi = 0 into zeta'' = r zeta:
// 2 g'/g + a = 0 and (g'/g)' + (g'/g)^2 + a g'/g + b = -r.
TEST(NormalForm, GaugeRecoversOperator) {
  std::vector<nonint::FuchsianOperator> ops;
  for (const auto& ve : {nonint::ve1_at_infinity(T), nonint::build_ve1(params(Rational(16), Rational(1)))}) {
    ops.push_back(ve.xi11);
    ops.push_back(ve.xi12);
  }
  for (const auto& op : ops) {
    const auto nf = nonint::normal_form(op);
    ASSERT_TRUE(nf.gauge.has_value());
    const FactoredFunction L = nonint::gauge_log_derivative(*nf.gauge);
    EXPECT_TRUE((MPoly(2) * L + op.a).is_zero());
    EXPECT_EQ(L.derivative() + L * L + op.a * L + op.b, -nf.r);
  }
  const auto x_gauge = *nonint::normal_form(ops[0]).gauge;
  EXPECT_EQ(x_gauge.v_power, Rational(0));
  EXPECT_EQ(x_gauge.cubic_power, Rational(-1, 4));
  const auto w_gauge = *nonint::normal_form(ops[2]).gauge;
  EXPECT_EQ(w_gauge.v_power, Rational(-1, 4));
  EXPECT_EQ(w_gauge.cubic_power, Rational(-1, 4));
}

TEST(BuildSources, Examples) {
  const auto a = nonint::build_sources(Rational(2, 3));
  EXPECT_TRUE(a.k1.zeta11_zeta12.is_zero());
  EXPECT_FALSE(a.k1.zeta11_sq.is_zero());
  EXPECT_TRUE(a.k1.zeta11_sq.d_free().is_zero());

  const auto b = nonint::build_sources(Rational(-14, 3));
  EXPECT_EQ(b.k1.zeta11_zeta12, nonint::ParamCoeff(Rational(-96)));
  EXPECT_EQ(b.k2.zeta11_sq, nonint::ParamCoeff(Rational(-96)));
  EXPECT_EQ(b.k2.zeta12_sq, nonint::ParamCoeff(Rational(-15, 2)));
  EXPECT_EQ(b.k1.zeta11_sq, nonint::ParamCoeff::d_term(Rational(-3, 8)));
  EXPECT_EQ(b.k1.x_power, Rational(-3, 2));
  EXPECT_EQ(b.k1.cubic_power, Rational(-3, 4));

  // d = 0 leaves the single zeta11 zeta12 monomial in K1
  const auto c = nonint::build_sources(Rational(5, 7));
  EXPECT_EQ(c.k1.zeta11_sq.evaluate(Rational(1), Rational(0)), Rational(0));
  EXPECT_FALSE(c.k1.zeta11_zeta12.is_zero());
}

TEST(FactoredFunction, ArithmeticAgainstPointValues) {
  // f = (1 + 2x) / (x (H x^3 + 1)), g = x^2 / (H x^3 + 1)^2 at H = 2, x = 3
  const FactoredFunction f = ff(MPolyV{MPoly(1), MPoly(2)}, -1, -1, Cubic::X);
  const FactoredFunction g = constant_over(MPoly(1), 2, -2, Cubic::X);
  auto at = [](const FactoredFunction& h) {
    Rational num(0);
    const Rational x(3), Hv(2);
    for (std::size_t i = h.numerator().coefficients().size(); i-- > 0;)
      num = num * x + h.numerator().coefficients()[i].evaluate(Hv, Rational(0), [](const Rational& q) { return q; });
    return num * x.pow(h.v_power()) * (Hv * x.pow(3) + Rational(1)).pow(h.cubic_power());
  };
  const Rational fv = Rational(7) / (Rational(3) * Rational(55)), gv = Rational(9) / Rational(55 * 55);
  EXPECT_EQ(at(f), fv);
  EXPECT_EQ(at(g), gv);
  EXPECT_EQ(at(f + g), fv + gv);
  EXPECT_EQ(at(f * g), fv * gv);
  EXPECT_EQ(at(f - g), fv - gv);
  // f' = [2 x (Hx^3+1) - (1+2x)(4 H x^3 + 1)] / (x^2 (Hx^3+1)^2)
  const Rational fd = (Rational(6) * Rational(55) - Rational(7) * Rational(217)) / (Rational(9) * Rational(55 * 55));
  EXPECT_EQ(at(f.derivative()), fd);
}

}  // namespace
