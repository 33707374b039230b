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

// First variational equations along the plane solution, the change of
// variable to infinity, normal forms and the second order sources.
//
// Every coefficient function has the shape  N(v) * v^k * c(v)^m  where c is
// one of two cubics, w^3 + H near the origin of w or H x^3 + 1 after w = 1/x,
// and N is a polynomial with coefficients in Q[H, 1/H, tau].

#ifndef NONINT_VARIATIONAL_HPP
#define NONINT_VARIATIONAL_HPP

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nonint/errors.hpp"
#include "nonint/exactnum.hpp"
#include "nonint/legendre.hpp"
#include "nonint/model.hpp"
#include "nonint/mpoly.hpp"
#include "nonint/poly.hpp"

namespace nonint {

using MPolyV = UPoly<MPoly>;

enum class Cubic {
  W,  // v^3 + H
  X,  // H v^3 + 1
};

inline MPolyV cubic_poly(Cubic c) {
  if (c == Cubic::W) return MPolyV{MPoly::H(), MPoly(), MPoly(), MPoly(1)};
  return MPolyV{MPoly(1), MPoly(), MPoly(), MPoly::H()};
}

inline Cubic other(Cubic c) { return c == Cubic::W ? Cubic::X : Cubic::W; }

inline MPolyV upow(const MPolyV& p, int e) {
  MPolyV out = MPolyV::constant(MPoly(1));
  for (int i = 0; i < e; ++i) out = out * p;
  return out;
}

inline Rational binomial(const Rational& a, int n) {
  Rational r(1);
  for (int i = 0; i < n; ++i) r = r * (a - Rational(i)) / Rational(i + 1);
  return r;
}

inline std::string to_string(const MPolyV& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long i = p.degree(); i >= 0; --i) {
    const MPoly& c = p.coefficients()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    if (i > 0) out += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return out;
}

class FactoredFunction {
 public:
  explicit FactoredFunction(Cubic c = Cubic::X) : cubic_(c) {}
  FactoredFunction(MPolyV num, int v_power, int cubic_power, Cubic c)
      : num_(std::move(num)), vp_(v_power), cp_(cubic_power), cubic_(c) {
    normalize();
  }
  static FactoredFunction constant(MPoly c, Cubic cubic) { return {MPolyV::constant(std::move(c)), 0, 0, cubic}; }

  const MPolyV& numerator() const { return num_; }
  int v_power() const { return vp_; }
  int cubic_power() const { return cp_; }
  Cubic cubic() const { return cubic_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Pole order at v = 0 (0 when regular).
  int pole_order_at_zero() const { return is_zero() ? 0 : std::max(0, -vp_); }
  /// Pole order at each root of the cubic.
  int pole_order_at_cubic() const { return is_zero() ? 0 : std::max(0, -cp_); }

  FactoredFunction operator-() const { return {-num_, vp_, cp_, cubic_}; }
  friend FactoredFunction operator+(const FactoredFunction& f, const FactoredFunction& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    check_same(f, g);
    const int k = std::min(f.vp_, g.vp_);
    const int m = std::min(f.cp_, g.cp_);
    const MPolyV c = cubic_poly(f.cubic_);
    const MPolyV nf = (upow(c, f.cp_ - m) * f.num_).shifted_up(static_cast<std::size_t>(f.vp_ - k));
    const MPolyV ng = (upow(c, g.cp_ - m) * g.num_).shifted_up(static_cast<std::size_t>(g.vp_ - k));
    return {nf + ng, k, m, f.cubic_};
  }
  friend FactoredFunction operator-(const FactoredFunction& f, const FactoredFunction& g) { return f + (-g); }
  friend FactoredFunction operator*(const FactoredFunction& f, const FactoredFunction& g) {
    if (f.is_zero() || g.is_zero()) return FactoredFunction(f.cubic_);
    check_same(f, g);
    return {f.num_ * g.num_, f.vp_ + g.vp_, f.cp_ + g.cp_, f.cubic_};
  }
  friend FactoredFunction operator*(const MPoly& s, const FactoredFunction& f) {
    return {MPolyV::constant(s) * f.num_, f.vp_, f.cp_, f.cubic_};
  }
  friend bool operator==(const FactoredFunction& f, const FactoredFunction& g) {
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    return f.cubic_ == g.cubic_ && f.vp_ == g.vp_ && f.cp_ == g.cp_ && f.num_ == g.num_;
  }

  /// d/dv (N v^k c^m) = v^(k-1) c^(m-1) (N' v c + k N c + m N c' v)
  FactoredFunction derivative() const {
    if (is_zero()) return *this;
    const MPolyV c = cubic_poly(cubic_);
    const MPolyV n = num_.derivative().shifted_up(1) * c + MPolyV::constant(MPoly(vp_)) * num_ * c +
                     MPolyV::constant(MPoly(cp_)) * num_ * c.derivative().shifted_up(1);
    return {n, vp_ - 1, cp_ - 1, cubic_};
  }

  /// f(1/u) as a function of u. The cubic kind flips: (1/u)^3 + H = (H u^3 + 1)/u^3.
  FactoredFunction reciprocal() const {
    if (is_zero()) return FactoredFunction(other(cubic_));
    const int deg = static_cast<int>(num_.degree());
    return {num_.reversed(), -deg - vp_ - 3 * cp_, cp_, other(cubic_)};
  }

  /// Laurent coefficients at v = 0: returns the lowest exponent and `count`
  /// consecutive coefficients from it.
  std::pair<int, std::vector<MPoly>> laurent_at_zero(int count) const {
    std::vector<MPoly> out(static_cast<std::size_t>(count));
    if (is_zero()) return {0, out};
    // c^m = s * (1 + t v^3)^m with (s, t) = (H^m, 1/H) for W and (1, H) for X.
    const MPoly scale = cubic_ == Cubic::W ? MPoly::H(cp_) : MPoly(1);
    const MPoly step = cubic_ == Cubic::W ? MPoly::H(-1) : MPoly::H();
    for (int n = 0; 3 * n < count; ++n) {
      MPoly series_coeff = scale * MPoly(binomial(Rational(cp_), n));
      for (int i = 0; i < n; ++i) series_coeff = series_coeff * step;
      for (std::size_t i = 0; i < num_.coefficients().size(); ++i) {
        const std::size_t idx = static_cast<std::size_t>(3 * n) + i;
        if (idx < out.size()) out[idx] = out[idx] + series_coeff * num_.coefficients()[i];
      }
    }
    return {vp_, out};
  }

  std::string str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    os << "(" << to_string(num_, var) << ")";
    if (vp_ != 0) os << "*" << var << "^" << vp_;
    if (cp_ != 0)
      os << "*(" << (cubic_ == Cubic::W ? var + "^3 + H" : "H*" + var + "^3 + 1") << ")^" << cp_;
    return os.str();
  }

 private:
  static void check_same(const FactoredFunction& f, const FactoredFunction& g) {
    if (f.cubic_ != g.cubic_) throw InternalError("FactoredFunction: mixing variables");
  }

  void normalize() {
    if (num_.is_zero()) {
      vp_ = cp_ = 0;
      return;
    }
    const long val = num_.valuation();
    if (val > 0) {
      num_ = num_.shifted_down(static_cast<std::size_t>(val));
      vp_ += static_cast<int>(val);
    }
    const MPolyV c = cubic_poly(cubic_);
    for (;;) {
      if (num_.degree() < 3) break;
      const auto q = cubic_ == Cubic::W ? num_.divide_by_monic(c) : num_.divide_by_comonic(c);
      if (!q) break;
      num_ = *q;
      ++cp_;
    }
  }

  MPolyV num_;
  int vp_ = 0;
  int cp_ = 0;
  Cubic cubic_ = Cubic::X;
};

// ---------------------------------------------------------------------------
// Arithmetic modulo the cubic, used for local data at its three roots.

namespace detail {

using CubicResidue = std::array<MPoly, 3>;

// Reduce a polynomial modulo the cubic: v^3 = -H (W) or v^3 = -1/H (X).
inline CubicResidue reduce_mod_cubic(const MPolyV& p, Cubic c) {
  const MPoly v3 = c == Cubic::W ? -MPoly::H() : -MPoly::H(-1);
  CubicResidue out{};
  MPoly factor(1);
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    if (i > 0 && i % 3 == 0) factor = factor * v3;
    out[i % 3] = out[i % 3] + factor * p.coefficients()[i];
  }
  return out;
}

inline CubicResidue mul_mod_cubic(const CubicResidue& a, const CubicResidue& b, Cubic c) {
  std::vector<MPoly> prod(5);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) prod[static_cast<std::size_t>(i + j)] = prod[static_cast<std::size_t>(i + j)] + a[i] * b[j];
  return reduce_mod_cubic(MPolyV(std::move(prod)), c);
}

// v^e modulo the cubic for any integer e (v is a unit there).
inline CubicResidue v_power_mod_cubic(int e, Cubic c) {
  // v^-1 = -v^2/H (W) or -H v^2 (X)
  const CubicResidue base =
      e >= 0 ? CubicResidue{MPoly(), MPoly(1), MPoly()}
             : CubicResidue{MPoly(), MPoly(), c == Cubic::W ? -MPoly::H(-1) : -MPoly::H()};
  CubicResidue out{MPoly(1), MPoly(), MPoly()};
  for (int i = 0; i < (e < 0 ? -e : e); ++i) out = mul_mod_cubic(out, base, c);
  return out;
}

// lim (v - v_i)^order f(v) at a root v_i, when that limit does not depend on the root.
inline std::optional<MPoly> cubic_root_coefficient(const FactoredFunction& f, int order) {
  if (f.is_zero() || f.cubic_power() > -order) return MPoly();
  if (f.cubic_power() < -order) return std::nullopt;
  const Cubic c = f.cubic();
  // 1/c'(v): W: c' = 3v^2 -> -v/(3H); X: c' = 3Hv^2 -> -v/3
  const CubicResidue inv_cp{MPoly(), c == Cubic::W ? MPoly::term(Rational(-1, 3), -1, 0) : MPoly(Rational(-1, 3)),
                            MPoly()};
  CubicResidue acc = mul_mod_cubic(reduce_mod_cubic(f.numerator(), c), v_power_mod_cubic(f.v_power(), c), c);
  for (int i = 0; i < order; ++i) acc = mul_mod_cubic(acc, inv_cp, c);
  if (!acc[1].is_zero() || !acc[2].is_zero()) return std::nullopt;
  return acc[0];
}

}  // namespace detail

// ---------------------------------------------------------------------------

struct Singularity {
  std::string location;
  MPoly a0;  // coefficient of (v - s)^-1 in a
  MPoly b0;  // coefficient of (v - s)^-2 in b
  std::optional<ExponentPair> exponents;  // roots of rho^2 + (a0 - 1) rho + b0 when a0, b0 are rational
};

/// xi'' + a xi' + b xi = 0 in the variable `var`.
struct FuchsianOperator {
  std::string var;
  FactoredFunction a;
  FactoredFunction b;
  std::vector<Singularity> singularities;
};

inline std::optional<ExponentPair> indicial_exponents(const MPoly& a0, const MPoly& b0) {
  const auto a = a0.as_rational();
  const auto b = b0.as_rational();
  if (!a || !b) return std::nullopt;
  const Rational s = Rational(1) - *a;
  const Rational disc = s * s - Rational(4) * *b;
  const QuadValue root = QuadValue::affine(Rational(0), Rational(1), disc);
  const Rational half(1, 2);
  return ExponentPair{(QuadValue(s) + root) * half, (QuadValue(s) - root) * half};
}

inline FuchsianOperator transform_to_infinity(const FuchsianOperator& op);

namespace detail {

inline Singularity local_data_at_zero(const FactoredFunction& a, const FactoredFunction& b, std::string label) {
  Singularity s{std::move(label), MPoly(), MPoly(), std::nullopt};
  if (!a.is_zero() && a.v_power() <= -1) {
    const auto [lo, c] = a.laurent_at_zero(2);
    s.a0 = c[static_cast<std::size_t>(-1 - lo)];
  }
  if (!b.is_zero() && b.v_power() <= -2) {
    const auto [lo, c] = b.laurent_at_zero(1);
    s.b0 = c[static_cast<std::size_t>(-2 - lo)];
  }
  s.exponents = indicial_exponents(s.a0, s.b0);
  return s;
}

inline void check_fuchsian_finite(const FactoredFunction& a, const FactoredFunction& b) {
  if (a.pole_order_at_zero() > 1 || b.pole_order_at_zero() > 2 || a.pole_order_at_cubic() > 1 ||
      b.pole_order_at_cubic() > 2)
    throw InternalError("operator is not Fuchsian at a finite point");
}

// Finite singular points of the operator, without the point at infinity.
inline std::vector<Singularity> finite_singularities(const FactoredFunction& a, const FactoredFunction& b,
                                                     const std::string& var) {
  check_fuchsian_finite(a, b);
  std::vector<Singularity> out;
  if (a.pole_order_at_zero() > 0 || b.pole_order_at_zero() > 0) out.push_back(local_data_at_zero(a, b, var + " = 0"));
  if (a.pole_order_at_cubic() > 0 || b.pole_order_at_cubic() > 0) {
    const std::string label = a.cubic() == Cubic::W ? var + "^3 + H = 0" : "H*" + var + "^3 + 1 = 0";
    Singularity s{label, MPoly(), MPoly(), std::nullopt};
    const auto a0 = cubic_root_coefficient(a, 1);
    const auto b0 = cubic_root_coefficient(b, 2);
    if (!a0 || !b0) throw InternalError("local data differs between the roots of the cubic");
    s.a0 = *a0;
    s.b0 = *b0;
    s.exponents = indicial_exponents(s.a0, s.b0);
    out.push_back(std::move(s));
  }
  return out;
}

inline FuchsianOperator make_operator(std::string var, FactoredFunction a, FactoredFunction b) {
  FuchsianOperator op{std::move(var), std::move(a), std::move(b), {}};
  op.singularities = finite_singularities(op.a, op.b, op.var);
  // infinity: local data at 0 of the transformed operator
  const std::string u = op.var == "w" ? "x" : (op.var == "x" ? "w" : "u");
  const FactoredFunction ta = FactoredFunction(MPolyV::constant(MPoly(2)), -1, 0, other(op.a.cubic())) -
                              FactoredFunction(MPolyV::constant(MPoly(1)), -2, 0, other(op.a.cubic())) *
                                  op.a.reciprocal();
  const FactoredFunction tb = FactoredFunction(MPolyV::constant(MPoly(1)), -4, 0, other(op.b.cubic())) *
                              op.b.reciprocal();
  if (ta.pole_order_at_zero() > 1 || tb.pole_order_at_zero() > 2)
    throw InternalError("operator is not Fuchsian at infinity");
  if (ta.pole_order_at_zero() > 0 || tb.pole_order_at_zero() > 0)
    op.singularities.push_back(local_data_at_zero(ta, tb, op.var + " = infinity"));
  return op;
}

}  // namespace detail

inline FuchsianOperator make_operator(std::string var, FactoredFunction a, FactoredFunction b) {
  return detail::make_operator(std::move(var), std::move(a), std::move(b));
}

/// w = 1/x:  xi_xx + (2/x - a(1/x)/x^2) xi_x + b(1/x)/x^4 xi = 0.
inline FuchsianOperator transform_to_infinity(const FuchsianOperator& op) {
  const Cubic c = other(op.a.cubic());
  const FactoredFunction two_over(MPolyV::constant(MPoly(2)), -1, 0, c);
  const FactoredFunction a = two_over - FactoredFunction(MPolyV::constant(MPoly(1)), -2, 0, c) * op.a.reciprocal();
  const FactoredFunction b = FactoredFunction(MPolyV::constant(MPoly(1)), -4, 0, c) * op.b.reciprocal();
  const std::string var = op.var == "w" ? "x" : (op.var == "x" ? "w" : op.var + "'");
  return make_operator(var, a, b);
}

struct VariationalPair {
  FuchsianOperator xi11;  // depends on A/C
  FuchsianOperator xi12;  // universal
};

/// First variational equations on the plane, in w = z^2 (the Ch^3 convention).
inline VariationalPair build_ve1(const PotentialParams& params) {
  if (params.C.is_zero()) throw OutOfScopeError("C = 0: the invariant plane reduction needs C != 0");
  if (params.h.is_zero()) throw OutOfScopeError("h = 0: the plane solution degenerates");
  const MPoly H = MPoly::H();
  // a(w) = (4w^3 + H) / (2 w (w^3 + H))
  const FactoredFunction a(MPolyV{Rational(1, 2) * H, MPoly(), MPoly(), MPoly(2)}, -1, -1, Cubic::W);
  const Rational k11 = -params.A / (Rational(4) * params.C);
  const FactoredFunction b11(MPolyV::constant(MPoly(k11)), 1, -1, Cubic::W);
  const FactoredFunction b12(MPolyV::constant(MPoly(Rational(-15, 4))), 1, -1, Cubic::W);
  return {make_operator("w", a, b11), make_operator("w", a, b12)};
}

/// The pair at infinity written through tau: b11 = -((9 tau^2 - 4)/16) / (x^2 (H x^3 + 1)).
/// `tau` may be a symbol or a number.
inline VariationalPair ve1_at_infinity(const MPoly& tau) {
  const FactoredFunction a(MPolyV::constant(Rational(3, 2) * MPoly::H()), 2, -1, Cubic::X);
  const MPoly k11 = MPoly(Rational(-1, 16)) * (MPoly(9) * tau * tau - MPoly(4));
  const FactoredFunction b11(MPolyV::constant(k11), -2, -1, Cubic::X);
  const FactoredFunction b12(MPolyV::constant(MPoly(Rational(-15, 4))), -2, -1, Cubic::X);
  return {make_operator("x", a, b11), make_operator("x", a, b12)};
}

struct LegendreReduction {
  QuadValue tau;  // the + branch
  QuadValue q;
  std::array<QuadValue, 2> p;  // -1/2 + tau/2, -1/2 - tau/2

  LegendreParams params(std::size_t branch) const { return {p.at(branch), q}; }
};

inline LegendreReduction reduce_to_legendre(const PotentialParams& params) {
  const ResonanceClass rc = classify_tau(params.A, params.C);
  const QuadValue tau = QuadValue::affine(Rational(0), Rational(1), rc.tau_squared);
  const Rational half(1, 2);
  return {tau, QuadValue(Rational(1, 6)), {QuadValue(-half) + tau * half, QuadValue(-half) - tau * half}};
}

/// xi = gauge * zeta with gauge = v^v_power * cubic^cubic_power.
struct Gauge {
  Rational v_power;
  Rational cubic_power;
  Cubic cubic = Cubic::X;
};

struct NormalFormEquation {
  std::string var;
  FactoredFunction r;  // zeta'' = r zeta
  std::optional<Gauge> gauge;
};

namespace detail {

// Write a = alpha/v + beta c'/c with rational alpha, beta, if possible.
inline std::optional<Gauge> gauge_of(const FactoredFunction& a) {
  const Cubic c = a.cubic();
  if (a.is_zero()) return Gauge{Rational(0), Rational(0), c};
  const FactoredFunction p = FactoredFunction(MPolyV::constant(MPoly(1)), 1, 1, c) * a;
  if (p.v_power() < 0 || p.cubic_power() < 0) return std::nullopt;
  const MPolyV full = (upow(cubic_poly(c), p.cubic_power()) * p.numerator()).shifted_up(
      static_cast<std::size_t>(p.v_power()));
  if (full.degree() > 3 || !full.coefficient(1).is_zero() || !full.coefficient(2).is_zero()) return std::nullopt;
  const MPoly p0 = full.coefficient(0);
  const MPoly p3 = full.coefficient(3);
  std::optional<Rational> alpha, beta;
  if (c == Cubic::W) {  // p = alpha H + (alpha + 3 beta) v^3
    alpha = (p0 * MPoly::H(-1)).as_rational();
    if (alpha) {
      if (const auto s = p3.as_rational()) beta = (*s - *alpha) / Rational(3);
    }
  } else {  // p = alpha + H (alpha + 3 beta) v^3
    alpha = p0.as_rational();
    if (alpha) {
      if (const auto s = (p3 * MPoly::H(-1)).as_rational()) beta = (*s - *alpha) / Rational(3);
    }
  }
  if (!alpha || !beta) return std::nullopt;
  return Gauge{-*alpha / Rational(2), -*beta / Rational(2), c};
}

}  // namespace detail

/// r = a'/2 + a^2/4 - b, gauge exp(-1/2 int a).
inline NormalFormEquation normal_form(const FuchsianOperator& op) {
  const MPoly half(Rational(1, 2));
  const MPoly quarter(Rational(1, 4));
  const FactoredFunction r = half * op.a.derivative() + quarter * (op.a * op.a) - op.b;
  return {op.var, r, detail::gauge_of(op.a)};
}

/// Logarithmic derivative g'/g of the gauge factor.
inline FactoredFunction gauge_log_derivative(const Gauge& g) {
  const MPoly vp(g.v_power);
  const MPoly cp(g.cubic_power);
  const FactoredFunction v_term(MPolyV::constant(vp), -1, 0, g.cubic);
  const FactoredFunction c_term =
      FactoredFunction(cubic_poly(g.cubic).derivative(), 0, -1, g.cubic);
  return v_term + cp * c_term;
}

// ---------------------------------------------------------------------------
// Second order sources, all sharing the prefactor x^(-3/2) (H x^3 + 1)^(-3/4).

struct SourceTerm {
  ParamCoeff zeta11_zeta12;
  ParamCoeff zeta11_sq;
  ParamCoeff zeta12_sq;
  Rational x_power{-3, 2};
  Rational cubic_power{-3, 4};
};

struct SourcePair {
  SourceTerm k1;
  SourceTerm k2;
};

/// d stands for D/C and enters only K1.
inline SourcePair build_sources(const Rational& tau) {
  const Rational g = -(Rational(9) * tau * tau - Rational(4)) / Rational(2);
  SourcePair s;
  s.k1.zeta11_zeta12 = ParamCoeff(g);
  s.k1.zeta11_sq = ParamCoeff::d_term(Rational(-3, 8));
  s.k2.zeta11_sq = ParamCoeff(g);
  s.k2.zeta12_sq = ParamCoeff(Rational(-15, 2));
  return s;
}

}  // namespace nonint

#endif  // NONINT_VARIATIONAL_HPP
