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

// Exact scalars used throughout the pipeline: quadratic surds, affine surd
// values, unit-root exponents, the parameter coefficient ring Q[H] + Q[H]*d,
// and the classification of the tau invariant.

#ifndef NONINT_EXACTNUM_HPP
#define NONINT_EXACTNUM_HPP

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nonint/errors.hpp"
#include "nonint/poly.hpp"
#include "nonint/rational.hpp"

namespace nonint {

// ---------------------------------------------------------------------------
// QuadraticSurd: sign * sqrt(radicand), radicand >= 0.

class QuadraticSurd {
 public:
  static QuadraticSurd root(Rational radicand, int sign = 1) {
    if (radicand.sign() < 0) throw std::domain_error("QuadraticSurd: negative radicand");
    QuadraticSurd s;
    s.sign_ = sign < 0 ? -1 : 1;
    s.rational_part_ = rational_sqrt(radicand);
    if (s.rational_part_ && s.sign_ < 0) s.rational_part_ = -*s.rational_part_;
    s.radicand_ = std::move(radicand);
    return s;
  }

  int sign() const { return sign_; }
  const Rational& radicand() const { return radicand_; }
  /// The exact value when the radicand is a perfect rational square (sign applied).
  const std::optional<Rational>& rational_part() const { return rational_part_; }
  bool is_rational() const { return rational_part_.has_value(); }

  std::string str() const {
    if (rational_part_) return rational_part_->pretty();
    return std::string(sign_ < 0 ? "-" : "") + "sqrt(" + radicand_.pretty() + ")";
  }

 private:
  int sign_ = 1;
  Rational radicand_;
  std::optional<Rational> rational_part_;
};

// ---------------------------------------------------------------------------
// QuadValue: a + b*sqrt(m). Canonical form folds rational square roots into a
// and stores m as an integer with small square factors pulled out. m < 0 is
// allowed and marks a non-real value.

class QuadValue {
 public:
  QuadValue() = default;
  QuadValue(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  QuadValue(I a) : a_(Rational(a)) {}  // NOLINT(google-explicit-constructor)

  static QuadValue affine(Rational a, Rational b, Rational m) {
    QuadValue q;
    q.a_ = std::move(a);
    q.b_ = std::move(b);
    q.m_ = std::move(m);
    q.canonicalize();
    return q;
  }
  explicit QuadValue(const QuadraticSurd& s) {
    if (s.rational_part()) {
      a_ = *s.rational_part();
    } else {
      b_ = Rational(s.sign());
      m_ = s.radicand();
      canonicalize();
    }
  }

  const Rational& rational_part() const { return a_; }
  const Rational& surd_coefficient() const { return b_; }
  const Rational& radicand() const { return m_; }

  bool is_rational() const { return b_.is_zero(); }
  bool is_real() const { return b_.is_zero() || m_.sign() > 0; }
  std::optional<Rational> as_rational() const {
    if (!is_rational()) return std::nullopt;
    return a_;
  }

  QuadValue operator-() const { return affine(-a_, -b_, m_); }
  friend QuadValue operator+(const QuadValue& x, const QuadValue& y) {
    if (x.is_rational()) return affine(x.a_ + y.a_, y.b_, y.m_);
    if (y.is_rational()) return affine(x.a_ + y.a_, x.b_, x.m_);
    // sqrt(m_y) = s * sqrt(m_x) requires m_y / m_x to be a rational square.
    const auto s = rational_sqrt(y.m_ / x.m_);
    if (!s) throw InternalError("QuadValue: sum of unrelated surds is not representable");
    return affine(x.a_ + y.a_, x.b_ + y.b_ * *s, x.m_);
  }
  friend QuadValue operator-(const QuadValue& x, const QuadValue& y) { return x + (-y); }
  friend QuadValue operator*(const Rational& k, const QuadValue& x) { return affine(k * x.a_, k * x.b_, x.m_); }
  /// Product; both factors must live in the same quadratic field.
  friend QuadValue operator*(const QuadValue& x, const QuadValue& y) {
    if (x.is_rational()) return x.a_ * y;
    if (y.is_rational()) return y.a_ * x;
    const auto s = rational_sqrt(y.m_ / x.m_);
    if (!s) throw InternalError("QuadValue: product of unrelated surds is not representable");
    const Rational d = y.b_ * *s;  // y = c + d sqrt(m_x)
    return affine(x.a_ * y.a_ + x.b_ * d * x.m_, x.a_ * d + x.b_ * y.a_, x.m_);
  }
  friend QuadValue operator*(const QuadValue& x, const Rational& k) { return k * x; }

  friend bool operator==(const QuadValue& x, const QuadValue& y) {
    if (!(x.a_ == y.a_)) return false;
    if (x.is_rational() || y.is_rational()) return x.is_rational() && y.is_rational();
    if (x.b_.sign() != y.b_.sign()) return false;
    return x.b_ * x.b_ * x.m_ == y.b_ * y.b_ * y.m_;
  }

  std::string str() const {
    if (is_rational()) return a_.pretty();
    std::ostringstream os;
    if (!a_.is_zero()) os << a_.pretty() << (b_.sign() < 0 ? " - " : " + ");
    else if (b_.sign() < 0) os << "-";
    const Rational mag = b_.abs();
    if (!(mag == Rational(1))) os << mag.pretty() << "*";
    os << "sqrt(" << m_.pretty() << ")";
    return os.str();
  }

 private:
  void canonicalize() {
    if (b_.is_zero() || m_.is_zero()) {
      b_ = Rational(0);
      m_ = Rational(0);
      return;
    }
    if (const auto r = rational_sqrt(m_)) {
      a_ += b_ * *r;
      b_ = Rational(0);
      m_ = Rational(0);
      return;
    }
    // sqrt(n/d) = sqrt(n*d)/d
    const mpz_class d = m_.denominator();
    b_ = b_ / Rational(d, mpz_class(1));
    mpz_class n = m_.numerator() * d;
    const int sgn = n < 0 ? -1 : 1;
    if (sgn < 0) n = -n;
    for (unsigned long p = 2; p * p <= 10000UL; ++p) {
      const mpz_class p2 = p * p;
      while (mpz_divisible_p(n.get_mpz_t(), p2.get_mpz_t())) {
        n /= p2;
        b_ *= Rational(static_cast<long>(p));
      }
    }
    m_ = Rational(mpz_class(sgn * n), mpz_class(1));
  }

  Rational a_;
  Rational b_;
  Rational m_;
};

// ---------------------------------------------------------------------------
// UnitRootExp: the number exp(exponent * pi * i). Rational exponents are kept
// in [0, 2); surd exponents stay symbolic.

class UnitRootExp {
 public:
  UnitRootExp() = default;
  explicit UnitRootExp(QuadValue exponent) : e_(std::move(exponent)) { normalize(); }

  const QuadValue& exponent() const { return e_; }
  bool is_rational() const { return e_.is_rational(); }
  /// u == 1
  bool is_one() const { return e_.is_rational() && e_.rational_part().is_zero(); }
  /// u^2 == 1, i.e. the exponent is an integer.
  bool squares_to_one() const { return e_.is_rational() && e_.rational_part().is_integer(); }

  UnitRootExp inverse() const { return UnitRootExp(-e_); }
  friend UnitRootExp operator*(const UnitRootExp& x, const UnitRootExp& y) { return UnitRootExp(x.e_ + y.e_); }
  friend bool operator==(const UnitRootExp& x, const UnitRootExp& y) {
    if (x.is_rational() && y.is_rational()) return x.e_ == y.e_;
    const QuadValue diff = x.e_ - y.e_;
    return diff.is_rational() && diff.rational_part().mod(Rational(2)).is_zero();
  }

  std::string str() const { return "exp(pi*i*(" + e_.str() + "))"; }

 private:
  void normalize() {
    if (e_.is_rational()) e_ = QuadValue(e_.rational_part().mod(Rational(2)));
  }

  QuadValue e_;
};

// ---------------------------------------------------------------------------
// ParamCoeff: a(H) + b(H) * d with H = h^3 and d = D/C. Products of two
// d-bearing values are rejected: the pipeline never needs d^2.

class ParamCoeff {
 public:
  ParamCoeff() = default;
  ParamCoeff(Rational c) : a_(RPoly::constant(std::move(c))) {}  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  ParamCoeff(I c) : ParamCoeff(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  ParamCoeff(RPoly a, RPoly b) : a_(std::move(a)), b_(std::move(b)) {}

  static ParamCoeff H_power(Rational c, std::size_t power) { return {RPoly::monomial(std::move(c), power), RPoly()}; }
  static ParamCoeff d_term(Rational c) { return {RPoly(), RPoly::constant(std::move(c))}; }

  const RPoly& d_free() const { return a_; }
  const RPoly& d_part() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_d_free() const { return b_.is_zero(); }
  /// Rational value when the coefficient is free of H and d.
  std::optional<Rational> as_rational() const {
    if (!b_.is_zero() || a_.degree() > 0) return std::nullopt;
    return a_.coefficient(0);
  }

  ParamCoeff operator-() const { return {-a_, -b_}; }
  friend ParamCoeff operator+(const ParamCoeff& x, const ParamCoeff& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend ParamCoeff operator-(const ParamCoeff& x, const ParamCoeff& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend ParamCoeff operator*(const ParamCoeff& x, const ParamCoeff& y) {
    if (!x.b_.is_zero() && !y.b_.is_zero())
      throw InternalError("ParamCoeff: product would contain d^2");
    return {x.a_ * y.a_, x.a_ * y.b_ + x.b_ * y.a_};
  }
  friend ParamCoeff operator*(const Rational& k, const ParamCoeff& x) { return {k * x.a_, k * x.b_}; }
  /// Division is only defined by nonzero rational constants.
  friend ParamCoeff operator/(const ParamCoeff& x, const ParamCoeff& y) {
    const auto k = y.as_rational();
    if (!k || k->is_zero()) throw std::domain_error("ParamCoeff: division by a non-constant or zero value");
    return k->inverse() * x;
  }
  friend ParamCoeff operator/(const ParamCoeff& x, const Rational& k) { return k.inverse() * x; }
  friend bool operator==(const ParamCoeff& x, const ParamCoeff& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  template <class V, class Lift>
  V evaluate(const V& H, const V& d, Lift&& lift) const {
    return a_.evaluate(H, lift) + b_.evaluate(H, lift) * d;
  }
  Rational evaluate(const Rational& H, const Rational& d) const {
    auto id = [](const Rational& r) { return r; };
    return a_.evaluate(H, id) + b_.evaluate(H, id) * d;
  }

  std::string str() const {
    if (is_zero()) return "0";
    if (b_.is_zero()) return to_string(a_, "H");
    if (a_.is_zero()) return "(" + to_string(b_, "H") + ")*d";
    return to_string(a_, "H") + " + (" + to_string(b_, "H") + ")*d";
  }

 private:
  RPoly a_;
  RPoly b_;
};

// ---------------------------------------------------------------------------
// Tau classification.

/// The two resonant families of tau, parametrised by an integer k.
enum class Family {
  MinusTwoKPlusFourThirds,  // tau = -2k + 4/3
  TwoKPlusTwoThirds,        // tau =  2k + 2/3
};

inline Rational family_tau(long k, Family f) {
  return f == Family::MinusTwoKPlusFourThirds ? Rational(-2 * k) + Rational(4, 3) : Rational(2 * k) + Rational(2, 3);
}

inline std::string to_string(Family f) {
  return f == Family::MinusTwoKPlusFourThirds ? "-2k+4/3" : "2k+2/3";
}

/// Integer k with family_tau(k, f) == tau, if any.
inline std::optional<long> family_index(const Rational& tau, Family f) {
  const Rational k = f == Family::MinusTwoKPlusFourThirds ? (Rational(4, 3) - tau) / Rational(2)
                                                          : (tau - Rational(2, 3)) / Rational(2);
  return k.to_long();
}

enum class TauStatus { Rational, Irrational, NonReal };

inline std::string to_string(TauStatus s) {
  switch (s) {
    case TauStatus::Rational: return "rational";
    case TauStatus::Irrational: return "irrational";
    case TauStatus::NonReal: return "non-real";
  }
  return "?";
}

struct Realization {
  int sign;  // which branch of +/-tau
  Family family;
  long k;

  friend bool operator==(const Realization&, const Realization&) = default;
};

struct ResonanceClass {
  Rational tau_squared;
  TauStatus status = TauStatus::Irrational;
  std::optional<Rational> tau;  // nonnegative root when rational
  bool resonant = false;
  std::vector<Realization> realizations;

  /// Irrational for decision purposes (covers the non-real case).
  bool irrational() const { return status != TauStatus::Rational; }
  std::vector<long> ks() const {
    std::vector<long> out;
    for (const auto& r : realizations) out.push_back(r.k);
    return out;
  }
};

/// tau^2 = (2A + 4C) / (9C) and its resonance data. Both signs of tau are enumerated.
inline ResonanceClass classify_tau(const Rational& A, const Rational& C) {
  if (C.is_zero()) throw OutOfScopeError("C = 0: the invariant plane reduction needs C != 0");
  ResonanceClass rc;
  rc.tau_squared = (Rational(2) * A + Rational(4) * C) / (Rational(9) * C);
  if (rc.tau_squared.sign() < 0) {
    rc.status = TauStatus::NonReal;
    return rc;
  }
  const auto t = rational_sqrt(rc.tau_squared);
  if (!t) {
    rc.status = TauStatus::Irrational;
    return rc;
  }
  rc.status = TauStatus::Rational;
  rc.tau = *t;
  for (int sign : {1, -1}) {
    if (sign < 0 && t->is_zero()) break;
    const Rational v = sign > 0 ? *t : -*t;
    for (Family f : {Family::MinusTwoKPlusFourThirds, Family::TwoKPlusTwoThirds})
      if (const auto k = family_index(v, f)) rc.realizations.push_back({sign, f, *k});
  }
  rc.resonant = !rc.realizations.empty();
  return rc;
}

// ---------------------------------------------------------------------------
// Upper triangular 2x2 monodromy matrices diag(u, 1/u) with a symbolic corner.

enum class OffDiagonalConstraint { Zero, Free, NonZero };

struct TriangularMonodromy {
  UnitRootExp diagonal;  // upper-left entry; lower-right is its inverse
  std::string symbol = "alpha";
  OffDiagonalConstraint constraint = OffDiagonalConstraint::Free;

  UnitRootExp lower_right() const { return diagonal.inverse(); }
};

enum class CommuteClass { AlwaysCommute, NeverCommute, Conditional };

inline std::string to_string(CommuteClass c) {
  switch (c) {
    case CommuteClass::AlwaysCommute: return "AlwaysCommute";
    case CommuteClass::NeverCommute: return "NeverCommute";
    case CommuteClass::Conditional: return "Conditional";
  }
  return "?";
}

struct CommutativityReport {
  CommuteClass classification = CommuteClass::Conditional;
  /// M1 M2 = M2 M1 iff this identity holds.
  std::string condition;
  bool alpha1_coefficient_zero = false;  // (u2 - 1/u2) == 0
  bool alpha2_coefficient_zero = false;  // (u1 - 1/u1) == 0
};

namespace detail {

// sin(pi*x) == sign * sin(pi*y) decided from the exponents.
inline bool sine_relation(const QuadValue& x, const QuadValue& y, int sign) {
  auto is_even = [](const QuadValue& v) {
    return v.is_rational() && v.rational_part().mod(Rational(2)).is_zero();
  };
  auto is_odd = [](const QuadValue& v) {
    return v.is_rational() && v.rational_part().mod(Rational(2)) == Rational(1);
  };
  try {
    if (sign > 0) return is_even(x - y) || is_odd(x + y);
    return is_even(x + y) || is_odd(x - y);
  } catch (const InternalError&) {
    return false;
  }
}

}  // namespace detail

/// Exact commutation condition for M1 = [[u1, a1], [0, 1/u1]], M2 = [[u2, a2], [0, 1/u2]]:
/// M1 M2 = M2 M1  <=>  (u1 - 1/u1) a2 = (u2 - 1/u2) a1.
inline CommutativityReport unit_root_commutator(const TriangularMonodromy& m1, const TriangularMonodromy& m2) {
  CommutativityReport rep;
  rep.alpha2_coefficient_zero = m1.diagonal.squares_to_one();
  rep.alpha1_coefficient_zero = m2.diagonal.squares_to_one();
  const bool term1 = !rep.alpha1_coefficient_zero && m1.constraint != OffDiagonalConstraint::Zero;
  const bool term2 = !rep.alpha2_coefficient_zero && m2.constraint != OffDiagonalConstraint::Zero;
  const std::string& a1 = m1.symbol;
  const std::string& a2 = m2.symbol;
  const std::string c1 = "(u1 - u1^-1)";
  const std::string c2 = "(u2 - u2^-1)";

  if (!term1 && !term2) {
    rep.classification = CommuteClass::AlwaysCommute;
    rep.condition = "0 = 0";
    return rep;
  }
  if (term1 != term2) {
    const auto& single = term1 ? m1 : m2;
    rep.classification =
        single.constraint == OffDiagonalConstraint::NonZero ? CommuteClass::NeverCommute : CommuteClass::Conditional;
    rep.condition = term1 ? c2 + "*" + a1 + " = 0" : c1 + "*" + a2 + " = 0";
    return rep;
  }
  rep.classification = CommuteClass::Conditional;
  const QuadValue& t1 = m1.diagonal.exponent();
  const QuadValue& t2 = m2.diagonal.exponent();
  if (detail::sine_relation(t1, t2, 1)) {
    rep.condition = c1 + "*(" + a2 + " - " + a1 + ") = 0, i.e. " + a1 + " = " + a2;
  } else if (detail::sine_relation(t1, t2, -1)) {
    rep.condition = c1 + "*(" + a2 + " + " + a1 + ") = 0, i.e. " + a1 + " = -" + a2;
  } else {
    rep.condition = c1 + "*" + a2 + " - " + c2 + "*" + a1 + " = 0";
  }
  return rep;
}

}  // namespace nonint

#endif  // NONINT_EXACTNUM_HPP
