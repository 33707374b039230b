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

#ifndef NONINT_POLY_HPP
#define NONINT_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nonint/rational.hpp"

namespace nonint {

/// Minimal commutative ring interface used by the polynomial and series templates.
template <class R>
concept CoefficientRing = requires(const R& a, const R& b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
  R(Rational(1));
};

/// Dense univariate polynomial sum_i c[i] v^i; no trailing zero coefficients.
template <CoefficientRing R>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
  UPoly(std::initializer_list<R> coeffs) : c_(coeffs) { trim(); }

  static UPoly constant(R value) { return UPoly(std::vector<R>{std::move(value)}); }
  /// value * v^power
  static UPoly monomial(R value, std::size_t power) {
    std::vector<R> c(power + 1, R(Rational(0)));
    c[power] = std::move(value);
    return UPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  /// Index of the lowest nonzero coefficient; -1 for zero.
  long valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return static_cast<long>(i);
    return -1;
  }

  const std::vector<R>& coefficients() const { return c_; }
  R coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : R(Rational(0)); }

  UPoly operator-() const {
    UPoly out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
  }
  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<R> c(std::max(a.c_.size(), b.c_.size()), R(Rational(0)));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
    return UPoly(std::move(c));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<R> c(a.c_.size() + b.c_.size() - 1, R(Rational(0)));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(c));
  }
  friend UPoly operator*(const R& s, const UPoly& p) {
    std::vector<R> c = p.c_;
    for (auto& x : c) x = s * x;
    return UPoly(std::move(c));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<R> c(c_.size() - 1, R(Rational(0)));
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = R(Rational(static_cast<long>(i))) * c_[i];
    return UPoly(std::move(c));
  }

  /// Multiply by v^k.
  UPoly shifted_up(std::size_t k) const {
    if (is_zero()) return UPoly();
    std::vector<R> c(k, R(Rational(0)));
    c.insert(c.end(), c_.begin(), c_.end());
    return UPoly(std::move(c));
  }
  /// Divide by v^k; the low k coefficients must vanish.
  UPoly shifted_down(std::size_t k) const {
    for (std::size_t i = 0; i < std::min(k, c_.size()); ++i)
      if (!c_[i].is_zero()) throw InternalError("UPoly::shifted_down: not divisible");
    if (k >= c_.size()) return UPoly();
    return UPoly(std::vector<R>(c_.begin() + static_cast<long>(k), c_.end()));
  }
  /// v^n p(1/v) with n = degree.
  UPoly reversed() const {
    std::vector<R> c(c_.rbegin(), c_.rend());
    return UPoly(std::move(c));
  }

  /// Exact quotient by a divisor whose leading coefficient is 1; empty if the remainder is nonzero.
  std::optional<UPoly> divide_by_monic(const UPoly& divisor) const {
    if (divisor.is_zero() || !(divisor.c_.back() == R(Rational(1))))
      throw InternalError("UPoly::divide_by_monic: divisor not monic");
    if (is_zero()) return UPoly();
    if (degree() < divisor.degree()) return std::nullopt;
    std::vector<R> rem = c_;
    std::vector<R> q(c_.size() - divisor.c_.size() + 1, R(Rational(0)));
    const std::size_t dd = divisor.c_.size() - 1;
    for (std::size_t i = q.size(); i-- > 0;) {
      const R lead = rem[i + dd];
      q[i] = lead;
      if (lead.is_zero()) continue;
      for (std::size_t j = 0; j <= dd; ++j) rem[i + j] = rem[i + j] - lead * divisor.c_[j];
    }
    for (const auto& r : rem)
      if (!r.is_zero()) return std::nullopt;
    return UPoly(std::move(q));
  }

  /// Exact quotient by a divisor whose constant coefficient is 1 (division from the low end).
  std::optional<UPoly> divide_by_comonic(const UPoly& divisor) const {
    if (divisor.is_zero() || !(divisor.c_.front() == R(Rational(1))))
      throw InternalError("UPoly::divide_by_comonic: divisor constant term is not 1");
    if (is_zero()) return UPoly();
    if (degree() < divisor.degree()) return std::nullopt;
    std::vector<R> rem = c_;
    std::vector<R> q(c_.size() - divisor.c_.size() + 1, R(Rational(0)));
    for (std::size_t i = 0; i < q.size(); ++i) {
      const R lead = rem[i];
      q[i] = lead;
      if (lead.is_zero()) continue;
      for (std::size_t j = 0; j < divisor.c_.size(); ++j) rem[i + j] = rem[i + j] - lead * divisor.c_[j];
    }
    for (const auto& r : rem)
      if (!r.is_zero()) return std::nullopt;
    return UPoly(std::move(q));
  }

  /// Horner evaluation; `lift` maps a coefficient into V.
  template <class V, class Lift>
  V evaluate(const V& v, Lift&& lift) const {
    V acc = V(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * v + lift(c_[i]);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<R> c_;
};

using RPoly = UPoly<Rational>;

/// Formats a polynomial over the rationals in `var`, highest degree first.
inline std::string to_string(const RPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coefficients()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (i == 0 || !unit) os << mag.pretty();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace nonint

#endif  // NONINT_POLY_HPP
