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

#ifndef NONINT_MPOLY_HPP
#define NONINT_MPOLY_HPP

#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "nonint/errors.hpp"
#include "nonint/poly.hpp"
#include "nonint/rational.hpp"

namespace nonint {

/// Sparse Laurent polynomial over Q in the symbols H and tau.
class MPoly {
 public:
  using Exponent = std::array<int, 2>;  // {H, tau}

  MPoly() = default;
  MPoly(Rational c) { add_term({0, 0}, std::move(c)); }  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  MPoly(I c) : MPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static MPoly term(Rational c, int h_power, int tau_power) {
    MPoly p;
    p.add_term({h_power, tau_power}, std::move(c));
    return p;
  }
  static MPoly H(int power = 1) { return term(Rational(1), power, 0); }
  static MPoly tau(int power = 1) { return term(Rational(1), 0, power); }

  const std::map<Exponent, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool has_tau() const {
    for (const auto& [e, c] : t_)
      if (e[1] != 0) return true;
    return false;
  }
  std::optional<Rational> as_rational() const {
    if (t_.empty()) return Rational(0);
    if (t_.size() == 1 && t_.begin()->first == Exponent{0, 0}) return t_.begin()->second;
    return std::nullopt;
  }

  MPoly operator-() const {
    MPoly out = *this;
    for (auto& [e, c] : out.t_) c = -c;
    return out;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) {
    for (const auto& [e, c] : b.t_) a.add_term(e, c);
    return a;
  }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out;
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) out.add_term({ea[0] + eb[0], ea[1] + eb[1]}, ca * cb);
    return out;
  }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }

  /// Replace tau by a rational value.
  MPoly substitute_tau(const Rational& value) const {
    MPoly out;
    for (const auto& [e, c] : t_) out.add_term({e[0], 0}, c * value.pow(e[1]));
    return out;
  }
  /// Replace H by a rational value.
  MPoly substitute_H(const Rational& value) const {
    MPoly out;
    for (const auto& [e, c] : t_) out.add_term({0, e[1]}, c * value.pow(e[0]));
    return out;
  }

  /// Polynomial in H when tau-free with nonnegative powers.
  std::optional<RPoly> to_rpoly_H() const {
    std::vector<Rational> c;
    for (const auto& [e, v] : t_) {
      if (e[1] != 0 || e[0] < 0) return std::nullopt;
      if (c.size() <= static_cast<std::size_t>(e[0])) c.resize(static_cast<std::size_t>(e[0]) + 1);
      c[static_cast<std::size_t>(e[0])] = v;
    }
    return RPoly(std::move(c));
  }
  static MPoly from_rpoly_H(const RPoly& p) {
    MPoly out;
    for (std::size_t i = 0; i < p.coefficients().size(); ++i)
      out.add_term({static_cast<int>(i), 0}, p.coefficients()[i]);
    return out;
  }

  /// Square root of a monomial with even exponents and a square coefficient.
  std::optional<MPoly> exact_sqrt() const {
    if (t_.empty()) return MPoly();
    if (t_.size() != 1) return std::nullopt;
    const auto& [e, c] = *t_.begin();
    if (e[0] % 2 != 0 || e[1] % 2 != 0) return std::nullopt;
    const auto s = rational_sqrt(c);
    if (!s) return std::nullopt;
    return term(*s, e[0] / 2, e[1] / 2);
  }

  template <class V, class Lift>
  V evaluate(const V& h, const V& tau, Lift&& lift) const {
    V acc = V(0);
    for (const auto& [e, c] : t_) acc = acc + lift(c) * ipow(h, e[0]) * ipow(tau, e[1]);
    return acc;
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      const auto& [e, c] = *it;
      const Rational mag = c.abs();
      if (first) {
        if (c.sign() < 0) os << "-";
      } else {
        os << (c.sign() < 0 ? " - " : " + ");
      }
      first = false;
      std::string mon;
      auto factor = [&mon](const char* sym, int p) {
        if (p == 0) return;
        if (!mon.empty()) mon += "*";
        mon += sym;
        if (p != 1) mon += "^" + std::to_string(p);
      };
      factor("H", e[0]);
      factor("tau", e[1]);
      if (mon.empty()) {
        os << mag.pretty();
      } else {
        if (!(mag == Rational(1))) os << mag.pretty() << "*";
        os << mon;
      }
    }
    return os.str();
  }

 private:
  template <class V>
  static V ipow(const V& base, int p) {
    V out = V(1);
    for (int i = 0; i < (p < 0 ? -p : p); ++i) out = out * base;
    return p < 0 ? V(1) / out : out;
  }

  void add_term(const Exponent& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  std::map<Exponent, Rational> t_;
};

/// Fraction num/den of MPoly values; equality by cross multiplication. No gcd
/// reduction, so keep chains short.
class SymFrac {
 public:
  SymFrac() : num_(), den_(Rational(1)) {}
  SymFrac(MPoly num) : num_(std::move(num)), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  SymFrac(Rational c) : SymFrac(MPoly(std::move(c))) {}             // NOLINT(google-explicit-constructor)
  template <std::integral I>
  SymFrac(I c) : SymFrac(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  SymFrac(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("SymFrac: zero denominator");
  }

  const MPoly& numerator() const { return num_; }
  const MPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  SymFrac operator-() const { return {-num_, den_}; }
  friend SymFrac operator+(const SymFrac& a, const SymFrac& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend SymFrac operator-(const SymFrac& a, const SymFrac& b) { return a + (-b); }
  friend SymFrac operator*(const SymFrac& a, const SymFrac& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
  friend SymFrac operator/(const SymFrac& a, const SymFrac& b) {
    if (b.is_zero()) throw std::domain_error("SymFrac: division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  friend bool operator==(const SymFrac& a, const SymFrac& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

  std::string str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

 private:
  MPoly num_;
  MPoly den_;
};

}  // namespace nonint

#endif  // NONINT_MPOLY_HPP
