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

#ifndef NONINT_RATIONAL_HPP
#define NONINT_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <concepts>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "nonint/errors.hpp"

namespace nonint {

// Arbitrary precision rational. Always canonical: gcd(num, den) = 1, den > 0.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral I>
  Rational(I n) : v_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral I>
  Rational(I n) : v_(static_cast<unsigned long>(n)) {}  // NOLINT(google-explicit-constructor)

  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(mpz_class(num), mpz_class(den));
    v_.canonicalize();
  }

  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "n", "-n", "n/d" (d != 0). Whitespace is not accepted.
  static Rational parse(std::string_view text) {
    auto digits_ok = [](std::string_view s, bool allow_sign) {
      std::size_t i = 0;
      if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
      if (i == s.size()) return false;
      for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
      return true;
    };
    const std::string token(text);
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false))
      throw ParseError(token, "not a rational number: '" + token + "'");
    std::string num_s(num);
    if (!num_s.empty() && num_s[0] == '+') num_s.erase(0, 1);
    mpz_class n(num_s, 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError(token, "zero denominator in '" + token + "'");
    return Rational(n, d);
  }

  const mpq_class& value() const noexcept { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  double to_double() const { return v_.get_d(); }

  /// Largest integer not above the value.
  mpz_class floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
  }

  /// Representative of the class modulo `m` (m > 0) in [0, m).
  Rational mod(const Rational& m) const {
    Rational q(mpq_class(v_ / m.v_));
    return *this - m * Rational(q.floor(), mpz_class(1));
  }

  /// Integer value when the rational is integral and fits in a long.
  std::optional<long> to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p()) return std::nullopt;
    return v_.get_num().get_si();
  }

  /// Canonical "num/den" form (den printed even when 1).
  std::string str() const { return v_.get_num().get_str() + "/" + v_.get_den().get_str(); }

  /// Human form: "n" for integers, "n/d" otherwise.
  std::string pretty() const { return is_integer() ? v_.get_num().get_str() : str(); }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1 / v_));
  }
  Rational pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.pretty(); }

 private:
  mpq_class v_{0};
};

inline Rational abs(const Rational& x) { return x.abs(); }

/// Nonnegative exact square root, or empty when x < 0 or x is not a rational square.
inline std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  const mpz_class n = x.numerator();
  const mpz_class d = x.denominator();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  return Rational(sn, sd);
}

}  // namespace nonint

#endif  // NONINT_RATIONAL_HPP
