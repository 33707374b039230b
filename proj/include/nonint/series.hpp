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

#ifndef NONINT_SERIES_HPP
#define NONINT_SERIES_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nonint/errors.hpp"
#include "nonint/poly.hpp"
#include "nonint/rational.hpp"

namespace nonint {

/// Coefficients of x^(base + 3n), n >= 0.
template <CoefficientRing Coeff>
struct Strand {
  Rational base;
  std::map<int, Coeff> coeffs;
};

/// Finite sum of strands x^rho * sum_n c_n x^(3n) with pairwise distinct bases
/// mod 3. Every exponent below `truncation()` is exact; none at or above it is
/// stored. An empty truncation means the series is exact (a finite sum).
template <CoefficientRing Coeff>
class StrandSeries {
 public:
  StrandSeries() = default;
  explicit StrandSeries(std::optional<Rational> truncation) : trunc_(std::move(truncation)) {}

  /// Single strand from coefficients a[0..]; exact below base + 3 * a.size() when truncated.
  static StrandSeries single(const Rational& base, const std::vector<Coeff>& a, bool truncated = true) {
    StrandSeries s(truncated ? std::optional<Rational>(base + Rational(3 * static_cast<long>(a.size())))
                             : std::nullopt);
    for (std::size_t n = 0; n < a.size(); ++n) s.add_term(base + Rational(3 * static_cast<long>(n)), a[n]);
    return s;
  }

  /// Adds c x^e (dropped when e is not below the truncation).
  StrandSeries& add(const Rational& e, const Coeff& c) {
    add_term(e, c);
    return *this;
  }

  const std::optional<Rational>& truncation() const { return trunc_; }
  bool is_zero() const { return terms_.empty(); }

  /// Strands ordered by base; each base is the lowest stored exponent in its class.
  std::vector<Strand<Coeff>> strands() const {
    std::map<Rational, Strand<Coeff>> by_class;
    for (const auto& [e, c] : terms_) {
      const Rational cls = e.mod(Rational(3));
      auto it = by_class.find(cls);
      if (it == by_class.end()) it = by_class.emplace(cls, Strand<Coeff>{e, {}}).first;
      const Rational n = (e - it->second.base) / Rational(3);
      it->second.coeffs.emplace(static_cast<int>(*n.to_long()), c);
    }
    std::vector<Strand<Coeff>> out;
    for (auto& [cls, s] : by_class) out.push_back(std::move(s));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.base < b.base; });
    return out;
  }

  /// Nonzero terms keyed by exponent.
  const std::map<Rational, Coeff>& terms() const { return terms_; }

  std::optional<Rational> min_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }

  /// Coefficient of x^e; throws when e is not below the truncation.
  Coeff coefficient_at(const Rational& e) const {
    if (trunc_ && !(e < *trunc_))
      throw InternalError("StrandSeries: exponent " + e.pretty() + " lies beyond the truncation " + trunc_->pretty());
    const auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(Rational(0)) : it->second;
  }
  Coeff residue() const { return coefficient_at(Rational(-1)); }

  StrandSeries operator-() const {
    StrandSeries out(trunc_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }
  friend StrandSeries operator+(const StrandSeries& a, const StrandSeries& b) {
    StrandSeries out(min_trunc(a.trunc_, b.trunc_));
    for (const auto& [e, c] : a.terms_) out.add_term(e, c);
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }
  friend StrandSeries operator-(const StrandSeries& a, const StrandSeries& b) { return a + (-b); }
  friend StrandSeries operator*(const StrandSeries& a, const StrandSeries& b) {
    std::optional<Rational> t;
    if (a.trunc_ && !b.terms_.empty()) t = *a.trunc_ + *b.min_exponent();
    if (b.trunc_ && !a.terms_.empty()) t = min_trunc(t, *b.trunc_ + *a.min_exponent());
    if ((a.trunc_ || b.trunc_) && !t) t = a.trunc_ ? a.trunc_ : b.trunc_;  // product with zero
    StrandSeries out(t);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        const Rational e = ea + eb;
        if (t && !(e < *t)) break;
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }
  friend StrandSeries operator*(const Coeff& k, const StrandSeries& s) {
    StrandSeries out(s.trunc_);
    for (const auto& [e, c] : s.terms_) out.add_term(e, k * c);
    return out;
  }

  StrandSeries derivative() const {
    StrandSeries out(trunc_ ? std::optional<Rational>(*trunc_ - Rational(1)) : std::nullopt);
    for (const auto& [e, c] : terms_) out.add_term(e - Rational(1), Coeff(e) * c);
    return out;
  }

  /// sum_e coeff(c_e) * power(e), for any value type V.
  template <class V, class Power, class CoeffValue>
  V evaluate(Power&& power, CoeffValue&& coeff) const {
    V acc = V(0);
    for (const auto& [e, c] : terms_) acc = acc + coeff(c) * power(e);
    return acc;
  }

 private:
  static std::optional<Rational> min_trunc(const std::optional<Rational>& a, const std::optional<Rational>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
  }

  void add_term(const Rational& e, const Coeff& c) {
    if (c.is_zero()) return;
    if (trunc_ && !(e < *trunc_)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::map<Rational, Coeff> terms_;
  std::optional<Rational> trunc_;
};

}  // namespace nonint

#endif  // NONINT_SERIES_HPP
