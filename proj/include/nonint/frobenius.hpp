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

// Frobenius solutions of zeta'' = r(x) zeta at x = 0 when
// r = x^-2 * sum_j c_j x^(3j). Then zeta = x^rho sum_n a_n x^(3n) with
//   a_n [(rho + 3n)(rho + 3n - 1) - c_0] = sum_{j>=1} c_j a_(n-j).

#ifndef NONINT_FROBENIUS_HPP
#define NONINT_FROBENIUS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nonint/errors.hpp"
#include "nonint/exactnum.hpp"
#include "nonint/mpoly.hpp"
#include "nonint/series.hpp"
#include "nonint/variational.hpp"

namespace nonint {

/// The recurrence hit a resonance with a nonzero right hand side.
class LogRequired : public std::runtime_error {
 public:
  LogRequired(int step, std::string obstruction)
      : std::runtime_error("logarithmic solution required: resonance at step " + std::to_string(step) +
                           " with obstruction " + obstruction),
        step_(step),
        obstruction_(std::move(obstruction)) {}
  int step() const noexcept { return step_; }
  const std::string& obstruction() const noexcept { return obstruction_; }

 private:
  int step_;
  std::string obstruction_;
};

/// Coefficients c_0, c_1, ... of r = x^-2 sum_j c_j x^(3j). Rejects poles of
/// order above 2 and terms off the -2 + 3Z lattice; c_0 may vanish.
inline std::vector<MPoly> laurent_r(const NormalFormEquation& nf, int count) {
  std::vector<MPoly> c(static_cast<std::size_t>(count));
  if (nf.r.is_zero()) return c;
  if (nf.r.v_power() < -2) throw std::domain_error("r has a pole of order above 2 at 0");
  const auto [lo, raw] = nf.r.laurent_at_zero(3 * count);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].is_zero()) continue;
    const long e = static_cast<long>(i) + lo + 2;  // exponent + 2
    if (e % 3 != 0) throw std::domain_error("r has terms off the x^(-2 + 3j) lattice");
    if (e / 3 < count) c[static_cast<std::size_t>(e / 3)] = raw[i];
  }
  return c;
}

template <class F>
struct FrobeniusRun {
  std::vector<F> a;                              // a_0 = 1, ..., up to the stop
  std::optional<std::pair<int, F>> obstruction;  // resonant step with nonzero right hand side
};

/// Runs the recurrence for `order` steps over a field-like F. A resonant step
/// with zero right hand side sets a_n = 0 and continues.
template <class F>
FrobeniusRun<F> frobenius_coefficients(const std::vector<F>& c, const F& rho, int order) {
  FrobeniusRun<F> run;
  run.a.push_back(F(1));
  for (int n = 1; n <= order; ++n) {
    const F e = rho + F(3 * n);
    const F denom = e * (e - F(1)) - c.at(0);
    F rhs = F(0);
    for (int j = 1; j <= n && j < static_cast<int>(c.size()); ++j)
      rhs = rhs + c[static_cast<std::size_t>(j)] * run.a[static_cast<std::size_t>(n - j)];
    if (denom.is_zero()) {
      if (!rhs.is_zero()) {
        run.obstruction = std::make_pair(n, rhs);
        return run;
      }
      run.a.push_back(F(0));
      continue;
    }
    run.a.push_back(rhs / denom);
  }
  return run;
}

/// Roots of rho (rho - 1) = c0, as (1/2 + s, 1/2 - s) with s = sqrt(1/4 + c0) >= 0.
inline std::pair<QuadValue, QuadValue> indicial_roots(const Rational& c0) {
  const QuadValue s = QuadValue::affine(Rational(0), Rational(1), Rational(1, 4) + c0);
  const QuadValue half(Rational(1, 2));
  return {half + s, half - s};
}

/// Symbolic version: needs 1/4 + c0 to be a perfect square monomial (e.g. 9 tau^2/16).
inline std::optional<std::pair<MPoly, MPoly>> indicial_roots(const MPoly& c0) {
  const auto s = (MPoly(Rational(1, 4)) + c0).exact_sqrt();
  if (!s) return std::nullopt;
  const MPoly half(Rational(1, 2));
  return std::make_pair(half + *s, half - *s);
}

inline std::pair<QuadValue, QuadValue> indicial_roots(const NormalFormEquation& nf) {
  const auto c = laurent_r(nf, 1);
  const auto c0 = c[0].as_rational();
  if (!c0) throw std::domain_error("indicial equation has symbolic coefficient " + c[0].str());
  return indicial_roots(*c0);
}

inline ParamCoeff to_param_coeff(const MPoly& m) {
  const auto p = m.to_rpoly_H();
  if (!p) throw InternalError("coefficient is not a polynomial in H: " + m.str());
  return ParamCoeff(*p, RPoly());
}

/// x^rho (1 + a_1 x^3 + ... + a_order x^(3 order)), exact below rho + 3(order + 1).
inline StrandSeries<ParamCoeff> frobenius_series(const NormalFormEquation& nf, const Rational& rho, int order) {
  const auto mc = laurent_r(nf, order + 1);
  std::vector<ParamCoeff> c;
  c.reserve(mc.size());
  for (const auto& m : mc) c.push_back(to_param_coeff(m));
  const auto run = frobenius_coefficients<ParamCoeff>(c, ParamCoeff(rho), order);
  if (run.obstruction) throw LogRequired(run.obstruction->first, run.obstruction->second.str());
  return StrandSeries<ParamCoeff>::single(rho, run.a);
}

struct FrobeniusPair {
  StrandSeries<ParamCoeff> first;
  StrandSeries<ParamCoeff> second;
  Rational rho1;
  Rational rho2;
  ParamCoeff wronskian;
  bool log_flag = false;
};

/// W = f s' - s f' as a series.
inline StrandSeries<ParamCoeff> wronskian_series(const StrandSeries<ParamCoeff>& f, const StrandSeries<ParamCoeff>& s) {
  return f * s.derivative() - s * f.derivative();
}

/// Builds both solutions; the second is labelled with rho2 whatever the order of the roots.
inline FrobeniusPair frobenius_pair(const NormalFormEquation& nf, const Rational& rho1, const Rational& rho2,
                                    int order) {
  FrobeniusPair p;
  p.rho1 = rho1;
  p.rho2 = rho2;
  p.first = frobenius_series(nf, rho1, order);
  try {
    p.second = frobenius_series(nf, rho2, order);
  } catch (const LogRequired&) {
    p.log_flag = true;
    return p;
  }
  // rho1 + rho2 = 1, so the Wronskian is the x^0 coefficient.
  p.wronskian = wronskian_series(p.first, p.second).coefficient_at(Rational(0));
  return p;
}

/// Rescale the second solution so that W = 1.
inline FrobeniusPair normalize_wronskian(const FrobeniusPair& pair) {
  if (pair.log_flag) throw std::domain_error("normalize_wronskian: logarithmic pair");
  const auto w = pair.wronskian.as_rational();
  if (!w || w->is_zero()) throw InternalError("normalize_wronskian: Wronskian is not a nonzero constant");
  FrobeniusPair out = pair;
  out.second = ParamCoeff(w->inverse()) * pair.second;
  out.wronskian = ParamCoeff(1);
  return out;
}

}  // namespace nonint

#endif  // NONINT_FROBENIUS_HPP
