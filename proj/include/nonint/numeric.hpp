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

// Floating point cross-checks in MPFR precision: an adaptive Runge-Kutta-Fehlberg
// 7(8) integrator and series-versus-ODE validation of Frobenius pairs.

#ifndef NONINT_NUMERIC_HPP
#define NONINT_NUMERIC_HPP

#include <boost/multiprecision/mpfr.hpp>
#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nonint/frobenius.hpp"
#include "nonint/model.hpp"
#include "nonint/variational.hpp"

namespace nonint {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

}  // namespace nonint

// odeint cannot see through the variable precision backend on its own.
namespace boost::numeric::odeint::detail {
template <>
struct extract_value_type<nonint::Real, void> {
  using type = nonint::Real;
};
}  // namespace boost::numeric::odeint::detail

namespace nonint {

/// Sets the default MPFR precision for the lifetime of the object.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits) : previous_(Real::default_precision()) {
    Real::default_precision(static_cast<unsigned>(std::ceil(bits * 0.30103)) + 1);
  }
  ~PrecisionScope() { Real::default_precision(previous_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned previous_;
};

struct IntegrationConfig {
  double rel_tol = 1e-12;
  double abs_tol = 1e-12;
  long max_steps = 2'000'000;
  unsigned precision_bits = 128;

  void validate() const {
    auto ok = [](double t) { return t > 0.0 && t <= 1e-6; };
    if (!ok(rel_tol) || !ok(abs_tol)) throw std::invalid_argument("tolerances must lie in (0, 1e-6]");
    if (precision_bits < 80) throw std::invalid_argument("precision must be at least 80 bits");
    if (max_steps <= 0) throw std::invalid_argument("max_steps must be positive");
  }
};

class StepLimitExceeded : public std::runtime_error {
 public:
  explicit StepLimitExceeded(long steps)
      : std::runtime_error("integration exceeded " + std::to_string(steps) + " steps") {}
};

class StepUnderflow : public std::runtime_error {
 public:
  explicit StepUnderflow(double t)
      : std::runtime_error("step size underflow near t = " + to_str(t)), t_(t) {}
  double location() const noexcept { return t_; }

 private:
  static std::string to_str(double t) {
    std::ostringstream os;
    os.precision(17);
    os << t;
    return os.str();
  }
  double t_;
};

using State = std::vector<Real>;
using System = std::function<void(const State&, State&, const Real&)>;

struct Trajectory {
  std::vector<Real> times;
  std::vector<State> states;
  long steps = 0;
  long rejected = 0;
};

/// Integrates from t0 through every output time (ascending, >= t0). Call
/// inside a PrecisionScope to control precision.
inline Trajectory integrate(const System& system, State state, const Real& t0, const std::vector<Real>& output_times,
                            const IntegrationConfig& cfg) {
  namespace ode = boost::numeric::odeint;
  cfg.validate();
  auto stepper = ode::make_controlled(Real(cfg.abs_tol), Real(cfg.rel_tol),
                                      ode::runge_kutta_fehlberg78<State, Real, State, Real>());
  Trajectory tr;
  Real t = t0;
  Real dt = output_times.empty() ? Real(0) : (output_times.back() - t0) / 100;
  const Real tiny = ldexp(Real(1), -static_cast<int>(cfg.precision_bits) + 16);
  for (const Real& target : output_times) {
    if (target < t) throw std::invalid_argument("output times must be ascending and not before t0");
    while (t < target) {
      if (t + dt > target) dt = target - t;
      const auto res = stepper.try_step(system, state, t, dt);
      if (res == ode::success) {
        if (++tr.steps > cfg.max_steps) throw StepLimitExceeded(cfg.max_steps);
      } else {
        ++tr.rejected;
        if (dt < tiny * (1 + abs(t))) throw StepUnderflow(t.convert_to<double>());
      }
    }
    tr.times.push_back(t);
    tr.states.push_back(state);
  }
  return tr;
}

// ---------------------------------------------------------------------------

/// r(x) as a Real function for numeric H; r must be free of tau.
class RealFunction {
 public:
  RealFunction(const FactoredFunction& f, const Real& H) : f_(f), H_(H) {
    for (const auto& c : f.numerator().coefficients()) {
      if (c.has_tau()) throw std::invalid_argument("RealFunction: coefficient still depends on tau");
      coeffs_.push_back(c.evaluate(H, Real(0), [](const Rational& q) { return from_rational<Real>(q); }));
    }
  }
  Real operator()(const Real& x) const {
    Real n(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) n = n * x + coeffs_[i];
    const Real c = f_.cubic() == Cubic::X ? H_ * x * x * x + 1 : x * x * x + H_;
    return n * pow(x, f_.v_power()) * pow(c, f_.cubic_power());
  }

 private:
  FactoredFunction f_;
  Real H_;
  std::vector<Real> coeffs_;
};

struct SeriesValue {
  Real value;
  Real derivative;
};

inline SeriesValue evaluate_series(const StrandSeries<ParamCoeff>& s, const Real& x, const Real& H) {
  auto coeff = [&H](const ParamCoeff& c) {
    return c.evaluate(H, Real(0), [](const Rational& q) { return from_rational<Real>(q); });
  };
  auto power = [&x](const Rational& e) { return pow(x, from_rational<Real>(e)); };
  return {s.evaluate<Real>(power, coeff), s.derivative().evaluate<Real>(power, coeff)};
}

struct ValidationReport {
  std::vector<double> max_rel_deviation;  // one per solution
  double wronskian_deviation = 0.0;       // max |W_numeric - W_exact|
  int samples = 0;
  long steps = 0;
};

/// Seeds zeta'' = r zeta at x_lo from each series, integrates across the window
/// and compares with the series at `samples` evenly spaced points.
inline ValidationReport validate_pair(const NormalFormEquation& nf, const FrobeniusPair& pair, double x_lo,
                                      double x_hi, const Rational& H, const IntegrationConfig& cfg,
                                      int samples = 20) {
  cfg.validate();
  if (!(x_lo > 0.0 && x_lo < x_hi)) throw std::invalid_argument("validation window needs 0 < x_lo < x_hi");
  if (nf.r.cubic() != Cubic::X) throw std::invalid_argument("validation works in the variable at infinity");
  if (pair.log_flag) throw std::invalid_argument("validation needs a log-free pair");
  const double hd = H.to_double();
  if (hd != 0.0) {
    const double root = -std::cbrt(1.0 / hd);  // real zero of H x^3 + 1
    if (root >= x_lo && root <= x_hi) throw std::domain_error("validation window touches a singularity of r");
    const double margin = std::min(std::abs(hd * x_lo * x_lo * x_lo + 1), std::abs(hd * x_hi * x_hi * x_hi + 1));
    if (margin < 1e-6) throw std::domain_error("validation window touches a singularity of r");
  }
  PrecisionScope scope(cfg.precision_bits);
  const Real Hr = from_rational<Real>(H);
  const RealFunction r(nf.r, Hr);
  const System sys = [&r](const State& s, State& d, const Real& x) {
    d[0] = s[1];
    d[1] = r(x) * s[0];
  };
  const Real lo(x_lo), hi(x_hi);
  std::vector<Real> ts;
  for (int i = 1; i <= samples; ++i) ts.push_back(lo + (hi - lo) * i / samples);

  ValidationReport rep;
  rep.samples = samples;
  std::vector<Trajectory> runs;
  for (const auto* s : {&pair.first, &pair.second}) {
    const SeriesValue seed = evaluate_series(*s, lo, Hr);
    Trajectory tr = integrate(sys, State{seed.value, seed.derivative}, lo, ts, cfg);
    Real worst(0);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const SeriesValue ref = evaluate_series(*s, ts[i], Hr);
      const Real dev = abs(tr.states[i][0] - ref.value) / abs(ref.value);
      if (dev > worst) worst = dev;
    }
    rep.max_rel_deviation.push_back(worst.convert_to<double>());
    rep.steps += tr.steps;
    runs.push_back(std::move(tr));
  }
  const auto w_exact = pair.wronskian.as_rational();
  const Real w_ref = w_exact ? from_rational<Real>(*w_exact) : Real(0);
  Real worst_w(0);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const State& f = runs[0].states[i];
    const State& g = runs[1].states[i];
    const Real w = f[0] * g[1] - g[0] * f[1];
    worst_w = std::max(worst_w, Real(abs(w - w_ref)));
  }
  rep.wronskian_deviation = worst_w.convert_to<double>();
  return rep;
}

}  // namespace nonint

#endif  // NONINT_NUMERIC_HPP
