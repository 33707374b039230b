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

// The sixth order potential family
//   H = (p_r^2 + p_z^2)/2 + r^6 + A r^2 z^4 + D r^3 z^3 + B r^4 z^2 + C z^6
// and its invariant plane r = p_r = 0. One formula source serves both exact
// and floating scalars.

#ifndef NONINT_MODEL_HPP
#define NONINT_MODEL_HPP

#include <algorithm>
#include <cmath>
#include <type_traits>
#include <utility>
#include <vector>

#include "nonint/errors.hpp"
#include "nonint/rational.hpp"

namespace nonint {

struct PotentialParams {
  Rational A, B, C, D;
  Rational h{1};

  Rational H() const { return h.pow(3); }
};

template <class T>
struct PhaseState {
  T r{}, p_r{}, z{}, p_z{};
};

/// Lift an exact rational into the scalar type T.
template <class T>
T from_rational(const Rational& x) {
  if constexpr (std::is_same_v<T, Rational>) {
    return x;
  } else if constexpr (std::is_floating_point_v<T>) {
    return static_cast<T>(x.to_double());
  } else {
    return T(x.numerator().get_str()) / T(x.denominator().get_str());
  }
}

template <class T>
struct Coefficients {
  T A, B, C, D;
  explicit Coefficients(const PotentialParams& p)
      : A(from_rational<T>(p.A)), B(from_rational<T>(p.B)), C(from_rational<T>(p.C)), D(from_rational<T>(p.D)) {}
};

template <class T>
T hamiltonian(const PhaseState<T>& s, const PotentialParams& params) {
  const Coefficients<T> k(params);
  const T r2 = s.r * s.r, z2 = s.z * s.z;
  const T r3 = r2 * s.r, z3 = z2 * s.z;
  const T half = from_rational<T>(Rational(1, 2));
  return half * (s.p_r * s.p_r + s.p_z * s.p_z) + r3 * r3 + k.A * r2 * z2 * z2 + k.D * r3 * z3 +
         k.B * r2 * r2 * z2 + k.C * z3 * z3;
}

template <class T>
PhaseState<T> vector_field(const PhaseState<T>& s, const PotentialParams& params) {
  const Coefficients<T> k(params);
  const T r = s.r, z = s.z;
  const T r2 = r * r, z2 = z * z;
  const T r3 = r2 * r, z3 = z2 * z;
  const T r4 = r2 * r2, z4 = z2 * z2;
  PhaseState<T> d;
  d.r = s.p_r;
  d.p_r = -(T(2) * k.A * r * z4 + T(4) * k.B * r3 * z2 + T(3) * k.D * r2 * z3 + T(6) * r4 * r);
  d.z = s.p_z;
  d.p_z = -(T(4) * k.A * r2 * z3 + T(2) * k.B * r4 * z + T(6) * k.C * z4 * z + T(3) * k.D * r3 * z2);
  return d;
}

/// Residuals of w = z^2 against
///   wdot^2 + 8C (w^4 + h^3 w) = 0  and  wddot + 4C (4 w^3 + h^3) = 0
/// over samples taken on the plane r = p_r = 0.
template <class T>
std::pair<T, T> manifold_residuals(const std::vector<PhaseState<T>>& samples, const PotentialParams& params) {
  if (params.C.is_zero()) throw OutOfScopeError("C = 0: no invariant manifold of the required form");
  using std::abs;
  const T C = from_rational<T>(params.C);
  const T H = from_rational<T>(params.H());
  T first(0), second(0);
  for (const auto& s : samples) {
    const T w = s.z * s.z;
    const T wd = T(2) * s.z * s.p_z;
    const T pzd = vector_field(s, params).p_z;
    const T wdd = T(2) * s.p_z * s.p_z + T(2) * s.z * pzd;
    const T r1 = abs(wd * wd + T(8) * C * (w * w * w * w + H * w));
    const T r2 = abs(wdd + T(4) * C * (T(4) * w * w * w + H));
    if (r1 > first) first = r1;
    if (r2 > second) second = r2;
  }
  return {first, second};
}

}  // namespace nonint

#endif  // NONINT_MODEL_HPP
