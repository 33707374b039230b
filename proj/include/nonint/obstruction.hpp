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

// Residues of the components of X^-1 f2 at x = 0. A nonzero coefficient of
// x^-1 forces a logarithm into the second variational equations.
//
// With W = 1 for both blocks, X^-1 = diag([[s', -s], [-f', f]]) and the forcing
// vector is (0, K1, 0, K2), so the four components are
//   -zeta11^(2) K1,  +zeta11^(1) K1,  -zeta12^(2) K2,  +zeta12^(1) K2.

#ifndef NONINT_OBSTRUCTION_HPP
#define NONINT_OBSTRUCTION_HPP

#include <array>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "nonint/errors.hpp"
#include "nonint/exactnum.hpp"
#include "nonint/frobenius.hpp"
#include "nonint/series.hpp"
#include "nonint/variational.hpp"

namespace nonint {

using Series = StrandSeries<ParamCoeff>;

enum class ComponentRow {
  MinusZeta11SecondK1,  // -zeta11^(2) K1
  PlusZeta11FirstK1,    // +zeta11^(1) K1
  MinusZeta12SecondK2,  // -zeta12^(2) K2
  PlusZeta12FirstK2,    // +zeta12^(1) K2
};

inline constexpr std::array<ComponentRow, 4> kAllRows{ComponentRow::MinusZeta11SecondK1,
                                                       ComponentRow::PlusZeta11FirstK1,
                                                       ComponentRow::MinusZeta12SecondK2,
                                                       ComponentRow::PlusZeta12FirstK2};

inline std::string to_string(ComponentRow r) {
  switch (r) {
    case ComponentRow::MinusZeta11SecondK1: return "-zeta11(2)*K1";
    case ComponentRow::PlusZeta11FirstK1: return "+zeta11(1)*K1";
    case ComponentRow::MinusZeta12SecondK2: return "-zeta12(2)*K2";
    case ComponentRow::PlusZeta12FirstK2: return "+zeta12(1)*K2";
  }
  return "?";
}

/// Row of X^-1 f2 and the pair (zeta11^(i), zeta12^(j)) fed to the sources.
struct ComponentSelector {
  ComponentRow row;
  int i;  // 1 or 2
  int j;  // 1 or 2

  friend bool operator==(const ComponentSelector&, const ComponentSelector&) = default;
  std::string str() const {
    return to_string(row) + "(zeta11(" + std::to_string(i) + "), zeta12(" + std::to_string(j) + "))";
  }
};

inline std::vector<ComponentSelector> all_components() {
  std::vector<ComponentSelector> out;
  for (ComponentRow r : kAllRows)
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) out.push_back({r, i, j});
  return out;
}

struct ObstructionConfig {
  int cap = 200;
  /// Leading coefficient for zeta12^(2); zeta12^(1) is rescaled so W stays 1.
  std::optional<Rational> zeta12_second_leading;

  /// Default config with the cap taken from NONINT_TRUNCATION_CAP when set.
  static ObstructionConfig from_env() {
    ObstructionConfig c;
    if (const char* s = std::getenv("NONINT_TRUNCATION_CAP")) {
      char* end = nullptr;
      const long v = std::strtol(s, &end, 10);
      if (end != s && *end == '\0' && v > 0 && v < 1000000) c.cap = static_cast<int>(v);
    }
    return c;
  }
};

/// Both normalized fundamental pairs at infinity for a rational tau.
struct FundamentalSystem {
  Rational tau;
  int order = 0;
  FrobeniusPair zeta11;  // rho = 1/2 + 3tau/4, 1/2 - 3tau/4
  FrobeniusPair zeta12;  // rho = 5/2, -3/2
  Series prefactor;      // x^(-3/2) (H x^3 + 1)^(-3/4)
};

inline Series prefactor_series(int order) {
  std::vector<ParamCoeff> a;
  for (int n = 0; n <= order; ++n) a.push_back(ParamCoeff::H_power(binomial(Rational(-3, 4), n), static_cast<std::size_t>(n)));
  return Series::single(Rational(-3, 2), a);
}

/// Steps needed so that every bilinear component is exact through x^-1.
inline int required_order(const Rational& tau) {
  const Rational r11 = (Rational(3, 4) * tau).abs();
  const Rational lowest = std::min(Rational(1, 2) - r11, Rational(-3, 2));
  const Rational s = Rational(3) * lowest - Rational(3, 2);
  const Rational need = (Rational(-1) - s) / Rational(3);
  const long n = Rational(need.floor(), mpz_class(1)).to_long().value_or(0) + 2;
  return static_cast<int>(std::max(1L, n));
}

inline FundamentalSystem fundamental_system(const Rational& tau, const ObstructionConfig& cfg) {
  const int order = required_order(tau);
  if (order > cfg.cap) throw TruncationCapExceeded(order, cfg.cap);
  const auto ops = ve1_at_infinity(MPoly(tau));
  const NormalFormEquation nf11 = normal_form(ops.xi11);
  const NormalFormEquation nf12 = normal_form(ops.xi12);
  FundamentalSystem fs;
  fs.tau = tau;
  fs.order = order;
  const Rational s = Rational(3, 4) * tau;
  FrobeniusPair p11 = frobenius_pair(nf11, Rational(1, 2) + s, Rational(1, 2) - s, order);
  FrobeniusPair p12 = frobenius_pair(nf12, Rational(5, 2), Rational(-3, 2), order);
  if (p11.log_flag || p12.log_flag) throw InternalError("first variational equations are logarithmic at this tau");
  fs.zeta11 = normalize_wronskian(p11);
  if (cfg.zeta12_second_leading) {
    const Rational lead = *cfg.zeta12_second_leading;
    const Rational w = *p12.wronskian.as_rational();
    fs.zeta12 = p12;
    fs.zeta12.second = ParamCoeff(lead) * p12.second;
    fs.zeta12.first = ParamCoeff((lead * w).inverse()) * p12.first;
    fs.zeta12.wronskian = ParamCoeff(1);
  } else {
    fs.zeta12 = normalize_wronskian(p12);
  }
  fs.prefactor = prefactor_series(order);
  return fs;
}

/// The four component series of X^-1 f2 for the source arguments (zeta11^(i), zeta12^(j)).
inline std::array<Series, 4> inverse_fundamental_rows(const FundamentalSystem& fs, int i, int j) {
  if (!(fs.zeta11.wronskian == ParamCoeff(1)) || !(fs.zeta12.wronskian == ParamCoeff(1)))
    throw std::domain_error("inverse_fundamental_rows: pairs must have W = 1");
  const SourcePair src = build_sources(fs.tau);
  const Series& z11 = i == 1 ? fs.zeta11.first : fs.zeta11.second;
  const Series& z12 = j == 1 ? fs.zeta12.first : fs.zeta12.second;
  const Series z11sq = z11 * z11;
  const Series k1 = fs.prefactor * (src.k1.zeta11_zeta12 * (z11 * z12) + src.k1.zeta11_sq * z11sq);
  const Series k2 = fs.prefactor * (src.k2.zeta11_sq * z11sq + src.k2.zeta12_sq * (z12 * z12));
  return {-(fs.zeta11.second * k1), fs.zeta11.first * k1, -(fs.zeta12.second * k2), fs.zeta12.first * k2};
}

struct ResidueEntry {
  ComponentSelector selector;
  ParamCoeff residue;
};

struct BranchResidues {
  Family family;
  long k;
  Rational tau;
  std::vector<ResidueEntry> entries;
};

inline BranchResidues residues_for_tau(const Rational& tau, Family family, long k, const ObstructionConfig& cfg) {
  const FundamentalSystem fs = fundamental_system(tau, cfg);
  BranchResidues out{family, k, tau, {}};
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      const auto rows = inverse_fundamental_rows(fs, i, j);
      for (std::size_t r = 0; r < 4; ++r) out.entries.push_back({{kAllRows[r], i, j}, rows[r].residue()});
    }
  }
  return out;
}

inline ParamCoeff residue_of(const ComponentSelector& sel, long k, Family family,
                             const ObstructionConfig& cfg = ObstructionConfig::from_env()) {
  const BranchResidues b = residues_for_tau(family_tau(k, family), family, k, cfg);
  for (const auto& e : b.entries)
    if (e.selector == sel) return e.residue;
  throw InternalError("residue_of: unknown component");
}

struct ResidueReport {
  long k = 0;
  std::vector<BranchResidues> branches;  // family -2k+4/3 then 2k+2/3
  bool any_nonzero_without_d = false;    // some residue has a nonzero d-free part
  bool nonzero_requires_d = false;       // all d-free parts vanish, some d part does not

  std::vector<ResidueEntry> nonzero() const {
    std::vector<ResidueEntry> out;
    for (const auto& b : branches)
      for (const auto& e : b.entries)
        if (!e.residue.is_zero()) out.push_back(e);
    return out;
  }
};

inline ResidueReport residue_table(long k, const ObstructionConfig& cfg = ObstructionConfig::from_env()) {
  ResidueReport rep;
  rep.k = k;
  bool any_d = false;
  for (Family f : {Family::MinusTwoKPlusFourThirds, Family::TwoKPlusTwoThirds}) {
    rep.branches.push_back(residues_for_tau(family_tau(k, f), f, k, cfg));
    for (const auto& e : rep.branches.back().entries) {
      if (!e.residue.d_free().is_zero()) rep.any_nonzero_without_d = true;
      if (!e.residue.d_part().is_zero()) any_d = true;
    }
  }
  rep.nonzero_requires_d = !rep.any_nonzero_without_d && any_d;
  return rep;
}

}  // namespace nonint

#endif  // NONINT_OBSTRUCTION_HPP
