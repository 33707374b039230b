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

// nonint: command line front end. Every command prints one JSON report.
// Exit codes: 0 report produced, 2 out of scope, 3 parse or I/O error,
// 4 truncation cap exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nonint/engine.hpp"
#include "nonint/report.hpp"

namespace {

using nonint::Rational;
using nonint::report::json;

constexpr int kExitOk = 0;
constexpr int kExitOutOfScope = 2;
constexpr int kExitParse = 3;
constexpr int kExitCap = 4;
constexpr int kExitInternal = 1;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int fail(const std::string& command, const std::string& kind, const std::string& message, int code,
         const std::string& token = "") {
  json j = nonint::report::envelope(command, json::object());
  j.erase("result");
  j["error"] = {{"kind", kind}, {"message", message}};
  if (!token.empty()) j["error"]["token"] = token;
  emit(j);
  std::cerr << "nonint: " << message << "\n";
  return code;
}

nonint::PotentialParams parse_params(const std::string& a, const std::string& b, const std::string& c,
                                     const std::string& d, const std::string& h) {
  return {Rational::parse(a), Rational::parse(b), Rational::parse(c), Rational::parse(d), Rational::parse(h)};
}

json params_json(const nonint::PotentialParams& p) {
  return {{"A", p.A.str()}, {"B", p.B.str()}, {"C", p.C.str()}, {"D", p.D.str()}, {"h", p.h.str()}};
}

struct CheckArgs {
  std::string A = "0", B = "0", C = "1", D = "0", h = "1";
  bool cross_check = false;
};

int cmd_check(const CheckArgs& a) {
  const auto params = parse_params(a.A, a.B, a.C, a.D, a.h);
  nonint::DecideOptions opt;
  opt.residue_cross_check = a.cross_check;
  const nonint::Verdict v = nonint::decide(params, opt);
  json j = nonint::report::envelope("check", params_json(params));
  j["inputs"]["crossCheck"] = a.cross_check;
  j["result"] = nonint::report::verdict(v);
  j["trace"] = nonint::report::trace(v.trace);
  j["warnings"] = nonint::report::convention_notices();
  emit(j);
  return v.conclusion == nonint::Conclusion::OutOfScope ? kExitOutOfScope : kExitOk;
}

int cmd_legendre(const std::string& p, const std::string& q) {
  const nonint::LegendreParams lp(nonint::report::parse_quad(p), nonint::report::parse_quad(q));
  const auto v = nonint::solvability_verdict(lp);
  json j = nonint::report::envelope("legendre", {{"p", nonint::report::quad(lp.p)}, {"q", nonint::report::quad(lp.q)}});
  j["result"] = nonint::report::solvability(lp, v);
  for (const auto& e : v.evidence)
    j["trace"].push_back({{"step", e.id}, {"summary", e.held ? "condition holds" : "condition fails"},
                          {"fields", {{"witness", e.witness}}}});
  j["warnings"] = json::array({"legendre: conclusions need (i)-(v) to hold together; PossiblySolvable only means "
                               "non-solvability was not shown"});
  emit(j);
  return kExitOk;
}

struct ResidueArgs {
  long k = 0;
  int cap = 0;
  std::string h = "1";
  std::string scale;
};

int cmd_residues(const ResidueArgs& a) {
  nonint::ObstructionConfig cfg = nonint::ObstructionConfig::from_env();
  if (a.cap > 0) cfg.cap = a.cap;
  if (!a.scale.empty()) cfg.zeta12_second_leading = Rational::parse(a.scale);
  const Rational h = Rational::parse(a.h);
  const auto rep = nonint::residue_table(a.k, cfg);
  json inputs = {{"k", a.k}, {"cap", cfg.cap}, {"h", h.str()}};
  inputs["zeta12SecondLeading"] = cfg.zeta12_second_leading ? json(cfg.zeta12_second_leading->str()) : json(nullptr);
  json j = nonint::report::envelope("residues", inputs);
  j["result"] = nonint::report::residues(rep, h.pow(3));
  for (const auto& b : rep.branches)
    j["trace"].push_back({{"step", "branch"},
                          {"summary", "residues of all 16 components"},
                          {"fields", {{"family", nonint::to_string(b.family)}, {"tau", b.tau.str()}}}});
  j["warnings"] = nonint::report::convention_notices();
  emit(j);
  return kExitOk;
}

struct SeriesArgs {
  std::string eq = "ve1-xi12";
  int order = 4;
  std::string tau;
  int root = 1;
};

int cmd_series(const SeriesArgs& a) {
  if (a.root != 1 && a.root != 2) throw nonint::ParseError(std::to_string(a.root), "--root must be 1 or 2");
  if (a.order < 0) throw nonint::ParseError(std::to_string(a.order), "--order must be nonnegative");
  Rational tau(0);
  Rational rho;
  nonint::NormalFormEquation nf;
  if (a.eq == "ve1-xi12") {
    nf = nonint::normal_form(nonint::ve1_at_infinity(nonint::MPoly(0)).xi12);
    rho = a.root == 1 ? Rational(5, 2) : Rational(-3, 2);
  } else if (a.eq == "ve1-xi11") {
    if (a.tau.empty()) throw nonint::ParseError("--tau", "ve1-xi11 needs --tau");
    tau = Rational::parse(a.tau);
    nf = nonint::normal_form(nonint::ve1_at_infinity(nonint::MPoly(tau)).xi11);
    const Rational s = Rational(3, 4) * tau;
    rho = a.root == 1 ? Rational(1, 2) + s : Rational(1, 2) - s;
  } else {
    throw nonint::ParseError(a.eq, "unknown equation '" + a.eq + "' (ve1-xi11, ve1-xi12)");
  }
  json inputs = {{"eq", a.eq}, {"order", a.order}, {"root", a.root}};
  if (a.eq == "ve1-xi11") inputs["tau"] = tau.str();
  json j = nonint::report::envelope("series", inputs);
  j["result"]["r"] = nf.r.str("x");
  j["result"]["rho"] = rho.str();
  try {
    const auto s = nonint::frobenius_series(nf, rho, a.order);
    j["result"]["series"] = nonint::report::series(s);
    j["result"]["logRequired"] = false;
  } catch (const nonint::LogRequired& e) {
    j["result"]["logRequired"] = true;
    j["result"]["obstruction"] = {{"step", e.step()}, {"value", e.obstruction()}};
  }
  j["warnings"] = nonint::report::convention_notices();
  emit(j);
  return kExitOk;
}

struct ValidateArgs {
  std::string eq = "r2";
  std::string tau = "-14/3";
  std::string h = "1";
  std::string window = "0.01:0.1";
  double tol = 1e-24;
  unsigned bits = 160;
  int order = 40;
};

int cmd_validate(const ValidateArgs& a) {
  const auto colon = a.window.find(':');
  if (colon == std::string::npos) throw nonint::ParseError(a.window, "window must look like lo:hi");
  double lo = 0, hi = 0;
  try {
    lo = std::stod(a.window.substr(0, colon));
    hi = std::stod(a.window.substr(colon + 1));
  } catch (const std::exception&) {
    throw nonint::ParseError(a.window, "window bounds must be numbers: '" + a.window + "'");
  }
  const Rational h = Rational::parse(a.h);
  if (h.is_zero()) throw nonint::OutOfScopeError("h = 0: the plane solution degenerates");
  nonint::NormalFormEquation nf;
  Rational r1, r2;
  json inputs = {{"eq", a.eq}, {"h", h.str()}, {"window", {lo, hi}}, {"tol", a.tol}, {"bits", a.bits},
                 {"order", a.order}};
  if (a.eq == "r2") {
    nf = nonint::normal_form(nonint::ve1_at_infinity(nonint::MPoly(0)).xi12);
    r1 = Rational(5, 2);
    r2 = Rational(-3, 2);
  } else if (a.eq == "r1") {
    const Rational tau = Rational::parse(a.tau);
    inputs["tau"] = tau.str();
    nf = nonint::normal_form(nonint::ve1_at_infinity(nonint::MPoly(tau)).xi11);
    r1 = Rational(1, 2) + Rational(3, 4) * tau;
    r2 = Rational(1, 2) - Rational(3, 4) * tau;
  } else {
    throw nonint::ParseError(a.eq, "unknown equation '" + a.eq + "' (r1, r2)");
  }
  const auto pair = nonint::frobenius_pair(nf, r1, r2, a.order);
  if (pair.log_flag) throw nonint::OutOfScopeError("the pair needs a logarithmic solution at this tau");
  const auto normalized = nonint::normalize_wronskian(pair);
  nonint::IntegrationConfig cfg;
  cfg.rel_tol = cfg.abs_tol = a.tol;
  cfg.precision_bits = a.bits;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw nonint::ParseError(std::to_string(a.tol), e.what());
  }
  const auto rep = nonint::validate_pair(nf, normalized, lo, hi, h.pow(3), cfg);
  json j = nonint::report::envelope("validate", inputs);
  j["result"] = nonint::report::validation(rep);
  j["trace"].push_back({{"step", "series"},
                        {"summary", "Frobenius pair normalized to W = 1"},
                        {"fields", {{"rho1", r1.str()}, {"rho2", r2.str()}}}});
  emit(j);
  return kExitOk;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
    while (!cell.empty() && cell.front() == ' ') cell.erase(0, 1);
    out.push_back(cell);
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

// Input: header row naming A, B, C, D (any order, extra columns kept).
// Output: the input columns followed by conclusion, rule.
int cmd_sweep(const std::string& in_path, const std::string& out_path) {
  std::ifstream in(in_path);
  if (!in) throw nonint::ParseError(in_path, "cannot open input file '" + in_path + "'");
  std::string header_line;
  if (!std::getline(in, header_line)) throw nonint::ParseError(in_path, "input file is empty");
  while (!header_line.empty() && header_line.back() == '\r') header_line.pop_back();
  const auto header = split_csv_line(header_line);
  int col[4] = {-1, -1, -1, -1};
  const char* names[4] = {"A", "B", "C", "D"};
  for (std::size_t i = 0; i < header.size(); ++i)
    for (int n = 0; n < 4; ++n)
      if (header[i] == names[n]) col[n] = static_cast<int>(i);
  for (int n = 0; n < 4; ++n)
    if (col[n] < 0) throw nonint::ParseError(names[n], std::string("header lacks column ") + names[n]);

  std::ofstream out(out_path);
  if (!out) throw nonint::ParseError(out_path, "cannot open output file '" + out_path + "'");
  out << header_line << ",conclusion,rule\n";
  std::string line;
  int row = 1;
  long counts[3] = {0, 0, 0};
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    const auto cells = split_csv_line(line);
    Rational v[4];
    for (int n = 0; n < 4; ++n) {
      const std::size_t c = static_cast<std::size_t>(col[n]);
      if (c >= cells.size())
        throw nonint::ParseError(names[n], "row " + std::to_string(row) + ": missing column " + names[n]);
      try {
        v[n] = Rational::parse(cells[c]);
      } catch (const nonint::ParseError& e) {
        throw nonint::ParseError(cells[c], "row " + std::to_string(row) + ", column " + names[n] + ": " + e.what());
      }
    }
    const auto verdict = nonint::decide({v[0], v[1], v[2], v[3], Rational(1)});
    ++counts[static_cast<int>(verdict.conclusion)];
    std::string l = line;
    while (!l.empty() && l.back() == '\r') l.pop_back();
    out << l << "," << nonint::to_string(verdict.conclusion) << ","
        << (verdict.rule ? nonint::to_string(*verdict.rule) : "") << "\n";
  }
  json j = nonint::report::envelope("sweep", {{"in", in_path}, {"out", out_path}});
  j["result"] = {{"rows", counts[0] + counts[1] + counts[2]},
                 {"nonIntegrable", counts[0]},
                 {"inconclusive", counts[1]},
                 {"outOfScope", counts[2]}};
  emit(j);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact non-integrability checks for a sixth order potential family"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "decide non-integrability for (A, B, C, D)");
  c->add_option("--A", check.A, "coefficient of r^2 z^4");
  c->add_option("--B", check.B, "coefficient of r^4 z^2");
  c->add_option("--C", check.C, "coefficient of z^6");
  c->add_option("--D", check.D, "coefficient of r^3 z^3");
  c->add_option("--h", check.h, "manifold constant h (H = h^3)");
  c->add_flag("--cross-check", check.cross_check, "recompute residues for resonant tau");

  std::string lp = "0", lq = "0";
  auto* l = app.add_subcommand("legendre", "solvability test for the associated Legendre equation");
  l->add_option("--p", lp, "p: rational or surd such as sqrt(2), -sqrt(3/5), 2/3*sqrt(7)")->required();
  l->add_option("--q", lq, "q: rational or surd")->required();

  ResidueArgs res;
  auto* r = app.add_subcommand("residues", "residue table of X^-1 f2 at resonant tau for index k");
  r->add_option("--k", res.k, "family index k")->required();
  r->add_option("--cap", res.cap, "truncation cap (overrides NONINT_TRUNCATION_CAP)");
  r->add_option("--h", res.h, "h used for the numeric columns");
  r->add_option("--scale-zeta12", res.scale, "leading coefficient of zeta12(2), e.g. -144");

  SeriesArgs ser;
  auto* s = app.add_subcommand("series", "Frobenius series at x = 0");
  s->add_option("--eq", ser.eq, "ve1-xi11 or ve1-xi12");
  s->add_option("--order", ser.order, "number of x^3 steps");
  s->add_option("--tau", ser.tau, "tau for ve1-xi11");
  s->add_option("--root", ser.root, "1 or 2");

  ValidateArgs val;
  auto* v = app.add_subcommand("validate", "series versus ODE check of a Frobenius pair");
  v->add_option("--eq", val.eq, "r1 or r2");
  v->add_option("--tau", val.tau, "tau for r1");
  v->add_option("--h", val.h, "manifold constant h");
  v->add_option("--window", val.window, "lo:hi");
  v->add_option("--tol", val.tol, "relative and absolute tolerance");
  v->add_option("--bits", val.bits, "MPFR precision in bits");
  v->add_option("--order", val.order, "series steps");

  std::string in_path, out_path;
  auto* w = app.add_subcommand("sweep", "decide every row of a CSV file with columns A,B,C,D");
  w->add_option("--in", in_path, "input CSV")->required();
  w->add_option("--out", out_path, "output CSV")->required();

  std::string command = "unknown";
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    if (!app.get_subcommands().empty()) command = app.get_subcommands().front()->get_name();
    return fail(command, "ParseError", e.what(), kExitParse);
  }
  command = app.get_subcommands().front()->get_name();
  try {
    if (*c) return cmd_check(check);
    if (*l) return cmd_legendre(lp, lq);
    if (*r) return cmd_residues(res);
    if (*s) return cmd_series(ser);
    if (*v) return cmd_validate(val);
    if (*w) return cmd_sweep(in_path, out_path);
  } catch (const nonint::ParseError& e) {
    return fail(command, "ParseError", e.what(), kExitParse, e.token());
  } catch (const nonint::OutOfScopeError& e) {
    return fail(command, "OutOfScope", e.what(), kExitOutOfScope);
  } catch (const nonint::TruncationCapExceeded& e) {
    return fail(command, "TruncationCapExceeded", e.what(), kExitCap);
  } catch (const std::exception& e) {
    return fail(command, "InternalError", e.what(), kExitInternal);
  }
  return kExitInternal;
}
