// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// hypersplit verify --config run.toml --out report.json --csv table.csv
// hypersplit eval ff|g|classical ...

#include <cmath>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hypersplit/classical.hpp"
#include "hypersplit/errors.hpp"
#include "hypersplit/ffhyper.hpp"
#include "hypersplit/gfunction.hpp"
#include "hypersplit/harness.hpp"

using namespace hypersplit;

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

std::vector<Rational> rational_list(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& t : split_list(s)) out.push_back(parse_rational(t));
  return out;
}

FieldPtr field_for(long long q) {
  if (q < 3) fail(ErrorKind::ConfigParse, "--q must be an odd prime power");
  auto f = prime_factors(static_cast<std::uint64_t>(q));
  if (f.size() != 1 || f[0] == 2) fail(ErrorKind::ConfigParse, "--q must be an odd prime power");
  unsigned r = 0;
  for (long long x = q; x > 1; x /= static_cast<long long>(f[0])) ++r;
  return FiniteField::make(static_cast<std::uint32_t>(f[0]), r);
}

// eps, phi, chi<n> (chi_n = T^{(q-1)/n}), T^k, or a bare exponent k.
long long character_exponent(const std::string& tok, std::uint64_t q) {
  const long long q1 = static_cast<long long>(q - 1);
  auto order = [&](long long n) {
    if (n <= 0 || q1 % n != 0)
      fail(ErrorKind::ConfigParse, "no character of order " + std::to_string(n) + " on F_" + std::to_string(q));
    return q1 / n;
  };
  if (tok == "eps") return 0;
  if (tok == "phi") return order(2);
  if (tok.rfind("chi", 0) == 0) return order(std::stoll(tok.substr(3)));
  if (tok.rfind("T^", 0) == 0) return std::stoll(tok.substr(2));
  Rational x = parse_rational(tok);
  if (x.get_den() != 1) fail(ErrorKind::ConfigParse, "character '" + tok + "' is not an exponent");
  return to_int64(x.get_num());
}

// A rational reduced mod p, or g^k for a power of the field generator.
FieldElement field_element(const std::string& tok, const FiniteField& F) {
  if (tok.rfind("g^", 0) == 0) return F.exp(std::stoll(tok.substr(2)));
  Rational x = parse_rational(tok);
  if (valuation(x, F.p()) < 0) fail(ErrorKind::NotPIntegral, "lambda has p in its denominator");
  return F.from_int(static_cast<long long>(residue(x, F.p())));
}

std::string real_text(const BigReal& x, unsigned digits) {
  BigReal r = round(x);
  if (abs(x - r) < pow(BigReal(10), -static_cast<int>(digits))) {
    std::string s = r.str(0, std::ios_base::fmtflags(0));
    return s == "-0" ? "0" : s;
  }
  return to_decimal(x, digits);
}

struct EvalArgs {
  std::string top, bottom, a, b, lambda = "1", z;
  long long q = 0;
  unsigned prec = 0;
  bool padic = false;
};

int eval_ff(const EvalArgs& e) {
  FieldPtr F = field_for(e.q);
  auto T = CharacterTables::get(F);
  FFHyperParams params;
  for (const auto& t : split_list(e.top)) params.top.push_back(character_exponent(t, F->q()));
  for (const auto& t : split_list(e.bottom)) params.bottom.push_back(character_exponent(t, F->q()));
  params.generalized = params.top.size() != params.bottom.size();
  std::cout << ff_hyper(*T, params, field_element(e.lambda, *F)).to_string() << "\n";
  return 0;
}

int eval_g(const EvalArgs& e) {
  FieldPtr F = field_for(e.q);
  const unsigned M = e.prec ? e.prec : 6;
  GParams params{rational_list(e.a), rational_list(e.b)};
  UnramifiedPAdic v = g_eval_unramified(params, field_element(e.lambda, *F), F, M);
  if (!v.in_Zp()) {
    std::cout << v.to_string() << "\n";
    return 0;
  }
  PAdic x = v.to_padic();
  if (e.padic || (!x.is_zero() && x.valuation() < 0)) std::cout << x.to_string() << "\n";
  else std::cout << x.symmetric_lift(M) << "\n";
  return 0;
}

int eval_classical(const EvalArgs& e) {
  const unsigned prec = e.prec ? e.prec : 30;
  PrecisionScope scope(prec + 10);
  auto parts = split_list(e.z);
  BigComplex z(parse_big(parts.at(0)), parts.size() > 1 ? parse_big(parts[1]) : BigReal(0));
  BigComplex v = mfm_series(rational_list(e.top), rational_list(e.bottom), z, prec);
  if (abs(v.im) < pow(BigReal(10), -static_cast<int>(prec))) std::cout << real_text(v.re, prec) << "\n";
  else std::cout << to_decimal(v, prec) << "\n";
  return 0;
}

int verify(const std::string& config_path, const std::string& out, const std::string& csv, bool timing) {
  RunConfig cfg = load_config(config_path);
  RunOptions opts;
  opts.workers = workers_from_env();
  opts.timing = timing;
  Report report = run_verification(cfg, opts);
  auto write = [](const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) fail(ErrorKind::ConfigParse, "cannot write " + path);
    f << text;
  };
  if (!out.empty()) write(out, report_json(report, timing));
  if (!csv.empty()) write(csv, report_csv(report));
  std::cerr << "hypersplit: " << report.records.size() << " cases, " << report.count(CaseStatus::Pass) << " pass, "
            << report.count(CaseStatus::Fail) << " fail, " << report.count(CaseStatus::Error) << " error, "
            << report.count(CaseStatus::NotApplicable) << " n/a\n";
  for (const auto& r : report.records)
    if (r.status == CaseStatus::Fail || r.status == CaseStatus::Error)
      std::cerr << "  " << status_name(r.status) << ": " << r.case_id << " q=" << r.q_or_p << " " << r.inputs
                << (r.note.empty() ? "" : " (" + r.note + ")") << (r.gating ? "" : " [report-only]") << "\n";
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-field, p-adic and classical hypergeometric splitting verifier"};
  app.require_subcommand(1);

  std::string config, out, csv;
  bool timing = false;
  auto* ver = app.add_subcommand("verify", "run the campaigns in a TOML config");
  ver->add_option("--config", config, "TOML run configuration")->required()->check(CLI::ExistingFile);
  ver->add_option("--out", out, "JSON report path");
  ver->add_option("--csv", csv, "CSV table path");
  ver->add_flag("--timing", timing, "record per-case wall time in the JSON report");

  auto* ev = app.add_subcommand("eval", "evaluate a single function value");
  ev->require_subcommand(1);
  EvalArgs e;
  auto* ff = ev->add_subcommand("ff", "finite-field mFm; characters as eps, phi, chiN, T^k or k");
  ff->add_option("--top", e.top)->required();
  ff->add_option("--bottom", e.bottom)->required();
  ff->add_option("--lambda", e.lambda, "rational or g^k");
  ff->add_option("--q", e.q)->required();
  auto* g = ev->add_subcommand("g", "p-adic G over Z_p (or Z_q)");
  g->add_option("--a", e.a)->required();
  g->add_option("--b", e.b)->required();
  g->add_option("--lambda", e.lambda, "rational or g^k");
  g->add_option("--q", e.q)->required();
  g->add_option("--prec", e.prec, "p-adic precision M (default 6)");
  g->add_flag("--padic", e.padic, "print the p-adic expansion instead of the symmetric lift");
  auto* cl = ev->add_subcommand("classical", "classical mFm without the 1/k! factor");
  cl->add_option("--top", e.top)->required();
  cl->add_option("--bottom", e.bottom)->required();
  cl->add_option("--z", e.z, "real, or re,im")->required();
  cl->add_option("--prec", e.prec, "decimal digits (default 30)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int rc = app.exit(err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*ver) return verify(config, out, csv, timing);
    if (*ff) return eval_ff(e);
    if (*g) return eval_g(e);
    if (*cl) return eval_classical(e);
  } catch (const Error& err) {
    std::cerr << "hypersplit: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "hypersplit: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
