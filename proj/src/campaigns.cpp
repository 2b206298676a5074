// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// Identity registry and campaign planners.  Each planner expands a
// [case.<id>] table into independent tasks.  All random draws happen while
// planning; tasks only compute.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hypersplit/charsum.hpp"
#include "hypersplit/classical.hpp"
#include "hypersplit/errors.hpp"
#include "hypersplit/ffhyper.hpp"
#include "hypersplit/gfunction.hpp"
#include "hypersplit/harness.hpp"
#include "hypersplit/oracles.hpp"
#include "hypersplit/padic.hpp"

namespace hypersplit {
namespace {

// ----------------------------------------------------------------------------
// Shared helpers

struct PrimePower {
  std::uint64_t p = 0;
  unsigned r = 0;
  std::uint64_t q = 0;
};

PrimePower prime_power(long long q) {
  if (q < 3) fail(ErrorKind::ConfigParse, "q must be an odd prime power, got " + std::to_string(q));
  auto f = prime_factors(static_cast<std::uint64_t>(q));
  if (f.size() != 1 || f[0] == 2)
    fail(ErrorKind::ConfigParse, "q must be an odd prime power, got " + std::to_string(q));
  PrimePower out{f[0], 0, static_cast<std::uint64_t>(q)};
  for (std::uint64_t x = out.q; x > 1; x /= out.p) ++out.r;
  return out;
}

std::uint64_t odd_prime(long long p) {
  auto pp = prime_power(p);
  if (pp.r != 1) fail(ErrorKind::ConfigParse, std::to_string(p) + " is not prime");
  return pp.p;
}

Rational R(long num, long den = 1) { return make_rational(num, den); }

std::string str(const Rational& x) { return to_string(x); }
std::string str(const Integer& x) { return to_string(x); }

template <class T, class F>
std::string join(const std::vector<T>& v, F f) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + f(v[i]);
  return s + "]";
}

std::string rats(const std::vector<Rational>& v) {
  return join(v, [](const Rational& x) { return str(x); });
}

std::string ints(const std::vector<long long>& v) {
  return join(v, [](long long x) { return std::to_string(x); });
}

std::string elem(const FiniteField& F, FieldElement x) {
  if (x.is_zero()) return "0";
  if (F.r() == 1) return std::to_string(F.coeffs(x)[0]);
  return "g^" + std::to_string(F.dlog(x));
}

FieldElement reduce(const FiniteField& F, const Rational& x) {
  return F.from_int(static_cast<long long>(residue(x, F.p())));
}

// Distinct indices from [0, n), at most k of them, in draw order.
std::vector<std::size_t> sample(SeededStream& rng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  k = std::min(k, n);
  for (std::size_t i = 0; i < k; ++i) std::swap(idx[i], idx[i + rng.below(n - i)]);
  idx.resize(k);
  return idx;
}

// Smallest M >= 5 with p^M > 2 bound: symmetric lifts then recover any
// integer of absolute value at most bound.
unsigned lift_precision(std::uint64_t p, double bound) {
  unsigned M = 1;
  for (double pm = static_cast<double>(p); pm <= 2 * bound; pm *= static_cast<double>(p)) ++M;
  M = std::max(M, 5u);
  if (M > max_padic_precision(p)) fail(ErrorKind::PrecisionExhausted, "bound too large for word-size p-adics");
  return M;
}

Integer integer_value(const PAdic& v, unsigned M) {
  if (!v.is_zero() && v.valuation() < 0)
    fail(ErrorKind::NotPIntegral, "expected an integral value, got " + v.to_string());
  return v.symmetric_lift(M);
}

CaseRecord start(const std::string& id, std::string q_or_p, std::string inputs) {
  CaseRecord r;
  r.case_id = id;
  r.q_or_p = std::move(q_or_p);
  r.inputs = std::move(inputs);
  return r;
}

CaseRecord not_applicable(const std::string& id, std::string q_or_p, std::string inputs, std::string why) {
  CaseRecord r = start(id, std::move(q_or_p), std::move(inputs));
  r.status = CaseStatus::NotApplicable;
  r.note = std::move(why);
  return r;
}

void settle(CaseRecord& r, bool ok) { r.status = ok ? CaseStatus::Pass : CaseStatus::Fail; }

void settle_integers(CaseRecord& r, const Integer& lhs, const Integer& rhs) {
  r.lhs = str(lhs);
  r.rhs = str(rhs);
  r.residual = str(Integer(lhs - rhs));
  settle(r, lhs == rhs);
}

void settle_cyc(CaseRecord& r, const CycNumber& lhs, const CycNumber& rhs) {
  r.lhs = lhs.to_string();
  r.rhs = rhs.to_string();
  CycNumber d = lhs - rhs;
  r.residual = d.to_string();
  settle(r, d.is_zero());
}

void settle_zq(CaseRecord& r, const UnramifiedPAdic& lhs, const UnramifiedPAdic& rhs,
               const UnramifiedPAdic& residual) {
  r.lhs = lhs.to_string();
  r.rhs = rhs.to_string();
  r.residual = residual.to_string();
  settle(r, residual.is_zero());
}

std::vector<Rational> repeat(const std::vector<Rational>& v, int k) {
  std::vector<Rational> out;
  for (int i = 0; i < k; ++i) out.insert(out.end(), v.begin(), v.end());
  return out;
}

// (1/4, 3/4; 1, 1/2) repeated m times: the order-2m function at lambda^2 in
// the n = 2 splitting of the all-1/2 family.
GParams quarter_family(int m) { return {repeat({R(1, 4), R(3, 4)}, m), repeat({R(1), R(1, 2)}, m)}; }
GParams half_family(int m) { return {repeat({R(1, 2)}, m), repeat({R(1)}, m)}; }

std::vector<std::uint64_t> odd_primes(const CaseConfig& c, std::vector<long long> fallback) {
  std::vector<std::uint64_t> out;
  for (long long p : c.integers("p", std::move(fallback))) out.push_back(odd_prime(p));
  return out;
}

std::vector<PrimePower> prime_powers(const CaseConfig& c, std::vector<long long> fallback) {
  std::vector<PrimePower> out;
  for (long long q : c.integers("q", std::move(fallback))) out.push_back(prime_power(q));
  return out;
}

bool p_integral(const Rational& x, std::uint64_t p) { return x == 0 || valuation(x, p) >= 0; }

bool p_integral(const std::vector<Rational>& v, std::uint64_t p) {
  return std::all_of(v.begin(), v.end(), [p](const Rational& x) { return p_integral(x, p); });
}

bool integral_at(const std::vector<Rational>& v, std::uint64_t q1) {
  return std::all_of(v.begin(), v.end(), [q1](const Rational& x) {
    return Rational(x * Rational(static_cast<unsigned long>(q1))).get_den() == 1;
  });
}

std::vector<long long> exponents(const std::vector<Rational>& v, std::uint64_t q1) {
  std::vector<long long> out;
  for (const auto& x : v) {
    Rational e = frac(x) * Rational(static_cast<unsigned long>(q1));
    out.push_back(to_int64(e.get_num()));
  }
  return out;
}

// Families given as a = "..." and b = "..." in the config override the defaults.
std::vector<GParams> g_families(const CaseConfig& c, std::vector<GParams> fallback) {
  if (!c.has("a") && !c.has("b")) return fallback;
  auto a = c.rationals("a", {});
  auto b = c.rationals("b", {});
  if (a.size() != b.size() || a.empty()) fail(ErrorKind::ConfigParse, c.id + ": a and b must have equal nonzero length");
  return {{a, b}};
}

// ----------------------------------------------------------------------------
// Finite-field splitting and its converse

Campaign plan_ff_split(const CaseConfig& c, SeededStream& rng) {
  Campaign out;
  const long long draws = c.integer("draws", 50);
  const auto ns = c.integers("n", {1, 2, 3, 4, 5, 6});
  const auto ms = c.integers("m", {1, 2});
  for (const auto& pp : prime_powers(c, {5, 7, 9, 11, 13, 17, 19, 25})) {
    FieldPtr F = FiniteField::make(static_cast<std::uint32_t>(pp.p), pp.r);
    const std::uint64_t q1 = pp.q - 1;
    for (long long n : ns) {
      if (n < 1 || q1 % static_cast<std::uint64_t>(n) != 0) continue;
      for (long long d = 0; d < draws; ++d) {
        const long long m = ms[rng.below(ms.size())];
        std::vector<long long> top, bottom;
        for (long long i = 0; i < m; ++i) top.push_back(static_cast<long long>(rng.below(q1)));
        for (long long i = 0; i < m; ++i) bottom.push_back(static_cast<long long>(rng.below(q1)));
        FieldElement lambda = F->exp(static_cast<long long>(rng.below(q1)));
        out.tasks.push_back([=, id = c.id] {
          CaseRecord r = start(id, std::to_string(pp.q),
                               "n=" + std::to_string(n) + " top=" + ints(top) + " bottom=" + ints(bottom) +
                                   " lambda=" + elem(*F, lambda));
          auto T = CharacterTables::get(F);
          auto res = ff_split_residual(*T, top, bottom, static_cast<std::uint32_t>(n), lambda);
          settle_cyc(r, res.lhs, res.rhs);
          return r;
        });
      }
    }
  }
  return out;
}

Campaign plan_ff_converse(const CaseConfig& c, SeededStream& rng) {
  Campaign out;
  const auto ns = c.integers("n", {2, 3, 4, 5, 6});
  const auto ms = c.integers("m", {1, 2});
  for (const auto& pp : prime_powers(c, {3, 5, 7, 9, 11, 13})) {
    FieldPtr F = FiniteField::make(static_cast<std::uint32_t>(pp.p), pp.r);
    const std::uint64_t q1 = pp.q - 1;
    for (long long n : ns) {
      if (n < 2 || q1 % static_cast<std::uint64_t>(n) != 0) continue;
      for (std::uint64_t k = 0; k < q1; ++k) {
        FieldElement lambda = F->exp(static_cast<long long>(k));
        if (F->is_nth_power(lambda, static_cast<std::uint32_t>(n))) continue;
        const long long m = ms[rng.below(ms.size())];
        std::vector<long long> top, bottom;
        for (long long i = 0; i < m; ++i) top.push_back(static_cast<long long>(rng.below(q1)));
        for (long long i = 0; i < m; ++i) bottom.push_back(static_cast<long long>(rng.below(q1)));
        out.tasks.push_back([=, id = c.id] {
          CaseRecord r = start(id, std::to_string(pp.q),
                               "n=" + std::to_string(n) + " top=" + ints(top) + " bottom=" + ints(bottom) +
                                   " lambda=" + elem(*F, lambda));
          auto T = CharacterTables::get(F);
          auto res = ff_split_residual(*T, top, bottom, static_cast<std::uint32_t>(n), lambda, SplitMode::Converse);
          settle_cyc(r, res.lhs, res.rhs);
          return r;
        });
      }
    }
  }
  return out;
}

// Random parameter rows closed under Galois conjugation: whole orbits
// {j/d : gcd(j, d) = 1} with d | q - 1, disjoint between top and bottom.
std::pair<std::vector<Rational>, std::vector<Rational>> galois_closed_rows(std::uint64_t q1, SeededStream& rng) {
  std::vector<std::uint64_t> ds;
  for (auto d : divisors(q1))
    if (euler_phi(d) <= 4) ds.push_back(d);
  auto orbit = [](std::uint64_t d) {
    std::vector<Rational> v;
    for (std::uint64_t j = 1; j <= d; ++j)
      if (std::gcd(j, d) == 1) v.push_back(Rational(static_cast<unsigned long>(j), static_cast<unsigned long>(d)));
    return v;
  };
  for (;;) {
    std::vector<std::uint64_t> top_d, bottom_d;
    const auto nt = 1 + rng.below(2), nb = 1 + rng.below(2);
    for (std::uint64_t i = 0; i < nt; ++i) top_d.push_back(ds[rng.below(ds.size())]);
    for (std::uint64_t i = 0; i < nb; ++i) bottom_d.push_back(ds[rng.below(ds.size())]);
    bool overlap = false;
    for (auto d : top_d) overlap |= std::count(bottom_d.begin(), bottom_d.end(), d) > 0;
    if (overlap) continue;
    std::vector<Rational> a, b;
    for (auto d : top_d) for (auto& x : orbit(d)) a.push_back(x);
    for (auto d : bottom_d) for (auto& x : orbit(d)) b.push_back(x);
    // Pad the shorter row with a rational orbit the other row does not use.
    auto pad = [&](std::vector<Rational>& shorter, const std::vector<std::uint64_t>& other) {
      for (std::uint64_t d : {1u, 2u}) {
        if (q1 % d != 0 || std::count(other.begin(), other.end(), d)) continue;
        while (shorter.size() < std::max(a.size(), b.size())) shorter.push_back(orbit(d)[0]);
        return true;
      }
      return false;
    };
    if (a.size() < b.size() && !pad(a, bottom_d)) continue;
    if (b.size() < a.size() && !pad(b, top_d)) continue;
    if (a.size() > 6) continue;
    return {a, b};
  }
}

Campaign plan_ff_over_Q(const CaseConfig& c, SeededStream& rng) {
  Campaign out;
  const long long draws = c.integer("draws", 10);
  for (const auto& pp : prime_powers(c, {5, 7, 9, 11, 13, 17, 19, 25})) {
    FieldPtr F = FiniteField::make(static_cast<std::uint32_t>(pp.p), pp.r);
    const std::uint64_t q1 = pp.q - 1;
    for (long long d = 0; d < draws; ++d) {
      auto [a, b] = galois_closed_rows(q1, rng);
      std::vector<Rational> ea, eb;
      if (rng.below(2)) {
        ea.push_back(make_rational(static_cast<long>(rng.below(q1)), static_cast<long>(q1)));
        eb.push_back(make_rational(static_cast<long>(rng.below(q1)), static_cast<long>(q1)));
      }
      FieldElement lambda = F->exp(static_cast<long long>(rng.below(q1)));
      out.tasks.push_back([=, id = c.id] {
        CaseRecord r = start(id, std::to_string(pp.q),
                             "a=" + rats(a) + " b=" + rats(b) + " extra_a=" + rats(ea) + " extra_b=" + rats(eb) +
                                 " lambda=" + elem(*F, lambda));
        auto T = CharacterTables::get(F);
        DefinedOverQData data = derive_defined_over_Q(a, b);
        CycNumber lhs = ff_hyper_over_Q(*T, data, ea, eb, lambda);
        FFHyperParams direct;
        auto all_a = a, all_b = b;
        all_a.insert(all_a.end(), ea.begin(), ea.end());
        all_b.insert(all_b.end(), eb.begin(), eb.end());
        direct.top = exponents(all_a, q1);
        direct.bottom = exponents(all_b, q1);
        CycNumber rhs = ff_hyper(*T, direct, lambda);
        const unsigned m = std::max(lhs.index(), rhs.index());
        settle_cyc(r, lhs.embed(m), rhs.embed(m));
        return r;
      });
    }
  }
  return out;
}

// ----------------------------------------------------------------------------
// p-adic setting

const std::vector<GParams>& g_default_families() {
  static const std::vector<GParams> fams = {
      half_family(2),
      {{R(1, 4), R(3, 4)}, {R(1), R(1, 2)}},
      {{R(1, 8), R(5, 8), R(3, 8), R(7, 8)}, {R(1, 6), R(2, 3), R(1, 3), R(5, 6)}},
  };
  return fams;
}

std::string family_str(const GParams& g) { return "a=" + rats(g.a) + " b=" + rats(g.b); }

Campaign plan_g_over_Q(const CaseConfig& c, SeededStream&) {
  Campaign out;
  const unsigned M = static_cast<unsigned>(c.integer("M", 5));
  const auto rs = c.integers("r", {1, 2});
  for (const auto& fam : g_families(c, g_default_families())) {
    auto data = derive_defined_over_Q(fam.a, fam.b);
    for (auto p : odd_primes(c, {3, 5, 7, 11, 13})) {
      for (long long r : rs) {
        const std::string qs = std::to_string(ipow(p, static_cast<unsigned>(r)));
        if (!p_integral(fam.a, p) || !p_integral(fam.b, p)) {
          out.tasks.push_back([=, id = c.id] {
            return not_applicable(id, qs, family_str(fam), "parameters are not p-integral");
          });
          continue;
        }
        FieldPtr F = FiniteField::make(static_cast<std::uint32_t>(p), static_cast<unsigned>(r));
        for (std::uint64_t k = 0; k + 1 < F->q(); ++k) {
          FieldElement lambda = F->exp(static_cast<long long>(k));
          out.tasks.push_back([=, id = c.id] {
            CaseRecord rec = start(id, qs, family_str(fam) + " lambda=" + elem(*F, lambda) + " M=" + std::to_string(M));
            auto direct = g_eval_unramified(fam, lambda, F, M);
            auto viaQ = g_eval_over_Q_unramified(data, {}, {}, lambda, F, M);
            settle_zq(rec, viaQ, direct, viaQ - direct);
            return rec;
          });
        }
      }
    }
  }
  return out;
}

struct SplitFamily {
  GParams base;
  unsigned n;
};

std::vector<SplitFamily> split_families(const CaseConfig& c) {
  if (c.has("a") || c.has("b")) {
    auto fams = g_families(c, {});
    return {{fams[0], static_cast<unsigned>(c.integer("n", 2))}};
  }
  return {
      {{{R(1, 4), R(1, 4)}, {R(1), R(1)}}, 2},
      {{{R(1, 8), R(3, 8)}, {R(1, 6), R(1, 3)}}, 2},
      {{{R(1, 6)}, {R(0)}}, 3},
      {{{R(1, 8)}, {R(0)}}, 4},
  };
}

std::string split_admissibility(const SplitFamily& f, std::uint64_t p, std::uint64_t q) {
  if ((q - 1) % f.n != 0) return "q is not 1 mod n";
  GParams big = split_g_params(f.base, f.n);
  if (!p_integral(big.a, p) || !p_integral(big.b, p)) return "parameters are not p-integral";
  return "";
}

Campaign plan_g_split(const CaseConfig& c, SeededStream& rng) {
  Campaign out;
  const unsigned M = static_cast<unsigned>(c.integer("M", 5));
  const long long draws = c.integer("draws", 20);
  const auto rs = c.integers("r", {1, 2});
  for (const auto& fam : split_families(c)) {
    for (auto p : odd_primes(c, {3, 5, 7, 11, 13})) {
      for (long long r : rs) {
        const std::uint64_t q = ipow(p, static_cast<unsigned>(r));
        const std::string qs = std::to_string(q);
        const std::string fs = family_str(fam.base) + " n=" + std::to_string(fam.n);
        std::string why = split_admissibility(fam, p, q);
        if (!why.empty()) {
          out.tasks.push_back([=, id = c.id] { return not_applicable(id, qs, fs, why); });
          continue;
        }
        FieldPtr F = FiniteField::make(static_cast<std::uint32_t>(p), static_cast<unsigned>(r));
        for (auto k : sample(rng, q - 1, static_cast<std::size_t>(draws))) {
          FieldElement lambda = F->exp(static_cast<long long>(k));
          out.tasks.push_back([=, id = c.id] {
            CaseRecord rec = start(id, qs, fs + " lambda=" + elem(*F, lambda) + " M=" + std::to_string(M));
            auto res = g_split_residual(fam.base, fam.n, lambda, F, M);
            settle_zq(rec, res.lhs, res.rhs, res.residual);
            return rec;
          });
        }
      }
    }
  }
  return out;
}

Campaign plan_g_converse(const CaseConfig& c, SeededStream&) {
  Campaign out;
  const unsigned M = static_cast<unsigned>(c.integer("M", 5));
  for (const auto& fam : split_families(c)) {
    for (const auto& pp : prime_powers(c, {3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29})) {
      const std::string qs = std::to_string(pp.q);
      const std::string fs = family_str(fam.base) + " n=" + std::to_string(fam.n);
      std::string why = split_admissibility(fam, pp.p, pp.q);
      if (!why.empty()) {
        out.tasks.push_back([=, id = c.id] { return not_applicable(id, qs, fs, why); });
        continue;
      }
      FieldPtr F = FiniteField::make(static_cast<std::uint32_t>(pp.p), pp.r);
      for (std::uint64_t k = 0; k + 1 < pp.q; ++k) {
        FieldElement lambda = F->exp(static_cast<long long>(k));
        if (F->is_nth_power(lambda, fam.n)) continue;
        out.tasks.push_back([=, id = c.id] {
          CaseRecord rec = start(id, qs, fs + " lambda=" + elem(*F, lambda) + " M=" + std::to_string(M));
          auto res = g_split_residual(fam.base, fam.n, lambda, F, M, SplitMode::Converse);
          settle_zq(rec, res.lhs, res.rhs, res.residual);
          return rec;
        });
      }
    }
  }
  return out;
}

Campaign plan_fg_consistency(const CaseConfig& c, SeededStream& rng) {
  Campaign out;
  const unsigned M = static_cast<unsigned>(c.integer("M", 5));
  const long long draws = c.integer("draws", 10);
  const std::vector<GParams> fallback = {
      half_family(2), {{R(1, 4), R(3, 4)}, {R(1), R(1, 2)}}, {{R(1, 4), R(1, 2)}, {R(1, 2), R(3, 4)}}};
  for (const auto& fam : g_families(c, fallback)) {
    for (const auto& pp : prime_powers(c, {5, 7, 9, 13, 17, 25})) {
      const std::string qs = std::to_string(pp.q);
      if (!integral_at(fam.a, pp.q - 1) || !integral_at(fam.b, pp.q - 1)) {
        out.tasks.push_back([=, id = c.id] {
          return not_applicable(id, qs, family_str(fam), "denominators do not divide q - 1");
        });
        continue;
      }
      FieldPtr F = FiniteField::make(static_cast<std::uint32_t>(pp.p), pp.r);
      for (auto k : sample(rng, pp.q - 1, static_cast<std::size_t>(draws))) {
        FieldElement lambda = F->exp(static_cast<long long>(k));
        out.tasks.push_back([=, id = c.id] {
          CaseRecord rec = start(id, qs, family_str(fam) + " lambda=" + elem(*F, lambda) + " M=" + std::to_string(M));
          auto res = fg_consistency(fam, lambda, F, M);
          settle_zq(rec, res.f_padic, res.g_value, res.residual);
          return rec;
        });
      }
    }
  }
  return out;
}

// ----------------------------------------------------------------------------
// Classical setting

Rational random_fraction(SeededStream& rng, const Rational& lo, const Rational& hi, long max_den = 12) {
  std::vector<Rational> pool;
  for (long d = 1; d <= max_den; ++d) {
    Rational s = lo * Rational(d);
    for (Integer k = floor_of(s);; ++k) {
      Rational x(k, d);
      x.canonicalize();
      if (x > hi) break;
      if (x >= lo && x.get_den() == static_cast<unsigned long>(d)) pool.push_back(x);
    }
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  return pool[rng.below(pool.size())];
}

std::string decimal(const BigReal& x, int digits = 6) { return to_decimal(x, digits); }

Campaign plan_classical_split(const CaseConfig& c, SeededStream& rng) {
  Campaign out;
  const long long draws = c.integer("draws", 20);
  const unsigned prec = static_cast<unsigned>(c.integer("prec", 40));
  const int tol_exp = static_cast<int>(c.integer("tolerance_exp", -25));
  for (long long d = 0; d < draws; ++d) {
    const unsigned n = 1 + static_cast<unsigned>(rng.below(4));
    const unsigned m = 1 + static_cast<unsigned>(rng.below(3));
    std::vector<Rational> a, b;
    for (unsigned i = 0; i < m; ++i) a.push_back(random_fraction(rng, R(-2), R(2)));
    for (unsigned i = 0; i < m; ++i) b.push_back(random_fraction(rng, R(1, 12), R(2)));
    // z = (x + i y) with |z| <= 0.3.
    Rational x, y;
    do {
      x = random_fraction(rng, R(-3, 10), R(3, 10), 20);
      y = random_fraction(rng, R(-3, 10), R(3, 10), 20);
    } while (x * x + y * y > R(9, 100));
    out.tasks.push_back([=, id = c.id] {
      CaseRecord rec = start(id, "-",
                             "a=" + rats(a) + " b=" + rats(b) + " n=" + std::to_string(n) + " z=" + str(x) + "+" +
                                 str(y) + "i prec=" + std::to_string(prec));
      PrecisionScope scope(prec + 10);
      BigComplex z(to_big(x), to_big(y));
      BigComplex res = classical_split_residual(a, b, n, z, prec);
      BigReal err = abs(res);
      rec.lhs = "sum_l mFm[na;nb|zeta^l z]";
      rec.rhs = "nmFnm[{a+l/n};{b+l/n}|z^n]";
      rec.residual = decimal(err, 3);
      settle(rec, err < pow(BigReal(10), tol_exp));
      return rec;
    });
  }
  return out;
}

Campaign plan_classical_reduction(const CaseConfig& c, SeededStream& rng, ClassicalReduction which) {
  Campaign out;
  const long long draws = c.integer("draws", 10);
  const unsigned prec = static_cast<unsigned>(c.integer("prec", 30));
  const int tol_exp = static_cast<int>(c.integer("tolerance_exp", -20));
  std::vector<ClassicalParams> params;
  if (c.has("a")) {
    auto as = c.rationals("a", {});
    auto bs = c.rationals("b", std::vector<Rational>(as.size(), Rational(0)));
    if (as.size() != bs.size()) fail(ErrorKind::ConfigParse, c.id + ": a and b lists differ in length");
    for (std::size_t i = 0; i < as.size(); ++i) params.push_back({as[i], bs[i]});
  } else {
    // Ranges keep every Gamma argument positive and sum(b) - sum(a) >= 6/5 for
    // the series at 1.
    for (long long d = 0; d < draws; ++d) {
      switch (which) {
        case ClassicalReduction::M2:
          params.push_back({random_fraction(rng, R(0), R(1, 2)), random_fraction(rng, R(-1, 2), R(1, 5))});
          break;
        case ClassicalReduction::M3:
          params.push_back({random_fraction(rng, R(-1, 3), R(1, 3)), Rational(0)});
          break;
        case ClassicalReduction::M4:
          params.push_back({random_fraction(rng, R(0), R(1, 2)), random_fraction(rng, R(-1, 2), R(1, 10))});
          break;
      }
    }
  }
  for (const auto& cp : params) {
    out.tasks.push_back([=, id = c.id] {
      CaseRecord rec = start(id, "-", "a=" + str(cp.a) + " b=" + str(cp.b) + " prec=" + std::to_string(prec));
      std::vector<Rational> top, bottom;
      classical_lhs_params(which, cp, top, bottom);
      BigReal rhs = classical_rhs(which, cp, prec);
      SeriesAtOne lhs = mfm_at_one(top, bottom, prec);
      PrecisionScope scope(prec + 10);
      BigReal err = abs(lhs.value - rhs);
      rec.lhs = decimal(lhs.value, static_cast<int>(prec));
      rec.rhs = decimal(rhs, static_cast<int>(prec));
      rec.residual = decimal(err, 3);
      settle(rec, err < pow(BigReal(10), tol_exp));
      return rec;
    });
  }
  return out;
}

// ----------------------------------------------------------------------------
// Finite-field reductions

struct ReductionChoice {
  long long A = 0;
  long long B = 0;
  bool conj = false;
};

std::vector<ReductionChoice> admissible_choices(FFReduction id, std::uint64_t q) {
  const long long n = static_cast<long long>(q - 1);
  auto nontrivial = [n](long long k) { return ((k % n) + n) % n != 0; };
  std::vector<ReductionChoice> out;
  if (id != FFReduction::M2 && q % 4 != 1) return out;
  const long long phi = n / 2;
  for (long long A = 0; A < n; ++A) {
    switch (id) {
      case FFReduction::M2:
        for (long long B = 0; B < n; ++B)
          if (nontrivial(2 * A) && nontrivial(4 * B)) out.push_back({A, B, false});
        break;
      case FFReduction::M3:
        if (nontrivial(8 * A))
          for (bool cj : {false, true}) out.push_back({A, 0, cj});
        break;
      case FFReduction::M4:
        for (long long B = 0; B < n; ++B)
          if (nontrivial(4 * A) && nontrivial(8 * B) && nontrivial(2 * A - phi - 4 * B))
            for (bool cj : {false, true}) out.push_back({A, B, cj});
        break;
    }
  }
  return out;
}

Campaign plan_ff_reduction(const CaseConfig& c, SeededStream& rng, FFReduction which) {
  Campaign out;
  const long long draws = c.integer("draws", 20);
  const bool report_only = which == FFReduction::M4;
  std::vector<ThreeF2Mode> modes = {ThreeF2Mode::PaddedEpsilon};
  if (report_only) {
    const std::string mode = c.text("mode", "both");
    if (mode == "generalized") modes = {ThreeF2Mode::Generalized};
    else if (mode == "both") modes = {ThreeF2Mode::PaddedEpsilon, ThreeF2Mode::Generalized};
    else if (mode != "padded") fail(ErrorKind::ConfigParse, c.id + ".mode must be padded, generalized or both");
    out.notes.push_back(
        "report-only: the 3F2 normalization is conditional; 'padded' reads it as 3F3 with epsilon in the bottom "
        "row, 'generalized' as the unequal-length character sum");
  }
  for (const auto& pp : prime_powers(c, {5, 9, 13, 17, 25})) {
    const std::string qs = std::to_string(pp.q);
    auto choices = admissible_choices(which, pp.q);
    if (choices.empty()) {
      out.tasks.push_back([=, id = c.id] {
        CaseRecord r = not_applicable(id, qs, "-", "no admissible character choice for this q");
        r.gating = !report_only;
        return r;
      });
      continue;
    }
    FieldPtr F = FiniteField::make(static_cast<std::uint32_t>(pp.p), pp.r);
    for (auto i : sample(rng, choices.size(), static_cast<std::size_t>(draws))) {
      const ReductionChoice ch = choices[i];
      for (auto mode : modes) {
        out.tasks.push_back([=, id = c.id] {
          std::string in = "A=T^" + std::to_string(ch.A);
          if (which != FFReduction::M3) in += " B=T^" + std::to_string(ch.B);
          if (which != FFReduction::M2) in += ch.conj ? " chi4=T^(3(q-1)/4)" : " chi4=T^((q-1)/4)";
          if (report_only) in += mode == ThreeF2Mode::PaddedEpsilon ? " mode=padded" : " mode=generalized";
          CaseRecord r = start(id, qs, in);
          r.gating = !report_only;
          auto T = CharacterTables::get(F);
          FFReductionArgs args{ch.A, ch.B, ch.conj};
          CycNumber lhs = ff_hyper(*T, ff_reduction_lhs(*T, which, args), F->one()).embed(T->gauss_index());
          CycNumber rhs = ff_reduction_rhs(*T, which, args, mode);
          settle_cyc(r, lhs, rhs);
          return r;
        });
      }
    }
  }
  return out;
}

// ----------------------------------------------------------------------------
// Special values of G

struct GValue {
  Integer value;
  unsigned M;
};

GValue g_integer(const GParams& params, const Rational& lambda, const PrimePower& pp, double bound) {
  FieldPtr F = FiniteField::make(static_cast<std::uint32_t>(pp.p), pp.r);
  const unsigned M = lift_precision(pp.p, bound);
  return {integer_value(g_eval(params, reduce(*F, lambda), F, M), M), M};
}

QuadraticConstraint coprime_if(std::uint64_t p, bool cond, QuadraticConstraint c = {}) {
  if (cond) c.x_coprime_to = p;
  return c;
}

Campaign plan_g_phi2_values(const CaseConfig& c, SeededStream&) {
  Campaign out;
  for (const auto& pp : prime_powers(c, {3, 5, 7, 9, 11, 13, 17, 25, 29, 49})) {
    out.tasks.push_back([=, id = c.id] {
      CaseRecord r = start(id, std::to_string(pp.q), "4G4[1/4,3/4,1/4,3/4;1,1/2,1,1/2|1]");
      const long long q = static_cast<long long>(pp.q);
      Integer expected;
      if (q % 4 == 3) {
        expected = -1;
      } else {
        QuadraticConstraint qc = coprime_if(pp.p, pp.p % 4 == 1, {4, 1, false, 0});
        auto xy = rep_quadratic(q, 1, 1, qc);
        if (!xy) fail(ErrorKind::ConstraintViolated, "no representation q = x^2 + y^2 with the stated normalization");
        const long long x = xy->first;
        r.inputs += " x=" + std::to_string(x);
        expected = static_cast<long>((q % 8 == 1) ? 1 + 2 * x : 1 - 2 * x);
      }
      auto g = g_integer(quarter_family(2), 1, pp, 4.0 * static_cast<double>(q));
      r.inputs += " M=" + std::to_string(g.M);
      settle_integers(r, g.value, expected);
      return r;
    });
  }
  return out;
}

Campaign plan_g_phi3_values(const CaseConfig& c, SeededStream&) {
  Campaign out;
  for (const auto& pp : prime_powers(c, {3, 5, 7, 9, 11, 13, 17, 25, 29, 49})) {
    out.tasks.push_back([=, id = c.id] {
      CaseRecord r = start(id, std::to_string(pp.q), "6G6[(1/4,3/4)^3;(1,1/2)^3|1]");
      const long long q = static_cast<long long>(pp.q);
      long long x = 0, u = 0;
      if (q % 4 == 1) {
        auto xy = rep_quadratic(q, 1, 1, coprime_if(pp.p, pp.p % 4 == 1, {0, 0, true, 0}));
        if (!xy) fail(ErrorKind::ConstraintViolated, "no representation q = x^2 + y^2");
        x = xy->first;
        r.inputs += " x=" + std::to_string(x);
      }
      if (q % 8 == 1 || q % 8 == 3) {
        auto uv = rep_quadratic(q, 1, 2, coprime_if(pp.p, pp.p % 8 == 1 || pp.p % 8 == 3));
        if (!uv) fail(ErrorKind::ConstraintViolated, "no representation q = u^2 + 2 v^2");
        u = uv->first;
        r.inputs += " u=" + std::to_string(u);
      }
      long long expected = 0;
      switch (q % 8) {
        case 1: expected = 4 * (x * x + u * u) - 3 * q; break;
        case 3: expected = q - 4 * u * u; break;
        case 5: expected = 4 * x * x - q; break;
        default: expected = -q; break;
      }
      auto g = g_integer(quarter_family(3), 1, pp, 8.0 * static_cast<double>(q));
      r.inputs += " M=" + std::to_string(g.M);
      settle_integers(r, g.value, Integer(static_cast<long>(expected)));
      return r;
    });
  }
  return out;
}

std::vector<long long> primes_up_to(long long lo, long long hi) {
  std::vector<long long> out;
  for (long long p = lo; p <= hi; ++p)
    if (p % 2 == 1 && is_prime(static_cast<std::uint64_t>(p))) out.push_back(p);
  return out;
}

Integer eta_coefficient(const EtaQuotient& eq, std::uint64_t p) {
  return eta_coefficients(eq, static_cast<unsigned>(p))[p];
}

Integer frobenius_square(const EllipticCurve& E, std::uint64_t p) {
  return hecke_prime_square(Integer(static_cast<long>(ec_trace(E, p))), p, 2, 1);
}

Campaign plan_g_phi2_modular(const CaseConfig& c, SeededStream&) {
  Campaign out;
  for (auto p : odd_primes(c, primes_up_to(3, 31))) {
    out.tasks.push_back([=, id = c.id] {
      CaseRecord r = start(id, std::to_string(p), "4G4[1/4,3/4,1/4,3/4;1,1/2,1,1/2|1] vs phi(-1) + a_p(eta^2(4z)eta^2(8z))");
      Integer rhs = legendre(R(-1), p) + eta_coefficient(eta_32_2_a_a(), p);
      auto g = g_integer(quarter_family(2), 1, {p, 1, p}, 4.0 * static_cast<double>(p));
      settle_integers(r, g.value, rhs);
      return r;
    });
  }
  return out;
}

Campaign plan_g_phi3_modular(const CaseConfig& c, SeededStream&) {
  Campaign out;
  for (auto p : odd_primes(c, primes_up_to(3, 31))) {
    const EllipticCurve E8 = ono_curve(8);
    if (!E8.good_reduction(p)) {
      out.tasks.push_back([=, id = c.id] { return not_applicable(id, std::to_string(p), "E_8", "bad reduction"); });
      continue;
    }
    out.tasks.push_back([=, id = c.id] {
      CaseRecord r = start(id, std::to_string(p), "6G6[(1/4,3/4)^3;(1,1/2)^3|1] vs a_p(eta^6(4z)) + phi(2)(a_p(E_8)^2 - p)");
      Integer rhs = eta_coefficient(eta_16_3_c_a(), p) + legendre(R(2), p) * frobenius_square(E8, p);
      auto g = g_integer(quarter_family(3), 1, {p, 1, p}, 8.0 * static_cast<double>(p));
      settle_integers(r, g.value, rhs);
      return r;
    });
  }
  return out;
}

bool unit_at(const Rational& x, std::uint64_t p) { return x != 0 && valuation(x, p) == 0; }

Campaign plan_ono_elliptic(const CaseConfig& c, SeededStream&) {
  Campaign out;
  const auto ts = c.rationals("t", {R(1), R(3), R(5), R(8), R(7, 2), R(9, 2), R(65, 16), R(63, 16)});
  for (const auto& t : ts) {
    for (auto p : odd_primes(c, primes_up_to(5, 31))) {
      const std::string in = "t=" + str(t);
      if (!unit_at(t * (t - 4), p)) {
        out.tasks.push_back([=, id = c.id] {
          return not_applicable(id, std::to_string(p), in, "ord_p(t(t-4)) != 0");
        });
        continue;
      }
      out.tasks.push_back([=, id = c.id] {
        CaseRecord r = start(id, std::to_string(p), in + " lambda=(4-t)/4");
        Integer rhs = legendre(t * t - 4 * t, p) * frobenius_square(ono_curve(t), p);
        auto g = g_integer(half_family(3), (4 - t) / 4, {p, 1, p}, 4.0 * static_cast<double>(p));
        settle_integers(r, g.value, rhs);
        return r;
      });
    }
  }
  return out;
}

// Two-curve forms of the 6G6 special values.  The second curve has CM and its
// term a_p(E)^2 - p also has the closed form 4x^2 - p or -p.
struct TwistedItem {
  int item;
  Rational lambda;
  Rational t1;
  long c1;
  Rational t2;
  long c2;
  long form_B;  // x^2 + B y^2
};

const std::vector<TwistedItem>& twisted_items() {
  static const std::vector<TwistedItem> items = {
      {1, R(1, 64), R(7, 2), -7, R(9, 2), 1, 1},      {2, R(64), R(7, 2), 14, R(9, 2), 2, 1},
      {3, R(1, 16), R(5), 5, R(3), -3, 3},            {4, R(16), R(5), 5, R(3), 3, 3},
      {5, R(1, 4096), R(65, 16), 65, R(63, 16), -7, 7}, {6, R(4096), R(65, 16), 65, R(63, 16), 7, 7},
  };
  return items;
}

// 4x^2 - p when p = x^2 + B y^2 is representable (x odd for B = 1), else -p.
Integer cm_square_term(std::uint64_t p, long B) {
  QuadraticConstraint odd;
  odd.x_odd = B == 1;
  auto xy = rep_quadratic(static_cast<long long>(p), 1, B, odd);
  const long pp = static_cast<long>(p);
  if (!xy) return Integer(-pp);
  return Integer(4 * static_cast<long>(xy->first * xy->first) - pp);
}

Campaign plan_g_phi3_twisted(const CaseConfig& c, SeededStream&) {
  Campaign out;
  const auto wanted = c.integers("items", {1, 2, 3, 4, 5, 6});
  for (const auto& it : twisted_items()) {
    if (std::find(wanted.begin(), wanted.end(), it.item) == wanted.end()) continue;
    for (auto p : odd_primes(c, primes_up_to(5, 23))) {
      const std::string in = "item=" + std::to_string(it.item) + " lambda=" + str(it.lambda) + " t1=" + str(it.t1) +
                             " t2=" + str(it.t2);
      if (!unit_at(it.t1 * (it.t1 - 4), p) || !unit_at(it.t2 * (it.t2 - 4), p) || !unit_at(it.lambda, p)) {
        out.tasks.push_back([=, id = c.id] {
          return not_applicable(id, std::to_string(p), in, "bad reduction or lambda not a p-unit");
        });
        continue;
      }
      out.tasks.push_back([=, id = c.id] {
        CaseRecord r = start(id, std::to_string(p), in);
        Integer e1 = frobenius_square(ono_curve(it.t1), p);
        Integer e2 = frobenius_square(ono_curve(it.t2), p);
        Integer cm = cm_square_term(p, it.form_B);
        Integer rhs = legendre(R(it.c1), p) * e1 + legendre(R(it.c2), p) * e2;
        auto g = g_integer(quarter_family(3), it.lambda, {p, 1, p}, 12.0 * static_cast<double>(p));
        settle_integers(r, g.value, rhs);
        r.note = "CM term: point count " + str(e2) + ", closed form " + str(cm);
        if (e2 != cm) r.status = CaseStatus::Fail;
        return r;
      });
    }
  }
  return out;
}

struct ABPair {
  long a;
  long b;
};

std::vector<ABPair> ab_pairs(const CaseConfig& c, std::vector<ABPair> fallback) {
  if (!c.has("a")) return fallback;
  auto as = c.integers("a", {});
  auto bs = c.integers("b", {});
  if (as.size() != bs.size()) fail(ErrorKind::ConfigParse, c.id + ": a and b lists differ in length");
  std::vector<ABPair> out;
  for (std::size_t i = 0; i < as.size(); ++i) out.push_back({static_cast<long>(as[i]), static_cast<long>(bs[i])});
  return out;
}

Campaign plan_trace_single(const CaseConfig& c, SeededStream&) {
  Campaign out;
  const GParams fam{{R(1, 4), R(3, 4)}, {R(1, 3), R(2, 3)}};
  for (auto ab : ab_pairs(c, {{1, 1}, {1, 2}, {2, 1}, {1, -1}, {-1, 1}})) {
    for (auto p : odd_primes(c, primes_up_to(5, 31))) {
      const std::string in = "a=" + std::to_string(ab.a) + " b=" + std::to_string(ab.b);
      const EllipticCurve E = short_weierstrass(ab.a, ab.b);
      const Rational lambda = Rational(-27 * ab.b * ab.b) / Rational(4 * ab.a * ab.a * ab.a);
      if (!E.good_reduction(p) || !unit_at(lambda, p)) {
        out.tasks.push_back([=, id = c.id] {
          return not_applicable(id, std::to_string(p), in, "bad reduction or lambda not a p-unit");
        });
        continue;
      }
      out.tasks.push_back([=, id = c.id] {
        CaseRecord r = start(id, std::to_string(p), in + " lambda=" + str(lambda));
        FieldPtr F = FiniteField::make(static_cast<std::uint32_t>(p), 1);
        const unsigned M = lift_precision(p, 4.0 * std::sqrt(static_cast<double>(p)));
        PAdic g = g_eval(fam, reduce(*F, lambda), F, M);
        PAdic lhs = PAdic::from_rational(Rational(legendre(R(ab.b), p) * static_cast<long>(p)), p, M + 1) * g;
        settle_integers(r, integer_value(lhs, M), Integer(static_cast<long>(ec_trace(E, p))));
        return r;
      });
    }
  }
  return out;
}

Campaign plan_trace_pair(const CaseConfig& c, SeededStream&, std::vector<ABPair> fallback) {
  Campaign out;
  const GParams fam{{R(1, 8), R(5, 8), R(3, 8), R(7, 8)}, {R(1, 6), R(2, 3), R(1, 3), R(5, 6)}};
  for (auto ab : ab_pairs(c, std::move(fallback))) {
    for (auto p : odd_primes(c, primes_up_to(5, 31))) {
      const std::string in = "a=" + std::to_string(ab.a) + " b=" + std::to_string(ab.b);
      const EllipticCurve E1 = short_weierstrass(ab.a, ab.b), E2 = short_weierstrass(-ab.a, ab.b);
      const long a3 = ab.a * ab.a * ab.a;
      const Rational lambda = Rational(729 * ab.b * ab.b * ab.b * ab.b) / Rational(16 * a3 * a3);
      if (!E1.good_reduction(p) || !E2.good_reduction(p) || !unit_at(lambda, p)) {
        out.tasks.push_back([=, id = c.id] {
          return not_applicable(id, std::to_string(p), in, "bad reduction or lambda not a p-unit");
        });
        continue;
      }
      out.tasks.push_back([=, id = c.id] {
        CaseRecord r = start(id, std::to_string(p), in + " lambda=" + str(lambda));
        FieldPtr F = FiniteField::make(static_cast<std::uint32_t>(p), 1);
        const unsigned M = lift_precision(p, 4.0 * std::sqrt(static_cast<double>(p)));
        PAdic g = g_eval(fam, reduce(*F, lambda), F, M);
        PAdic lhs = PAdic::from_rational(Rational(static_cast<long>(p)), p, M + 1) * g;
        Integer rhs = legendre(R(ab.b), p) * Integer(static_cast<long>(ec_trace(E1, p) + ec_trace(E2, p)));
        settle_integers(r, integer_value(lhs, M), rhs);
        return r;
      });
    }
  }
  return out;
}

// Sign convention for the weight-3 CM coefficient, fixed at p = 5 from
// 4G4[1/2^4;1^4|-1]_5 = a_5(eta^2(4z)eta^2(8z)) * c_5.  Returns 0 when
// neither sign reproduces c_5.
struct Calibration {
  int sign = 0;
  std::string note;
};

Calibration calibrate_cm_sign() {
  const std::uint64_t p = 5;
  auto g = g_integer(half_family(4), -1, {p, 1, p}, 8.0 * 25);
  Integer a = eta_coefficient(eta_32_2_a_a(), p);
  Calibration out;
  std::ostringstream os;
  os << "calibration at p=5: 4G4[1/2^4;1^4|-1]_5 = " << g.value << ", a_5(eta^2(4z)eta^2(8z)) = " << a;
  if (a == 0 || g.value % a != 0) {
    os << "; quotient is not an integer, no sign convention fits";
  } else {
    Integer implied = g.value / a;
    const long long plus = cm_weight3_coefficient(p, 1);
    os << ", implied coefficient " << implied << ", cm_weight3_coefficient(5) = +/-" << std::llabs(plus);
    if (implied == static_cast<long>(plus)) out.sign = 1;
    else if (implied == -static_cast<long>(plus)) out.sign = -1;
    if (out.sign != 0)
      os << "; sign " << (out.sign > 0 ? "+1" : "-1") << " frozen, validated at held-out primes 13, 17, 29";
    else
      os << "; neither sign matches, so every p = 1 mod 4 case fails";
  }
  out.note = os.str();
  return out;
}

Campaign plan_g_phi4_modular(const CaseConfig& c, SeededStream&) {
  Campaign out;
  const auto ps = odd_primes(c, {3, 5, 7, 11, 13, 17, 29});
  const bool need_calibration = std::any_of(ps.begin(), ps.end(), [](std::uint64_t p) { return p % 4 == 1; });
  Calibration cal;
  if (need_calibration) {
    cal = calibrate_cm_sign();
    out.notes.push_back(cal.note);
  }
  for (auto p : ps) {
    out.tasks.push_back([=, id = c.id] {
      std::string in = "8G8[(1/4,3/4)^4;(1,1/2)^4|1]";
      if (p % 4 == 3) in += " (middle term 0, no calibration)";
      else if (p == 5) in += " (calibration prime)";
      else in += " (held-out prime)";
      CaseRecord r = start(id, std::to_string(p), in);
      auto g = g_integer(quarter_family(4), 1, {p, 1, p}, 8.0 * static_cast<double>(p * p));
      Integer base = eta_coefficient(eta_8_4_a_a(), p) + Integer(static_cast<long>(p));
      if (p % 4 == 3) {
        settle_integers(r, g.value, base);
        return r;
      }
      Integer a = eta_coefficient(eta_32_2_a_a(), p);
      if (cal.sign == 0) {
        r.lhs = str(g.value);
        r.rhs = "uncalibrated";
        Integer rest = g.value - base;
        if (a != 0 && rest % a == 0) r.note = "implied weight-3 coefficient " + str(Integer(rest / a));
        r.status = CaseStatus::Fail;
        return r;
      }
      Integer rhs = base + a * Integer(static_cast<long>(cm_weight3_coefficient(p, cal.sign)));
      settle_integers(r, g.value, rhs);
      return r;
    });
  }
  return out;
}

// ----------------------------------------------------------------------------
// Toolbox identities

Campaign plan_gauss_conjugation(const CaseConfig& c, SeededStream&) {
  Campaign out;
  for (const auto& pp : prime_powers(c, {3, 5, 7, 9, 11, 13, 25})) {
    FieldPtr F = FiniteField::make(static_cast<std::uint32_t>(pp.p), pp.r);
    for (std::uint64_t k = 0; k + 1 < pp.q; ++k) {
      out.tasks.push_back([=, id = c.id] {
        CaseRecord r = start(id, std::to_string(pp.q), "chi=T^" + std::to_string(k));
        auto T = CharacterTables::get(F);
        Character chi(static_cast<long long>(k), static_cast<std::uint32_t>(pp.q - 1));
        CycNumber res = gauss_conjugation_residual(*T, chi);
        r.lhs = "g(chi)g(chi^-1)";
        r.rhs = k == 0 ? "1" : std::to_string(T->sign(static_cast<long long>(k)) * static_cast<long long>(pp.q));
        r.residual = res.to_string();
        settle(r, res.is_zero());
        return r;
      });
    }
  }
  return out;
}

Campaign plan_hasse_davenport(const CaseConfig& c, SeededStream&) {
  Campaign out;
  for (const auto& pp : prime_powers(c, {3, 5, 7, 9, 11, 13, 17, 19, 23, 25})) {
    FieldPtr F = FiniteField::make(static_cast<std::uint32_t>(pp.p), pp.r);
    for (auto n : divisors(pp.q - 1)) {
      for (std::uint64_t k = 0; k + 1 < pp.q; ++k) {
        out.tasks.push_back([=, id = c.id] {
          CaseRecord r = start(id, std::to_string(pp.q), "n=" + std::to_string(n) + " psi=T^" + std::to_string(k));
          auto T = CharacterTables::get(F);
          Character psi(static_cast<long long>(k), static_cast<std::uint32_t>(pp.q - 1));
          CycNumber res = hasse_davenport_residual(*T, static_cast<std::uint32_t>(n), psi);
          r.lhs = "prod_l g(chi_n^l psi)";
          r.rhs = "g(psi^n) psi^-n(n) prod_l g(chi_n^l)";
          r.residual = res.to_string();
          settle(r, res.is_zero());
          return r;
        });
      }
    }
  }
  return out;
}

Campaign plan_orthogonality(const CaseConfig& c, SeededStream&) {
  Campaign out;
  for (const auto& pp : prime_powers(c, {3, 5, 7, 9, 11, 13, 17, 19, 23, 25})) {
    FieldPtr F = FiniteField::make(static_cast<std::uint32_t>(pp.p), pp.r);
    for (auto n : divisors(pp.q - 1)) {
      for (std::uint64_t k = 0; k + 1 < pp.q; ++k) {
        out.tasks.push_back([=, id = c.id] {
          CaseRecord r = start(id, std::to_string(pp.q), "n=" + std::to_string(n) + " chi=T^" + std::to_string(k));
          auto T = CharacterTables::get(F);
          Character chi(static_cast<long long>(k), static_cast<std::uint32_t>(pp.q - 1));
          CycNumber s = orthogonality_sum(*T, chi, static_cast<std::uint32_t>(n));
          const long long expected = k % n == 0 ? static_cast<long long>(n) : 0;
          settle_cyc(r, s, CycNumber::from_integer(s.index(), expected));
          return r;
        });
      }
    }
  }
  return out;
}

Campaign plan_gamma_reflection(const CaseConfig& c, SeededStream& rng) {
  Campaign out;
  const long long draws = c.integer("draws", 40);
  const auto ps = odd_primes(c, {3, 5, 7, 11, 13});
  for (long long d = 0; d < draws; ++d) {
    const std::uint64_t p = ps[rng.below(ps.size())];
    const unsigned M = 4 + static_cast<unsigned>(rng.below(5));
    Rational x;
    do x = random_fraction(rng, R(-3), R(3), 16);
    while (!p_integral(x, p));
    out.tasks.push_back([=, id = c.id] {
      CaseRecord r = start(id, std::to_string(p), "x=" + str(x) + " M=" + std::to_string(M));
      PAdic lhs = gamma_p(x, p, M) * gamma_p(1 - x, p, M);
      const std::uint64_t x0 = reflection_index(x, p);
      Integer rhs = x0 % 2 ? -1 : 1;
      settle_integers(r, lhs.symmetric_lift(M), rhs);
      return r;
    });
  }
  return out;
}

Campaign plan_gamma_product(const CaseConfig& c, SeededStream& rng) {
  Campaign out;
  const unsigned M = static_cast<unsigned>(c.integer("M", 6));
  // Exhaustive unless draws_r2 caps the r = 2 sweep.
  const long long draws_r2 = c.integer("draws_r2", 0);
  for (auto p : odd_primes(c, {5, 7, 11, 13})) {
    for (long long n : c.integers("n", {2, 3, 4})) {
      if (n <= 0 || static_cast<std::uint64_t>(n) % p == 0) continue;
      for (unsigned r : {1u, 2u}) {
        const std::uint64_t q1 = ipow(p, r) - 1;
        std::vector<std::size_t> ks;
        if (r == 2 && draws_r2 > 0) {
          ks = sample(rng, q1, static_cast<std::size_t>(draws_r2));
        } else {
          ks.resize(q1);
          std::iota(ks.begin(), ks.end(), 0);
        }
        for (auto k : ks) {
          out.tasks.push_back([=, id = c.id] {
            Rational x(static_cast<unsigned long>(k), static_cast<unsigned long>(q1));
            x.canonicalize();
            CaseRecord rec = start(id, std::to_string(q1 + 1), "n=" + std::to_string(n) + " x=" + str(x));
            auto pr = gk_product_pair(x, static_cast<unsigned>(n), p, r, M);
            rec.lhs = pr.lhs.to_string();
            rec.rhs = pr.rhs.to_string();
            PAdic d = pr.lhs - pr.rhs;
            rec.residual = d.to_string();
            settle(rec, pr.lhs.congruent(pr.rhs, M));
            return rec;
          });
        }
      }
    }
  }
  return out;
}

Campaign plan_digit_parity(const CaseConfig& c, SeededStream& rng) {
  Campaign out;
  const long long draws = c.integer("draws", 200);
  const std::vector<std::uint64_t> ps = {3, 5, 7, 11, 13};
  for (long long d = 0; d < draws; ++d) {
    const std::uint64_t p = ps[rng.below(ps.size())];
    switch (d % 3) {
      case 0: {
        // Digit expansion: <a p^j>_0 and floor(a p^j) from the digits.
        const unsigned f = 1 + static_cast<unsigned>(rng.below(3));
        const std::uint64_t pf1 = ipow(p, f) - 1;
        const std::uint64_t k = 1 + rng.below(pf1 - 1);
        const unsigned j = static_cast<unsigned>(rng.below(f));
        out.tasks.push_back([=, id = c.id] {
          Rational a(static_cast<unsigned long>(k), static_cast<unsigned long>(pf1));
          a.canonicalize();
          CaseRecord r = start(id, std::to_string(p),
                               "digits a=" + str(a) + " f=" + std::to_string(f) + " j=" + std::to_string(j));
          auto de = digit_expansion(a, p, f);
          Rational apj = a * Rational(static_cast<unsigned long>(ipow(p, j)));
          const bool ok = de.frac0(j) == frac_index0(a, p, j) && de.floor_apj(j) == floor_of(apj);
          r.lhs = std::to_string(de.frac0(j)) + "," + str(de.floor_apj(j));
          r.rhs = std::to_string(frac_index0(a, p, j)) + "," + str(floor_of(apj));
          r.residual = ok ? "0" : "mismatch";
          settle(r, ok);
          return r;
        });
        break;
      }
      case 1: {
        const unsigned f = 1 + static_cast<unsigned>(rng.below(3));
        const unsigned rr = 1 + static_cast<unsigned>(rng.below(f));
        const std::uint64_t pf1 = ipow(p, f) - 1;
        const std::uint64_t k = 1 + rng.below(pf1 - 1);
        out.tasks.push_back([=, id = c.id] {
          Rational a(static_cast<unsigned long>(k), static_cast<unsigned long>(pf1));
          a.canonicalize();
          CaseRecord r = start(id, std::to_string(p),
                               "sum a=" + str(a) + " r=" + std::to_string(rr) + " f=" + std::to_string(f));
          auto pr = gk0_parity_sums(a, p, rr, f);
          r.lhs = std::to_string(pr.lhs);
          r.rhs = std::to_string(pr.rhs);
          r.residual = "mod " + std::to_string(pr.modulus);
          settle(r, pr.holds());
          return r;
        });
        break;
      }
      default: {
        // l >= 3 prime to p with q = p^r not 1 mod l.
        std::uint64_t l;
        unsigned rr;
        do {
          l = 3 + rng.below(14);
          rr = 1 + static_cast<unsigned>(rng.below(2));
        } while (l % p == 0 || ipow(p, rr) % l == 1);
        const std::uint64_t q1 = ipow(p, rr) - 1;
        const long long j = static_cast<long long>(rng.below(q1));
        out.tasks.push_back([=, id = c.id] {
          CaseRecord r = start(id, std::to_string(ipow(p, rr)), "tl l=" + std::to_string(l) + " j=" + std::to_string(j));
          auto pr = tl_parity_sum(l, p, rr, j);
          r.lhs = std::to_string(pr.lhs);
          r.rhs = std::to_string(pr.rhs);
          r.residual = "mod " + std::to_string(pr.modulus);
          settle(r, pr.holds());
          return r;
        });
      }
    }
  }
  return out;
}

// ----------------------------------------------------------------------------
// Property suites

Campaign plan_g_invariance(const CaseConfig& c, SeededStream& rng) {
  Campaign out;
  const long long draws = c.integer("draws", 150);
  const unsigned M = static_cast<unsigned>(c.integer("M", 5));
  const std::vector<std::uint64_t> ps = {3, 5, 7, 11, 13};
  for (long long d = 0; d < draws; ++d) {
    const std::uint64_t p = ps[rng.below(ps.size())];
    const unsigned r = rng.below(4) == 0 ? 2 : 1;
    const std::uint64_t q = ipow(p, r);
    const unsigned m = 1 + static_cast<unsigned>(rng.below(3));
    GParams base, moved;
    for (unsigned i = 0; i < m; ++i) {
      Rational a, b;
      do a = random_fraction(rng, R(0), R(1), 8);
      while (!p_integral(a, p));
      do b = random_fraction(rng, R(0), R(1), 8);
      while (!p_integral(b, p));
      base.a.push_back(a);
      base.b.push_back(b);
    }
    // Integer shifts, then independent permutations of each row.
    moved = base;
    for (auto& x : moved.a) x += Rational(static_cast<long>(rng.below(7)) - 3);
    for (auto& x : moved.b) x += Rational(static_cast<long>(rng.below(7)) - 3);
    for (std::size_t i = moved.a.size(); i > 1; --i) std::swap(moved.a[i - 1], moved.a[rng.below(i)]);
    for (std::size_t i = moved.b.size(); i > 1; --i) std::swap(moved.b[i - 1], moved.b[rng.below(i)]);
    const long long k = static_cast<long long>(rng.below(q - 1));
    out.tasks.push_back([=, id = c.id] {
      FieldPtr F = FiniteField::make(static_cast<std::uint32_t>(p), r);
      FieldElement lambda = F->exp(k);
      CaseRecord rec = start(id, std::to_string(q),
                             family_str(base) + " moved " + family_str(moved) + " lambda=" + elem(*F, lambda));
      auto x = g_eval_unramified(base, lambda, F, M);
      auto y = g_eval_unramified(moved, lambda, F, M);
      settle_zq(rec, x, y, x - y);
      return rec;
    });
  }
  return out;
}

Campaign plan_pochhammer(const CaseConfig& c, SeededStream& rng) {
  Campaign out;
  const long long draws = c.integer("draws", 150);
  for (long long d = 0; d < draws; ++d) {
    const Rational a = random_fraction(rng, R(-5), R(5), 12);
    const unsigned n = 1 + static_cast<unsigned>(rng.below(5));
    const unsigned k = static_cast<unsigned>(rng.below(31));
    out.tasks.push_back([=, id = c.id] {
      CaseRecord r = start(id, "-", "a=" + str(a) + " n=" + std::to_string(n) + " k=" + std::to_string(k));
      Rational res = pochhammer_identity_residual(a, n, k);
      r.lhs = "(a)_{nk}";
      r.rhs = "n^{nk} prod_l (a/n + l/n)_k";
      r.residual = str(res);
      settle(r, res == 0);
      return r;
    });
  }
  return out;
}

Campaign plan_hermite(const CaseConfig& c, SeededStream& rng) {
  Campaign out;
  const long long draws = c.integer("draws", 100);
  for (long long d = 0; d < draws; ++d) {
    const Rational x = random_fraction(rng, R(-20), R(20), 30);
    const unsigned m = 1 + static_cast<unsigned>(rng.below(12));
    out.tasks.push_back([=, id = c.id] {
      CaseRecord r = start(id, "-", "x=" + str(x) + " m=" + std::to_string(m));
      Integer res = hermite_residual(x, m);
      r.lhs = str(floor_of(Rational(static_cast<unsigned long>(m)) * x));
      r.rhs = str(Integer(floor_of(Rational(static_cast<unsigned long>(m)) * x) - res));
      r.residual = str(res);
      settle(r, res == 0);
      return r;
    });
  }
  return out;
}

Campaign plan_hasse_bound(const CaseConfig& c, SeededStream& rng) {
  Campaign out;
  const long long draws = c.integer("draws", 100);
  const auto ps = primes_up_to(5, 101);
  for (long long d = 0; d < draws; ++d) {
    const auto p = static_cast<std::uint64_t>(ps[rng.below(ps.size())]);
    EllipticCurve E;
    do {
      E = {Rational(static_cast<long>(rng.below(11)) - 5), Rational(static_cast<long>(rng.below(21)) - 10),
           Rational(static_cast<long>(rng.below(21)) - 10)};
    } while (!E.good_reduction(p));
    out.tasks.push_back([=, id = c.id] {
      CaseRecord r = start(id, std::to_string(p), "y^2=x^3+(" + str(E.c2) + ")x^2+(" + str(E.c1) + ")x+(" + str(E.c0) + ")");
      const long long a = ec_trace(E, p);
      r.lhs = std::to_string(a * a);
      r.rhs = std::to_string(4 * p);
      r.residual = "a_p=" + std::to_string(a);
      settle(r, a * a <= static_cast<long long>(4 * p));
      return r;
    });
  }
  return out;
}

// ----------------------------------------------------------------------------
// Registry

struct Entry {
  IdentityInfo info;
  std::function<Campaign(const CaseConfig&, SeededStream&)> plan;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {{"ff_split", "finite-field splitting: sum over zeta_n^l lambda equals one nm-order value at lambda^n"}, plan_ff_split},
      {{"ff_converse", "finite-field split value vanishes at non-n-th powers"}, plan_ff_converse},
      {{"ff_over_Q", "defined-over-Q j-sum form agrees with the Gauss-sum definition"}, plan_ff_over_Q},
      {{"fg_consistency", "F at 1/lambda agrees with G at lambda in Z_q"}, plan_fg_consistency},
      {{"g_over_Q", "Gamma_p form of G for defined-over-Q parameters agrees with the definition"}, plan_g_over_Q},
      {{"g_split", "p-adic splitting of G"}, plan_g_split},
      {{"g_converse", "p-adic split value vanishes at non-n-th powers"}, plan_g_converse},
      {{"classical_split", "classical splitting of mFm"}, plan_classical_split},
      {{"gauss_conjugation", "g(chi) g(chi^-1) = chi(-1) q"}, plan_gauss_conjugation},
      {{"hasse_davenport", "Hasse-Davenport product formula"}, plan_hasse_davenport},
      {{"orthogonality", "sum of chi over n-th roots of unity"}, plan_orthogonality},
      {{"gamma_reflection", "Gamma_p(x) Gamma_p(1-x) = (-1)^{x_0}"}, plan_gamma_reflection},
      {{"gamma_product", "Gamma_p multiplication formula"}, plan_gamma_product},
      {{"digit_parity", "p-adic digit lemmas and parity sums"}, plan_digit_parity},
      {{"g_invariance", "G depends only on fractional parts and not on row order"}, plan_g_invariance},
      {{"pochhammer", "(a)_{nk} = n^{nk} prod_l (a/n + l/n)_k"}, plan_pochhammer},
      {{"hermite", "Hermite's identity floor(mx) = sum_h floor(x + h/m)"}, plan_hermite},
      {{"hasse_bound", "|a_p| <= 2 sqrt(p) for point counts"}, plan_hasse_bound},
      // Applications.
      {{"ff_reduction_m2", "reduction of 4F4 at 1 (m = 2)"},
       [](const CaseConfig& c, SeededStream& g) { return plan_ff_reduction(c, g, FFReduction::M2); }},
      {{"ff_reduction_m3", "reduction of 6F6 at 1 (m = 3)"},
       [](const CaseConfig& c, SeededStream& g) { return plan_ff_reduction(c, g, FFReduction::M3); }},
      {{"ff_reduction_m4", "reduction of 8F8 at 1 (m = 4), conditional on the 3F2 normalization", false},
       [](const CaseConfig& c, SeededStream& g) { return plan_ff_reduction(c, g, FFReduction::M4); }},
      {{"g_phi2_values", "4G4[1/4,3/4,1/4,3/4;1,1/2,1,1/2|1] = -1, 1+2x, 1-2x"}, plan_g_phi2_values},
      {{"g_phi3_values", "6G6 quarter family at 1 via x^2+y^2 and u^2+2v^2"}, plan_g_phi3_values},
      {{"g_phi2_modular", "4G4 quarter family at 1 = phi(-1) + a_p(eta^2(4z)eta^2(8z))"}, plan_g_phi2_modular},
      {{"g_phi3_modular", "6G6 quarter family at 1 = a_p(eta^6(4z)) + phi(2)(a_p(E_8)^2 - p)"}, plan_g_phi3_modular},
      {{"ono_elliptic", "3G3[1/2^3;1^3|(4-t)/4] = phi(t^2-4t)(a_p(E_t)^2 - p)"}, plan_ono_elliptic},
      {{"g_phi3_twisted", "6G6 quarter family at 1/64, 64, 1/16, 16, 1/4096, 4096 via two curves"}, plan_g_phi3_twisted},
      {{"trace_single", "a_p(E_{a,b}) = phi(b) p 2G2[1/4,3/4;1/3,2/3|-27b^2/(4a^3)]"}, plan_trace_single},
      {{"trace_pair", "p 4G4[1/8,5/8,3/8,7/8;1/6,2/3,1/3,5/6|3^6b^4/(2^4a^6)] = phi(b)(a_p(E_{a,b}) + a_p(E_{-a,b}))"},
       [](const CaseConfig& c, SeededStream& g) { return plan_trace_pair(c, g, {{1, 1}, {1, 2}, {2, 1}, {1, -1}}); }},
      {{"trace_example", "trace_pair at a = b = 1 (curves y^2 = x^3 +/- x + 1)"},
       [](const CaseConfig& c, SeededStream& g) { return plan_trace_pair(c, g, {{1, 1}}); }},
      {{"g_phi4_modular", "8G8 quarter family at 1 = a_p(eta^4(2z)eta^4(4z)) + a_p(eta^2(4z)eta^2(8z)) c_p + p"},
       plan_g_phi4_modular},
      {{"classical_reduction_m2", "classical 4F4 at 1 as Gamma quotients, b < 1/4"},
       [](const CaseConfig& c, SeededStream& g) { return plan_classical_reduction(c, g, ClassicalReduction::M2); }},
      {{"classical_reduction_m3", "classical 6F6 at 1 as Gamma quotients"},
       [](const CaseConfig& c, SeededStream& g) { return plan_classical_reduction(c, g, ClassicalReduction::M3); }},
      {{"classical_reduction_m4", "classical 8F8 at 1 via a 3F2 at 1, b < 1/8"},
       [](const CaseConfig& c, SeededStream& g) { return plan_classical_reduction(c, g, ClassicalReduction::M4); }},
  };
  return table;
}

}  // namespace

const std::vector<IdentityInfo>& identity_registry() {
  static const std::vector<IdentityInfo> infos = [] {
    std::vector<IdentityInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

const IdentityInfo* find_identity(std::string_view id) {
  for (const auto& info : identity_registry())
    if (info.id == id) return &info;
  return nullptr;
}

Campaign plan_campaign(const CaseConfig& config, std::uint64_t seed) {
  for (const auto& e : entries()) {
    if (e.info.id != config.id) continue;
    SeededStream rng(seed);
    return e.plan(config, rng);
  }
  fail(ErrorKind::UnknownIdentity, "unknown identity '" + config.id + "'");
}

}  // namespace hypersplit
