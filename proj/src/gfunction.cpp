// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "hypersplit/gfunction.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "hypersplit/charsum.hpp"
#include "hypersplit/errors.hpp"

namespace hypersplit {

namespace {

// One j-term: sign * unit * p^pexp * omega(g)^root.
struct JTerm {
  int sign = 1;
  long long pexp = 0;
  std::uint64_t unit = 1;
  long long root = 0;
};

class GammaMemo {
 public:
  GammaMemo(std::uint64_t p, unsigned N) : p_(p), N_(N), mod_(padic_modulus(p, N)) {}

  std::uint64_t operator()(const Rational& x) {
    std::uint64_t n = residue(x, mod_);
    auto it = memo_.find(n);
    if (it != memo_.end()) return it->second;
    std::uint64_t v = gamma_p_integer(n, p_, N_);
    memo_.emplace(n, v);
    return v;
  }

  std::uint64_t modulus() const { return mod_; }

 private:
  std::uint64_t p_;
  unsigned N_;
  std::uint64_t mod_;
  std::unordered_map<std::uint64_t, std::uint64_t> memo_;
};

void check_params(const std::vector<Rational>& xs, std::uint64_t p) {
  for (const auto& x : xs)
    if (Integer(x.get_den()) % static_cast<unsigned long>(p) == 0)
      fail(ErrorKind::NotPIntegral, "parameter " + x.get_str() + " is not in Z_p");
}

void check_field(const FiniteField& F) {
  if (F.p() == 2) fail(ErrorKind::EvenPrime, "the p-adic function needs odd p");
}

Rational pk(std::uint64_t p, unsigned k) {
  Integer x = 1;
  for (unsigned i = 0; i < k; ++i) x *= static_cast<unsigned long>(p);
  return Rational(x);
}

// The plain-form factor for a top parameter a at (j, k):
// Gamma_p(<(a - j/Q) p^k>) / Gamma_p(<a p^k>) * (-p)^{-floor(<a p^k> - j p^k / Q)}.
// Exponents are gathered first so the working precision can absorb negative ones.
struct PlainPart {
  std::vector<Rational> top, bottom;
};

long long plain_exponent(const PlainPart& part, long long j, std::uint64_t Q, std::uint64_t p, unsigned r) {
  long long e = 0;
  for (unsigned k = 0; k < r; ++k) {
    Rational y(Integer(static_cast<long>(j)) * pk(p, k).get_num(), Integer(static_cast<unsigned long>(Q)));
    y.canonicalize();
    for (const auto& a : part.top) e -= to_int64(floor_of(frac(a * pk(p, k)) - y));
    for (const auto& b : part.bottom) e -= to_int64(floor_of(frac(-b * pk(p, k)) + y));
  }
  return e;
}

std::uint64_t plain_unit(const PlainPart& part, long long j, std::uint64_t Q, std::uint64_t p, unsigned r,
                         GammaMemo& G) {
  const std::uint64_t mod = G.modulus();
  std::uint64_t num = 1, den = 1;
  for (unsigned k = 0; k < r; ++k) {
    const Rational P = pk(p, k);
    const Rational jq(Integer(static_cast<long>(j)), Integer(static_cast<unsigned long>(Q)));
    for (const auto& a : part.top) {
      num = mulmod(num, G(frac((a - jq) * P)), mod);
      den = mulmod(den, G(frac(a * P)), mod);
    }
    for (const auto& b : part.bottom) {
      num = mulmod(num, G(frac((-b + jq) * P)), mod);
      den = mulmod(den, G(frac(-b * P)), mod);
    }
  }
  return mulmod(num, invmod(den, mod), mod);
}

UnramifiedPAdic sum_terms(const FieldPtr& F, unsigned M, const std::vector<long long>& exps,
                          const std::function<JTerm(long long, GammaMemo&)>& make_term) {
  const std::uint64_t p = F->p();
  const std::uint64_t Q = F->q() - 1;
  long long e_min = *std::min_element(exps.begin(), exps.end());
  const unsigned N = M + static_cast<unsigned>(std::max<long long>(0, -e_min));
  if (N > max_padic_precision(p)) fail(ErrorKind::PrecisionExhausted, "working precision exceeds the supported modulus");
  ZqRing R(F, N);
  GammaMemo G(p, N);
  const std::uint64_t mod = R.modulus();
  ZqRing::Elem acc = R.zero();
  for (long long j = 0; j < static_cast<long long>(Q); ++j) {
    JTerm t = make_term(j, G);
    long long shift = t.pexp - e_min;
    if (shift >= static_cast<long long>(N)) continue;
    std::uint64_t c = mulmod(t.unit % mod, padic_modulus(p, static_cast<unsigned>(shift)), mod);
    if (t.sign < 0) c = (mod - c) % mod;
    acc = R.add(acc, R.scale(R.omega_generator_power(t.root), c));
  }
  // -1/(q-1)
  std::uint64_t inv = invmod(Q % mod, mod);
  acc = R.scale(acc, (mod - inv) % mod);
  UnramifiedPAdic out;
  out.p = p;
  out.val = e_min;
  out.prec = N;
  out.comps = acc;
  return out;
}

}  // namespace

UnramifiedPAdic g_eval_unramified(const GParams& params, FieldElement lambda, const FieldPtr& F, unsigned M) {
  check_field(*F);
  if (params.a.size() != params.b.size()) fail(ErrorKind::DomainViolation, "top and bottom rows differ in length");
  check_params(params.a, F->p());
  check_params(params.b, F->p());
  const std::uint64_t p = F->p(), Q = F->q() - 1;
  const unsigned r = F->r();
  if (lambda.is_zero()) {
    UnramifiedPAdic z{p, static_cast<long>(M), 0, std::vector<std::uint64_t>(r, 0)};
    return z;
  }
  PlainPart part{params.a, params.b};
  const std::size_t m = params.a.size();
  const long long L = F->dlog(lambda);
  std::vector<long long> exps(Q);
  for (long long j = 0; j < static_cast<long long>(Q); ++j) exps[j] = plain_exponent(part, j, Q, p, r);
  return sum_terms(F, M, exps, [&](long long j, GammaMemo& G) {
    JTerm t;
    t.pexp = exps[j];
    t.unit = plain_unit(part, j, Q, p, r, G);
    int s = (j * static_cast<long long>(m)) % 2 == 0 ? 1 : -1;
    if (t.pexp % 2 != 0) s = -s;
    t.sign = s;
    t.root = -j * L;
    return t;
  });
}

PAdic g_eval(const GParams& params, FieldElement lambda, const FieldPtr& F, unsigned M) {
  return g_eval_unramified(params, lambda, F, M).to_padic();
}

UnramifiedPAdic g_eval_over_Q_unramified(const DefinedOverQData& data, const std::vector<Rational>& extra_a,
                                         const std::vector<Rational>& extra_b, FieldElement lambda,
                                         const FieldPtr& F, unsigned M) {
  check_field(*F);
  const std::uint64_t p = F->p(), Q = F->q() - 1, q = F->q();
  const unsigned r = F->r();
  if (data.conductor() % p == 0) fail(ErrorKind::NotPIntegral, "defined-over-Q denominators divisible by p");
  check_params(extra_a, p);
  check_params(extra_b, p);
  if (data.m_top + extra_a.size() != data.m_bottom + extra_b.size())
    fail(ErrorKind::DomainViolation, "top and bottom rows differ in length");
  if (lambda.is_zero()) return UnramifiedPAdic{p, static_cast<long>(M), 0, std::vector<std::uint64_t>(r, 0)};

  const std::size_t m = data.m_top + extra_a.size();
  PlainPart part{extra_a, extra_b};
  FieldElement Ml = F->mul(F->from_int(static_cast<long long>(residue(data.M, p))), lambda);
  const long long L = F->dlog(Ml);
  const long long s0 = static_cast<long long>(data.s_at(0, q));

  // floor(-j p_i p^k / Q) and floor(j q_i p^k / Q) as exact integers.
  auto over_Q_exponent = [&](long long j) {
    long long e = static_cast<long long>(r) * (static_cast<long long>(data.s_at(j, q)) - s0);
    for (unsigned k = 0; k < r; ++k) {
      Integer P = pk(p, k).get_num();
      for (auto pi : data.p_exps) {
        Rational x(Integer(static_cast<long>(-j)) * static_cast<unsigned long>(pi) * P, Integer(static_cast<unsigned long>(Q)));
        e -= to_int64(floor_of(x));
      }
      for (auto qi : data.q_exps) {
        Rational x(Integer(static_cast<long>(j)) * static_cast<unsigned long>(qi) * P, Integer(static_cast<unsigned long>(Q)));
        e -= to_int64(floor_of(x));
      }
    }
    return e;
  };
  std::vector<long long> exps(Q), odd(Q);
  for (long long j = 0; j < static_cast<long long>(Q); ++j) {
    long long e_gamma = over_Q_exponent(j) - static_cast<long long>(r) * (static_cast<long long>(data.s_at(j, q)) - s0);
    long long e_plain = plain_exponent(part, j, Q, p, r);
    exps[j] = over_Q_exponent(j) + e_plain;
    // The q-power carries no sign; only the (-p) exponents do.
    odd[j] = (e_gamma + e_plain) % 2 != 0;
  }
  return sum_terms(F, M, exps, [&](long long j, GammaMemo& G) {
    JTerm t;
    t.pexp = exps[j];
    const std::uint64_t mod = G.modulus();
    std::uint64_t u = plain_unit(part, j, Q, p, r, G);
    for (unsigned k = 0; k < r; ++k) {
      Integer P = pk(p, k).get_num();
      for (auto pi : data.p_exps)
        u = mulmod(u, G(frac(Rational(Integer(static_cast<long>(-j)) * static_cast<unsigned long>(pi) * P,
                                      Integer(static_cast<unsigned long>(Q))))), mod);
      for (auto qi : data.q_exps)
        u = mulmod(u, G(frac(Rational(Integer(static_cast<long>(j)) * static_cast<unsigned long>(qi) * P,
                                      Integer(static_cast<unsigned long>(Q))))), mod);
    }
    t.unit = u;
    int s = (j * static_cast<long long>(m + data.delta)) % 2 == 0 ? 1 : -1;
    if (odd[j]) s = -s;
    t.sign = s;
    t.root = -j * L;
    return t;
  });
}

PAdic g_eval_over_Q(const DefinedOverQData& data, const std::vector<Rational>& extra_a,
                    const std::vector<Rational>& extra_b, FieldElement lambda, const FieldPtr& F, unsigned M) {
  return g_eval_over_Q_unramified(data, extra_a, extra_b, lambda, F, M).to_padic();
}

GParams split_g_params(const GParams& base, unsigned n) {
  GParams out;
  for (const auto& a : base.a)
    for (unsigned l = 0; l < n; ++l) out.a.push_back(frac(a + make_rational(static_cast<long>(l), static_cast<long>(n))));
  for (const auto& b : base.b)
    for (unsigned l = 0; l < n; ++l) out.b.push_back(frac(b + make_rational(static_cast<long>(l), static_cast<long>(n))));
  return out;
}

GSplitResult g_split_residual(const GParams& base, unsigned n, FieldElement lambda, const FieldPtr& F,
                              unsigned M, SplitMode mode) {
  if ((F->q() - 1) % n != 0) fail(ErrorKind::OrderDoesNotDivide, "q is not 1 mod n");
  GParams big = split_g_params(base, n);
  if (mode == SplitMode::Converse) {
    if (lambda.is_zero() || F->is_nth_power(lambda, n))
      fail(ErrorKind::PreconditionViolated, "converse mode needs lambda that is not an n-th power");
    UnramifiedPAdic rhs = g_eval_unramified(big, lambda, F, M);
    UnramifiedPAdic zero{F->p(), static_cast<long>(M), 0, std::vector<std::uint64_t>(F->r(), 0)};
    return {zero, rhs, rhs};
  }
  GParams small;
  for (const auto& a : base.a) small.a.push_back(frac(a * Rational(n)));
  for (const auto& b : base.b) small.b.push_back(frac(b * Rational(n)));
  derive_defined_over_Q(small.a, small.b);
  FieldElement z = F->primitive_root_of_unity(n);
  UnramifiedPAdic lhs = g_eval_unramified(small, lambda, F, M);
  FieldElement arg = lambda;
  for (unsigned l = 1; l < n; ++l) {
    arg = F->mul(arg, z);
    lhs = lhs + g_eval_unramified(small, arg, F, M);
  }
  UnramifiedPAdic rhs = g_eval_unramified(big, F->pow(lambda, n), F, M);
  return {lhs, rhs, lhs - rhs};
}

UnramifiedPAdic cyclotomic_to_Zq(const CycNumber& x, const FieldPtr& F, unsigned M) {
  const std::uint64_t p = F->p(), Q = F->q() - 1;
  const unsigned idx = x.index();
  if (Q % idx != 0) fail(ErrorKind::NotASubfieldIndex, "number field is not inside Q(zeta_{q-1})");
  Integer den = x.denominator();
  long v = 0;
  while (den % static_cast<unsigned long>(p) == 0) {
    den /= static_cast<unsigned long>(p);
    ++v;
  }
  const unsigned N = M + static_cast<unsigned>(v);
  ZqRing R(F, N);
  const std::uint64_t mod = R.modulus();
  ZqRing::Elem acc = R.zero();
  const long long step = static_cast<long long>(Q / idx);
  for (std::size_t i = 0; i < x.numerators().size(); ++i) {
    const Integer& c = x.numerators()[i];
    if (c == 0) continue;
    std::uint64_t cm = residue(Rational(c), mod);
    acc = R.add(acc, R.scale(R.omega_generator_power(step * static_cast<long long>(i)), cm));
  }
  acc = R.scale(acc, residue(Rational(Integer(1), den), mod));
  return UnramifiedPAdic{p, -v, N, acc};
}

FGResult fg_consistency(const GParams& params, FieldElement lambda, const FieldPtr& F, unsigned M) {
  const std::uint64_t Q = F->q() - 1;
  if (lambda.is_zero()) fail(ErrorKind::DomainViolation, "lambda must be nonzero");
  auto T = CharacterTables::get(F);
  FFHyperParams fp;
  auto exponent = [&](const Rational& a) {
    Rational e = frac(a) * Rational(static_cast<unsigned long>(Q));
    if (e.get_den() != 1) fail(ErrorKind::DomainViolation, "q is not 1 mod the parameter denominators");
    return -to_int64(e.get_num());
  };
  for (const auto& a : params.a) fp.top.push_back(exponent(a));
  for (const auto& b : params.b) fp.bottom.push_back(exponent(b));
  FGResult out;
  out.f_value = ff_hyper(*T, fp, lambda);
  out.f_padic = cyclotomic_to_Zq(out.f_value, F, M);
  out.g_value = g_eval_unramified(params, F->inv(lambda), F, M);
  out.residual = out.f_padic - out.g_value;
  return out;
}

}  // namespace hypersplit
