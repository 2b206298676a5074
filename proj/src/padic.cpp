// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "hypersplit/padic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hypersplit/errors.hpp"

namespace hypersplit {

std::uint64_t padic_modulus(std::uint64_t p, unsigned N) {
  std::uint64_t m = 1;
  for (unsigned i = 0; i < N; ++i) {
    if (m > kMaxPAdicModulus / p) fail(ErrorKind::PrecisionExhausted, "p^N exceeds the supported modulus");
    m *= p;
  }
  return m;
}

unsigned max_padic_precision(std::uint64_t p) {
  unsigned N = 0;
  std::uint64_t m = 1;
  while (m <= kMaxPAdicModulus / p) {
    m *= p;
    ++N;
  }
  return N;
}

namespace {

std::uint64_t ipow_mod_free(std::uint64_t p, unsigned k) { return padic_modulus(p, k); }

// Strip factors of p from x (nonzero), returning the count.
unsigned strip(std::uint64_t& x, std::uint64_t p) {
  unsigned k = 0;
  while (x % p == 0) {
    x /= p;
    ++k;
  }
  return k;
}

}  // namespace

PAdic PAdic::zero(std::uint64_t p, long absolute_precision) {
  PAdic z;
  z.p_ = p;
  z.val_ = absolute_precision;
  return z;
}

PAdic PAdic::from_unit(std::uint64_t p, std::uint64_t unit, unsigned prec, long val) {
  if (prec == 0) return zero(p, val);
  std::uint64_t mod = padic_modulus(p, prec);
  unit %= mod;
  if (unit % p == 0) fail(ErrorKind::DomainViolation, "unit part divisible by p");
  PAdic x;
  x.p_ = p;
  x.val_ = val;
  x.unit_ = unit;
  x.prec_ = prec;
  return x;
}

PAdic PAdic::from_rational(const Rational& x, std::uint64_t p, unsigned prec) {
  if (x == 0) return zero(p, prec);
  long v = hypersplit::valuation(x, p);
  Rational u = x;
  Rational pp(static_cast<unsigned long>(p));
  for (long i = 0; i < v; ++i) u /= pp;
  for (long i = 0; i > v; --i) u *= pp;
  std::uint64_t mod = padic_modulus(p, prec);
  return from_unit(p, hypersplit::residue(u, mod), prec, v);
}

std::vector<unsigned> PAdic::digits() const {
  std::vector<unsigned> d;
  std::uint64_t u = unit_;
  for (unsigned i = 0; i < prec_; ++i) {
    d.push_back(static_cast<unsigned>(u % p_));
    u /= p_;
  }
  return d;
}

std::uint64_t PAdic::residue(unsigned k) const {
  if (static_cast<long>(k) > absolute_precision())
    fail(ErrorKind::PrecisionExhausted, "requested more digits than known");
  if (is_zero() || val_ >= static_cast<long>(k)) return 0;
  if (val_ < 0) fail(ErrorKind::NotPIntegral, "value is not p-integral");
  std::uint64_t mod = padic_modulus(p_, k);
  return mulmod(unit_ % mod, padic_modulus(p_, static_cast<unsigned>(val_)), mod);
}

Integer PAdic::symmetric_lift(unsigned k) const {
  Integer r(static_cast<unsigned long>(residue(k)));
  Integer mod(static_cast<unsigned long>(padic_modulus(p_, k)));
  if (2 * r > mod) r -= mod;
  return r;
}

bool PAdic::congruent(const PAdic& o, long k) const {
  PAdic d = *this - o;
  return d.is_zero() || d.valuation() >= k;
}

std::string PAdic::to_string() const {
  std::ostringstream os;
  if (is_zero()) {
    os << "O(" << p_ << "^" << val_ << ")";
    return os.str();
  }
  os << unit_;
  if (val_ != 0) os << "*" << p_ << "^" << val_;
  os << " + O(" << p_ << "^" << absolute_precision() << ")";
  return os.str();
}

PAdic PAdic::operator-() const {
  if (is_zero()) return *this;
  std::uint64_t mod = padic_modulus(p_, prec_);
  return from_unit(p_, (mod - unit_) % mod, prec_, val_);
}

PAdic operator+(const PAdic& a, const PAdic& b) {
  if (a.p_ != b.p_) fail(ErrorKind::DomainViolation, "mixed primes");
  const long N = std::min(a.absolute_precision(), b.absolute_precision());
  if (a.is_zero() && b.is_zero()) return PAdic::zero(a.p_, N);
  long v = std::min(a.is_zero() ? N : a.val_, b.is_zero() ? N : b.val_);
  if (N <= v) return PAdic::zero(a.p_, N);
  const unsigned k = static_cast<unsigned>(N - v);
  const std::uint64_t mod = padic_modulus(a.p_, k);
  auto shifted = [&](const PAdic& x) -> std::uint64_t {
    if (x.is_zero() || x.val_ >= N) return 0;
    return mulmod(x.unit_ % mod, ipow_mod_free(a.p_, static_cast<unsigned>(x.val_ - v)), mod);
  };
  std::uint64_t s = (shifted(a) + shifted(b)) % mod;
  if (s == 0) return PAdic::zero(a.p_, N);
  unsigned e = strip(s, a.p_);
  return PAdic::from_unit(a.p_, s, k - e, v + static_cast<long>(e));
}

PAdic operator-(const PAdic& a, const PAdic& b) { return a + (-b); }

PAdic operator*(const PAdic& a, const PAdic& b) {
  if (a.p_ != b.p_) fail(ErrorKind::DomainViolation, "mixed primes");
  if (a.is_zero() || b.is_zero()) {
    // A zero's val is its absolute precision.
    return PAdic::zero(a.p_, a.val_ + b.val_);
  }
  unsigned k = std::min(a.prec_, b.prec_);
  std::uint64_t mod = padic_modulus(a.p_, k);
  return PAdic::from_unit(a.p_, mulmod(a.unit_ % mod, b.unit_ % mod, mod), k, a.val_ + b.val_);
}

PAdic operator/(const PAdic& a, const PAdic& b) {
  if (a.p_ != b.p_) fail(ErrorKind::DomainViolation, "mixed primes");
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "p-adic division by zero");
  if (a.is_zero()) return PAdic::zero(a.p_, a.val_ - b.val_);
  unsigned k = std::min(a.prec_, b.prec_);
  std::uint64_t mod = padic_modulus(a.p_, k);
  std::uint64_t inv = invmod(b.unit_ % mod, mod);
  return PAdic::from_unit(a.p_, mulmod(a.unit_ % mod, inv, mod), k, a.val_ - b.val_);
}

PAdic padic_arith(const PAdic& a, const PAdic& b, PAdicOp op) {
  switch (op) {
    case PAdicOp::Add: return a + b;
    case PAdicOp::Sub: return a - b;
    case PAdicOp::Mul: return a * b;
    case PAdicOp::Div: return a / b;
  }
  fail(ErrorKind::DomainViolation, "unknown operation");
}

PAdic gamma_p(const Rational& x, std::uint64_t p, unsigned N) {
  if (N == 0) fail(ErrorKind::PrecisionExhausted, "precision must be positive");
  std::uint64_t mod = padic_modulus(p, N);
  std::uint64_t n = hypersplit::residue(x, mod);
  return PAdic::from_unit(p, gamma_p_integer(n, p, N), N);
}

PAdic gamma_p_naive(const Rational& x, std::uint64_t p, unsigned N, std::uint64_t work_bound) {
  if (N == 0) fail(ErrorKind::PrecisionExhausted, "precision must be positive");
  std::uint64_t mod = padic_modulus(p, N);
  if (mod > work_bound) fail(ErrorKind::WorkBoundExceeded, "p^N exceeds the work bound");
  std::uint64_t n = hypersplit::residue(x, mod);
  std::uint64_t acc = 1;
  for (std::uint64_t j = 1; j < n; ++j)
    if (j % p != 0) acc = mulmod(acc, j, mod);
  if (n % 2 == 1) acc = (mod - acc) % mod;
  return PAdic::from_unit(p, acc, N);
}

std::uint64_t teichmuller(const Rational& u, std::uint64_t p, unsigned N) {
  std::uint64_t mod = padic_modulus(p, N);
  std::uint64_t x = hypersplit::residue(u, mod);
  if (x % p == 0) fail(ErrorKind::DomainViolation, "Teichmuller lift of a non-unit");
  // u^{p^{N-1}} agrees with the lift to N digits.
  for (unsigned i = 1; i < N; ++i) x = powmod(x, p, mod);
  return x;
}

std::uint64_t reflection_index(const Rational& x, std::uint64_t p) {
  std::uint64_t r = hypersplit::residue(x, p);
  return r == 0 ? p : r;
}

std::uint64_t frac_index0(const Rational& a, std::uint64_t p, unsigned j) {
  Rational x = a;
  for (unsigned i = 0; i < j; ++i) x *= Rational(static_cast<unsigned long>(p));
  return reflection_index(frac(x), p);
}

std::uint64_t DigitExpansion::frac0(unsigned j) const {
  if (j >= f) fail(ErrorKind::PreconditionViolated, "digit index out of range");
  return p - z[f - j];
}

Integer DigitExpansion::floor_apj(unsigned j) const {
  if (j >= f) fail(ErrorKind::PreconditionViolated, "digit index out of range");
  Integer acc = 0, pw = 1;
  for (unsigned i = 0; i < j; ++i) {
    acc += pw * static_cast<unsigned long>(z[f - j + i]);
    pw *= static_cast<unsigned long>(p);
  }
  return acc;
}

DigitExpansion digit_expansion(const Rational& a, std::uint64_t p, unsigned f) {
  if (!(a > 0 && a < 1)) fail(ErrorKind::PreconditionViolated, "a must lie in (0, 1)");
  if (f == 0) fail(ErrorKind::PreconditionViolated, "f must be positive");
  Integer pf = 1;
  for (unsigned i = 0; i < f; ++i) pf *= static_cast<unsigned long>(p);
  Rational t = Rational(pf - 1) * a;
  if (t.get_den() != 1) fail(ErrorKind::NotIntegralAtF, "(p^f - 1) a is not an integer");
  Integer v = t.get_num();
  DigitExpansion d;
  d.a = a;
  d.p = p;
  d.f = f;
  d.z.assign(f + 1, 0);
  // Units digit is z_f, then z_1, ..., z_{f-1}.
  for (unsigned i = 0; i < f; ++i) {
    Integer digit = v % static_cast<unsigned long>(p);
    v /= static_cast<unsigned long>(p);
    d.z[i == 0 ? f : i] = digit.get_ui();
  }
  return d;
}

bool ParityPair::holds() const {
  long long a = ((lhs % modulus) + modulus) % modulus;
  long long b = ((rhs % modulus) + modulus) % modulus;
  return a == b;
}

namespace {

long long mod_ll(const Integer& x, long long m) {
  Integer r = x % static_cast<long>(m);
  if (r < 0) r += static_cast<long>(m);
  return r.get_si();
}

}  // namespace

ParityPair gk0_parity_sums(const Rational& a, std::uint64_t p, unsigned r, unsigned f) {
  if (r == 0 || r > f) fail(ErrorKind::PreconditionViolated, "needs 1 <= r <= f");
  DigitExpansion d = digit_expansion(a, p, f);
  const long long m = static_cast<long long>(p) - 1;
  Integer lhs = 0;
  for (unsigned k = 0; k < r; ++k) lhs += static_cast<unsigned long>(d.frac0(k));
  Integer pf = 1;
  for (unsigned i = 0; i < f; ++i) pf *= static_cast<unsigned long>(p);
  Rational t = Rational(pf - 1) * a;
  Integer rhs = Integer(static_cast<unsigned long>(r)) - t.get_num() + floor_of(a * Rational(pf / static_cast<unsigned long>(p)));
  Integer pr = 1;
  for (unsigned i = 1; i < r; ++i) pr *= static_cast<unsigned long>(p);
  rhs -= floor_of(a * Rational(pr));
  return {mod_ll(lhs, m), mod_ll(rhs, m), m};
}

ParityPair tl_parity_sum(std::uint64_t l, std::uint64_t p, unsigned r, long long j, unsigned f_prime) {
  if (l < 3) fail(ErrorKind::PreconditionViolated, "needs l >= 3");
  if (p % 2 == 0 || !is_prime(p)) fail(ErrorKind::PreconditionViolated, "needs an odd prime p");
  if (std::gcd(p, l) != 1) fail(ErrorKind::PreconditionViolated, "needs gcd(p, l) = 1");
  Integer q = 1;
  for (unsigned i = 0; i < r; ++i) q *= static_cast<unsigned long>(p);
  Integer ql = q % static_cast<unsigned long>(l);
  if (ql == 1) fail(ErrorKind::PreconditionViolated, "needs q != 1 mod l");
  const std::uint64_t qmod = ql.get_ui();
  if (f_prime == 0) {
    f_prime = static_cast<unsigned>(multiplicative_order(qmod, l));
  } else if (powmod(qmod, f_prime, l) != 1) {
    fail(ErrorKind::PreconditionViolated, "needs q^{f'} = 1 mod l");
  }
  const unsigned f = r * f_prime;
  Integer pf1 = 1, pr1 = 1;
  for (unsigned i = 1; i < f; ++i) pf1 *= static_cast<unsigned long>(p);
  for (unsigned i = 1; i < r; ++i) pr1 *= static_cast<unsigned long>(p);
  Integer total = 0;
  for (std::uint64_t t = 1; t < l; ++t) {
    if (std::gcd(t, l) != 1) continue;
    Rational y(Integer(static_cast<long>(j)), q - 1);
    y.canonicalize();
    Rational x = frac(make_rational(static_cast<long>(t), static_cast<long>(l)) - y);
    total += floor_of(x * Rational(pf1)) - floor_of(x * Rational(pr1));
  }
  return {mod_ll(total, 2), 0, 2};
}

Integer hermite_residual(const Rational& x, unsigned m) {
  if (m == 0) fail(ErrorKind::PreconditionViolated, "m must be positive");
  Integer s = 0;
  for (unsigned h = 0; h < m; ++h) s += floor_of(x + make_rational(static_cast<long>(h), static_cast<long>(m)));
  return floor_of(Rational(static_cast<unsigned long>(m)) * x) - s;
}

GKProductPair gk_product_pair(const Rational& x, unsigned n, std::uint64_t p, unsigned r, unsigned N) {
  if (n == 0 || n % p == 0) fail(ErrorKind::PreconditionViolated, "n must be positive and prime to p");
  if (x < 0 || x >= 1) fail(ErrorKind::PreconditionViolated, "x must lie in [0, 1)");
  const Integer q1 = Integer(static_cast<unsigned long>(ipow(p, r) - 1));
  const Rational k = x * Rational(q1);
  if (k.get_den() != 1) fail(ErrorKind::PreconditionViolated, "(q-1) x must be an integer");
  const std::uint64_t mod = padic_modulus(p, N);
  std::uint64_t lhs = 1, rhs = 1;
  Rational pk = 1;
  for (unsigned i = 0; i < r; ++i, pk *= static_cast<unsigned long>(p)) {
    for (unsigned h = 0; h < n; ++h) {
      lhs = mulmod(lhs, gamma_p(frac((x + h) / Rational(n) * pk), p, N).unit(), mod);
      if (h > 0) rhs = mulmod(rhs, gamma_p(frac(make_rational(static_cast<long>(h), static_cast<long>(n)) * pk), p, N).unit(), mod);
    }
    rhs = mulmod(rhs, gamma_p(frac(x * pk), p, N).unit(), mod);
  }
  const std::uint64_t nk = powmod(n % p, to_int64(k.get_num()) % static_cast<long long>(p - 1), p);
  rhs = mulmod(rhs, teichmuller(Rational(static_cast<unsigned long>(nk)), p, N), mod);
  return {PAdic::from_unit(p, lhs, N), PAdic::from_unit(p, rhs, N)};
}

}  // namespace hypersplit
