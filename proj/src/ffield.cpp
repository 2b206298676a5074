// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "hypersplit/ffield.hpp"

#include <string>

#include "hypersplit/errors.hpp"
#include "hypersplit/rational.hpp"

namespace hypersplit {
namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first, trimmed

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  return static_cast<std::uint32_t>(powmod(a, p - 2, p));
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  std::size_t dm = m.size() - 1;
  std::uint32_t lead_inv = inv_mod_p(m.back(), p);
  while (a.size() > dm) {
    std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * m[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = static_cast<std::uint32_t>((c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  return poly_mod(std::move(c), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

// Rabin's irreducibility test.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  std::size_t r = f.size() - 1;
  if (r == 1) return true;
  const Poly x{0, 1};
  auto frob = [&](std::size_t k) {
    Poly y = x;
    for (std::size_t i = 0; i < k; ++i) y = poly_powmod(y, p, f, p);
    return y;
  };
  if (poly_sub(frob(r), x, p) != Poly{}) return false;
  for (std::uint64_t d : prime_factors(r)) {
    Poly g = poly_gcd(f, poly_sub(frob(r / d), x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

FieldPtr FiniteField::make(std::uint32_t p, unsigned r, std::uint64_t max_order) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (r == 0) fail(ErrorKind::ConstructionError, "degree must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < r; ++i) {
    q *= p;
    if (q > max_order) fail(ErrorKind::FieldTooLarge, std::to_string(p) + "^" + std::to_string(r) + " exceeds bound " + std::to_string(max_order));
  }

  std::shared_ptr<FiniteField> F(new FiniteField());
  F->p_ = p;
  F->r_ = r;
  F->q_ = static_cast<std::uint32_t>(q);

  // Enumerate monic candidates by the packed code of the lower coefficients.
  Poly modulus;
  for (std::uint64_t code = 0; code < q && modulus.empty(); ++code) {
    Poly f(r + 1, 0);
    std::uint64_t c = code;
    for (unsigned i = 0; i < r; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[r] = 1;
    if (is_irreducible(f, p)) modulus = f;
  }
  if (modulus.empty()) fail(ErrorKind::ConstructionError, "no irreducible polynomial found");
  F->modulus_.assign(modulus.begin(), modulus.begin() + r);

  auto to_poly = [&](std::uint32_t code) {
    Poly a(r, 0);
    for (unsigned i = 0; i < r; ++i) {
      a[i] = code % p;
      code /= p;
    }
    trim(a);
    return a;
  };
  auto to_code = [&](const Poly& a) {
    std::uint32_t code = 0;
    for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
    return code;
  };

  const std::uint64_t order = q - 1;
  const auto factors = prime_factors(order);
  std::uint32_t gen = 0;
  for (std::uint32_t code = 1; code < q && gen == 0; ++code) {
    Poly a = to_poly(code);
    bool full = true;
    for (std::uint64_t l : factors) {
      if (poly_powmod(a, order / l, modulus, p) == Poly{1}) {
        full = false;
        break;
      }
    }
    if (full) gen = code;
  }
  if (gen == 0) fail(ErrorKind::ConstructionError, "no generator found");
  F->generator_ = FieldElement(gen);

  F->exp_.assign(order, 0);
  F->log_.assign(q, 0);
  std::vector<bool> seen(q, false);
  Poly g = to_poly(gen);
  Poly cur{1};
  for (std::uint64_t k = 0; k < order; ++k) {
    std::uint32_t code = to_code(cur);
    if (code == 0 || seen[code]) fail(ErrorKind::ConstructionError, "generator table is not a bijection");
    seen[code] = true;
    F->exp_[k] = code;
    F->log_[code] = static_cast<std::uint32_t>(k);
    cur = poly_mulmod(cur, g, modulus, p);
  }

  // Tr(x^i) for the basis; the trace is F_p-linear.
  F->basis_trace_.assign(r, 0);
  for (unsigned i = 0; i < r; ++i) {
    Poly b(i + 1, 0);
    b[i] = 1;
    b = poly_mod(b, modulus, p);
    Poly sum;
    Poly y = b;
    for (unsigned k = 0; k < r; ++k) {
      Poly s = sum;
      if (s.size() < y.size()) s.resize(y.size(), 0);
      for (std::size_t t = 0; t < y.size(); ++t) s[t] = (s[t] + y[t]) % p;
      trim(s);
      sum = s;
      y = poly_powmod(y, p, modulus, p);
    }
    if (sum.size() > 1) fail(ErrorKind::ConstructionError, "trace left the prime field");
    F->basis_trace_[i] = sum.empty() ? 0 : sum[0];
  }
  return F;
}

FieldElement FiniteField::from_int(long long n) const {
  long long m = n % static_cast<long long>(p_);
  if (m < 0) m += p_;
  return FieldElement(static_cast<std::uint32_t>(m));
}

FieldElement FiniteField::from_coeffs(const std::vector<std::uint32_t>& c) const {
  std::uint32_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * p_ + c[i] % p_;
  return FieldElement(code);
}

std::vector<std::uint32_t> FiniteField::coeffs(FieldElement x) const {
  std::vector<std::uint32_t> c(r_, 0);
  std::uint32_t code = x.code();
  for (unsigned i = 0; i < r_; ++i) {
    c[i] = code % p_;
    code /= p_;
  }
  return c;
}

FieldElement FiniteField::add(FieldElement x, FieldElement y) const {
  if (r_ == 1) return FieldElement((x.code() + y.code()) % p_);
  std::uint32_t a = x.code(), b = y.code(), out = 0, place = 1;
  for (unsigned i = 0; i < r_; ++i) {
    out += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return FieldElement(out);
}

FieldElement FiniteField::neg(FieldElement x) const {
  std::uint32_t a = x.code(), out = 0, place = 1;
  for (unsigned i = 0; i < r_; ++i) {
    out += ((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return FieldElement(out);
}

FieldElement FiniteField::sub(FieldElement x, FieldElement y) const { return add(x, neg(y)); }

FieldElement FiniteField::mul(FieldElement x, FieldElement y) const {
  if (x.is_zero() || y.is_zero()) return zero();
  std::uint64_t k = (static_cast<std::uint64_t>(log_[x.code()]) + log_[y.code()]) % (q_ - 1);
  return FieldElement(exp_[k]);
}

FieldElement FiniteField::inv(FieldElement x) const {
  if (x.is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in F_" + std::to_string(q_));
  return exp(-static_cast<long long>(log_[x.code()]));
}

FieldElement FiniteField::pow(FieldElement x, long long e) const {
  if (x.is_zero()) {
    if (e == 0) return one();
    if (e < 0) fail(ErrorKind::DivisionByZero, "negative power of zero");
    return zero();
  }
  __int128 k = static_cast<__int128>(log_[x.code()]) * e;
  return exp(static_cast<long long>(k % (q_ - 1)));
}

std::uint32_t FiniteField::dlog(FieldElement x) const {
  if (x.is_zero()) fail(ErrorKind::LogOfZero, "discrete log of zero");
  return log_[x.code()];
}

FieldElement FiniteField::exp(long long k) const {
  long long n = static_cast<long long>(q_) - 1;
  long long m = k % n;
  if (m < 0) m += n;
  return FieldElement(exp_[static_cast<std::size_t>(m)]);
}

FieldElement FiniteField::primitive_root_of_unity(std::uint32_t n) const {
  if (n == 0 || (q_ - 1) % n != 0)
    fail(ErrorKind::OrderDoesNotDivide, std::to_string(n) + " does not divide " + std::to_string(q_ - 1));
  return exp((q_ - 1) / n);
}

bool FiniteField::is_nth_power(FieldElement x, std::uint32_t n) const {
  if (n == 0 || (q_ - 1) % n != 0)
    fail(ErrorKind::OrderDoesNotDivide, std::to_string(n) + " does not divide " + std::to_string(q_ - 1));
  return dlog(x) % n == 0;
}

std::uint32_t FiniteField::absolute_trace(FieldElement x) const {
  std::uint64_t t = 0;
  std::uint32_t code = x.code();
  for (unsigned i = 0; i < r_; ++i) {
    t += static_cast<std::uint64_t>(code % p_) * basis_trace_[i];
    code /= p_;
  }
  return static_cast<std::uint32_t>(t % p_);
}

}  // namespace hypersplit
