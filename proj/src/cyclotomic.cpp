// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "hypersplit/cyclotomic.hpp"

#include <map>
#include <numeric>
#include <memory>
#include <mutex>

#include "hypersplit/errors.hpp"

namespace hypersplit {
namespace {

std::vector<Integer> exact_divide(std::vector<Integer> a, const std::vector<Integer>& b) {
  // b is monic.
  std::size_t db = b.size() - 1;
  std::vector<Integer> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    Integer c = a[i];
    q[i - db] = c;
    if (c != 0)
      for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (a[i] != 0) fail(ErrorKind::ConstructionError, "inexact cyclotomic division");
  return q;
}

using QPoly = std::vector<Rational>;

void qtrim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Returns (quotient, remainder) of a / b over Q.
std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
  qtrim(a);
  if (a.size() < b.size()) return {QPoly{}, a};
  QPoly q(a.size() - b.size() + 1, 0);
  Rational lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() / lead;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    a.pop_back();
    qtrim(a);
  }
  return {q, a};
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

QPoly qsub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  qtrim(a);
  return a;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(unsigned m) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<std::vector<Integer>>> cache;
  if (m == 0) fail(ErrorKind::DomainViolation, "cyclotomic index must be positive");
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return *it->second;
  }
  std::vector<Integer> poly(m + 1, 0);
  poly[0] = -1;
  poly[m] = 1;
  for (std::uint64_t d : divisors(m)) {
    if (d == m) continue;
    poly = exact_divide(std::move(poly), cyclotomic_polynomial(static_cast<unsigned>(d)));
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(m, std::make_unique<std::vector<Integer>>(std::move(poly)));
  return *it->second;
}

CycNumber::CycNumber(unsigned m) : m_(m), num_(euler_phi(m), 0), den_(1) {
  if (m == 0) fail(ErrorKind::DomainViolation, "cyclotomic index must be positive");
}

CycNumber CycNumber::root(unsigned m, long long e) {
  CycNumber x(m);
  long long k = e % static_cast<long long>(m);
  if (k < 0) k += m;
  std::vector<Integer> poly(static_cast<std::size_t>(k) + 1, 0);
  poly[static_cast<std::size_t>(k)] = 1;
  x.reduce_full(poly);
  x.num_ = std::move(poly);
  return x;
}

CycNumber CycNumber::from_rational(unsigned m, const Rational& r) {
  CycNumber x(m);
  x.num_[0] = r.get_num();
  x.den_ = r.get_den();
  return x;
}

CycNumber CycNumber::from_numerators(unsigned m, std::vector<Integer> num, Integer den) {
  CycNumber x(m);
  if (num.size() != x.num_.size()) fail(ErrorKind::IndexMismatch, "numerator length does not match phi(m)");
  if (den == 0) fail(ErrorKind::DivisionByZero, "zero denominator");
  x.num_ = std::move(num);
  x.den_ = std::move(den);
  x.normalize();
  return x;
}

Rational CycNumber::coeff(std::size_t i) const {
  Rational r(num_[i], den_);
  r.canonicalize();
  return r;
}

bool CycNumber::is_zero() const {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

bool CycNumber::is_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

Rational CycNumber::rational_value() const {
  if (!is_rational()) fail(ErrorKind::NonRationalFValue, "value is not rational: " + to_string());
  return coeff(0);
}

void CycNumber::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (den_ == 1) return;
  Integer g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

void CycNumber::reduce_full(std::vector<Integer>& poly) {
  const auto& phi = cyclotomic_polynomial(m_);
  std::size_t d = phi.size() - 1;
  for (std::size_t i = poly.size(); i-- > d;) {
    if (poly[i] == 0) continue;
    Integer c = poly[i];
    for (std::size_t j = 0; j < d; ++j) {
      if (phi[j] != 0) poly[i - d + j] -= c * phi[j];
    }
    poly[i] = 0;
  }
  poly.resize(d, 0);
}

CycNumber CycNumber::operator-() const {
  CycNumber r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
  if (o.m_ != m_) fail(ErrorKind::IndexMismatch, "Q(zeta_" + std::to_string(m_) + ") vs Q(zeta_" + std::to_string(o.m_) + ")");
  if (den_ == o.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) { return *this += -o; }

CycNumber& CycNumber::operator*=(const CycNumber& o) {
  if (o.m_ != m_) fail(ErrorKind::IndexMismatch, "Q(zeta_" + std::to_string(m_) + ") vs Q(zeta_" + std::to_string(o.m_) + ")");
  std::size_t n = num_.size();
  std::vector<Integer> prod(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (num_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (o.num_[j] != 0) mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), o.num_[j].get_mpz_t());
    }
  }
  reduce_full(prod);
  num_ = std::move(prod);
  den_ *= o.den_;
  normalize();
  return *this;
}

CycNumber& CycNumber::operator*=(const Rational& c) {
  for (auto& x : num_) x *= c.get_num();
  den_ *= c.get_den();
  normalize();
  return *this;
}

CycNumber CycNumber::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in Q(zeta_" + std::to_string(m_) + ")");
  const auto& phi = cyclotomic_polynomial(m_);
  QPoly a(phi.begin(), phi.end());
  QPoly b;
  for (std::size_t i = 0; i < num_.size(); ++i) b.push_back(coeff(i));
  qtrim(b);
  // Invariant: s0 * b == r0 and s1 * b == r1 modulo Phi_m.
  QPoly r0 = a, r1 = b, s0{}, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, rem] = qdivmod(r0, r1);
    QPoly s2 = qsub(s0, qmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) fail(ErrorKind::DivisionByZero, "element not invertible");
  Rational c = 1 / r0[0];
  for (auto& x : s0) x *= c;
  auto [q, s] = qdivmod(s0, a);
  CycNumber out(m_);
  Integer den = 1;
  for (const auto& x : s) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  for (std::size_t i = 0; i < s.size(); ++i) {
    Rational t = s[i] * den;
    out.num_[i] = t.get_num();
  }
  out.den_ = den;
  out.normalize();
  return out;
}

CycNumber& CycNumber::operator/=(const CycNumber& o) {
  if (o.m_ != m_) fail(ErrorKind::IndexMismatch, "Q(zeta_" + std::to_string(m_) + ") vs Q(zeta_" + std::to_string(o.m_) + ")");
  if (o.is_rational()) {
    if (o.num_[0] == 0) fail(ErrorKind::DivisionByZero, "division by zero");
    Rational c(o.den_, o.num_[0]);
    c.canonicalize();
    return *this *= c;
  }
  return *this *= o.inverse();
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  return a.m_ == b.m_ && a.den_ == b.den_ && a.num_ == b.num_;
}

CycNumber CycNumber::embed(unsigned target) const {
  if (target == 0 || target % m_ != 0)
    fail(ErrorKind::NotASubfieldIndex, std::to_string(m_) + " does not divide " + std::to_string(target));
  if (target == m_) return *this;
  unsigned step = target / m_;
  CycNumber out(target);
  std::vector<Integer> poly(step * (num_.size() ? num_.size() - 1 : 0) + 1, 0);
  for (std::size_t i = 0; i < num_.size(); ++i) poly[i * step] = num_[i];
  out.reduce_full(poly);
  out.num_ = std::move(poly);
  out.den_ = den_;
  out.normalize();
  return out;
}

CycNumber CycNumber::conjugate(long long k) const {
  long long kk = k % static_cast<long long>(m_);
  if (kk < 0) kk += m_;
  if (std::gcd(static_cast<unsigned long long>(kk), static_cast<unsigned long long>(m_)) != 1)
    fail(ErrorKind::DomainViolation, "conjugation exponent not coprime to index");
  std::vector<Integer> poly(m_, 0);
  for (std::size_t i = 0; i < num_.size(); ++i)
    poly[(i * static_cast<std::size_t>(kk)) % m_] += num_[i];
  CycNumber out(m_);
  out.reduce_full(poly);
  out.num_ = std::move(poly);
  out.den_ = den_;
  out.normalize();
  return out;
}

BigComplex CycNumber::to_complex(unsigned digits) const {
  PrecisionScope scope(digits + 20);
  BigComplex acc;
  BigComplex z = unit_root(1, m_);
  BigComplex power(BigReal(1), BigReal(0));
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] != 0) {
      BigReal c = to_big(Rational(num_[i]));
      acc.re += c * power.re;
      acc.im += c * power.im;
    }
    power *= z;
  }
  BigReal d = to_big(Rational(den_));
  acc.re /= d;
  acc.im /= d;
  return acc;
}

std::string CycNumber::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    Rational c = coeff(i);
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    std::string term;
    if (i == 0) {
      term = a.get_str();
    } else {
      std::string zp = i == 1 ? "z" : "z^" + std::to_string(i);
      term = a == 1 ? zp : a.get_str() + "*" + zp;
    }
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += neg ? " - " + term : " + " + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace hypersplit
