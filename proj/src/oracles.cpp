// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "hypersplit/oracles.hpp"

#include <cmath>

#include "hypersplit/errors.hpp"

namespace hypersplit {

Rational EllipticCurve::cubic_discriminant() const {
  const Rational& b = c2;
  const Rational& c = c1;
  const Rational& d = c0;
  return b * b * c * c - 4 * c * c * c - 4 * b * b * b * d - 27 * d * d + 18 * b * c * d;
}

bool EllipticCurve::good_reduction(std::uint64_t p) const {
  for (const Rational* x : {&c2, &c1, &c0})
    if (Integer(x->get_den()) % static_cast<unsigned long>(p) == 0) return false;
  if (p == 2) return false;
  Rational D = cubic_discriminant();
  return D != 0 && valuation(D, p) == 0;
}

long long ec_trace(const EllipticCurve& E, std::uint64_t p) {
  if (p == 2) fail(ErrorKind::SmallPrime, "point counting needs an odd prime");
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (!E.good_reduction(p)) fail(ErrorKind::BadReduction, "bad reduction at " + std::to_string(p));
  const std::uint64_t a2 = residue(E.c2, p), a1 = residue(E.c1, p), a0 = residue(E.c0, p);
  std::vector<int> chi(p, -1);
  chi[0] = 0;
  for (std::uint64_t y = 1; y < p; ++y) chi[y * y % p] = 1;
  long long s = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t v = ((x + a2) % p * x % p + a1) % p * x % p;
    v = (v + a0) % p;
    s += chi[v];
  }
  const long long ap = -s;
  if (static_cast<double>(ap * ap) > 4.0 * static_cast<double>(p))
    fail(ErrorKind::ConstraintViolated, "Hasse bound violated");
  return ap;
}

EllipticCurve ono_curve(const Rational& t) {
  if (t == 0 || t == 4) fail(ErrorKind::DegenerateT, "t must avoid 0 and 4");
  Rational t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t, t6 = t5 * t;
  return {-t2, 4 * t3 - t4, t6 - 4 * t5};
}

EllipticCurve short_weierstrass(const Rational& a, const Rational& b) {
  if (a == 0 || b == 0) fail(ErrorKind::DegenerateJ, "j-invariant 0 or 1728");
  return {Rational(0), a, b};
}

int EtaQuotient::weight_times_two() const {
  int w = 0;
  for (const auto& [d, e] : factors) w += e;
  return w;
}

long EtaQuotient::leading_power() const {
  long s = 0;
  for (const auto& [d, e] : factors) s += static_cast<long>(d) * e;
  if (s <= 0 || s % 24 != 0) fail(ErrorKind::NonIntegralLeadingPower, "sum d e / 24 is not a positive integer");
  return s / 24;
}

namespace {

using Series = std::vector<Integer>;

Series mul_trunc(const Series& a, const Series& b, std::size_t len) {
  Series out(len, 0);
  for (std::size_t i = 0; i < len && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < len && j < b.size(); ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  return out;
}

// prod_{n>=1} (1 - q^{dn}) via pentagonal numbers.
Series euler_product(unsigned d, std::size_t len) {
  Series s(len, 0);
  s[0] = 1;
  for (std::size_t k = 1;; ++k) {
    const std::size_t e1 = d * (k * (3 * k - 1) / 2), e2 = d * (k * (3 * k + 1) / 2);
    if (e1 >= len) break;
    const int sign = k % 2 == 0 ? 1 : -1;
    s[e1] += sign;
    if (e2 < len) s[e2] += sign;
  }
  return s;
}

// 1/f for f with f[0] = 1.
Series invert(const Series& f, std::size_t len) {
  Series g(len, 0);
  g[0] = 1;
  for (std::size_t n = 1; n < len; ++n) {
    Integer acc = 0;
    for (std::size_t k = 1; k <= n && k < f.size(); ++k) acc += f[k] * g[n - k];
    g[n] = -acc;
  }
  return g;
}

}  // namespace

std::vector<Integer> eta_coefficients(const EtaQuotient& eq, unsigned N) {
  const long L = eq.leading_power();
  std::vector<Integer> out(N + 1, 0);
  if (L > static_cast<long>(N)) return out;
  const std::size_t len = N - L + 1;
  Series acc(len, 0);
  acc[0] = 1;
  for (const auto& [d, e] : eq.factors) {
    Series base = euler_product(d, len);
    if (e < 0) base = invert(base, len);
    for (int i = 0; i < std::abs(e); ++i) acc = mul_trunc(acc, base, len);
  }
  for (std::size_t i = 0; i < len; ++i) out[L + i] = acc[i];
  return out;
}

EtaQuotient eta_32_2_a_a() { return {{{4, 2}, {8, 2}}}; }
EtaQuotient eta_16_3_c_a() { return {{{4, 6}}}; }
EtaQuotient eta_8_4_a_a() { return {{{2, 4}, {4, 4}}}; }

std::optional<std::pair<long long, long long>> rep_quadratic(long long n, long long A, long long B,
                                                             const QuadraticConstraint& c) {
  if (n <= 0 || A <= 0 || B <= 0) return std::nullopt;
  long long bound = static_cast<long long>(std::sqrt(static_cast<double>(n) / A)) + 1;
  for (long long x = -bound; x <= bound; ++x) {
    long long rest = n - A * x * x;
    if (rest < 0 || rest % B != 0) continue;
    long long y2 = rest / B;
    long long y = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(y2))));
    while (y * y > y2) --y;
    while ((y + 1) * (y + 1) <= y2) ++y;
    if (y * y != y2) continue;
    if (c.x_modulus > 0 && ((x % c.x_modulus) + c.x_modulus) % c.x_modulus != c.x_residue) continue;
    if (c.x_odd && x % 2 == 0) continue;
    if (c.x_coprime_to > 1 && x % static_cast<long long>(c.x_coprime_to) == 0) continue;
    return std::make_pair(x, y);
  }
  return std::nullopt;
}

Integer hecke_prime_square(const Integer& a_p, std::uint64_t p, unsigned k, int eps_p) {
  Integer pk = 1;
  for (unsigned i = 1; i < k; ++i) pk *= static_cast<unsigned long>(p);
  return a_p * a_p - eps_p * pk;
}

long long cm_weight3_coefficient(std::uint64_t p, int sign) {
  if (p % 2 == 0) fail(ErrorKind::EvenPrime, "needs odd p");
  if (p % 4 == 3) return 0;
  QuadraticConstraint c;
  c.x_odd = true;
  auto r = rep_quadratic(static_cast<long long>(p), 1, 1, c);
  if (!r) fail(ErrorKind::ConstraintViolated, "no representation p = x^2 + y^2");
  auto [x, y] = *r;
  return sign * 2 * (x * x - y * y);
}

}  // namespace hypersplit
