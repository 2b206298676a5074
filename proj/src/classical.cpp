// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "hypersplit/classical.hpp"

#include <cmath>

#include "hypersplit/errors.hpp"

namespace hypersplit {

namespace {

constexpr unsigned kGuardDigits = 10;

void check_bottom(const std::vector<Rational>& bottom) {
  for (const auto& b : bottom)
    if (b <= 0 && b.get_den() == 1) fail(ErrorKind::BottomPole, "bottom parameter " + b.get_str() + " is a nonpositive integer");
}

BigReal pow10_neg(unsigned d) { return pow(BigReal(10), -static_cast<int>(d)); }

}  // namespace

BigComplex mfm_series(const std::vector<Rational>& top, const std::vector<Rational>& bottom,
                      const BigComplex& z, unsigned prec) {
  check_bottom(bottom);
  PrecisionScope scope(prec + kGuardDigits);
  BigReal az = abs(z);
  if (top.size() >= bottom.size() && az >= 1) fail(ErrorKind::NoConvergence, "needs |z| < 1");
  const BigReal eps = pow10_neg(prec + 5);
  Rational c = 1;
  BigComplex zk(BigReal(1), BigReal(0));
  BigComplex sum;
  for (unsigned long k = 0;; ++k) {
    BigComplex term = zk;
    BigReal cb = to_big(c);
    term.re *= cb;
    term.im *= cb;
    sum += term;
    Rational ratio = 1;
    for (const auto& a : top) ratio *= a + Rational(k);
    for (const auto& b : bottom) ratio /= b + Rational(k);
    if (ratio == 0) break;
    BigReal r = abs(to_big(ratio)) * az;
    if (abs(term) < eps && r < BigReal(0.99)) break;
    if (k > 2000000) fail(ErrorKind::NoConvergence, "series did not converge");
    c *= ratio;
    zk *= z;
  }
  return sum;
}

BigComplex mfm1_series(const std::vector<Rational>& top, const std::vector<Rational>& bottom,
                       const BigComplex& z, unsigned prec) {
  std::vector<Rational> b{Rational(1)};
  b.insert(b.end(), bottom.begin(), bottom.end());
  return mfm_series(top, b, z, prec);
}

namespace {

// Solve A x = y in place by Gaussian elimination with partial pivoting.
std::vector<BigReal> solve(std::vector<std::vector<BigReal>> A, std::vector<BigReal> y) {
  const std::size_t n = y.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (abs(A[r][c]) > abs(A[piv][c])) piv = r;
    std::swap(A[c], A[piv]);
    std::swap(y[c], y[piv]);
    for (std::size_t r = c + 1; r < n; ++r) {
      BigReal f = A[r][c] / A[c][c];
      for (std::size_t k = c; k < n; ++k) A[r][k] -= f * A[c][k];
      y[r] -= f * y[c];
    }
  }
  std::vector<BigReal> x(n);
  for (std::size_t i = n; i-- > 0;) {
    BigReal s = y[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= A[i][k] * x[k];
    x[i] = s / A[i][i];
  }
  return x;
}

// S from partial sums at nodes, fitting S_N = S - N^{1-s} sum_{j<J} e_j N^{-j}.
BigReal extrapolate(const std::vector<unsigned long>& nodes, const std::vector<BigReal>& partial,
                    const BigReal& sigma) {
  const std::size_t n = nodes.size();
  std::vector<std::vector<BigReal>> A(n, std::vector<BigReal>(n));
  for (std::size_t i = 0; i < n; ++i) {
    BigReal N(nodes[i]);
    BigReal lead = pow(N, BigReal(1) - sigma);
    A[i][0] = 1;
    BigReal w = lead;
    for (std::size_t j = 1; j < n; ++j) {
      A[i][j] = -w;
      w /= N;
    }
  }
  return solve(A, partial)[0];
}

}  // namespace

SeriesAtOne mfm_at_one(const std::vector<Rational>& top, const std::vector<Rational>& bottom, unsigned prec) {
  check_bottom(bottom);
  if (top.size() != bottom.size()) fail(ErrorKind::NoConvergence, "series at 1 needs balanced rows");
  Rational s = 0;
  for (const auto& b : bottom) s += b;
  for (const auto& a : top) s -= a;
  if (s <= 1) fail(ErrorKind::NoConvergence, "series at 1 needs sum(b) - sum(a) > 1");
  // The fit is ill-conditioned; work at roughly twice the target precision.
  const unsigned work = 2 * prec + 40;
  PrecisionScope scope(work);
  constexpr unsigned J = 14;
  std::vector<unsigned long> nodes;
  for (unsigned i = 0; i <= J; ++i) nodes.push_back(2000 + 500 * i);
  std::vector<BigReal> partial;
  BigReal term(1), sum(0);
  std::size_t next = 0;
  std::vector<BigReal> A(top.size()), B(bottom.size());
  for (std::size_t i = 0; i < top.size(); ++i) A[i] = to_big(top[i]);
  for (std::size_t i = 0; i < bottom.size(); ++i) B[i] = to_big(bottom[i]);
  for (unsigned long k = 0; next < nodes.size(); ++k) {
    if (k == nodes[next]) {
      partial.push_back(sum);
      ++next;
    }
    sum += term;
    BigReal kk(k);
    for (const auto& a : A) term *= a + kk;
    for (const auto& b : B) term /= b + kk;
  }
  const BigReal sigma = to_big(s);
  std::vector<unsigned long> n1(nodes.begin(), nodes.end());
  std::vector<BigReal> p1(partial.begin(), partial.end());
  BigReal v1 = extrapolate(n1, p1, sigma);
  // Second estimate on a shifted, shorter node set.
  std::vector<unsigned long> n2(nodes.begin() + 1, nodes.end());
  std::vector<BigReal> p2(partial.begin() + 1, partial.end());
  BigReal v2 = extrapolate(n2, p2, sigma);
  return {v1, abs(v1 - v2)};
}

BigComplex classical_split_residual(const std::vector<Rational>& a, const std::vector<Rational>& b, unsigned n,
                                    const BigComplex& z, unsigned prec) {
  if (n == 0) fail(ErrorKind::DomainViolation, "n must be positive");
  std::vector<Rational> na, nb, big_a, big_b;
  for (const auto& x : a) na.push_back(x * Rational(n));
  for (const auto& x : b) nb.push_back(x * Rational(n));
  for (const auto& x : a)
    for (unsigned l = 0; l < n; ++l) big_a.push_back(x + make_rational(static_cast<long>(l), static_cast<long>(n)));
  for (const auto& x : b)
    for (unsigned l = 0; l < n; ++l) big_b.push_back(x + make_rational(static_cast<long>(l), static_cast<long>(n)));
  PrecisionScope scope(prec + kGuardDigits);
  BigComplex lhs;
  for (unsigned l = 0; l < n; ++l) lhs += mfm_series(na, nb, unit_root(l, n) * z, prec + 5);
  BigComplex zn = pow(z, n);
  BigComplex rhs = mfm_series(big_a, big_b, zn, prec + 5);
  rhs.re *= n;
  rhs.im *= n;
  return lhs - rhs;
}

BigReal gamma_real(const BigReal& x, unsigned prec) {
  PrecisionScope scope(prec + kGuardDigits);
  if (x <= 0 && floor(x) == x) fail(ErrorKind::GammaPole, "Gamma has a pole at a nonpositive integer");
  BigReal out;
  mpfr_gamma(out.backend().data(), x.backend().data(), MPFR_RNDN);
  return out;
}

BigReal gamma_real(const Rational& x, unsigned prec) {
  if (x <= 0 && x.get_den() == 1) fail(ErrorKind::GammaPole, "Gamma has a pole at " + x.get_str());
  PrecisionScope scope(prec + kGuardDigits);
  return gamma_real(to_big(x), prec);
}

void classical_lhs_params(ClassicalReduction id, const ClassicalParams& params, std::vector<Rational>& top,
                          std::vector<Rational>& bottom) {
  const Rational& a = params.a;
  const Rational& b = params.b;
  const Rational h(1, 2), q1(1, 4), q3(3, 4);
  switch (id) {
    case ClassicalReduction::M2:
      top = {a, a + h, b, b + h};
      bottom = {Rational(1), h, h + a - b, 1 + a - b};
      return;
    case ClassicalReduction::M3:
      top = {q1, q3, q1 + a, q3 + a, q1 - a, q3 - a};
      bottom = {Rational(1), h, 1 - a, h - a, 1 + a, h + a};
      return;
    case ClassicalReduction::M4:
      top = {a, a + h, a + q1, a + q3, b, b + h, b + q1, b + q3};
      bottom = {Rational(1), h, q1, q3, h + a - b, 1 + a - b, q1 + a - b, q3 + a - b};
      return;
  }
}

BigReal classical_rhs(ClassicalReduction id, const ClassicalParams& params, unsigned prec) {
  const Rational& a = params.a;
  const Rational& b = params.b;
  PrecisionScope scope(prec + kGuardDigits);
  auto G = [&](const Rational& x) { return gamma_real(x, prec + 5); };
  switch (id) {
    case ClassicalReduction::M2: {
      if (b >= Rational(1, 4)) fail(ErrorKind::ConstraintViolated, "needs b < 1/4");
      BigReal t1 = G(1 + 2 * a - 2 * b) * G(1 - 4 * b) / (G(1 - 2 * b) * G(1 + 2 * a - 4 * b));
      BigReal t2 = G(1 + 2 * a - 2 * b) * G(1 + a) / (G(1 + 2 * a) * G(1 + a - 2 * b));
      return (t1 + t2) / 2;
    }
    case ClassicalReduction::M3: {
      const BigReal pi = big_pi();
      BigReal pre = G(1 + 2 * a) * G(1 - 2 * a) / (4 * pi);
      BigReal g14 = G(Rational(1, 4));
      BigReal t1 = g14 * g14 / (G(Rational(3, 4) - 2 * a) * G(Rational(3, 4) + 2 * a));
      BigReal t2 = sqrt(BigReal(2)) * pi * pi /
                   (G(a + Rational(5, 8)) * G(a + Rational(7, 8)) * G(-a + Rational(5, 8)) * G(-a + Rational(7, 8)));
      return pre * (t1 + t2);
    }
    case ClassicalReduction::M4: {
      if (b >= Rational(1, 8)) fail(ErrorKind::ConstraintViolated, "needs b < 1/8");
      if (Rational(1, 2) + 2 * a - 4 * b <= 0) fail(ErrorKind::ConstraintViolated, "the 3F2 at 1 diverges");
      BigReal t1 = G(1 + 4 * a - 4 * b) * G(1 - 8 * b) / (G(1 - 4 * b) * G(1 + 4 * a - 8 * b));
      BigReal t2 = G(1 + 4 * a - 4 * b) * G(1 + 2 * a) / (G(1 + 4 * a) * G(1 + 2 * a - 4 * b));
      BigReal pre = G(1 + 2 * a - 2 * b) * G(Rational(1, 2) + 2 * a - 2 * b) /
                    (2 * G(1 + 2 * a) * G(Rational(1, 2) + 2 * a - 4 * b));
      // Conventional 3F2 at 1: append the implicit bottom 1.
      SeriesAtOne f32 = mfm_at_one({Rational(1, 2) - a, 2 * b, 2 * b + Rational(1, 2)},
                                   {Rational(1), 1 + a, Rational(1, 2)}, prec + 5);
      return (t1 + t2) / 4 + pre * f32.value;
    }
  }
  fail(ErrorKind::UnknownIdentity, "unknown reduction");
}

Rational pochhammer(const Rational& a, unsigned k) {
  Rational r = 1;
  for (unsigned i = 0; i < k; ++i) r *= a + Rational(i);
  return r;
}

Rational pochhammer_identity_residual(const Rational& a, unsigned n, unsigned k) {
  if (n == 0) fail(ErrorKind::DomainViolation, "n must be positive");
  Rational rhs = 1;
  for (unsigned i = 0; i < n * k; ++i) rhs *= Rational(n);
  for (unsigned l = 0; l < n; ++l) rhs *= pochhammer(a / Rational(n) + make_rational(static_cast<long>(l), static_cast<long>(n)), k);
  return pochhammer(a, n * k) - rhs;
}

}  // namespace hypersplit
