// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "hypersplit/bigfloat.hpp"

#include <sstream>

namespace hypersplit {
namespace {

std::recursive_mutex& precision_mutex() {
  static std::recursive_mutex m;
  return m;
}

}  // namespace

PrecisionScope::PrecisionScope(unsigned digits10)
    : lock_(precision_mutex()), saved_(BigReal::default_precision()) {
  BigReal::default_precision(digits10);
}

PrecisionScope::~PrecisionScope() { BigReal::default_precision(saved_); }

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  BigReal r = re * o.re - im * o.im;
  BigReal i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  BigReal d = o.re * o.re + o.im * o.im;
  BigReal r = (re * o.re + im * o.im) / d;
  BigReal i = (im * o.re - re * o.im) / d;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

BigReal to_big(const Rational& x) {
  BigReal r;
  mpfr_set_q(r.backend().data(), x.get_mpq_t(), MPFR_RNDN);
  return r;
}

BigReal big_pi() {
  BigReal r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

BigReal abs(const BigComplex& z) { return boost::multiprecision::sqrt(z.re * z.re + z.im * z.im); }

BigComplex unit_root(long long k, long long n) {
  long long m = k % n;
  if (m < 0) m += n;
  if (m == 0) return BigComplex(BigReal(1), BigReal(0));
  if (2 * m == n) return BigComplex(BigReal(-1), BigReal(0));
  if (4 * m == n) return BigComplex(BigReal(0), BigReal(1));
  if (4 * m == 3 * n) return BigComplex(BigReal(0), BigReal(-1));
  BigReal t = BigReal(2) * big_pi() * BigReal(m) / BigReal(n);
  return BigComplex(boost::multiprecision::cos(t), boost::multiprecision::sin(t));
}

BigComplex pow(const BigComplex& z, unsigned long long e) {
  BigComplex r(BigReal(1), BigReal(0));
  BigComplex b = z;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::string to_decimal(const BigReal& x, unsigned digits) {
  std::ostringstream os;
  os.precision(digits);
  os << std::scientific << x;
  return os.str();
}

std::string to_decimal(const BigComplex& z, unsigned digits) {
  if (z.im == 0) return to_decimal(z.re, digits);
  std::string im = to_decimal(z.im, digits);
  if (im[0] != '-') im = "+" + im;
  return to_decimal(z.re, digits) + im + "i";
}

BigReal parse_big(const std::string& text) { return to_big(parse_rational(text)); }

}  // namespace hypersplit
