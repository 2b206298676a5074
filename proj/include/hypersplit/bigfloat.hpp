// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <mutex>
#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "hypersplit/rational.hpp"

namespace hypersplit {

using BigReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                              boost::multiprecision::et_off>;

// Boost keeps one process-wide default precision for BigReal, so every
// computation with BigReal runs inside a PrecisionScope.  Scopes nest.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits10);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  std::unique_lock<std::recursive_mutex> lock_;
  unsigned saved_;
};

struct BigComplex {
  BigReal re;
  BigReal im;

  BigComplex() : re(0), im(0) {}
  BigComplex(BigReal r, BigReal i = BigReal(0)) : re(std::move(r)), im(std::move(i)) {}

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);
  BigComplex operator-() const { return BigComplex(-re, -im); }

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
};

BigReal to_big(const Rational& x);
BigReal big_pi();
BigReal abs(const BigComplex& z);
// exp(2 pi i k / n).
BigComplex unit_root(long long k, long long n);
BigComplex pow(const BigComplex& z, unsigned long long e);
std::string to_decimal(const BigReal& x, unsigned digits);
std::string to_decimal(const BigComplex& z, unsigned digits);
// Parses a real decimal or rational; complex values as "re+im*i" are not accepted.
BigReal parse_big(const std::string& text);

}  // namespace hypersplit
