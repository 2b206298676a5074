// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypersplit/bigfloat.hpp"
#include "hypersplit/rational.hpp"

namespace hypersplit {

// Coefficients of the m-th cyclotomic polynomial, lowest degree first.
// Computed once per m and cached.
const std::vector<Integer>& cyclotomic_polynomial(unsigned m);

// Exact element of Q(zeta_m) in the power basis 1, zeta_m, ..., zeta_m^{phi(m)-1},
// always reduced modulo Phi_m.  Stored as integer numerators over a common
// positive denominator in lowest terms.
class CycNumber {
 public:
  CycNumber() : CycNumber(1) {}
  explicit CycNumber(unsigned m);

  static CycNumber root(unsigned m, long long e);
  static CycNumber from_rational(unsigned m, const Rational& r);
  static CycNumber from_integer(unsigned m, long long n) { return from_rational(m, Rational(static_cast<long>(n))); }
  // numerators must already be reduced (length phi(m)).
  static CycNumber from_numerators(unsigned m, std::vector<Integer> num, Integer den = 1);

  unsigned index() const { return m_; }
  std::size_t dimension() const { return num_.size(); }
  Rational coeff(std::size_t i) const;
  const std::vector<Integer>& numerators() const { return num_; }
  const Integer& denominator() const { return den_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;

  CycNumber operator-() const;
  CycNumber& operator+=(const CycNumber& o);
  CycNumber& operator-=(const CycNumber& o);
  CycNumber& operator*=(const CycNumber& o);
  CycNumber& operator/=(const CycNumber& o);
  CycNumber& operator*=(const Rational& c);

  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }
  friend CycNumber operator/(CycNumber a, const CycNumber& b) { return a /= b; }
  friend CycNumber operator*(CycNumber a, const Rational& c) { return a *= c; }
  friend CycNumber operator*(const Rational& c, CycNumber a) { return a *= c; }
  friend bool operator==(const CycNumber& a, const CycNumber& b);

  CycNumber inverse() const;
  // Image under zeta_m -> zeta_target^{target/m}.
  CycNumber embed(unsigned target) const;
  // Galois conjugate zeta_m -> zeta_m^k, gcd(k, m) = 1.
  CycNumber conjugate(long long k) const;
  BigComplex to_complex(unsigned digits) const;
  // Polynomial in z = zeta_m, e.g. "1/2 - z + 3*z^2".
  std::string to_string() const;

 private:
  void normalize();
  void reduce_full(std::vector<Integer>& poly);

  unsigned m_;
  std::vector<Integer> num_;
  Integer den_;
};

}  // namespace hypersplit
