// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hypersplit/rational.hpp"

namespace hypersplit {

// y^2 = x^3 + c2 x^2 + c1 x + c0 over Q.
struct EllipticCurve {
  Rational c2;
  Rational c1;
  Rational c0;

  // Discriminant of the cubic; the curve discriminant is 16 times this.
  Rational cubic_discriminant() const;
  bool good_reduction(std::uint64_t p) const;
};

// a_p = p + 1 - #E(F_p) by enumeration.  p = 2 is rejected.
long long ec_trace(const EllipticCurve& E, std::uint64_t p);

// y^2 = x^3 - t^2 x^2 + (4t^3 - t^4) x + t^6 - 4t^5, t not in {0, 4}.
EllipticCurve ono_curve(const Rational& t);
// y^2 = x^3 + a x + b with a, b nonzero.
EllipticCurve short_weierstrass(const Rational& a, const Rational& b);

// prod eta(d z)^e.
struct EtaQuotient {
  std::vector<std::pair<unsigned, int>> factors;

  int weight_times_two() const;
  // sum d e / 24, when it is an integer.
  long leading_power() const;
};

// a_0..a_N of the q-expansion.
std::vector<Integer> eta_coefficients(const EtaQuotient& eq, unsigned N);

EtaQuotient eta_32_2_a_a();  // eta^2(4z) eta^2(8z)
EtaQuotient eta_16_3_c_a();  // eta^6(4z)
EtaQuotient eta_8_4_a_a();   // eta^4(2z) eta^4(4z)

struct QuadraticConstraint {
  // x = residue mod modulus, when modulus > 0.
  long long x_modulus = 0;
  long long x_residue = 0;
  bool x_odd = false;
  // p does not divide x.
  std::uint64_t x_coprime_to = 0;
};

// First (x, y) with A x^2 + B y^2 = n, x ascending from -sqrt(n), y >= 0.
std::optional<std::pair<long long, long long>> rep_quadratic(long long n, long long A, long long B,
                                                             const QuadraticConstraint& c = {});

// a_{p^2} = a_p^2 - eps_p p^{k-1}.
Integer hecke_prime_square(const Integer& a_p, std::uint64_t p, unsigned k, int eps_p);

// sign * 2(x^2 - y^2) for p = x^2 + y^2 with x odd; 0 for p = 3 mod 4.
long long cm_weight3_coefficient(std::uint64_t p, int sign);

}  // namespace hypersplit
