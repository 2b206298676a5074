// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hypersplit {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Integer floor_of(const Rational& x);
// Fractional part in [0, 1).
Rational frac(const Rational& x);
// Accepts "n", "n/d" and finite decimals such as "-0.125".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

// Residue of x in Z/mZ; the denominator of x must be invertible mod m.
std::uint64_t residue(const Rational& x, std::uint64_t m);
std::int64_t to_int64(const Integer& x);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
// Inverse of a mod m, or 0 when gcd(a, m) != 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);
std::uint64_t ipow(std::uint64_t base, unsigned e);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
int mobius(std::uint64_t n);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
// Multiplicative order of a mod m; requires gcd(a, m) = 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);
// Legendre symbol (a/p) for an odd prime p, in {-1, 0, 1}.
int legendre(const Rational& a, std::uint64_t p);
// p-adic valuation of a nonzero rational.
long valuation(const Rational& x, std::uint64_t p);

}  // namespace hypersplit
