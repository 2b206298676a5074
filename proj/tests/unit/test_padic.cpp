// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include <gtest/gtest.h>

#include <random>

#include "hypersplit/errors.hpp"
#include "hypersplit/padic.hpp"
#include "oracles.hpp"

using namespace hypersplit;

namespace {

Rational R(long n, long d = 1) { return make_rational(n, d); }

Rational random_rational(std::mt19937_64& rng, std::uint64_t avoid_p) {
  for (;;) {
    long den = 1 + static_cast<long>(rng() % 12);
    if (den % static_cast<long>(avoid_p) == 0) continue;
    return make_rational(static_cast<long>(rng() % 61) - 30, den);
  }
}

}  // namespace

TEST(PAdic, ArithmeticAgreesWithRationals) {
  std::mt19937_64 rng(1);
  for (std::uint64_t p : {3u, 5u, 7u, 13u}) {
    for (int i = 0; i < 100; ++i) {
      Rational x = random_rational(rng, p), y = random_rational(rng, p);
      const unsigned N = 8;
      PAdic a = PAdic::from_rational(x, p, N), b = PAdic::from_rational(y, p, N);
      EXPECT_TRUE((a * b).congruent(PAdic::from_rational(x * y, p, N), 6));
      EXPECT_TRUE((a + b).congruent(PAdic::from_rational(x + y, p, N), 6));
      EXPECT_TRUE((a - b).congruent(PAdic::from_rational(x - y, p, N), 6));
      if (y != 0) EXPECT_TRUE((a / b).congruent(PAdic::from_rational(x / y, p, N), 4));
    }
  }
}

TEST(PAdic, ValuationAndPrecision) {
  PAdic x = PAdic::from_rational(R(50, 3), 5, 4);
  EXPECT_EQ(x.valuation(), 2);
  EXPECT_EQ(x.absolute_precision(), 6);
  PAdic d = x - x;
  EXPECT_TRUE(d.is_zero());
  EXPECT_EQ(PAdic::from_rational(R(-2), 5, 6).symmetric_lift(6), Integer(-2));
  EXPECT_EQ(PAdic::from_rational(R(1, 5), 5, 3).valuation(), -1);
}

TEST(PAdic, GammaAtIntegersMatchesProduct) {
  for (std::uint64_t p : {3u, 5u, 7u, 11u})
    for (std::uint64_t n = 1; n < 60; ++n)
      EXPECT_EQ(gamma_p_integer(n, p, 5), naive::gamma_p_integer(n, p, 5)) << "p=" << p << " n=" << n;
}

TEST(PAdic, GammaAtRationalsMatchesNaive) {
  std::mt19937_64 rng(2);
  for (std::uint64_t p : {3u, 5u, 7u}) {
    for (int i = 0; i < 30; ++i) {
      Rational x = random_rational(rng, p);
      EXPECT_TRUE(gamma_p(x, p, 4).congruent(gamma_p_naive(x, p, 4), 4)) << "p=" << p << " x=" << to_string(x);
    }
  }
}

TEST(PAdic, Reflection) {
  std::mt19937_64 rng(4);
  for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
    for (unsigned M = 4; M <= 8; ++M) {
      Rational x = random_rational(rng, p);
      Integer prod = (gamma_p(x, p, M) * gamma_p(1 - x, p, M)).symmetric_lift(M);
      EXPECT_EQ(prod, Integer(reflection_index(x, p) % 2 ? -1 : 1)) << "p=" << p << " x=" << to_string(x);
    }
  }
}

TEST(PAdic, Teichmuller) {
  for (std::uint64_t p : {5u, 7u, 13u}) {
    for (long u = 1; u < static_cast<long>(p); ++u) {
      std::uint64_t t = teichmuller(R(u), p, 6);
      const std::uint64_t m = ipow(p, 6);
      EXPECT_EQ(t % p, static_cast<std::uint64_t>(u));
      EXPECT_EQ(powmod(t, p - 1, m), 1u);
    }
  }
}

TEST(PAdic, DigitExpansion) {
  // 24 * 1/3 = 8 = 3 + 1 * 5.
  auto d = digit_expansion(R(1, 3), 5, 2);
  EXPECT_EQ(d.z[2], 3u);
  EXPECT_EQ(d.z[1], 1u);
  EXPECT_EQ(d.frac0(1), 4u);
  EXPECT_EQ(d.frac0(1), frac_index0(R(1, 3), 5, 1));
  EXPECT_EQ(d.floor_apj(1), Integer(1));
  EXPECT_THROW(digit_expansion(R(1, 7), 5, 2), Error);
}

TEST(PAdic, ParitySums) {
  for (std::uint64_t p : {3u, 5u, 7u})
    for (unsigned f = 1; f <= 3; ++f)
      for (unsigned r = 1; r <= f; ++r)
        for (std::uint64_t k = 1; k < ipow(p, f) - 1; k += 3)
          EXPECT_TRUE(gk0_parity_sums(make_rational(static_cast<long>(k), static_cast<long>(ipow(p, f) - 1)), p, r, f).holds());
  // l = 5, q = 7: 7 is not 1 mod 5.
  for (long long j = 0; j < 6; ++j) EXPECT_TRUE(tl_parity_sum(5, 7, 1, j).holds());
}

TEST(PAdic, GrossKoblitzMultiplication) {
  for (std::uint64_t p : {5u, 7u}) {
    for (unsigned r : {1u, 2u}) {
      const std::uint64_t q1 = ipow(p, r) - 1;
      for (unsigned n : {2u, 3u, 4u}) {
        for (std::uint64_t k = 0; k < q1; k += 5) {
          auto pr = gk_product_pair(make_rational(static_cast<long>(k), static_cast<long>(q1)), n, p, r, 6);
          EXPECT_TRUE(pr.lhs.congruent(pr.rhs, 6)) << "p=" << p << " r=" << r << " n=" << n << " k=" << k;
        }
      }
    }
  }
  EXPECT_THROW(gk_product_pair(R(1, 4), 5, 5, 1, 4), Error);
}

TEST(PAdic, Hermite) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    Rational x = make_rational(static_cast<long>(rng() % 401) - 200, 1 + static_cast<long>(rng() % 30));
    EXPECT_EQ(hermite_residual(x, 1 + static_cast<unsigned>(rng() % 12)), Integer(0));
  }
}

TEST(PAdic, PrecisionLimit) {
  EXPECT_EQ(padic_modulus(5, 3), 125u);
  EXPECT_THROW(padic_modulus(3, max_padic_precision(3) + 1), Error);
}
