// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include <gtest/gtest.h>

#include <functional>

#include "hypersplit/errors.hpp"
#include "hypersplit/ffield.hpp"
#include "hypersplit/oracles.hpp"
#include "oracles.hpp"

using namespace hypersplit;

namespace {

Rational R(long n, long d = 1) { return make_rational(n, d); }

long long as_ll(const Rational& x) { return x.get_num().get_si(); }

const std::vector<std::uint64_t> kOddPrimes = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                                               59, 61, 67, 71, 73, 79, 83, 89, 97, 101};

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Unsupported;
}

}  // namespace

TEST(Oracles, TraceMatchesAffineCount) {
  const std::vector<EllipticCurve> curves = {
      short_weierstrass(R(-1), R(1)), short_weierstrass(R(2), R(3)), {R(1), R(-2), R(0)}, ono_curve(R(1))};
  for (const auto& E : curves) {
    for (std::uint64_t p : kOddPrimes) {
      if (!E.good_reduction(p)) continue;
      const long long P = static_cast<long long>(p);
      EXPECT_EQ(ec_trace(E, p), P - naive::affine_points(as_ll(E.c2), as_ll(E.c1), as_ll(E.c0), P)) << "p=" << p;
    }
  }
}

TEST(Oracles, OnoCurve) {
  EllipticCurve E = ono_curve(R(8));
  EXPECT_EQ(E.c2, R(-64));
  EXPECT_EQ(E.c1, R(-2048));
  EXPECT_EQ(E.c0, R(131072));
  EXPECT_EQ(kind_of([] { ono_curve(R(4)); }), ErrorKind::DegenerateT);
  EXPECT_EQ(kind_of([] { short_weierstrass(R(0), R(1)); }), ErrorKind::DegenerateJ);
}

TEST(Oracles, EtaProductsMatchEulerProduct) {
  const unsigned N = 120;
  const std::vector<std::pair<EtaQuotient, std::vector<std::pair<int, int>>>> forms = {
      {eta_32_2_a_a(), {{4, 2}, {8, 2}}},
      {eta_16_3_c_a(), {{4, 6}}},
      {eta_8_4_a_a(), {{2, 4}, {4, 4}}},
  };
  for (const auto& [eq, factors] : forms) {
    auto fast = eta_coefficients(eq, N);
    auto slow = naive::eta_product(factors, N);
    ASSERT_GE(fast.size(), N + 1);
    for (unsigned n = 0; n <= N; ++n) EXPECT_EQ(fast[n], Integer(static_cast<long>(slow[n]))) << "n=" << n;
  }
  EXPECT_EQ(eta_32_2_a_a().weight_times_two(), 4);
  EXPECT_EQ(eta_16_3_c_a().weight_times_two(), 6);
  EXPECT_EQ(eta_8_4_a_a().weight_times_two(), 8);
  EXPECT_EQ(eta_32_2_a_a().leading_power(), 1);
}

TEST(Oracles, ModularityOfCongruentNumberCurve) {
  // eta^2(4z) eta^2(8z) is attached to y^2 = x^3 - x.
  auto a = eta_coefficients(eta_32_2_a_a(), 101);
  EllipticCurve C{R(0), R(-1), R(0)};
  for (std::uint64_t p : kOddPrimes) EXPECT_EQ(a[p], Integer(static_cast<long>(ec_trace(C, p)))) << "p=" << p;
}

TEST(Oracles, QuadraticRepresentations) {
  auto r = rep_quadratic(13, 1, 1);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, std::make_pair(-3LL, 2LL));
  QuadraticConstraint c;
  c.x_modulus = 4;
  c.x_residue = 1;
  EXPECT_EQ(*rep_quadratic(13, 1, 1, c), std::make_pair(-3LL, 2LL));
  EXPECT_EQ(*rep_quadratic(11, 1, 2), std::make_pair(-3LL, 1LL));
  EXPECT_FALSE(rep_quadratic(7, 1, 1).has_value());
}

TEST(Oracles, HeckeAndCmCoefficients) {
  EXPECT_EQ(hecke_prime_square(Integer(-2), 5, 2, 1), Integer(-1));
  EXPECT_EQ(hecke_prime_square(Integer(6), 5, 3, -1), Integer(61));
  const std::vector<std::pair<std::uint64_t, long long>> table = {{5, -6}, {13, 10}, {17, -30}, {29, 42}};
  for (auto [p, c] : table) {
    EXPECT_EQ(cm_weight3_coefficient(p, 1), c);
    EXPECT_EQ(cm_weight3_coefficient(p, -1), -c);
  }
  for (std::uint64_t p : {3u, 7u, 11u, 19u}) EXPECT_EQ(cm_weight3_coefficient(p, 1), 0);
  EXPECT_EQ(kind_of([] { cm_weight3_coefficient(2, 1); }), ErrorKind::EvenPrime);
}

TEST(Oracles, Errors) {
  EllipticCurve C{R(0), R(-1), R(0)};
  EXPECT_EQ(kind_of([&] { ec_trace(C, 2); }), ErrorKind::SmallPrime);
  EXPECT_EQ(kind_of([&] { ec_trace(C, 9); }), ErrorKind::NotPrime);
  // x^3 - x^2 has a double root.
  EllipticCurve D{R(-1), R(0), R(0)};
  EXPECT_EQ(kind_of([&] { ec_trace(D, 7); }), ErrorKind::BadReduction);
  EXPECT_EQ(kind_of([] { eta_coefficients({{{1, 1}}}, 10); }), ErrorKind::NonIntegralLeadingPower);
}
