// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include <gtest/gtest.h>

#include "hypersplit/classical.hpp"
#include "hypersplit/errors.hpp"
#include "oracles.hpp"

using namespace hypersplit;

namespace {

Rational R(long n, long d = 1) { return make_rational(n, d); }

long double ld(const BigReal& x) { return static_cast<long double>(x); }

std::vector<long double> ld(const std::vector<Rational>& v) {
  std::vector<long double> out;
  for (const auto& x : v) out.push_back(static_cast<long double>(x.get_d()));
  return out;
}

}  // namespace

TEST(Classical, SeriesMatchesNaiveSum) {
  PrecisionScope scope(30);
  const std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> rows = {
      {{R(1, 2), R(1, 2)}, {R(1), R(1)}},
      {{R(1, 4), R(3, 4), R(1, 3)}, {R(1), R(1, 2), R(5, 6)}},
      {{R(-3, 2)}, {R(7, 3)}},
  };
  for (const auto& [top, bottom] : rows) {
    for (auto [re, im] : std::vector<std::pair<double, double>>{{0.3, 0}, {-0.5, 0.2}, {0.1, -0.7}}) {
      BigComplex z{BigReal(re), BigReal(im)};
      BigComplex v = mfm_series(top, bottom, z, 20);
      naive::cplx w = naive::series(ld(top), ld(bottom), {re, im});
      EXPECT_NEAR(ld(v.re), w.real(), 1e-12L);
      EXPECT_NEAR(ld(v.im), w.imag(), 1e-12L);
    }
  }
}

TEST(Classical, GeometricSeries) {
  PrecisionScope scope(40);
  BigComplex v = mfm_series({R(1)}, {R(1)}, BigComplex(BigReal(R(1, 2).get_d())), 30);
  EXPECT_LT(abs(v - BigComplex(BigReal(2))), BigReal("1e-29"));
  // Conventional 1F0(1; ; z) is the same sum.
  BigComplex w = mfm1_series({R(1)}, {}, BigComplex(BigReal(0.5)), 30);
  EXPECT_LT(abs(w - BigComplex(BigReal(2))), BigReal("1e-29"));
}

TEST(Classical, GaussSumAtOne) {
  // 2F1(a, b; c; 1) = Gamma(c) Gamma(c - a - b) / (Gamma(c - a) Gamma(c - b)).
  for (auto [a, b, c] : std::vector<std::tuple<Rational, Rational, Rational>>{
           {R(1, 3), R(1, 4), R(2)}, {R(1, 2), R(1, 2), R(5, 2)}, {R(-1, 3), R(1, 5), R(3, 2)}}) {
    PrecisionScope scope(50);
    SeriesAtOne s = mfm_at_one({a, b}, {c, R(1)}, 30);
    BigReal exact = gamma_real(c, 40) * gamma_real(c - a - b, 40) / (gamma_real(c - a, 40) * gamma_real(c - b, 40));
    EXPECT_LT(abs(s.value - exact), BigReal("1e-25")) << to_decimal(s.value, 30);
    EXPECT_LT(s.error_estimate, BigReal("1e-20"));
  }
}

TEST(Classical, GammaValues) {
  PrecisionScope scope(50);
  BigReal g = gamma_real(R(1, 2), 40);
  EXPECT_LT(abs(g * g - big_pi()), BigReal("1e-38"));
  EXPECT_LT(abs(gamma_real(R(5), 40) - BigReal(24)), BigReal("1e-38"));
  EXPECT_THROW(gamma_real(R(-2), 20), Error);
}

TEST(Classical, Pochhammer) {
  EXPECT_EQ(pochhammer(R(1, 2), 3), R(15, 8));
  EXPECT_EQ(pochhammer(R(-2), 3), R(0));
  EXPECT_EQ(pochhammer(R(7, 3), 0), R(1));
  for (long num = -7; num <= 7; ++num)
    for (unsigned n = 1; n <= 4; ++n)
      for (unsigned k = 0; k <= 4; ++k) EXPECT_EQ(pochhammer_identity_residual(R(num, 3), n, k), R(0));
}

TEST(Classical, SplitResidual) {
  PrecisionScope scope(40);
  BigComplex z{BigReal(0.4), BigReal(0.3)};
  for (unsigned n : {2u, 3u}) {
    BigComplex r = classical_split_residual({R(1, 3), R(1, 2)}, {R(1), R(2, 3)}, n, z, 25);
    EXPECT_LT(abs(r), BigReal("1e-22")) << n;
  }
}

TEST(Classical, ReductionsAtOne) {
  struct Row {
    ClassicalReduction id;
    ClassicalParams params;
  };
  const std::vector<Row> rows = {
      {ClassicalReduction::M2, {R(1, 3), R(1, 10)}},
      {ClassicalReduction::M2, {R(1, 2), R(-1, 5)}},
      {ClassicalReduction::M3, {R(1, 10), R(0)}},
      {ClassicalReduction::M4, {R(1, 3), R(1, 20)}},
  };
  for (const auto& row : rows) {
    PrecisionScope scope(40);
    std::vector<Rational> top, bottom;
    classical_lhs_params(row.id, row.params, top, bottom);
    SeriesAtOne lhs = mfm_at_one(top, bottom, 20);
    BigReal rhs = classical_rhs(row.id, row.params, 20);
    EXPECT_LT(abs(lhs.value - rhs), BigReal("1e-15")) << to_decimal(lhs.value, 20) << " vs " << to_decimal(rhs, 20);
  }
}

TEST(Classical, Errors) {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Unsupported;
  };
  PrecisionScope scope(20);
  EXPECT_EQ(kind_of([] { mfm_series({R(1, 2)}, {R(1)}, BigComplex(BigReal(1)), 10); }), ErrorKind::NoConvergence);
  EXPECT_EQ(kind_of([] { mfm_series({R(1, 2)}, {R(-1)}, BigComplex(BigReal(0.1)), 10); }), ErrorKind::BottomPole);
  EXPECT_EQ(kind_of([] { mfm_at_one({R(1, 2)}, {R(1)}, 10); }), ErrorKind::NoConvergence);
  EXPECT_EQ(kind_of([] { classical_rhs(ClassicalReduction::M2, {R(1, 3), R(1, 4)}, 10); }),
            ErrorKind::ConstraintViolated);
  EXPECT_EQ(kind_of([] { classical_rhs(ClassicalReduction::M4, {R(1, 3), R(1, 8)}, 10); }),
            ErrorKind::ConstraintViolated);
}
