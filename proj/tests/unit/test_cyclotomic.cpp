// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hypersplit/cyclotomic.hpp"
#include "hypersplit/errors.hpp"

using namespace hypersplit;

namespace {

std::vector<long> coeffs(unsigned m) {
  std::vector<long> out;
  for (const auto& c : cyclotomic_polynomial(m)) out.push_back(c.get_si());
  return out;
}

CycNumber random_element(unsigned m, std::mt19937_64& rng) {
  CycNumber x(m);
  for (unsigned e = 0; e < m; ++e) {
    long c = static_cast<long>(rng() % 7) - 3;
    x += CycNumber::root(m, e) * make_rational(c, 1 + static_cast<long>(rng() % 3));
  }
  return x;
}

}  // namespace

TEST(Cyclotomic, Polynomials) {
  EXPECT_EQ(coeffs(1), (std::vector<long>{-1, 1}));
  EXPECT_EQ(coeffs(7), (std::vector<long>{1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(coeffs(12), (std::vector<long>{1, 0, -1, 0, 1}));
  // Phi_105 is the first with a coefficient -2.
  auto c105 = coeffs(105);
  EXPECT_EQ(*std::min_element(c105.begin(), c105.end()), -2);
  for (unsigned m = 1; m <= 120; ++m) EXPECT_EQ(cyclotomic_polynomial(m).size(), euler_phi(m) + 1);
}

TEST(Cyclotomic, RootsOfUnity) {
  for (unsigned m : {1u, 2u, 3u, 8u, 12u, 15u, 28u}) {
    CycNumber s(m);
    for (unsigned k = 0; k < m; ++k) s += CycNumber::root(m, k);
    EXPECT_EQ(s.is_zero(), m > 1) << m;
    CycNumber z = CycNumber::root(m, 1), acc = CycNumber::from_integer(m, 1);
    for (unsigned k = 0; k < m; ++k) acc *= z;
    EXPECT_EQ(acc, CycNumber::from_integer(m, 1));
    EXPECT_EQ(CycNumber::root(m, -1), CycNumber::root(m, m - 1));
  }
}

TEST(Cyclotomic, FieldOperations) {
  std::mt19937_64 rng(7);
  for (unsigned m : {5u, 9u, 12u, 20u, 24u}) {
    for (int i = 0; i < 20; ++i) {
      CycNumber a = random_element(m, rng), b = random_element(m, rng);
      if (b.is_zero()) continue;
      EXPECT_EQ((a * b) / b, a);
      EXPECT_EQ(a - a, CycNumber(m));
      EXPECT_EQ(b * b.inverse(), CycNumber::from_integer(m, 1));
    }
  }
}

TEST(Cyclotomic, EmbeddingAndConjugation) {
  EXPECT_EQ(CycNumber::root(3, 1).embed(6), CycNumber::root(6, 2));
  EXPECT_EQ(CycNumber::root(5, 1).conjugate(2), CycNumber::root(5, 2));
  std::mt19937_64 rng(11);
  CycNumber a = random_element(8, rng), b = random_element(8, rng);
  EXPECT_EQ((a * b).embed(24), a.embed(24) * b.embed(24));
  EXPECT_EQ((a * b).conjugate(3), a.conjugate(3) * b.conjugate(3));
}

TEST(Cyclotomic, RationalDetection) {
  // zeta_3 + zeta_3^2 = -1.
  CycNumber x = CycNumber::root(3, 1) + CycNumber::root(3, 2);
  ASSERT_TRUE(x.is_rational());
  EXPECT_EQ(x.rational_value(), Rational(-1));
  EXPECT_FALSE(CycNumber::root(4, 1).is_rational());
  EXPECT_EQ(CycNumber::from_rational(7, make_rational(-3, 4)).to_string(), "-3/4");
}

TEST(Cyclotomic, ComplexEvaluation) {
  PrecisionScope scope(40);
  for (unsigned m : {5u, 7u, 12u}) {
    BigComplex z = CycNumber::root(m, 1).to_complex(30);
    const double t = 2 * M_PI / m;
    EXPECT_NEAR(static_cast<double>(z.re), std::cos(t), 1e-15);
    EXPECT_NEAR(static_cast<double>(z.im), std::sin(t), 1e-15);
  }
}

TEST(Cyclotomic, Errors) {
  EXPECT_THROW(CycNumber(5).inverse(), Error);
  try {
    (void)(CycNumber::root(5, 1) + CycNumber::root(7, 1));
    FAIL() << "mixed indices accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IndexMismatch);
  }
}
