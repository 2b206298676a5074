// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include <gtest/gtest.h>

#include <random>

#include "hypersplit/errors.hpp"
#include "hypersplit/ffhyper.hpp"
#include "oracles.hpp"

using namespace hypersplit;

namespace {

TablesPtr tables(std::uint32_t p, unsigned r = 1) { return CharacterTables::get(FiniteField::make(p, r)); }

naive::cplx as_complex(const CycNumber& x) {
  PrecisionScope scope(40);
  BigComplex z = x.to_complex(25);
  return {static_cast<long double>(z.re), static_cast<long double>(z.im)};
}

Rational R(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

TEST(FFHyper, QuadraticFamilyAtOne) {
  // 2F2(phi, phi; eps, eps | 1) = -1 for q = 3 mod 4 and 1 for q = 1 mod 4.
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u}) {
    auto T = tables(p);
    const long long h = (p - 1) / 2;
    CycNumber v = ff_hyper(*T, {{h, h}, {0, 0}}, T->field().one());
    ASSERT_TRUE(v.is_rational());
    EXPECT_EQ(v.rational_value(), Rational(p % 4 == 1 ? 1 : -1)) << p;
  }
  auto T5 = tables(5);
  EXPECT_TRUE(ff_hyper(*T5, {{2, 2}, {0, 0}}, T5->field().zero()).is_zero());
}

TEST(FFHyper, MatchesFloatingPointDefinition) {
  std::mt19937_64 rng(3);
  for (auto [p, r] : std::vector<std::pair<std::uint32_t, unsigned>>{{5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}}) {
    auto T = tables(p, r);
    const auto& F = T->field();
    for (int i = 0; i < 12; ++i) {
      const std::size_t m = 1 + rng() % 3;
      std::vector<long long> top, bottom;
      for (std::size_t j = 0; j < m; ++j) top.push_back(static_cast<long long>(rng() % (F.q() - 1)));
      for (std::size_t j = 0; j < m; ++j) bottom.push_back(static_cast<long long>(rng() % (F.q() - 1)));
      auto lambda = F.element(static_cast<std::uint32_t>(rng() % F.q()));
      auto exact = as_complex(ff_hyper(*T, {top, bottom}, lambda));
      EXPECT_LT(std::abs(exact - naive::ff_hyper(F, top, bottom, lambda)), 1e-8L) << "q=" << F.q();
    }
  }
}

TEST(FFHyper, DefinedOverQDecomposition) {
  // (x + 1)^2 / (x - 1)^2 = (x^2 - 1)^2 / (x - 1)^4.
  auto d = derive_defined_over_Q({R(1, 2), R(1, 2)}, {R(0), R(0)});
  EXPECT_EQ(d.p_exps, (std::vector<std::uint64_t>{2, 2}));
  EXPECT_EQ(d.q_exps, (std::vector<std::uint64_t>{1, 1, 1, 1}));
  // (x^2 + 1) / (x^2 - 1) = (x^4 - 1) / (x^2 - 1)^2.
  auto e = derive_defined_over_Q({R(1, 4), R(3, 4)}, {R(0), R(1, 2)});
  EXPECT_EQ(e.p_exps, (std::vector<std::uint64_t>{4}));
  EXPECT_EQ(e.q_exps, (std::vector<std::uint64_t>{2, 2}));
  EXPECT_FALSE(try_defined_over_Q({R(1, 3)}, {R(0)}).has_value());
  EXPECT_THROW(derive_defined_over_Q({R(1, 3)}, {R(0)}), Error);
}

TEST(FFHyper, OverQFormAgreesWithDefinition) {
  auto T7 = tables(7);
  CycNumber v = ff_hyper_over_Q(*T7, derive_defined_over_Q({R(1, 2), R(1, 2)}, {R(0), R(0)}), {}, {},
                                T7->field().one());
  ASSERT_TRUE(v.is_rational());
  EXPECT_EQ(v.rational_value(), Rational(-1));

  auto T13 = tables(13);
  for (std::uint32_t c = 1; c < 13; ++c) {
    auto lambda = T13->field().element(c);
    CycNumber a = ff_hyper_over_Q(*T13, derive_defined_over_Q({R(1, 4), R(3, 4)}, {R(0), R(1, 2)}), {}, {}, lambda);
    CycNumber b = ff_hyper(*T13, {{3, 9}, {0, 6}}, lambda);
    const unsigned m = std::max(a.index(), b.index());
    EXPECT_EQ(a.embed(m), b.embed(m)) << c;
  }
}

TEST(FFHyper, Splitting) {
  auto T5 = tables(5);
  EXPECT_TRUE(ff_split_residual(*T5, {1, 3}, {0, 0}, 2, T5->field().one()).residual.is_zero());
  auto T13 = tables(13);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) {
    std::vector<long long> a{static_cast<long long>(rng() % 12)}, b{static_cast<long long>(rng() % 12)};
    EXPECT_TRUE(ff_split_residual(*T13, a, b, 3, T13->field().from_int(2)).residual.is_zero());
  }
  // 2 is not a square mod 5.
  auto conv = ff_split_residual(*T5, {1}, {2}, 2, T5->field().from_int(2), SplitMode::Converse);
  EXPECT_TRUE(conv.rhs.is_zero());
}

TEST(FFHyper, SplitParamsOrder) {
  auto F = FiniteField::make(13, 1);
  auto sp = split_params(*F, {1, 2}, {0, 5}, 3);
  auto reduced = [](std::vector<long long> v) {
    for (auto& k : v) k = ((k % 12) + 12) % 12;
    return v;
  };
  EXPECT_EQ(reduced(sp.top), (std::vector<long long>{1, 5, 9, 2, 6, 10}));
  EXPECT_EQ(reduced(sp.bottom), (std::vector<long long>{0, 4, 8, 5, 9, 1}));
  EXPECT_THROW(split_params(*F, {1}, {0}, 5), Error);
}

TEST(FFHyper, ReductionsAtOne) {
  auto check = [](std::uint32_t p, FFReduction id, FFReductionArgs args) {
    auto T = tables(p);
    CycNumber lhs = ff_hyper(*T, ff_reduction_lhs(*T, id, args), T->field().one());
    CycNumber rhs = ff_reduction_rhs(*T, id, args);
    EXPECT_EQ(lhs.embed(T->gauss_index()), rhs.embed(T->gauss_index())) << "q=" << p;
  };
  check(7, FFReduction::M2, {1, 2, false});
  check(13, FFReduction::M3, {1, 0, false});
  check(13, FFReduction::M3, {1, 0, true});
  check(17, FFReduction::M4, {1, 1, false});
}

TEST(FFHyper, ReductionHypotheses) {
  auto T7 = tables(7);
  // A^2 = eps.
  EXPECT_THROW(ff_reduction_rhs(*T7, FFReduction::M2, {3, 1, false}), Error);
  // m = 3 needs q = 1 mod 4.
  EXPECT_THROW(ff_reduction_rhs(*T7, FFReduction::M3, {1, 0, false}), Error);
}
