// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include <gtest/gtest.h>

#include "hypersplit/charsum.hpp"
#include "oracles.hpp"

using namespace hypersplit;

namespace {

naive::cplx as_complex(const CycNumber& x) {
  PrecisionScope scope(40);
  BigComplex z = x.to_complex(25);
  return {static_cast<long double>(z.re), static_cast<long double>(z.im)};
}

const std::vector<std::pair<std::uint32_t, unsigned>> kFields = {{5, 1}, {7, 1}, {3, 2}, {13, 1}, {5, 2}};

}  // namespace

TEST(CharSum, GaussSumsMatchDirectSum) {
  for (auto [p, r] : kFields) {
    auto F = FiniteField::make(p, r);
    auto T = CharacterTables::get(F);
    for (long long k = 0; k + 1 < F->q(); ++k)
      EXPECT_LT(std::abs(as_complex(T->gauss_sum(k)) - naive::gauss_sum(*F, k)), 1e-9L) << "q=" << F->q() << " k=" << k;
  }
}

TEST(CharSum, JacobiSumsMatchDirectSum) {
  auto F = FiniteField::make(3, 2);
  auto T = CharacterTables::get(F);
  auto logs = naive::discrete_logs(*F);
  for (long long a = 0; a < 8; ++a) {
    for (long long b = 0; b < 8; ++b) {
      naive::cplx s = 0;
      for (std::uint32_t c = 0; c < 9; ++c) {
        auto x = F->element(c);
        s += naive::character(*F, logs, a, x) * naive::character(*F, logs, b, F->sub(F->one(), x));
      }
      EXPECT_LT(std::abs(as_complex(T->jacobi(a, b)) - s), 1e-9L);
    }
  }
}

TEST(CharSum, CharacterValuesAreMultiplicative) {
  auto F = FiniteField::make(13, 1);
  auto T = CharacterTables::get(F);
  for (long long k : {1, 3, 6}) {
    Character chi(k, 12);
    for (std::uint32_t a = 1; a < 13; ++a)
      for (std::uint32_t b = 1; b < 13; ++b)
        EXPECT_EQ(char_eval(*T, chi, F->mul(F->element(a), F->element(b))),
                  char_eval(*T, chi, F->element(a)) * char_eval(*T, chi, F->element(b)));
    EXPECT_TRUE(char_eval(*T, chi, F->zero()).is_zero());
  }
  EXPECT_EQ(T->sign(6), 1);  // phi(-1) = 1 for q = 1 mod 4
  EXPECT_EQ(T->sign(3), -1);
}

TEST(CharSum, GaussConjugation) {
  for (auto [p, r] : kFields) {
    auto T = CharacterTables::get(FiniteField::make(p, r));
    for (std::uint32_t k = 0; k + 1 < T->field().q(); ++k)
      EXPECT_TRUE(gauss_conjugation_residual(*T, Character(k, T->field().q() - 1)).is_zero());
  }
}

TEST(CharSum, HasseDavenportExamples) {
  auto T7 = CharacterTables::get(FiniteField::make(7, 1));
  EXPECT_TRUE(hasse_davenport_residual(*T7, 3, Character(1, 6)).is_zero());
  auto T13 = CharacterTables::get(FiniteField::make(13, 1));
  EXPECT_TRUE(hasse_davenport_residual(*T13, 4, Character(2, 12)).is_zero());
}

TEST(CharSum, Orthogonality) {
  auto T = CharacterTables::get(FiniteField::make(13, 1));
  for (std::uint32_t n : {1u, 2u, 3u, 4u, 6u, 12u})
    for (long long k = 0; k < 12; ++k)
      EXPECT_EQ(orthogonality_sum(*T, Character(k, 12), n),
                CycNumber::from_integer(T->char_index(), k % n == 0 ? n : 0))
          << "n=" << n << " k=" << k;
}

TEST(CharSum, CharacterGroup) {
  auto F = FiniteField::make(13, 1);
  Character phi = Character::quadratic(*F);
  EXPECT_EQ(phi.k(), 6u);
  EXPECT_EQ(phi.order(), 2u);
  EXPECT_EQ(Character::of_order(*F, 4).k(), 3u);
  EXPECT_EQ(Character(5, 12) * Character(7, 12), Character::trivial(*F));
  EXPECT_EQ(Character(5, 12).inverse(), Character(7, 12));
  EXPECT_EQ(Character(5, 12).pow(3), Character(3, 12));
}
