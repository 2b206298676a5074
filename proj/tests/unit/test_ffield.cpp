// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include <gtest/gtest.h>

#include <set>

#include "hypersplit/errors.hpp"
#include "hypersplit/ffield.hpp"
#include "oracles.hpp"

using namespace hypersplit;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::ConfigParse;
}

}  // namespace

TEST(FiniteField, FieldAxiomsExhaustiveOverF9) {
  auto F = FiniteField::make(3, 2);
  ASSERT_EQ(F->q(), 9u);
  for (std::uint32_t a = 0; a < 9; ++a) {
    for (std::uint32_t b = 0; b < 9; ++b) {
      auto x = F->element(a), y = F->element(b);
      EXPECT_EQ(F->add(x, y), F->add(y, x));
      EXPECT_EQ(F->mul(x, y), F->mul(y, x));
      EXPECT_EQ(F->sub(F->add(x, y), y), x);
      for (std::uint32_t c = 0; c < 9; ++c) {
        auto z = F->element(c);
        EXPECT_EQ(F->mul(x, F->add(y, z)), F->add(F->mul(x, y), F->mul(x, z)));
        EXPECT_EQ(F->mul(F->mul(x, y), z), F->mul(x, F->mul(y, z)));
      }
    }
  }
}

TEST(FiniteField, InverseAndPowers) {
  for (auto [p, r] : std::vector<std::pair<std::uint32_t, unsigned>>{{7, 1}, {5, 2}, {3, 3}, {7, 2}, {101, 1}}) {
    auto F = FiniteField::make(p, r);
    for (std::uint32_t c = 1; c < F->q(); ++c) {
      auto x = F->element(c);
      EXPECT_EQ(F->mul(x, F->inv(x)), F->one());
      EXPECT_EQ(F->pow(x, F->q() - 1), F->one());
      EXPECT_EQ(F->pow(x, -1), F->inv(x));
    }
  }
}

TEST(FiniteField, GeneratorIsPrimitiveAndLogsRoundTrip) {
  for (auto [p, r] : std::vector<std::pair<std::uint32_t, unsigned>>{{5, 1}, {13, 1}, {3, 2}, {5, 2}, {3, 3}, {7, 2}}) {
    auto F = FiniteField::make(p, r);
    auto logs = naive::discrete_logs(*F);  // throws if the generator has small order
    for (std::uint32_t c = 1; c < F->q(); ++c) {
      auto x = F->element(c);
      EXPECT_EQ(F->dlog(x), static_cast<std::uint32_t>(logs[c]));
      EXPECT_EQ(F->exp(F->dlog(x)), x);
    }
    EXPECT_EQ(F->exp(-1), F->inv(F->generator()));
  }
}

TEST(FiniteField, DeterministicConstruction) {
  auto a = FiniteField::make(5, 2), b = FiniteField::make(5, 2);
  EXPECT_EQ(a->modulus(), b->modulus());
  EXPECT_EQ(a->generator(), b->generator());
  // Smallest primitive root mod 7 is 3.
  EXPECT_EQ(FiniteField::make(7, 1)->coeffs(FiniteField::make(7, 1)->generator())[0], 3u);
}

TEST(FiniteField, TraceMatchesFrobeniusSum) {
  for (auto [p, r] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 2}, {5, 2}, {3, 3}}) {
    auto F = FiniteField::make(p, r);
    for (std::uint32_t c = 0; c < F->q(); ++c)
      EXPECT_EQ(F->absolute_trace(F->element(c)), naive::trace(*F, F->element(c)));
  }
}

TEST(FiniteField, NthPowersAndRootsOfUnity) {
  for (auto [p, r] : std::vector<std::pair<std::uint32_t, unsigned>>{{13, 1}, {5, 2}, {7, 2}}) {
    auto F = FiniteField::make(p, r);
    for (std::uint32_t n = 1; n <= 8; ++n) {
      if ((F->q() - 1) % n) continue;
      std::set<std::uint32_t> powers;
      for (std::uint32_t c = 1; c < F->q(); ++c) powers.insert(F->pow(F->element(c), n).code());
      for (std::uint32_t c = 1; c < F->q(); ++c)
        EXPECT_EQ(F->is_nth_power(F->element(c), n), powers.count(c) == 1) << "q=" << F->q() << " n=" << n;
      auto z = F->primitive_root_of_unity(n);
      for (std::uint32_t k = 1; k < n; ++k) EXPECT_NE(F->pow(z, k), F->one());
      EXPECT_EQ(F->pow(z, n), F->one());
    }
  }
}

TEST(FiniteField, Errors) {
  EXPECT_EQ(kind_of([] { FiniteField::make(9, 1); }), ErrorKind::NotPrime);
  EXPECT_EQ(kind_of([] { FiniteField::make(101, 3); }), ErrorKind::FieldTooLarge);
  auto F = FiniteField::make(7, 1);
  EXPECT_EQ(kind_of([&] { F->dlog(F->zero()); }), ErrorKind::LogOfZero);
  EXPECT_EQ(kind_of([&] { F->primitive_root_of_unity(4); }), ErrorKind::OrderDoesNotDivide);
  EXPECT_EQ(kind_of([&] { F->inv(F->zero()); }), ErrorKind::DivisionByZero);
}
