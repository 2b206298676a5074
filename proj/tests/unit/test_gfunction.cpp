// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "hypersplit/errors.hpp"
#include "hypersplit/gfunction.hpp"

using namespace hypersplit;

namespace {

Rational R(long n, long d = 1) { return make_rational(n, d); }

FieldPtr field(std::uint32_t p, unsigned r = 1) { return FiniteField::make(p, r); }

Integer value(const GParams& g, long lambda, std::uint32_t q_p, unsigned M = 6) {
  auto F = field(q_p);
  return g_eval(g, F->from_int(lambda), F, M).symmetric_lift(M);
}

}  // namespace

TEST(GFunction, SmallValues) {
  const GParams half{{R(1, 2), R(1, 2)}, {R(1), R(1)}};
  EXPECT_EQ(value(half, 1, 7), Integer(-1));
  EXPECT_EQ(value(half, 1, 13), Integer(1));
  // 5 = 1 + 2^2 with x = 1 = 1 mod 4; q = 5 mod 8 gives -2x.
  EXPECT_EQ(value(half, -1, 5), Integer(-2));
  EXPECT_EQ(value({{R(1, 2), R(1, 2), R(1, 2)}, {R(1), R(1), R(1)}}, -1, 3), Integer(-1));
}

TEST(GFunction, OverQAgreesWithDefinition) {
  const std::vector<GParams> fams = {
      {{R(1, 2), R(1, 2)}, {R(1), R(1)}},
      {{R(1, 4), R(3, 4)}, {R(1), R(1, 2)}},
  };
  for (const auto& g : fams) {
    auto data = derive_defined_over_Q(g.a, g.b);
    for (std::uint32_t p : {5u, 7u}) {
      auto F = field(p);
      for (std::uint32_t c = 1; c < p; ++c) {
        auto lambda = F->element(c);
        EXPECT_TRUE(g_eval_over_Q(data, {}, {}, lambda, F, 5).congruent(g_eval(g, lambda, F, 5), 5));
      }
    }
  }
}

TEST(GFunction, ShiftAndPermutationInvariance) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 25; ++i) {
    const std::uint32_t p = std::vector<std::uint32_t>{5, 7, 11}[rng() % 3];
    GParams g;
    for (int j = 0; j < 3; ++j) {
      g.a.push_back(make_rational(static_cast<long>(rng() % 8), 8));
      g.b.push_back(make_rational(static_cast<long>(rng() % 6), 6));
    }
    GParams h = g;
    for (auto& x : h.a) x += static_cast<long>(rng() % 5) - 2;
    std::reverse(h.b.begin(), h.b.end());
    std::rotate(h.a.begin(), h.a.begin() + 1, h.a.end());
    auto F = field(p);
    auto lambda = F->element(1 + static_cast<std::uint32_t>(rng() % (p - 1)));
    EXPECT_TRUE(g_eval(g, lambda, F, 5).congruent(g_eval(h, lambda, F, 5), 5));
  }
}

TEST(GFunction, Splitting) {
  // Quarter family at lambda^2 from the all-1/2 family at +-lambda.
  const GParams base{{R(1, 4), R(1, 4)}, {R(1, 2), R(1, 2)}};
  auto F13 = field(13);
  EXPECT_TRUE(g_split_residual(base, 2, F13->one(), F13, 5).residual.is_zero());
  auto F5 = field(5);
  EXPECT_TRUE(g_split_residual(base, 2, F5->from_int(2), F5, 5, SplitMode::Converse).residual.is_zero());
  // r = 2 with lambda outside F_p: values live in Z_q.
  auto F9 = field(3, 2);
  auto res = g_split_residual({{R(1, 8), R(3, 8)}, {R(1, 4), R(1, 2)}}, 2, F9->generator(), F9, 4);
  EXPECT_TRUE(res.residual.is_zero());
}

TEST(GFunction, SplitParamsLayout) {
  GParams s = split_g_params({{R(1, 4)}, {R(0)}}, 2);
  EXPECT_EQ(s.a, (std::vector<Rational>{R(1, 4), R(3, 4)}));
  EXPECT_EQ(s.b, (std::vector<Rational>{R(0), R(1, 2)}));
}

TEST(GFunction, AgreesWithFiniteFieldFunction) {
  auto F5 = field(5);
  EXPECT_TRUE(fg_consistency({{R(1, 2)}, {R(1)}}, F5->one(), F5, 5).residual.is_zero());
  auto F13 = field(13);
  for (std::uint32_t c = 1; c < 13; ++c)
    EXPECT_TRUE(fg_consistency({{R(1, 4), R(3, 4)}, {R(1), R(1, 2)}}, F13->element(c), F13, 5).residual.is_zero());
  auto F9 = field(3, 2);
  EXPECT_TRUE(fg_consistency({{R(1, 2), R(1, 2)}, {R(1), R(1)}}, F9->generator(), F9, 5).residual.is_zero());
}

TEST(GFunction, Errors) {
  auto F5 = field(5);
  // 1/5 is not 5-integral.
  EXPECT_THROW(g_eval({{R(1, 5)}, {R(1)}}, F5->one(), F5, 5), Error);
  auto F9 = field(3, 2);
  try {
    g_eval({{R(1, 8), R(3, 8)}, {R(1, 4), R(1, 2)}}, F9->generator(), F9, 4);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Unsupported);
  }
}
