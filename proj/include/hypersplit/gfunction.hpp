// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <vector>

#include "hypersplit/ffhyper.hpp"
#include "hypersplit/ffield.hpp"
#include "hypersplit/padic.hpp"
#include "hypersplit/rational.hpp"
#include "hypersplit/unramified.hpp"

namespace hypersplit {

struct GParams {
  std::vector<Rational> a;
  std::vector<Rational> b;
};

// p-adic mGm at lambda over F_q, to absolute precision M.  For r >= 2 the
// value must land in Z_p (Unsupported otherwise); g_eval_unramified returns
// the Z_q value in every case.
PAdic g_eval(const GParams& params, FieldElement lambda, const FieldPtr& F, unsigned M);
UnramifiedPAdic g_eval_unramified(const GParams& params, FieldElement lambda, const FieldPtr& F, unsigned M);

// Gamma_p j-sum for a defined-over-Q part plus remaining parameters in the
// plain form.  With empty extras this is the defined-over-Q reformulation.
PAdic g_eval_over_Q(const DefinedOverQData& data, const std::vector<Rational>& extra_a,
                    const std::vector<Rational>& extra_b, FieldElement lambda, const FieldPtr& F, unsigned M);
UnramifiedPAdic g_eval_over_Q_unramified(const DefinedOverQData& data, const std::vector<Rational>& extra_a,
                                         const std::vector<Rational>& extra_b, FieldElement lambda,
                                         const FieldPtr& F, unsigned M);

// {a_i + l/n}, {b_i + l/n} ordered by i then l.
GParams split_g_params(const GParams& base, unsigned n);

struct GSplitResult {
  UnramifiedPAdic lhs;
  UnramifiedPAdic rhs;
  UnramifiedPAdic residual;
};

// Splitting: sum_l G[na; nb | zeta_n^l lambda] against G[{a + l/n}; {b + l/n} | lambda^n].
// Converse: lhs is 0 and rhs is G[{a + l/n}; {b + l/n} | lambda] for lambda not an n-th power.
GSplitResult g_split_residual(const GParams& base, unsigned n, FieldElement lambda, const FieldPtr& F,
                              unsigned M, SplitMode mode = SplitMode::Splitting);

struct FGResult {
  CycNumber f_value;
  UnramifiedPAdic f_padic;
  UnramifiedPAdic g_value;
  UnramifiedPAdic residual;
};

// F with A_i = T^{-a_i(q-1)}, B_i = T^{-b_i(q-1)} at lambda against G at
// 1/lambda.  F is mapped into Z_q by zeta_{q-1} -> omega(g).
FGResult fg_consistency(const GParams& params, FieldElement lambda, const FieldPtr& F, unsigned M);

// Image of x in Z_q / p^M under zeta_{x.index()} -> omega(g)^{(q-1)/index}.
UnramifiedPAdic cyclotomic_to_Zq(const CycNumber& x, const FieldPtr& F, unsigned M);

}  // namespace hypersplit
