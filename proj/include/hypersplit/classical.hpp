// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <vector>

#include "hypersplit/bigfloat.hpp"
#include "hypersplit/rational.hpp"

namespace hypersplit {

// Sum_k prod (a_i)_k / prod (b_i)_k z^k without the 1/k! factor, for |z| < 1.
// Result carries prec correct digits; call inside or outside a PrecisionScope.
BigComplex mfm_series(const std::vector<Rational>& top, const std::vector<Rational>& bottom,
                      const BigComplex& z, unsigned prec);

// Conventional mF(m-1): prepends b_1 = 1.
BigComplex mfm1_series(const std::vector<Rational>& top, const std::vector<Rational>& bottom,
                       const BigComplex& z, unsigned prec);

struct SeriesAtOne {
  BigReal value;
  // Difference between two independent extrapolations.
  BigReal error_estimate;
};

// The same series at z = 1, needing sum(b) - sum(a) > 1.  Partial sums are
// extrapolated with the tail expansion N^{1-s} (e_0 + e_1/N + ...).
SeriesAtOne mfm_at_one(const std::vector<Rational>& top, const std::vector<Rational>& bottom, unsigned prec);

// sum_l mFm[na; nb | xi_n^l z] - n * nmFnm[{a + l/n}; {b + l/n} | z^n].
BigComplex classical_split_residual(const std::vector<Rational>& a, const std::vector<Rational>& b, unsigned n,
                                    const BigComplex& z, unsigned prec);

BigReal gamma_real(const BigReal& x, unsigned prec);
BigReal gamma_real(const Rational& x, unsigned prec);

enum class ClassicalReduction { M2, M3, M4 };

struct ClassicalParams {
  Rational a;
  Rational b;
};

// Rows of the left-hand mFm evaluated at z = 1.
void classical_lhs_params(ClassicalReduction id, const ClassicalParams& params, std::vector<Rational>& top,
                          std::vector<Rational>& bottom);
// Closed-form right-hand side.  M4 sums its 3F2 at 1 numerically.
BigReal classical_rhs(ClassicalReduction id, const ClassicalParams& params, unsigned prec);

Rational pochhammer(const Rational& a, unsigned k);
// (a)_{nk} - n^{nk} prod_l (a/n + l/n)_k
Rational pochhammer_identity_residual(const Rational& a, unsigned n, unsigned k);

}  // namespace hypersplit
