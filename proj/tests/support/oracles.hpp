// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// Slow, independent reference computations for the tests.  Nothing here
// calls into the library's character tables, p-adic or series code; the
// finite field is only used for its add/mul.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "hypersplit/ffield.hpp"

namespace naive {

using cplx = std::complex<long double>;

// Discrete log by walking powers of F.generator().
std::vector<long long> discrete_logs(const hypersplit::FiniteField& F);

// Absolute trace by repeated Frobenius.
std::uint32_t trace(const hypersplit::FiniteField& F, hypersplit::FieldElement x);

// T^k(x) with T(generator) = exp(2 pi i / (q - 1)), T^k(0) = 0.
cplx character(const hypersplit::FiniteField& F, const std::vector<long long>& logs, long long k,
               hypersplit::FieldElement x);

// Sum_x T^k(x) exp(2 pi i Tr(x) / p).
cplx gauss_sum(const hypersplit::FiniteField& F, long long k);

// Normalized mFm from its Gauss-sum definition in floating point.
cplx ff_hyper(const hypersplit::FiniteField& F, const std::vector<long long>& top,
              const std::vector<long long>& bottom, hypersplit::FieldElement lambda);

// #{(x, y) : y^2 = x^3 + c2 x^2 + c1 x + c0} over F_p, affine points only.
long long affine_points(long long c2, long long c1, long long c0, long long p);

// Morita Gamma_p(n) mod p^N for integers n >= 1, straight from the product.
std::uint64_t gamma_p_integer(std::uint64_t n, std::uint64_t p, unsigned N);

// Partial sums of sum_k prod (a_i)_k / prod (b_i)_k z^k in long double.
cplx series(const std::vector<long double>& top, const std::vector<long double>& bottom, cplx z,
            unsigned terms = 4000);

// Coefficients a_0..a_N of prod eta(m z)^{e_m} as a q-series, from the
// Euler product.  The leading power sum m e_m / 24 must be an integer.
std::vector<long long> eta_product(const std::vector<std::pair<int, int>>& factors, unsigned N);

}  // namespace naive
