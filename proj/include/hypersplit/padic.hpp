// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hypersplit/rational.hpp"

namespace hypersplit {

// Largest supported modulus p^N.  Products go through 128-bit intermediates.
inline constexpr std::uint64_t kMaxPAdicModulus = std::uint64_t{1} << 62;

// p^N, or PrecisionExhausted when it would exceed kMaxPAdicModulus.
std::uint64_t padic_modulus(std::uint64_t p, unsigned N);
// Largest N with p^N <= kMaxPAdicModulus.
unsigned max_padic_precision(std::uint64_t p);

// p^val * unit, unit known mod p^prec.  Zero carries its absolute precision
// in val and has prec 0.
class PAdic {
 public:
  PAdic() = default;

  static PAdic zero(std::uint64_t p, long absolute_precision);
  // x to relative precision prec; zero gets absolute precision prec.
  static PAdic from_rational(const Rational& x, std::uint64_t p, unsigned prec);
  static PAdic from_unit(std::uint64_t p, std::uint64_t unit, unsigned prec, long val = 0);

  std::uint64_t p() const { return p_; }
  bool is_zero() const { return prec_ == 0; }
  long valuation() const { return val_; }
  std::uint64_t unit() const { return unit_; }
  unsigned precision() const { return prec_; }
  long absolute_precision() const { return val_ + static_cast<long>(prec_); }

  // Base-p digits of the unit part, least significant first.
  std::vector<unsigned> digits() const;
  // Representative of an integral value in [0, p^k), k <= absolute precision.
  std::uint64_t residue(unsigned k) const;
  // Symmetric lift to (-p^k/2, p^k/2] of an integral value.
  Integer symmetric_lift(unsigned k) const;
  // Agreement to min(absolute precisions, k) digits.
  bool congruent(const PAdic& o, long k) const;

  std::string to_string() const;

  PAdic operator-() const;
  friend PAdic operator+(const PAdic& a, const PAdic& b);
  friend PAdic operator-(const PAdic& a, const PAdic& b);
  friend PAdic operator*(const PAdic& a, const PAdic& b);
  friend PAdic operator/(const PAdic& a, const PAdic& b);

 private:
  std::uint64_t p_ = 2;
  long val_ = 0;
  std::uint64_t unit_ = 0;
  unsigned prec_ = 0;
};

enum class PAdicOp { Add, Sub, Mul, Div };
PAdic padic_arith(const PAdic& a, const PAdic& b, PAdicOp op);

// Morita's p-adic gamma function at n, mod p^N.
std::uint64_t gamma_p_integer(std::uint64_t n, std::uint64_t p, unsigned N);
// Gamma_p(x) mod p^N for rational x in Z_p.
PAdic gamma_p(const Rational& x, std::uint64_t p, unsigned N);
// Direct product (-1)^n prod_{0<j<n, p !| j} j over the representative n of x
// mod p^N.  WorkBoundExceeded when p^N exceeds work_bound.
PAdic gamma_p_naive(const Rational& x, std::uint64_t p, unsigned N, std::uint64_t work_bound = 100000000);

// Teichmuller lift of u mod p^N (u a unit in Z_p), as a residue.
std::uint64_t teichmuller(const Rational& u, std::uint64_t p, unsigned N);

// x_0 in {1..p} with x_0 = x mod p.
std::uint64_t reflection_index(const Rational& x, std::uint64_t p);

// <x>_0 for x = <a p^j>: the representative in {1..p} of x mod p.
std::uint64_t frac_index0(const Rational& a, std::uint64_t p, unsigned j);

struct DigitExpansion {
  Rational a;
  std::uint64_t p = 0;
  unsigned f = 0;
  // z[1..f]; z[0] unused.  (p^f - 1) a = z_f + z_1 p + ... + z_{f-1} p^{f-1}.
  std::vector<std::uint64_t> z;

  // <a p^j>_0 = p - z_{f-j}, 0 <= j < f.
  std::uint64_t frac0(unsigned j) const;
  // floor(a p^j) = z_{f-j} + ... + z_{f-1} p^{j-1}, 0 <= j < f.
  Integer floor_apj(unsigned j) const;
};

DigitExpansion digit_expansion(const Rational& a, std::uint64_t p, unsigned f);

struct ParityPair {
  long long lhs;
  long long rhs;
  long long modulus;
  bool holds() const;
};

// Both sides of sum_{k<r} <a p^k>_0 = r - (p^f-1)a + floor(a p^{f-1}) - floor(a p^{r-1})
// reduced mod p-1.  Requires r <= f.
ParityPair gk0_parity_sums(const Rational& a, std::uint64_t p, unsigned r, unsigned f);

// sum over t coprime to l of floor(<t/l - j/(q-1)> p^{f-1}) - floor(<t/l - j/(q-1)> p^{r-1}),
// reduced mod 2.  f' defaults to the order of q mod l.
ParityPair tl_parity_sum(std::uint64_t l, std::uint64_t p, unsigned r, long long j, unsigned f_prime = 0);

// floor(m x) - sum_{h<m} floor(x + h/m).
// Both sides of the Gamma_p multiplication formula
//   prod_k prod_h Gamma_p(<(x+h)/n p^k>) = omega(n^{(q-1)x}) prod_k Gamma_p(<x p^k>) prod_{h>0} Gamma_p(<h/n p^k>)
// for q = p^r, p not dividing n, 0 <= x < 1 and (q-1)x integral.
struct GKProductPair {
  PAdic lhs;
  PAdic rhs;
};
GKProductPair gk_product_pair(const Rational& x, unsigned n, std::uint64_t p, unsigned r, unsigned N);

Integer hermite_residual(const Rational& x, unsigned m);

}  // namespace hypersplit
