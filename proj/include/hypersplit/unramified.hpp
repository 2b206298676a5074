// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hypersplit/ffield.hpp"
#include "hypersplit/padic.hpp"

namespace hypersplit {

// Z_q / p^N as (Z/p^N)[x] modulo the lifted modulus of F_q.  The constant
// coefficient is the Z_p part.
class ZqRing {
 public:
  using Elem = std::vector<std::uint64_t>;

  ZqRing(FieldPtr F, unsigned N);

  const FiniteField& field() const { return *F_; }
  std::uint64_t p() const { return F_->p(); }
  unsigned degree() const { return r_; }
  unsigned precision() const { return N_; }
  std::uint64_t modulus() const { return mod_; }

  Elem zero() const { return Elem(r_, 0); }
  Elem scalar(std::uint64_t c) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem scale(const Elem& a, std::uint64_t c) const;
  Elem pow(Elem a, std::uint64_t e) const;
  bool in_Zp(const Elem& a) const;

  // Lift of a field element with digits in [0, p).
  Elem lift(FieldElement x) const;
  // Teichmuller lift omega(x), computed as lift(x)^{q^{N-1}}.
  Elem teichmuller(FieldElement x) const;
  // omega(g)^e for the field generator g.
  const Elem& omega_generator_power(long long e) const;

 private:
  FieldPtr F_;
  unsigned r_;
  unsigned N_;
  std::uint64_t mod_;
  std::vector<std::uint64_t> f_;  // lifted monic modulus, leading 1 omitted
  mutable std::vector<Elem> omega_pows_;
};

// A Z_q value p^val * (components mod p^prec).
struct UnramifiedPAdic {
  std::uint64_t p = 0;
  long val = 0;
  unsigned prec = 0;
  std::vector<std::uint64_t> comps;

  bool in_Zp() const;
  bool is_zero() const;
  // Constant component as a PAdic; Unsupported if the value is not in Z_p.
  PAdic to_padic() const;
  long absolute_precision() const { return val + static_cast<long>(prec); }
  // Z_p values print as PAdic; otherwise the coordinates in the power basis.
  std::string to_string() const;

  // Difference known to the smaller absolute precision.
  friend UnramifiedPAdic operator-(const UnramifiedPAdic& a, const UnramifiedPAdic& b);
  friend UnramifiedPAdic operator+(const UnramifiedPAdic& a, const UnramifiedPAdic& b);
};

}  // namespace hypersplit
