// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace hypersplit {

// Element of F_{p^r} in the polynomial basis, packed as sum c_i p^i.
class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t code) : code_(code) {}

  constexpr std::uint32_t code() const { return code_; }
  constexpr bool is_zero() const { return code_ == 0; }

  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

 private:
  std::uint32_t code_ = 0;
};

class FiniteField {
 public:
  static constexpr std::uint64_t kDefaultMaxOrder = 100000;

  // Deterministic: smallest monic irreducible modulus, smallest generator.
  static std::shared_ptr<const FiniteField> make(std::uint32_t p, unsigned r,
                                                 std::uint64_t max_order = kDefaultMaxOrder);

  std::uint32_t p() const { return p_; }
  unsigned r() const { return r_; }
  std::uint32_t q() const { return q_; }
  // Coefficients c_0..c_{r-1} of the monic modulus (leading 1 omitted).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  FieldElement generator() const { return generator_; }

  FieldElement zero() const { return FieldElement(0); }
  FieldElement one() const { return FieldElement(1); }
  FieldElement from_int(long long n) const;
  FieldElement from_coeffs(const std::vector<std::uint32_t>& coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElement x) const;
  // Elements with code 0..q-1.
  FieldElement element(std::uint32_t code) const { return FieldElement(code); }

  FieldElement add(FieldElement x, FieldElement y) const;
  FieldElement sub(FieldElement x, FieldElement y) const;
  FieldElement neg(FieldElement x) const;
  FieldElement mul(FieldElement x, FieldElement y) const;
  FieldElement inv(FieldElement x) const;
  FieldElement pow(FieldElement x, long long e) const;

  std::uint32_t dlog(FieldElement x) const;
  // generator^k for any integer k.
  FieldElement exp(long long k) const;
  FieldElement primitive_root_of_unity(std::uint32_t n) const;
  bool is_nth_power(FieldElement x, std::uint32_t n) const;
  std::uint32_t absolute_trace(FieldElement x) const;
  // True when x lies in the prime field.
  bool in_prime_field(FieldElement x) const { return x.code() < p_; }

 private:
  FiniteField() = default;

  std::uint32_t p_ = 0;
  unsigned r_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  FieldElement generator_;
  std::vector<std::uint32_t> log_;  // indexed by code; log_[0] unused
  std::vector<std::uint32_t> exp_;  // exp_[k] = code of generator^k
  std::vector<std::uint32_t> basis_trace_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

}  // namespace hypersplit
