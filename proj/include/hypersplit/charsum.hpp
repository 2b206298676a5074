// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "hypersplit/cyclotomic.hpp"
#include "hypersplit/ffield.hpp"

namespace hypersplit {

// Multiplicative character T^k of F_q^*, where T(g) = zeta_{q-1} for the
// field generator g.  Characters vanish at 0, including the trivial one.
class Character {
 public:
  Character(long long k, std::uint32_t group_order);

  static Character trivial(const FiniteField& F) { return Character(0, F.q() - 1); }
  static Character quadratic(const FiniteField& F);
  // chi_n = T^{(q-1)/n}.
  static Character of_order(const FiniteField& F, std::uint32_t n);

  std::uint32_t k() const { return k_; }
  std::uint32_t group_order() const { return n_; }
  bool is_trivial() const { return k_ == 0; }
  std::uint32_t order() const;
  Character inverse() const { return Character(-static_cast<long long>(k_), n_); }
  Character pow(long long e) const;
  Character operator*(const Character& o) const;
  bool operator==(const Character& o) const { return k_ == o.k_ && n_ == o.n_; }

 private:
  std::uint32_t k_;
  std::uint32_t n_;
};

// c * g(T^psi); the unit is -g(eps) since g(eps) = -1.
struct GaussMonomial {
  CycNumber coeff;
  std::uint32_t psi = 0;
};

// Per-field character data: roots of unity, Jacobi sums and Gauss sums.
// Shared read-only once built; the lazily built tables use call_once.
class CharacterTables {
 public:
  static std::shared_ptr<const CharacterTables> get(const FieldPtr& F);

  explicit CharacterTables(FieldPtr F);

  const FiniteField& field() const { return *F_; }
  const FieldPtr& field_ptr() const { return F_; }
  // Character values live in Q(zeta_{q-1}), Gauss sums in Q(zeta_{p(q-1)}).
  unsigned char_index() const { return n_; }
  unsigned gauss_index() const { return n_ * F_->p(); }

  const CycNumber& zeta_power(long long e) const;
  CycNumber char_value(const Character& chi, FieldElement x) const;
  // T^k(-1).
  int sign(long long k) const;
  // J(a, b) = sum_x T^a(x) T^b(1 - x).
  const CycNumber& jacobi(long long a, long long b) const;
  // g(T^k) = sum_x T^k(x) zeta_p^{Tr x}.
  const CycNumber& gauss_sum(long long k) const;

  GaussMonomial unit() const;
  void multiply_gauss(GaussMonomial& x, long long k) const;
  void divide_gauss(GaussMonomial& x, long long k) const;
  void multiply(GaussMonomial& x, const GaussMonomial& y) const;
  // Exact value in Q(zeta_{p(q-1)}).
  CycNumber evaluate(const GaussMonomial& x) const;
  // Value in Q(zeta_{q-1}); requires psi = 0.
  CycNumber evaluate_balanced(const GaussMonomial& x) const;

 private:
  std::uint32_t reduce(long long k) const;
  CycNumber from_counts(const std::vector<long long>& counts,
                        const std::vector<std::vector<long long>>& powers, unsigned m) const;
  void build_jacobi() const;
  void build_gauss() const;

  FieldPtr F_;
  std::uint32_t n_;
  std::vector<std::vector<long long>> char_powers_;
  std::vector<CycNumber> zeta_;

  mutable std::once_flag jacobi_once_;
  mutable std::vector<CycNumber> jacobi_;
  mutable std::once_flag gauss_once_;
  mutable std::vector<CycNumber> gauss_;
};

using TablesPtr = std::shared_ptr<const CharacterTables>;

CycNumber char_eval(const CharacterTables& T, const Character& chi, FieldElement x);

// sum_{l<n} chi(zeta_n^l).
CycNumber orthogonality_sum(const CharacterTables& T, const Character& chi, std::uint32_t n);

// prod_l g(chi_n^l psi) - g(psi^n) psi^{-n}(n) prod_{l>=1} g(chi_n^l), from Gauss sums directly.
CycNumber hasse_davenport_residual(const CharacterTables& T, std::uint32_t n, const Character& psi);

// g(chi) g(conj chi) - chi(-1) q (or - 1 for the trivial character).
CycNumber gauss_conjugation_residual(const CharacterTables& T, const Character& chi);

}  // namespace hypersplit
