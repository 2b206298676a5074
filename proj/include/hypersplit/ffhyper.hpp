// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hypersplit/charsum.hpp"
#include "hypersplit/rational.hpp"

namespace hypersplit {

// Character exponents k of T^k for the top (A_i) and bottom (B_i) rows.
// Unequal lengths are accepted only in generalized mode.
struct FFHyperParams {
  std::vector<long long> top;
  std::vector<long long> bottom;
  bool generalized = false;
};

// Normalized finite-field mFm at lambda.  Equal-length values are returned in
// Q(zeta_{q-1}); generalized values in Q(zeta_{p(q-1)}).
CycNumber ff_hyper(const CharacterTables& T, const FFHyperParams& params, FieldElement lambda);

struct DefinedOverQData {
  std::vector<std::uint64_t> p_exps;
  std::vector<std::uint64_t> q_exps;
  std::uint64_t delta = 0;
  // Multiplicity of the primitive d-th roots of unity as zeros of D(x).
  std::map<std::uint64_t, std::uint64_t> gcd_mult;
  Rational M;
  std::size_t m_top = 0;
  std::size_t m_bottom = 0;

  // s(c) for the zero exp(2 pi i c), c rational.
  std::uint64_t multiplicity(const Rational& c) const;
  // s(j) for the zero exp(2 pi i j/(q-1)).
  std::uint64_t s_at(long long j, std::uint64_t q) const;
  // lcm of all p_i and q_i.
  std::uint64_t conductor() const;
};

std::optional<DefinedOverQData> try_defined_over_Q(const std::vector<Rational>& a,
                                                   const std::vector<Rational>& b);
DefinedOverQData derive_defined_over_Q(const std::vector<Rational>& a, const std::vector<Rational>& b);

// Gauss-sum j-sum for the defined-over-Q part (data) together with extra
// parameters that need q = 1 mod their denominators.  m counts every
// parameter: data.m_top + extra_top.size().
CycNumber ff_hyper_over_Q(const CharacterTables& T, const DefinedOverQData& data,
                          const std::vector<Rational>& extra_top,
                          const std::vector<Rational>& extra_bottom, FieldElement lambda);

enum class SplitMode { Splitting, Converse };

struct FFSplitResult {
  CycNumber lhs;
  CycNumber rhs;
  CycNumber residual;
};

// Splitting: sum_l F(A^n; B^n | zeta_n^l lambda) against F({A chi_n^l}; {B chi_n^l} | lambda^n).
// Converse: lhs is 0 and rhs is F({A chi_n^l}; {B chi_n^l} | lambda) for lambda not an n-th power.
FFSplitResult ff_split_residual(const CharacterTables& T, const std::vector<long long>& base_top,
                                const std::vector<long long>& base_bottom, std::uint32_t n,
                                FieldElement lambda, SplitMode mode = SplitMode::Splitting);

// The nm-length parameter rows {A_i chi_n^l}, {B_i chi_n^l}.
FFHyperParams split_params(const FiniteField& F, const std::vector<long long>& base_top,
                           const std::vector<long long>& base_bottom, std::uint32_t n);

enum class FFReduction { M2, M3, M4 };

enum class ThreeF2Mode {
  // 3F2 read as 3F3 with the trivial character appended to the bottom row.
  PaddedEpsilon,
  // Unequal-length 3-over-2 character sum.
  Generalized,
};

struct FFReductionArgs {
  long long A = 0;
  long long B = 0;
  // Use chi_4 = T^{3(q-1)/4} instead of T^{(q-1)/4}.
  bool conjugate_chi4 = false;
};

FFHyperParams ff_reduction_lhs(const CharacterTables& T, FFReduction id, const FFReductionArgs& args);
// Right-hand side in Q(zeta_{p(q-1)}).
CycNumber ff_reduction_rhs(const CharacterTables& T, FFReduction id, const FFReductionArgs& args,
                           ThreeF2Mode mode = ThreeF2Mode::PaddedEpsilon);

}  // namespace hypersplit
