// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "hypersplit/ffhyper.hpp"

#include <numeric>
#include <string>

#include "hypersplit/errors.hpp"

namespace hypersplit {

CycNumber ff_hyper(const CharacterTables& T, const FFHyperParams& params, FieldElement lambda) {
  const bool balanced = params.top.size() == params.bottom.size();
  if (!balanced && !params.generalized)
    fail(ErrorKind::DomainViolation, "top and bottom rows differ in length");
  const FiniteField& F = T.field();
  const unsigned n = T.char_index();
  const unsigned out_index = balanced ? n : T.gauss_index();
  if (lambda.is_zero()) return CycNumber(out_index);

  GaussMonomial denom = T.unit();
  for (long long a : params.top) T.divide_gauss(denom, a);
  for (long long b : params.bottom) T.divide_gauss(denom, -b);

  const long long L = F.dlog(lambda);
  const std::size_t m = params.top.size();
  CycNumber acc(out_index);
  for (long long k = 0; k < static_cast<long long>(n); ++k) {
    GaussMonomial term = denom;
    for (long long a : params.top) T.multiply_gauss(term, a + k);
    for (long long b : params.bottom) T.multiply_gauss(term, -b - k);
    CycNumber factor = T.zeta_power(k * L);
    if (m % 2 == 1 && T.sign(k) < 0) factor = -factor;
    if (balanced) {
      acc += T.evaluate_balanced(term) * factor;
    } else {
      acc += T.evaluate(term) * factor.embed(out_index);
    }
  }
  acc *= Rational(-1, static_cast<long>(n));
  return acc;
}

std::uint64_t DefinedOverQData::multiplicity(const Rational& c) const {
  Rational f = frac(c);
  std::uint64_t d = std::stoull(Integer(f.get_den()).get_str());
  auto it = gcd_mult.find(d);
  return it == gcd_mult.end() ? 0 : it->second;
}

std::uint64_t DefinedOverQData::s_at(long long j, std::uint64_t q) const {
  std::uint64_t n = q - 1;
  long long r = j % static_cast<long long>(n);
  if (r < 0) r += n;
  std::uint64_t d = n / std::gcd(static_cast<std::uint64_t>(r), n);
  auto it = gcd_mult.find(d);
  return it == gcd_mult.end() ? 0 : it->second;
}

std::uint64_t DefinedOverQData::conductor() const {
  std::uint64_t l = 1;
  for (auto x : p_exps) l = lcm_u64(l, x);
  for (auto x : q_exps) l = lcm_u64(l, x);
  return l;
}

std::optional<DefinedOverQData> try_defined_over_Q(const std::vector<Rational>& a,
                                                   const std::vector<Rational>& b) {
  std::map<Rational, long> net;
  for (const auto& x : a) ++net[frac(x)];
  for (const auto& x : b) --net[frac(x)];

  // Net multiplicity per root order; all primitive roots of one order must agree.
  std::map<std::uint64_t, long> R;
  std::map<std::uint64_t, std::map<std::uint64_t, long>> by_order;
  for (const auto& [v, c] : net) {
    if (c == 0) continue;
    std::uint64_t d = std::stoull(Integer(v.get_den()).get_str());
    std::uint64_t u = std::stoull(Integer(v.get_num()).get_str());
    by_order[d][u] = c;
  }
  for (const auto& [d, entries] : by_order) {
    if (entries.size() != euler_phi(d)) return std::nullopt;
    long c0 = entries.begin()->second;
    for (const auto& [u, c] : entries)
      if (c != c0) return std::nullopt;
    R[d] = c0;
  }

  DefinedOverQData data;
  data.m_top = a.size();
  data.m_bottom = b.size();
  std::uint64_t L = 1;
  for (const auto& [d, c] : R) L = lcm_u64(L, d);
  std::map<std::uint64_t, long> gamma;
  for (std::uint64_t n : divisors(L)) {
    long g = 0;
    for (std::uint64_t k : divisors(L))
      if (k % n == 0) {
        auto it = R.find(k);
        if (it != R.end()) g += mobius(k / n) * it->second;
      }
    if (g != 0) gamma[n] = g;
  }
  data.M = 1;
  for (const auto& [n, g] : gamma) {
    for (long i = 0; i < (g > 0 ? g : -g); ++i) (g > 0 ? data.p_exps : data.q_exps).push_back(n);
    Rational nn(static_cast<unsigned long>(n));
    Rational pw = 1;
    for (std::uint64_t i = 0; i < n; ++i) pw *= nn;
    for (long i = 0; i < (g > 0 ? g : -g); ++i) {
      if (g > 0)
        data.M *= pw;
      else
        data.M /= pw;
    }
  }
  // D(x): Phi_d appears min(#{p_i : d | p_i}, #{q_i : d | q_i}) times.
  std::uint64_t Lall = std::max<std::uint64_t>(data.conductor(), 1);
  for (std::uint64_t d : divisors(Lall)) {
    std::uint64_t np = 0, nq = 0;
    for (auto x : data.p_exps) np += (x % d == 0);
    for (auto x : data.q_exps) nq += (x % d == 0);
    std::uint64_t mn = std::min(np, nq);
    if (mn > 0) {
      data.gcd_mult[d] = mn;
      data.delta += mn * euler_phi(d);
    }
  }
  return data;
}

DefinedOverQData derive_defined_over_Q(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  auto d = try_defined_over_Q(a, b);
  if (!d) fail(ErrorKind::NotDefinedOverQ, "root multisets are not unions of full Galois orbits");
  return *d;
}

namespace {

long long exponent_of(const Rational& a, std::uint64_t n) {
  Rational e = a * Rational(static_cast<unsigned long>(n));
  if (e.get_den() != 1) fail(ErrorKind::DomainViolation, "q - 1 is not divisible by the denominator of " + a.get_str());
  return to_int64(e.get_num());
}

}  // namespace

CycNumber ff_hyper_over_Q(const CharacterTables& T, const DefinedOverQData& data,
                          const std::vector<Rational>& extra_top,
                          const std::vector<Rational>& extra_bottom, FieldElement lambda) {
  const FiniteField& F = T.field();
  const std::uint64_t q = F.q();
  const std::uint64_t n = q - 1;
  const std::uint64_t cond = data.conductor();
  if (cond % F.p() == 0) fail(ErrorKind::DomainViolation, "q is not coprime to the defined-over-Q denominators");
  if (extra_top.size() + data.m_top != extra_bottom.size() + data.m_bottom)
    fail(ErrorKind::DomainViolation, "top and bottom rows differ in length");
  std::vector<long long> ea, eb;
  for (const auto& a : extra_top) ea.push_back(exponent_of(frac(a), n));
  for (const auto& b : extra_bottom) eb.push_back(exponent_of(frac(b), n));
  if (lambda.is_zero()) return CycNumber(T.char_index());

  const std::size_t m = data.m_top + extra_top.size();
  const std::size_t t = data.p_exps.size(), s = data.q_exps.size();
  // c = (-1)^{m + delta} M^{-1} lambda
  FieldElement c = F.mul(F.inv(F.from_int(static_cast<long long>(residue(data.M, F.p())))), lambda);
  if ((m + data.delta) % 2 == 1) c = F.neg(c);
  const long long L = F.dlog(c);

  GaussMonomial denom = T.unit();
  for (long long a : ea) T.divide_gauss(denom, a);
  for (long long b : eb) T.divide_gauss(denom, -b);

  const std::uint64_t s0 = data.s_at(0, q);
  CycNumber acc(T.char_index());
  for (long long j = 0; j < static_cast<long long>(n); ++j) {
    GaussMonomial term = denom;
    for (auto pi : data.p_exps) T.multiply_gauss(term, j * static_cast<long long>(pi));
    for (auto qi : data.q_exps) T.multiply_gauss(term, -j * static_cast<long long>(qi));
    for (long long a : ea) T.multiply_gauss(term, j + a);
    for (long long b : eb) T.multiply_gauss(term, -j - b);
    long long qexp = static_cast<long long>(data.s_at(-j, q)) - static_cast<long long>(s0);
    Rational qpow = 1;
    for (long long i = 0; i < (qexp < 0 ? -qexp : qexp); ++i) qpow *= Rational(static_cast<unsigned long>(q));
    if (qexp < 0) qpow = 1 / qpow;
    CycNumber v = T.evaluate_balanced(term) * T.zeta_power(j * L);
    v *= qpow;
    acc += v;
  }
  acc *= Rational((t + s + 1) % 2 == 0 ? 1 : -1, static_cast<long>(n));
  return acc;
}

FFHyperParams split_params(const FiniteField& F, const std::vector<long long>& base_top,
                           const std::vector<long long>& base_bottom, std::uint32_t n) {
  Character chi = Character::of_order(F, n);
  FFHyperParams out;
  for (long long a : base_top)
    for (std::uint32_t l = 0; l < n; ++l) out.top.push_back(a + static_cast<long long>(l) * chi.k());
  for (long long b : base_bottom)
    for (std::uint32_t l = 0; l < n; ++l) out.bottom.push_back(b + static_cast<long long>(l) * chi.k());
  return out;
}

FFSplitResult ff_split_residual(const CharacterTables& T, const std::vector<long long>& base_top,
                                const std::vector<long long>& base_bottom, std::uint32_t n,
                                FieldElement lambda, SplitMode mode) {
  const FiniteField& F = T.field();
  FFHyperParams big = split_params(F, base_top, base_bottom, n);
  if (mode == SplitMode::Converse) {
    if (lambda.is_zero() || F.is_nth_power(lambda, n))
      fail(ErrorKind::PreconditionViolated, "converse mode needs lambda that is not an n-th power");
    CycNumber rhs = ff_hyper(T, big, lambda);
    CycNumber zero(rhs.index());
    return {zero, rhs, rhs};
  }
  FFHyperParams small;
  for (long long a : base_top) small.top.push_back(a * n);
  for (long long b : base_bottom) small.bottom.push_back(b * n);
  FieldElement z = F.primitive_root_of_unity(n);
  CycNumber lhs(T.char_index());
  FieldElement arg = lambda;
  for (std::uint32_t l = 0; l < n; ++l) {
    lhs += ff_hyper(T, small, arg);
    arg = F.mul(arg, z);
  }
  CycNumber rhs = ff_hyper(T, big, F.pow(lambda, n));
  return {lhs, rhs, lhs - rhs};
}

namespace {

struct ReductionChars {
  long long n, phi, chi4, chi4bar;
};

ReductionChars reduction_chars(const CharacterTables& T, bool need_chi4, bool conj) {
  const FiniteField& F = T.field();
  ReductionChars c{};
  c.n = F.q() - 1;
  if (F.q() % 2 == 0) fail(ErrorKind::EvenPrime, "reduction formulas need odd q");
  c.phi = c.n / 2;
  if (need_chi4) {
    if (c.n % 4 != 0) fail(ErrorKind::OrderDoesNotDivide, "chi_4 needs q = 1 mod 4");
    c.chi4 = conj ? 3 * c.n / 4 : c.n / 4;
    c.chi4bar = c.n - c.chi4;
  }
  return c;
}

bool trivial_mod(long long k, long long n) { return ((k % n) + n) % n == 0; }

// prod g(num) / prod g(den) in Q(zeta_{p(q-1)}).
CycNumber gauss_ratio(const CharacterTables& T, const std::vector<long long>& num,
                      const std::vector<long long>& den) {
  GaussMonomial x = T.unit();
  for (long long k : num) T.multiply_gauss(x, k);
  for (long long k : den) T.divide_gauss(x, k);
  return T.evaluate(x);
}

}  // namespace

FFHyperParams ff_reduction_lhs(const CharacterTables& T, FFReduction id, const FFReductionArgs& args) {
  const long long A = args.A, B = args.B;
  FFHyperParams out;
  switch (id) {
    case FFReduction::M2: {
      auto c = reduction_chars(T, false, false);
      out.top = {A, c.phi + A, B, c.phi + B};
      out.bottom = {0, c.phi, A - B, c.phi + A - B};
      break;
    }
    case FFReduction::M3: {
      auto c = reduction_chars(T, true, args.conjugate_chi4);
      out.top = {c.chi4, c.chi4bar, c.chi4 + A, c.chi4bar + A, c.chi4 - A, c.chi4bar - A};
      out.bottom = {0, c.phi, -A, c.phi - A, A, c.phi + A};
      break;
    }
    case FFReduction::M4: {
      auto c = reduction_chars(T, true, args.conjugate_chi4);
      out.top = {A, c.phi + A, c.chi4 + A, c.chi4bar + A, B, c.phi + B, c.chi4 + B, c.chi4bar + B};
      out.bottom = {0, c.phi, c.chi4, c.chi4bar, A - B, c.phi + A - B, c.chi4 + A - B, c.chi4bar + A - B};
      break;
    }
  }
  return out;
}

CycNumber ff_reduction_rhs(const CharacterTables& T, FFReduction id, const FFReductionArgs& args,
                           ThreeF2Mode mode) {
  const long long A = args.A, B = args.B;
  const unsigned m = T.gauss_index();
  switch (id) {
    case FFReduction::M2: {
      auto c = reduction_chars(T, false, false);
      if (trivial_mod(2 * A, c.n) || trivial_mod(4 * B, c.n))
        fail(ErrorKind::DegenerateCharacters, "needs A^2 and B^4 nontrivial");
      CycNumber out = gauss_ratio(T, {2 * B, -2 * A + 4 * B}, {-2 * A + 2 * B, 4 * B});
      for (long long R : {A, A + c.phi})
        out += gauss_ratio(T, {-2 * A, -R + 2 * B}, {-R, -2 * A + 2 * B});
      return out;
    }
    case FFReduction::M3: {
      auto c = reduction_chars(T, true, args.conjugate_chi4);
      if (trivial_mod(8 * A, c.n)) fail(ErrorKind::DegenerateCharacters, "needs A^8 nontrivial");
      CycNumber out = CycNumber::from_integer(m, 1);
      // R^2 = phi
      for (long long R : {c.n / 4, 3 * c.n / 4})
        out += gauss_ratio(T, {-R + c.phi + 2 * A, -R + c.phi - 2 * A}, {-R, -R});
      if (c.n % 8 == 0) {
        // S^2 = chi_4
        long long s0 = c.chi4 / 2;
        if (c.chi4 % 2 != 0) s0 = (c.chi4 + c.n) / 2;
        for (long long S : {s0, s0 + c.phi})
          out += gauss_ratio(T, {S + A, c.chi4 + S + A}, {c.phi + S + A, c.chi4bar + S + A});
      }
      return out;
    }
    case FFReduction::M4: {
      auto c = reduction_chars(T, true, args.conjugate_chi4);
      if (trivial_mod(4 * A, c.n) || trivial_mod(8 * B, c.n) || trivial_mod(2 * A - c.phi - 4 * B, c.n))
        fail(ErrorKind::DegenerateCharacters, "needs A^4, B^8 nontrivial and A^2 != phi B^4");
      CycNumber out = gauss_ratio(T, {4 * B, -4 * A + 8 * B}, {-4 * A + 4 * B, 8 * B});
      for (long long R : {2 * A, 2 * A + c.phi})
        out += gauss_ratio(T, {-4 * A, -R + 4 * B}, {-R, -4 * A + 4 * B});
      CycNumber pref = gauss_ratio(T, {-2 * A, -2 * A + c.phi + 4 * B}, {-2 * A + 2 * B, -2 * A + c.phi + 2 * B});
      CycNumber inner(m);
      const FiniteField& F = T.field();
      for (long long R : {A, A + c.phi}) {
        FFHyperParams p3;
        p3.top = {R + c.phi - 2 * A, 2 * B, c.phi + 2 * B};
        p3.bottom = {R, c.phi};
        if (mode == ThreeF2Mode::PaddedEpsilon) {
          p3.bottom.push_back(0);
          inner += ff_hyper(T, p3, F.one()).embed(m);
        } else {
          p3.generalized = true;
          inner += ff_hyper(T, p3, F.one());
        }
      }
      return out + pref * inner;
    }
  }
  fail(ErrorKind::UnknownIdentity, "unknown reduction");
}

}  // namespace hypersplit
