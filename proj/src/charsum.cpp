// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "hypersplit/charsum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "hypersplit/errors.hpp"

namespace hypersplit {
namespace {

// x^e mod Phi_m for e in [0, m), as small integer vectors.
std::vector<std::vector<long long>> power_table(unsigned m) {
  const auto& phi = cyclotomic_polynomial(m);
  std::size_t d = phi.size() - 1;
  std::vector<long long> ph(d + 1);
  for (std::size_t i = 0; i <= d; ++i) ph[i] = to_int64(phi[i]);
  std::vector<std::vector<long long>> out(m, std::vector<long long>(d, 0));
  std::vector<long long> cur(d, 0);
  cur[0] = 1;
  for (unsigned e = 0; e < m; ++e) {
    out[e] = cur;
    // multiply by x and reduce with the monic Phi_m
    long long top = cur[d - 1];
    for (std::size_t i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < d; ++i) cur[i] -= top * ph[i];
  }
  return out;
}

}  // namespace

Character::Character(long long k, std::uint32_t group_order) : n_(group_order) {
  if (group_order == 0) fail(ErrorKind::DomainViolation, "character group order must be positive");
  long long m = k % static_cast<long long>(group_order);
  if (m < 0) m += group_order;
  k_ = static_cast<std::uint32_t>(m);
}

Character Character::quadratic(const FiniteField& F) {
  if (F.q() % 2 == 0) fail(ErrorKind::EvenPrime, "quadratic character needs odd q");
  return Character((F.q() - 1) / 2, F.q() - 1);
}

Character Character::of_order(const FiniteField& F, std::uint32_t n) {
  if (n == 0 || (F.q() - 1) % n != 0)
    fail(ErrorKind::OrderDoesNotDivide, std::to_string(n) + " does not divide " + std::to_string(F.q() - 1));
  return Character((F.q() - 1) / n, F.q() - 1);
}

std::uint32_t Character::order() const { return n_ / std::gcd(k_ == 0 ? n_ : k_, n_); }

Character Character::pow(long long e) const {
  __int128 k = static_cast<__int128>(k_) * e;
  return Character(static_cast<long long>(k % n_), n_);
}

Character Character::operator*(const Character& o) const {
  if (o.n_ != n_) fail(ErrorKind::IndexMismatch, "characters of different fields");
  return Character(static_cast<long long>(k_) + o.k_, n_);
}

std::shared_ptr<const CharacterTables> CharacterTables::get(const FieldPtr& F) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, unsigned>, std::shared_ptr<const CharacterTables>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(F->p(), F->r());
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  auto t = std::make_shared<const CharacterTables>(F);
  cache.emplace(key, t);
  return t;
}

CharacterTables::CharacterTables(FieldPtr F) : F_(std::move(F)), n_(F_->q() - 1) {
  char_powers_ = power_table(n_);
  zeta_.reserve(n_);
  for (std::uint32_t e = 0; e < n_; ++e) {
    std::vector<Integer> num(char_powers_[e].size());
    for (std::size_t i = 0; i < num.size(); ++i) num[i] = static_cast<long>(char_powers_[e][i]);
    zeta_.push_back(CycNumber::from_numerators(n_, std::move(num)));
  }
}

std::uint32_t CharacterTables::reduce(long long k) const {
  long long m = k % static_cast<long long>(n_);
  if (m < 0) m += n_;
  return static_cast<std::uint32_t>(m);
}

const CycNumber& CharacterTables::zeta_power(long long e) const { return zeta_[reduce(e)]; }

CycNumber CharacterTables::char_value(const Character& chi, FieldElement x) const {
  if (x.is_zero()) return CycNumber(n_);
  return zeta_[reduce(static_cast<long long>(chi.k()) * F_->dlog(x))];
}

int CharacterTables::sign(long long k) const {
  if (F_->q() % 2 == 0) return 1;
  return reduce(k) % 2 == 0 ? 1 : -1;
}

CycNumber CharacterTables::from_counts(const std::vector<long long>& counts,
                                       const std::vector<std::vector<long long>>& powers,
                                       unsigned m) const {
  std::size_t d = powers.empty() ? 0 : powers[0].size();
  std::vector<long long> acc(d, 0);
  for (std::size_t e = 0; e < counts.size(); ++e) {
    if (counts[e] == 0) continue;
    for (std::size_t i = 0; i < d; ++i) acc[i] += counts[e] * powers[e][i];
  }
  std::vector<Integer> num(d);
  for (std::size_t i = 0; i < d; ++i) num[i] = static_cast<long>(acc[i]);
  return CycNumber::from_numerators(m, std::move(num));
}

void CharacterTables::build_jacobi() const {
  const FiniteField& F = *F_;
  std::vector<std::uint32_t> la, lb;
  for (std::uint32_t c = 0; c < F.q(); ++c) {
    FieldElement x(c);
    FieldElement y = F.sub(F.one(), x);
    if (x.is_zero() || y.is_zero()) continue;
    la.push_back(F.dlog(x));
    lb.push_back(F.dlog(y));
  }
  jacobi_.assign(static_cast<std::size_t>(n_) * n_, CycNumber(n_));
  std::vector<long long> counts(n_);
  for (std::uint32_t a = 0; a < n_; ++a) {
    for (std::uint32_t b = a; b < n_; ++b) {
      std::fill(counts.begin(), counts.end(), 0);
      for (std::size_t i = 0; i < la.size(); ++i)
        ++counts[(static_cast<std::uint64_t>(a) * la[i] + static_cast<std::uint64_t>(b) * lb[i]) % n_];
      CycNumber j = from_counts(counts, char_powers_, n_);
      jacobi_[static_cast<std::size_t>(b) * n_ + a] = j;
      jacobi_[static_cast<std::size_t>(a) * n_ + b] = std::move(j);
    }
  }
}

const CycNumber& CharacterTables::jacobi(long long a, long long b) const {
  std::call_once(jacobi_once_, [this] { build_jacobi(); });
  return jacobi_[static_cast<std::size_t>(reduce(a)) * n_ + reduce(b)];
}

void CharacterTables::build_gauss() const {
  const FiniteField& F = *F_;
  const unsigned p = F.p();
  const unsigned m = gauss_index();
  auto powers = power_table(m);
  std::vector<std::uint32_t> logs, traces;
  for (std::uint32_t c = 1; c < F.q(); ++c) {
    logs.push_back(F.dlog(FieldElement(c)));
    traces.push_back(F.absolute_trace(FieldElement(c)));
  }
  gauss_.clear();
  gauss_.reserve(n_);
  std::vector<long long> counts(m);
  for (std::uint32_t k = 0; k < n_; ++k) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t i = 0; i < logs.size(); ++i) {
      std::uint64_t e = (static_cast<std::uint64_t>(p) * ((static_cast<std::uint64_t>(k) * logs[i]) % n_) +
                         static_cast<std::uint64_t>(n_) * traces[i]) % m;
      ++counts[e];
    }
    gauss_.push_back(from_counts(counts, powers, m));
  }
}

const CycNumber& CharacterTables::gauss_sum(long long k) const {
  std::call_once(gauss_once_, [this] { build_gauss(); });
  return gauss_[reduce(k)];
}

GaussMonomial CharacterTables::unit() const { return GaussMonomial{CycNumber::from_integer(n_, -1), 0}; }

void CharacterTables::multiply_gauss(GaussMonomial& x, long long k) const {
  std::uint32_t a = x.psi, b = reduce(k);
  if (a == 0 && b == 0) {
    x.coeff = -x.coeff;
  } else if (reduce(static_cast<long long>(a) + b) == 0) {
    x.coeff *= Rational(-sign(a) * static_cast<long>(F_->q()));
    x.psi = 0;
  } else {
    x.coeff *= jacobi(a, b);
    x.psi = reduce(static_cast<long long>(a) + b);
  }
}

void CharacterTables::divide_gauss(GaussMonomial& x, long long k) const {
  std::uint32_t b = reduce(k);
  if (b == 0) {
    multiply_gauss(x, 0);
    return;
  }
  multiply_gauss(x, -static_cast<long long>(b));
  x.coeff *= Rational(sign(b), static_cast<long>(F_->q()));
}

void CharacterTables::multiply(GaussMonomial& x, const GaussMonomial& y) const {
  x.coeff *= y.coeff;
  multiply_gauss(x, y.psi);
}

CycNumber CharacterTables::evaluate(const GaussMonomial& x) const {
  return x.coeff.embed(gauss_index()) * gauss_sum(x.psi);
}

CycNumber CharacterTables::evaluate_balanced(const GaussMonomial& x) const {
  if (x.psi != 0) fail(ErrorKind::DomainViolation, "Gauss monomial is not balanced");
  return -x.coeff;
}

CycNumber char_eval(const CharacterTables& T, const Character& chi, FieldElement x) {
  return T.char_value(chi, x);
}

CycNumber orthogonality_sum(const CharacterTables& T, const Character& chi, std::uint32_t n) {
  const FiniteField& F = T.field();
  FieldElement z = F.primitive_root_of_unity(n);
  CycNumber acc(T.char_index());
  FieldElement cur = F.one();
  for (std::uint32_t l = 0; l < n; ++l) {
    acc += T.char_value(chi, cur);
    cur = F.mul(cur, z);
  }
  return acc;
}

CycNumber hasse_davenport_residual(const CharacterTables& T, std::uint32_t n, const Character& psi) {
  const FiniteField& F = T.field();
  Character chi_n = Character::of_order(F, n);
  const unsigned m = T.gauss_index();
  CycNumber lhs = CycNumber::from_integer(m, 1);
  for (std::uint32_t l = 0; l < n; ++l) lhs *= T.gauss_sum((chi_n.pow(l) * psi).k());
  CycNumber rhs = T.gauss_sum(psi.pow(n).k());
  rhs *= T.char_value(psi.pow(-static_cast<long long>(n)), F.from_int(n)).embed(m);
  for (std::uint32_t l = 1; l < n; ++l) rhs *= T.gauss_sum(chi_n.pow(l).k());
  return lhs - rhs;
}

CycNumber gauss_conjugation_residual(const CharacterTables& T, const Character& chi) {
  const unsigned m = T.gauss_index();
  CycNumber prod = T.gauss_sum(chi.k()) * T.gauss_sum(chi.inverse().k());
  Rational expected = chi.is_trivial() ? Rational(1) : Rational(T.sign(chi.k()) * static_cast<long>(T.field().q()));
  return prod - CycNumber::from_rational(m, expected);
}

}  // namespace hypersplit
