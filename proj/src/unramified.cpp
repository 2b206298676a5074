// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "hypersplit/unramified.hpp"

#include <algorithm>
#include <sstream>

#include "hypersplit/errors.hpp"

namespace hypersplit {

ZqRing::ZqRing(FieldPtr F, unsigned N) : F_(std::move(F)), r_(F_->r()), N_(N), mod_(padic_modulus(F_->p(), N)) {
  f_.assign(F_->modulus().begin(), F_->modulus().end());
}

ZqRing::Elem ZqRing::scalar(std::uint64_t c) const {
  Elem e = zero();
  e[0] = c % mod_;
  return e;
}

ZqRing::Elem ZqRing::add(const Elem& a, const Elem& b) const {
  Elem out(r_);
  for (unsigned i = 0; i < r_; ++i) out[i] = (a[i] + b[i]) % mod_;
  return out;
}

ZqRing::Elem ZqRing::scale(const Elem& a, std::uint64_t c) const {
  Elem out(r_);
  c %= mod_;
  for (unsigned i = 0; i < r_; ++i) out[i] = mulmod(a[i], c, mod_);
  return out;
}

ZqRing::Elem ZqRing::mul(const Elem& a, const Elem& b) const {
  std::vector<std::uint64_t> t(2 * r_ - 1, 0);
  for (unsigned i = 0; i < r_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < r_; ++j) t[i + j] = (t[i + j] + mulmod(a[i], b[j], mod_)) % mod_;
  }
  // x^r = -sum f_i x^i
  for (std::size_t d = t.size(); d-- > r_;) {
    const std::uint64_t c = t[d];
    if (c == 0) continue;
    t[d] = 0;
    for (unsigned i = 0; i < r_; ++i) {
      std::uint64_t sub = mulmod(c, f_[i], mod_);
      t[d - r_ + i] = (t[d - r_ + i] + mod_ - sub) % mod_;
    }
  }
  t.resize(r_);
  return t;
}

ZqRing::Elem ZqRing::pow(Elem a, std::uint64_t e) const {
  Elem acc = scalar(1);
  while (e > 0) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

bool ZqRing::in_Zp(const Elem& a) const {
  for (unsigned i = 1; i < r_; ++i)
    if (a[i] != 0) return false;
  return true;
}

ZqRing::Elem ZqRing::lift(FieldElement x) const {
  auto c = F_->coeffs(x);
  Elem e = zero();
  for (unsigned i = 0; i < r_; ++i) e[i] = c[i];
  return e;
}

ZqRing::Elem ZqRing::teichmuller(FieldElement x) const {
  if (x.is_zero()) return zero();
  Elem e = lift(x);
  const std::uint64_t q = F_->q();
  for (unsigned i = 1; i < N_; ++i) e = pow(e, q);
  return e;
}

const ZqRing::Elem& ZqRing::omega_generator_power(long long e) const {
  const long long n = static_cast<long long>(F_->q()) - 1;
  if (omega_pows_.empty()) {
    Elem w = teichmuller(F_->generator());
    omega_pows_.reserve(n);
    Elem cur = scalar(1);
    for (long long i = 0; i < n; ++i) {
      omega_pows_.push_back(cur);
      cur = mul(cur, w);
    }
  }
  long long k = e % n;
  if (k < 0) k += n;
  return omega_pows_[static_cast<std::size_t>(k)];
}

bool UnramifiedPAdic::is_zero() const {
  for (auto c : comps)
    if (c != 0) return false;
  return true;
}

bool UnramifiedPAdic::in_Zp() const {
  for (std::size_t i = 1; i < comps.size(); ++i)
    if (comps[i] != 0) return false;
  return true;
}

PAdic UnramifiedPAdic::to_padic() const {
  if (!in_Zp()) fail(ErrorKind::Unsupported, "value lies in Z_q but not in Z_p");
  std::uint64_t c = comps.empty() ? 0 : comps[0];
  if (c == 0) return PAdic::zero(p, val + static_cast<long>(prec));
  unsigned k = 0;
  while (c % p == 0) {
    c /= p;
    ++k;
  }
  return PAdic::from_unit(p, c, prec - k, val + static_cast<long>(k));
}

namespace {

UnramifiedPAdic combine(const UnramifiedPAdic& a, const UnramifiedPAdic& b, bool subtract) {
  if (a.p != b.p || a.comps.size() != b.comps.size()) fail(ErrorKind::DomainViolation, "mismatched rings");
  UnramifiedPAdic out;
  out.p = a.p;
  out.val = std::min(a.val, b.val);
  const long N = std::min(a.absolute_precision(), b.absolute_precision());
  out.comps.assign(a.comps.size(), 0);
  if (N <= out.val) {
    out.val = N;
    return out;
  }
  out.prec = static_cast<unsigned>(N - out.val);
  const std::uint64_t mod = padic_modulus(a.p, out.prec);
  const std::uint64_t sa = padic_modulus(a.p, static_cast<unsigned>(std::min<long>(a.val - out.val, out.prec)));
  const std::uint64_t sb = padic_modulus(a.p, static_cast<unsigned>(std::min<long>(b.val - out.val, out.prec)));
  for (std::size_t i = 0; i < out.comps.size(); ++i) {
    std::uint64_t x = mulmod(a.comps[i] % mod, sa % mod, mod);
    std::uint64_t y = mulmod(b.comps[i] % mod, sb % mod, mod);
    out.comps[i] = subtract ? (x + mod - y) % mod : (x + y) % mod;
  }
  return out;
}

}  // namespace

UnramifiedPAdic operator-(const UnramifiedPAdic& a, const UnramifiedPAdic& b) { return combine(a, b, true); }

UnramifiedPAdic operator+(const UnramifiedPAdic& a, const UnramifiedPAdic& b) { return combine(a, b, false); }

std::string UnramifiedPAdic::to_string() const {
  if (in_Zp()) return to_padic().to_string();
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < comps.size(); ++i) os << (i ? ", " : "") << comps[i];
  os << ")";
  if (val != 0) os << "*" << p << "^" << val;
  os << " + O(" << p << "^" << absolute_precision() << ")";
  return os.str();
}

}  // namespace hypersplit
