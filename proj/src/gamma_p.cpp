// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// Gamma_p(n) mod p^N without the O(n) product.
//
// The block of units in [bp+1, bp+p-1] has product P_0(b) = F(pb) with
// F(x) = (x+1)...(x+p-1).  The coefficient of b^d carries p^d, so P_0 is a
// polynomial of degree < N mod p^N.  P_{i+1}(y) = prod_{t<p} P_i(py + t)
// covers p^{i+1} consecutive blocks and keeps the same shape.  A prefix of
// K blocks is then a product over the base-p digits of K.

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "hypersplit/errors.hpp"
#include "hypersplit/padic.hpp"

namespace hypersplit {

namespace {

using Poly = std::vector<std::uint64_t>;

class BlockTable {
 public:
  BlockTable(std::uint64_t p, unsigned N) : p_(p), N_(N), mod_(padic_modulus(p, N)) {
    Poly F{1};
    for (std::uint64_t t = 1; t < p; ++t) F = mul_linear(F, t % mod_);
    Poly P0(N, 0);
    std::uint64_t pw = 1;
    for (unsigned d = 0; d < N && d < F.size(); ++d) {
      P0[d] = mulmod(F[d], pw, mod_);
      pw = mulmod(pw, p % mod_, mod_);
    }
    levels_.push_back(P0);
    // K < p^{N-1}, so levels 0..N-2 suffice.
    for (unsigned i = 1; i + 1 < N; ++i) levels_.push_back(next_level(levels_.back()));
  }

  std::uint64_t gamma(std::uint64_t n) const {
    if (n == 0) return 1;
    n %= mod_;
    const std::uint64_t K = n / p_;
    std::uint64_t acc = 1;
    // Digits of K from the top level down.
    std::vector<std::uint64_t> digits;
    for (std::uint64_t k = K; k > 0; k /= p_) digits.push_back(k % p_);
    for (std::size_t i = digits.size(); i-- > 0;) {
      const std::uint64_t hi = K / pow_p(i + 1);
      for (std::uint64_t t = 0; t < digits[i]; ++t)
        acc = mulmod(acc, eval(levels_.at(i), (hi * p_ + t) % mod_), mod_);
    }
    for (std::uint64_t j = K * p_ + 1; j < n; ++j) acc = mulmod(acc, j % mod_, mod_);
    if (n % 2 == 1) acc = (mod_ - acc) % mod_;
    return acc;
  }

 private:
  std::uint64_t pow_p(std::size_t e) const {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= p_;
    return r;
  }

  Poly mul_linear(const Poly& f, std::uint64_t c) const {
    Poly out(f.size() + 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
      out[i] = (out[i] + mulmod(f[i], c, mod_)) % mod_;
      out[i + 1] = (out[i + 1] + f[i]) % mod_;
    }
    return out;
  }

  Poly mul_trunc(const Poly& a, const Poly& b) const {
    Poly out(N_, 0);
    for (unsigned i = 0; i < N_; ++i) {
      if (a[i] == 0) continue;
      for (unsigned j = 0; i + j < N_; ++j) out[i + j] = (out[i + j] + mulmod(a[i], b[j], mod_)) % mod_;
    }
    return out;
  }

  // f(p y + t), truncated to degree < N.
  Poly shift_scale(Poly f, std::uint64_t t) const {
    const std::size_t n = f.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = n - 1; j > i; --j) f[j - 1] = (f[j - 1] + mulmod(t, f[j], mod_)) % mod_;
    std::uint64_t pw = 1;
    for (std::size_t d = 0; d < n; ++d) {
      f[d] = mulmod(f[d], pw, mod_);
      pw = mulmod(pw, p_ % mod_, mod_);
    }
    return f;
  }

  Poly next_level(const Poly& P) const {
    Poly out(N_, 0);
    out[0] = 1 % mod_;
    for (std::uint64_t t = 0; t < p_; ++t) out = mul_trunc(out, shift_scale(P, t));
    return out;
  }

  std::uint64_t eval(const Poly& f, std::uint64_t y) const {
    std::uint64_t acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = (mulmod(acc, y, mod_) + f[i]) % mod_;
    return acc;
  }

  std::uint64_t p_;
  unsigned N_;
  std::uint64_t mod_;
  std::vector<Poly> levels_;
};

const BlockTable& block_table(std::uint64_t p, unsigned N) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, unsigned>, std::unique_ptr<BlockTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, N}];
  if (!slot) slot = std::make_unique<BlockTable>(p, N);
  return *slot;
}

}  // namespace

std::uint64_t gamma_p_integer(std::uint64_t n, std::uint64_t p, unsigned N) {
  if (N == 0) fail(ErrorKind::PrecisionExhausted, "precision must be positive");
  if (p == 2 || !is_prime(p)) fail(ErrorKind::NotPrime, "Gamma_p needs an odd prime");
  return block_table(p, N).gamma(n);
}

}  // namespace hypersplit
