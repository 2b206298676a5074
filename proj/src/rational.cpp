// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "hypersplit/rational.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <limits>

#include "hypersplit/errors.hpp"

namespace hypersplit {

Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer floor_of(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rational frac(const Rational& x) { return x - Rational(floor_of(x)); }

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) fail(ErrorKind::ConfigParse, "empty rational");
  try {
    if (auto dot = s.find('.'); dot != std::string::npos) {
      bool neg = s[0] == '-';
      std::string body = (neg || s[0] == '+') ? s.substr(1) : s;
      dot = body.find('.');
      std::string whole = body.substr(0, dot);
      std::string fracpart = body.substr(dot + 1);
      if (whole.empty()) whole = "0";
      Integer den = 1;
      for (std::size_t i = 0; i < fracpart.size(); ++i) den *= 10;
      Integer num(whole + fracpart);
      Rational r(num, den);
      r.canonicalize();
      return neg ? Rational(-r) : r;
    }
    Rational r(s);
    if (r.get_den() == 0) fail(ErrorKind::ConfigParse, "zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::ConfigParse, "not a rational: '" + s + "'");
  }
}

std::string to_string(const Rational& x) { return x.get_str(); }
std::string to_string(const Integer& x) { return x.get_str(); }

std::uint64_t residue(const Rational& x, std::uint64_t m) {
  if (m == 1) return 0;
  Integer mm(std::to_string(m));
  Integer num, den;
  mpz_mod(num.get_mpz_t(), x.get_num_mpz_t(), mm.get_mpz_t());
  mpz_mod(den.get_mpz_t(), x.get_den_mpz_t(), mm.get_mpz_t());
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mm.get_mpz_t()) == 0)
    fail(ErrorKind::NotPIntegral, "denominator of " + x.get_str() + " not invertible mod " + std::to_string(m));
  Integer r = (num * inv) % mm;
  return std::stoull(r.get_str());
}

std::int64_t to_int64(const Integer& x) {
  if (!x.fits_slong_p()) fail(ErrorKind::PrecisionExhausted, "integer out of 64-bit range: " + x.get_str());
  return x.get_si();
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  __int128 t = 0, nt = 1;
  __int128 r = m, nr = a % m;
  while (nr != 0) {
    __int128 q = r / nr;
    __int128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) return 0;
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      fail(ErrorKind::PrecisionExhausted, "integer power overflows 64 bits");
    r *= base;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % d == 0) return n == d;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> lo, hi;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      lo.push_back(d);
      if (d != n / d) hi.push_back(n / d);
    }
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (std::uint64_t p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

int mobius(std::uint64_t n) {
  int r = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      r = -r;
    }
  }
  if (n > 1) r = -r;
  return r;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  std::uint64_t g = std::gcd(a, b);
  return a / g * b;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 1;
  std::uint64_t n = euler_phi(m);
  std::uint64_t ord = n;
  for (std::uint64_t p : prime_factors(n)) {
    while (ord % p == 0 && powmod(a, ord / p, m) == 1) ord /= p;
  }
  return ord;
}

int legendre(const Rational& a, std::uint64_t p) {
  std::uint64_t r = residue(a, p);
  if (r == 0) return 0;
  return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

long valuation(const Rational& x, std::uint64_t p) {
  if (x == 0) fail(ErrorKind::DomainViolation, "valuation of zero");
  Integer pp(std::to_string(p));
  Integer num = x.get_num(), den = x.get_den();
  long v = 0;
  while (mpz_divisible_p(num.get_mpz_t(), pp.get_mpz_t())) {
    num /= pp;
    ++v;
  }
  while (mpz_divisible_p(den.get_mpz_t(), pp.get_mpz_t())) {
    den /= pp;
    --v;
  }
  return v;
}

}  // namespace hypersplit
