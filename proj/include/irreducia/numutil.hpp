#pragma once

// Integer number theory used by the witness searches: prime factorization,
// p-adic valuations and divisor enumeration.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "irreducia/error.hpp"

namespace irreducia {

using Integer = mpz_class;
using Rational = mpq_class;

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = sign * prod(prime^exponent), primes strictly increasing.
struct PrimePowerDecomposition {
  Integer n;
  int sign = 1;
  std::vector<PrimePower> factors;

  Integer recompose() const {
    Integer r = sign;
    for (const auto& [p, e] : factors) {
      Integer pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
      r *= pe;
    }
    return r;
  }
};

struct FactorizationLimits {
  // Inputs above this magnitude are only accepted if trial division and a
  // short Pollard-rho run finish the job.
  Integer bound = Integer(1) << 64;
  std::uint32_t trial_limit = 1'000'000;
  unsigned rho_attempts = 32;
  std::uint64_t rho_iterations = 1u << 20;
};

namespace detail {

inline const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    constexpr std::uint32_t limit = 1'000'000;
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t(i) * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

inline u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic for all 64-bit inputs with these bases.
inline bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

inline u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// Brent's variant. Returns a nontrivial divisor of composite n, or 0.
inline u64 pollard_brent_u64(u64 n, u64 c, std::uint64_t max_iter) {
  if (n % 2 == 0) return 2;
  auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
  u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
  std::uint64_t r = 1, iter = 0;
  constexpr std::uint64_t kBlock = 128;
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (std::uint64_t i = 0; i < std::min(kBlock, r - k); ++i) {
        y = f(y);
        q = mulmod(q, x > y ? x - y : y - x, n);
      }
      g = gcd_u64(q, n);
      k += kBlock;
    }
    r <<= 1;
    iter += r;
    if (iter > max_iter) return 0;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd_u64(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g == n ? 0 : g;
}

inline void split_u64(u64 n, std::vector<Integer>& out, const FactorizationLimits& lim) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.emplace_back(static_cast<unsigned long>(n));
    return;
  }
  for (u64 c = 1; c <= 4 * lim.rho_attempts; ++c) {
    u64 d = pollard_brent_u64(n, c, lim.rho_iterations * 64);
    if (d != 0) {
      split_u64(d, out, lim);
      split_u64(n / d, out, lim);
      return;
    }
  }
  throw LimitError("factorization limit");
}

inline Integer pollard_brent_mpz(const Integer& n, unsigned long c, std::uint64_t max_iter) {
  auto f = [&](const Integer& x) {
    Integer r = x * x + c;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
    return r;
  };
  Integer x = 2, y = 2, ys = 2, q = 1, g = 1, diff;
  std::uint64_t r = 1, iter = 0;
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (std::uint64_t i = 0; i < std::min<std::uint64_t>(128, r - k); ++i) {
        y = f(y);
        diff = abs(x - y);
        q = q * diff;
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += 128;
    }
    r <<= 1;
    iter += r;
    if (iter > max_iter) return 0;
  }
  if (g == n) {
    do {
      ys = f(ys);
      diff = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g == n ? Integer(0) : g;
}

inline void split_mpz(const Integer& n, std::vector<Integer>& out, const FactorizationLimits& lim,
                      bool within_bound) {
  if (n == 1) return;
  if (mpz_fits_ulong_p(n.get_mpz_t())) {
    split_u64(n.get_ui(), out, lim);
    return;
  }
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    out.push_back(n);
    return;
  }
  const unsigned attempts = within_bound ? 4 * lim.rho_attempts : lim.rho_attempts;
  for (unsigned long c = 1; c <= attempts; ++c) {
    Integer d = pollard_brent_mpz(n, c, lim.rho_iterations);
    if (d != 0) {
      split_mpz(d, out, lim, within_bound);
      split_mpz(n / d, out, lim, within_bound);
      return;
    }
  }
  throw LimitError("factorization limit");
}

}  // namespace detail

inline PrimePowerDecomposition factorize(const Integer& n, const FactorizationLimits& lim = {}) {
  if (n == 0) throw Error("cannot factorize zero");
  PrimePowerDecomposition out;
  out.n = n;
  out.sign = sgn(n) < 0 ? -1 : 1;
  Integer m = abs(n);

  std::vector<Integer> large;
  if (mpz_fits_ulong_p(m.get_mpz_t())) {
    detail::u64 v = m.get_ui();
    for (std::uint32_t p : detail::small_primes()) {
      if (p > lim.trial_limit || detail::u64(p) * p > v) break;
      if (v % p) continue;
      unsigned e = 0;
      while (v % p == 0) {
        v /= p;
        ++e;
      }
      out.factors.push_back({Integer(p), e});
    }
    if (v > 1) detail::split_u64(v, large, lim);
  } else {
    for (std::uint32_t p : detail::small_primes()) {
      if (p > lim.trial_limit) break;
      if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
      unsigned e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
      }
      out.factors.push_back({Integer(p), e});
      if (m == 1) break;
    }
    detail::split_mpz(m, large, lim, abs(n) <= lim.bound);
  }

  std::sort(large.begin(), large.end());
  for (const auto& p : large) {
    if (!out.factors.empty() && out.factors.back().prime == p) {
      ++out.factors.back().exponent;
    } else {
      out.factors.push_back({p, 1});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  return out;
}

/// Largest e with p^e | n.
inline unsigned valuation(const Integer& p, const Integer& n) {
  if (n == 0) throw Error("valuation of zero is undefined");
  if (p < 2) throw Error("valuation base must be prime");
  Integer m = n;
  unsigned e = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++e;
  }
  return e;
}

inline std::vector<Integer> prime_divisors(const Integer& n, const FactorizationLimits& lim = {}) {
  std::vector<Integer> out;
  for (auto& [p, e] : factorize(n, lim).factors) out.push_back(p);
  return out;
}

inline Integer smallest_prime_divisor(const Integer& n, const FactorizationLimits& lim = {}) {
  if (abs(n) <= 1) throw Error("no prime divisor");
  for (std::uint32_t p : detail::small_primes()) {
    if (Integer(p) * p > abs(n)) return abs(n);
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return Integer(p);
  }
  return factorize(n, lim).factors.front().prime;
}

/// All positive divisors of |n| in increasing order.
inline std::vector<Integer> positive_divisors(const Integer& n, const FactorizationLimits& lim = {}) {
  const auto dec = factorize(n, lim);
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : dec.factors) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

inline Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

}  // namespace irreducia
