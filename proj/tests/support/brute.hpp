#pragma once

// Independent reference for small polynomials: counts irreducible factors
// by enumerating every candidate divisor inside the Mignotte box, in native
// 64-bit arithmetic. Shares no code with the library's oracle.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <vector>

namespace brute {

using Coeffs = std::vector<std::int64_t>;  // lowest degree first, trimmed

inline int degree(const Coeffs& f) { return static_cast<int>(f.size()) - 1; }

inline std::int64_t content(const Coeffs& f) {
  std::int64_t g = 0;
  for (auto c : f) g = std::gcd(g, std::llabs(c));
  return g;
}

// Exact quotient f / g when g divides f over Z.
inline std::optional<Coeffs> divide(const Coeffs& f, const Coeffs& g) {
  const int m = degree(f), d = degree(g);
  if (d > m) return std::nullopt;
  std::vector<__int128> r(f.begin(), f.end());
  Coeffs q(m - d + 1);
  for (int i = m - d; i >= 0; --i) {
    const __int128 top = r[i + d];
    if (top % g[d] != 0) return std::nullopt;
    const __int128 c = top / g[d];
    q[i] = static_cast<std::int64_t>(c);
    for (int t = 0; t <= d; ++t) r[i + t] -= c * g[t];
  }
  for (auto v : r) {
    if (v != 0) return std::nullopt;
  }
  return q;
}

inline std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  n = std::llabs(n);
  for (std::int64_t k = 1; k <= n; ++k) {
    if (n % k == 0) out.push_back(k);
  }
  return out;
}

inline double binom(int n, int k) {
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Smallest-degree divisor of degree 1..deg(f)/2 with positive leading
// coefficient, or nullopt when f (primitive, f(0) != 0) is irreducible.
inline std::optional<Coeffs> smallest_divisor(const Coeffs& f) {
  const int m = degree(f);
  double norm = 0;
  for (auto c : f) norm += static_cast<double>(c) * c;
  norm = std::sqrt(norm);
  for (int d = 1; d <= m / 2; ++d) {
    std::vector<std::int64_t> box(d + 1);
    for (int i = 0; i <= d; ++i) box[i] = static_cast<std::int64_t>(std::floor(binom(d, i) * norm));
    Coeffs g(d + 1);
    for (auto lc : divisors(f[m])) {
      for (auto c0abs : divisors(f[0])) {
        for (int s0 : {1, -1}) {
          g[d] = lc;
          g[0] = s0 * c0abs;
          // odometer over the middle coefficients
          for (int i = 1; i < d; ++i) g[i] = -box[i];
          while (true) {
            if (divide(f, g)) return g;
            int i = 1;
            while (i < d && g[i] == box[i]) {
              g[i] = -box[i];
              ++i;
            }
            if (i >= d) break;
            ++g[i];
          }
        }
      }
    }
  }
  return std::nullopt;
}

/// Number of irreducible nonconstant factors, with multiplicity.
inline int count_factors(Coeffs f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  int count = 0;
  while (!f.empty() && f.front() == 0) {
    f.erase(f.begin());
    ++count;
  }
  const auto c = content(f);
  for (auto& x : f) x /= c;
  while (degree(f) >= 1) {
    auto g = smallest_divisor(f);
    ++count;
    if (!g) break;
    f = *divide(f, *g);
  }
  return count;
}

}  // namespace brute
