#pragma once

// Generators for the worked example families P1-P4 and for exhaustive and
// seeded random audit corpora.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "irreducia/criteria.hpp"
#include "irreducia/error.hpp"
#include "irreducia/polynomial.hpp"

namespace irreducia {

// p^(m-1) (1 + z + ... + z^(n-1)) + sign z^m,  m >= n >= 2.
struct P1Params {
  Integer p;
  int m = 2;
  int n = 2;
  int sign = 1;
};

// sign p^k d + a_1 z + ... + a_m z^m  with  p^k > m max{|a_i| d^(i-1)}.
struct P2Params {
  Integer p;
  unsigned k = 1;
  Integer d = 1;
  int sign = 1;
  std::vector<Integer> upper;  // a_1 .. a_m
};

// a_0 + ... + a_{m-1} z^(m-1) + sign p^k d z^m with
// |a0| > m max{|a_i| d^i, p^k d^(m+1)} and |a0 / q| <= p^k d.
struct P3Params {
  Integer p;
  unsigned k = 1;
  Integer d = 1;
  int sign = 1;
  std::vector<Integer> lower;  // a_0 .. a_{m-1}
};

// 1 +- a z +- ... +- a^(j-1) z^(j-1) +- (a^j - b^j + 1) z^j +- b z^m,
// m >= 3, 1 <= j <= m-1, b < a - b. signs[i-1] applies to z^i for
// i = 1..j and signs[j] to z^m; empty means all +.
struct P4Params {
  Integer a;
  Integer b;
  int m = 3;
  int j = 1;
  std::vector<int> signs;
};

using FamilySpec = std::variant<P1Params, P2Params, P3Params, P4Params>;

namespace detail {

[[noreturn]] inline void side_condition(const std::string& family, const std::string& what) {
  throw Error(family + " side condition violated: " + what);
}

inline bool is_prime(const Integer& p) {
  return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 30) > 0;
}

inline void check_sign(const std::string& fam, int s) {
  if (s != 1 && s != -1) side_condition(fam, "sign must be +1 or -1");
}

inline Polynomial gen(const P1Params& s) {
  if (!is_prime(s.p)) side_condition("P1", "p must be prime");
  if (!(s.m >= s.n && s.n >= 2)) side_condition("P1", "m >= n >= 2");
  check_sign("P1", s.sign);
  std::vector<Integer> c(s.m + 1, 0);
  const Integer scale = ipow(s.p, s.m - 1);
  for (int i = 0; i < s.n; ++i) c[i] += scale;
  c[s.m] += s.sign;
  return Polynomial(std::move(c));
}

inline Polynomial gen(const P2Params& s) {
  const int m = static_cast<int>(s.upper.size());
  if (!is_prime(s.p)) side_condition("P2", "p must be prime");
  if (s.k < 1 || s.d < 1) side_condition("P2", "k and d must be positive");
  if (mpz_divisible_p(s.d.get_mpz_t(), s.p.get_mpz_t())) side_condition("P2", "p must not divide d");
  if (m < 2) side_condition("P2", "m >= 2");
  if (s.upper.back() == 0) side_condition("P2", "a_m must be nonzero");
  check_sign("P2", s.sign);
  Integer mx = 0, dpow = 1;
  for (int i = 1; i <= m; ++i) {
    mx = std::max<Integer>(mx, abs(s.upper[i - 1]) * dpow);
    dpow *= s.d;
  }
  if (!(ipow(s.p, s.k) > m * mx)) side_condition("P2", "p^k > m max{|a_1|, |a_2| d, ..., |a_m| d^(m-1)}");
  std::vector<Integer> c{s.sign * ipow(s.p, s.k) * s.d};
  c.insert(c.end(), s.upper.begin(), s.upper.end());
  Polynomial f(std::move(c));
  if (!is_primitive(f)) side_condition("P2", "polynomial must be primitive");
  return f;
}

inline Polynomial gen(const P3Params& s) {
  const int m = static_cast<int>(s.lower.size());
  if (!is_prime(s.p)) side_condition("P3", "p must be prime");
  if (s.k < 1 || s.d < 1) side_condition("P3", "k and d must be positive");
  if (mpz_divisible_p(s.d.get_mpz_t(), s.p.get_mpz_t())) side_condition("P3", "p must not divide d");
  if (m < 2) side_condition("P3", "m >= 2");
  check_sign("P3", s.sign);
  const Integer lead = ipow(s.p, s.k) * s.d;
  const Integer a0 = abs(s.lower[0]);
  Integer mx = ipow(s.p, s.k) * ipow(s.d, m + 1);
  Integer dpow = 1;
  for (int i = 1; i < m; ++i) {
    dpow *= s.d;
    mx = std::max<Integer>(mx, abs(s.lower[i]) * dpow);
  }
  if (!(a0 > m * mx)) side_condition("P3", "|a0| > m max{|a_1| d, ..., |a_{m-1}| d^(m-1), p^k d^(m+1)}");
  const Integer q = smallest_prime_divisor(a0);
  if (a0 > q * lead) side_condition("P3", "|a0 / q| <= p^k d");
  std::vector<Integer> c = s.lower;
  c.push_back(s.sign * lead);
  Polynomial f(std::move(c));
  if (!is_primitive(f)) side_condition("P3", "polynomial must be primitive");
  return f;
}

inline Polynomial gen(const P4Params& s) {
  if (s.m < 3) side_condition("P4", "m >= 3");
  if (s.j < 1 || s.j > s.m - 1) side_condition("P4", "1 <= j <= m-1");
  if (s.a < 1 || s.b < 1) side_condition("P4", "a and b must be positive");
  if (!(s.b < s.a - s.b)) side_condition("P4", "b < a - b");
  std::vector<int> signs = s.signs.empty() ? std::vector<int>(s.j + 1, 1) : s.signs;
  if (static_cast<int>(signs.size()) != s.j + 1) side_condition("P4", "need j+1 signs");
  for (int sg : signs) check_sign("P4", sg);
  std::vector<Integer> c(s.m + 1, 0);
  c[0] = 1;
  for (int i = 1; i < s.j; ++i) c[i] = signs[i - 1] * ipow(s.a, i);
  c[s.j] = signs[s.j - 1] * (ipow(s.a, s.j) - ipow(s.b, s.j) + 1);
  c[s.m] = signs[s.j] * s.b;
  return Polynomial(std::move(c));
}

}  // namespace detail

/// Builds a family member; throws Error naming the violated side condition.
inline Polynomial gen_family(const FamilySpec& spec) {
  return std::visit([](const auto& s) { return detail::gen(s); }, spec);
}

/// The two readings of the P4 dominance display: the lower sum over
/// 0 <= i < j (dominant-coefficient hypothesis) and over 0 <= i < j-1 (as
/// printed alongside the closed form). Both use delta = 1/b.
struct P4Inequality {
  Rational lhs;              // a^j - b^j + 1
  Rational closed_form_rhs;  // b (a^j - b^j)/(a - b) + 1/b^(m-1-j)
  Rational full_rhs;         // sum_{i<j} a^i b^(j-i) + b delta^(m-j)
  Rational short_rhs;        // sum_{i<j-1} a^i b^(j-i) + b delta^(m-j)
  bool closed_form_holds() const { return lhs > closed_form_rhs; }
  bool readings_differ() const { return (lhs > full_rhs) != (lhs > short_rhs); }
};

inline P4Inequality p4_inequality(const P4Params& s) {
  P4Inequality out;
  const Integer aj = ipow(s.a, s.j), bj = ipow(s.b, s.j);
  out.lhs = aj - bj + 1;
  const Rational tail(1, ipow(s.b, s.m - 1 - s.j));
  out.closed_form_rhs = Rational(s.b * (aj - bj), s.a - s.b) + tail;
  out.closed_form_rhs.canonicalize();
  Rational full = 0, partial = 0;
  for (int i = 0; i < s.j; ++i) {
    const Rational term = ipow(s.a, i) * ipow(s.b, s.j - i);
    full += term;
    if (i < s.j - 1) partial += term;
  }
  out.full_rhs = full + tail;
  out.short_rhs = partial + tail;
  return out;
}

/// All primitive polynomials of degree 1..max_degree with coefficients in
/// [-bound, bound], a0 am != 0, one representative per global sign (am > 0).
/// Index-addressable so workers can partition the enumeration.
class ExhaustiveCorpus {
 public:
  ExhaustiveCorpus(int max_degree, int coeff_bound) : max_degree_(max_degree), bound_(coeff_bound) {
    if (max_degree < 1) throw Error("max degree must be >= 1");
    if (coeff_bound < 1) throw Error("coefficient bound must be >= 1");
    std::uint64_t offset = 0;
    for (int m = 1; m <= max_degree; ++m) {
      offsets_.push_back(offset);
      std::uint64_t n = static_cast<std::uint64_t>(2 * bound_) * bound_;  // a0 and am
      for (int i = 1; i < m; ++i) n *= 2 * bound_ + 1;
      offset += n;
    }
    size_ = offset;
  }

  /// Number of enumeration slots, including those filtered as non-primitive.
  std::uint64_t slots() const { return size_; }

  std::optional<Polynomial> at(std::uint64_t index) const {
    if (index >= size_) throw Error("corpus index out of range");
    int m = max_degree_;
    while (offsets_[m - 1] > index) --m;
    std::uint64_t r = index - offsets_[m - 1];
    std::vector<Integer> c(m + 1);
    const std::uint64_t nz = 2 * bound_;
    const std::uint64_t span = 2 * bound_ + 1;
    auto nonzero = [&](std::uint64_t v) { return static_cast<long>(v) - bound_ + (static_cast<long>(v) >= bound_ ? 1 : 0); };
    c[0] = nonzero(r % nz);
    r /= nz;
    for (int i = 1; i < m; ++i) {
      c[i] = static_cast<long>(r % span) - bound_;
      r /= span;
    }
    c[m] = static_cast<long>(r % bound_) + 1;
    Polynomial f(std::move(c));
    if (!is_primitive(f)) return std::nullopt;
    return f;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t i = 0; i < size_; ++i) {
      if (auto f = at(i)) fn(*f);
    }
  }

  std::vector<Polynomial> collect() const {
    std::vector<Polynomial> out;
    for_each([&](const Polynomial& f) { out.push_back(f); });
    return out;
  }

 private:
  int max_degree_;
  int bound_;
  std::vector<std::uint64_t> offsets_;
  std::uint64_t size_ = 0;
};

inline std::vector<Polynomial> gen_exhaustive(int max_degree, int coeff_bound) {
  return ExhaustiveCorpus(max_degree, coeff_bound).collect();
}

/// Reproducible primitive polynomials with a0 am != 0 and degree uniform in
/// [1, max_degree].
inline std::vector<Polynomial> gen_random(std::size_t count, int max_degree, int coeff_bound,
                                          std::uint64_t seed) {
  if (count < 1) throw Error("count must be >= 1");
  if (max_degree < 1 || coeff_bound < 1) throw Error("invalid corpus bounds");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> deg(1, max_degree);
  std::uniform_int_distribution<int> coef(-coeff_bound, coeff_bound);
  std::vector<Polynomial> out;
  while (out.size() < count) {
    const int m = deg(rng);
    std::vector<Integer> c(m + 1);
    for (auto& x : c) x = coef(rng);
    if (c.front() == 0 || c.back() == 0) continue;
    Polynomial f(std::move(c));
    if (is_primitive(f)) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace irreducia
