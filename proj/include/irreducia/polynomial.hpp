#pragma once

// Dense univariate polynomials over Z, lowest degree first, with the
// normalizations and scaling transforms the criteria rely on.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "irreducia/error.hpp"
#include "irreducia/numutil.hpp"

namespace irreducia {

class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  Polynomial(std::initializer_list<Integer> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial monomial(Integer c, std::size_t power) {
    std::vector<Integer> v(power + 1);
    v[power] = std::move(c);
    return Polynomial(std::move(v));
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  // Coefficient of z^i; zero beyond the degree.
  const Integer& operator[](std::size_t i) const noexcept {
    static const Integer zero = 0;
    return i < coeffs_.size() ? coeffs_[i] : zero;
  }

  const Integer& leading() const {
    if (is_zero()) throw Error("zero polynomial has no leading coefficient");
    return coeffs_.back();
  }
  const Integer& constant() const { return (*this)[0]; }

  std::span<const Integer> coeffs() const noexcept { return coeffs_; }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Integer& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Integer& s) { return a *= s; }
  friend Polynomial operator*(const Integer& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
      }
    }
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

/// Comma list, lowest degree first; mainly for diagnostics.
inline std::ostream& operator<<(std::ostream& os, const Polynomial& f) {
  os << '[';
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) os << (i ? "," : "") << f.coeffs()[i];
  return os << ']';
}

/// Degree first, then coefficients lowest-first.
inline bool canonical_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                      b.coeffs().end());
}

/// f = content * z^z_power * primitive_part, primitive_part(0) != 0.
struct NormalizedInput {
  Polynomial original;
  Integer content;
  unsigned z_power = 0;
  Polynomial primitive_part;
};

inline Integer content(const Polynomial& f) {
  if (f.is_zero()) throw Error("zero polynomial has no content");
  Integer g = 0;
  for (const auto& c : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline bool is_primitive(const Polynomial& f) { return !f.is_zero() && content(f) == 1; }

// Content is taken positive, so the sign of f stays on the primitive part.
inline NormalizedInput normalize(const Polynomial& f) {
  if (f.is_zero()) throw Error("zero polynomial cannot be normalized");
  NormalizedInput out;
  out.original = f;
  out.content = content(f);
  auto cs = f.coeffs();
  while (cs[out.z_power] == 0) ++out.z_power;
  std::vector<Integer> rest;
  rest.reserve(cs.size() - out.z_power);
  for (std::size_t i = out.z_power; i < cs.size(); ++i) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), cs[i].get_mpz_t(), out.content.get_mpz_t());
    rest.push_back(std::move(q));
  }
  out.primitive_part = Polynomial(std::move(rest));
  return out;
}

inline Integer evaluate(const Polynomial& f, const Integer& x) {
  Integer acc = 0;
  auto cs = f.coeffs();
  for (std::size_t i = cs.size(); i-- > 0;) {
    acc *= x;
    acc += cs[i];
  }
  return acc;
}

inline Rational evaluate(const Polynomial& f, const Rational& x) {
  // Horner on the homogenized form: sum a_i p^i q^(m-i), then divide by q^m.
  if (f.is_zero()) return 0;
  const Integer& p = x.get_num();
  const Integer& q = x.get_den();
  auto cs = f.coeffs();
  Integer acc = 0, qpow = 1;
  for (std::size_t i = cs.size(); i-- > 0;) {
    acc *= p;
    acc += cs[i] * qpow;
    qpow *= q;
  }
  Rational r(acc, qpow / q);
  r.canonicalize();
  return r;
}

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
  bool exact = false;
};

// Integer long division. Stops as soon as a quotient coefficient would be
// non-integral; f == quotient * g + remainder holds in every case, and
// `exact` is set only when the remainder is zero.
inline DivisionResult divmod_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw Error("division by zero polynomial");
  std::vector<Integer> rem(f.coeffs().begin(), f.coeffs().end());
  const int dg = g.degree();
  const Integer& lc = g.leading();
  std::vector<Integer> quot(std::max(0, f.degree() - dg + 1));
  int top = f.degree();
  for (; top >= dg; --top) {
    if (rem[top] == 0) continue;
    if (!mpz_divisible_p(rem[top].get_mpz_t(), lc.get_mpz_t())) break;
    Integer q;
    mpz_divexact(q.get_mpz_t(), rem[top].get_mpz_t(), lc.get_mpz_t());
    const int shift = top - dg;
    for (int i = 0; i <= dg; ++i) {
      mpz_submul(rem[shift + i].get_mpz_t(), q.get_mpz_t(), g[i].get_mpz_t());
    }
    quot[shift] = std::move(q);
  }
  DivisionResult out;
  out.quotient = Polynomial(std::move(quot));
  out.remainder = Polynomial(std::move(rem));
  out.exact = out.remainder.is_zero();
  return out;
}

/// g(z) = b^(m-1) f(z/b), i.e. coefficients a_i b^(m-1-i). b must divide
/// the leading coefficient so that a_m / b stays integral.
inline Polynomial scale_transform(const Polynomial& f, const Integer& b) {
  if (f.degree() < 1) throw Error("scale transform needs degree >= 1");
  if (b <= 0 || !mpz_divisible_p(f.leading().get_mpz_t(), b.get_mpz_t())) {
    throw Error("invalid divisor");
  }
  const int m = f.degree();
  std::vector<Integer> out(m + 1);
  Integer pw = 1;  // b^(m-1-i), built from i = m-1 downwards
  for (int i = m - 1; i >= 0; --i) {
    out[i] = f[i] * pw;
    pw *= b;
  }
  mpz_divexact(out[m].get_mpz_t(), f[m].get_mpz_t(), b.get_mpz_t());
  return Polynomial(std::move(out));
}

/// Distinct rational roots, ascending.
inline std::vector<Rational> rational_roots(const Polynomial& f) {
  if (f.is_zero()) throw Error("zero polynomial has every root");
  std::vector<Rational> roots;
  std::size_t shift = 0;
  while (f[shift] == 0) ++shift;
  if (shift > 0) roots.emplace_back(0);
  if (static_cast<int>(shift) == f.degree()) return roots;

  std::vector<Integer> tail(f.coeffs().begin() + shift, f.coeffs().end());
  const Polynomial g(std::move(tail));
  const auto nums = positive_divisors(g.constant());
  const auto dens = positive_divisors(g.leading());
  for (const auto& q : dens) {
    for (const auto& p : nums) {
      Integer gcd;
      mpz_gcd(gcd.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      if (gcd != 1) continue;
      for (int s : {1, -1}) {
        Rational r(s * p, q);
        if (evaluate(g, r) == 0) roots.push_back(r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace irreducia
