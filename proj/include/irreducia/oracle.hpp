#pragma once

// Exact factorization over Z at desk scale: content and z^t extraction,
// rational-root stripping, then Kronecker's method for factors of degree
// two and up. Used as ground truth when auditing the criteria.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "irreducia/error.hpp"
#include "irreducia/numutil.hpp"
#include "irreducia/polynomial.hpp"

namespace irreducia {

struct Factor {
  Polynomial poly;
  unsigned multiplicity = 1;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// input = content * prod(factor^multiplicity). The content carries the sign
/// of the input so every factor can have a positive leading coefficient.
struct FactorizationResult {
  Integer content = 1;
  std::vector<Factor> factors;

  unsigned count() const {
    unsigned n = 0;
    for (const auto& f : factors) n += f.multiplicity;
    return n;
  }
  int min_factor_degree() const {
    int d = -1;
    for (const auto& f : factors) {
      if (d < 0 || f.poly.degree() < d) d = f.poly.degree();
    }
    return d;
  }
};

struct OracleLimits {
  int max_degree = 8;
  Integer max_coefficient = Integer(1) << 40;
  std::uint64_t step_budget = 10'000'000;  // divisor tuples visited per search
};

namespace detail {

// Exact integer quotient or nullopt.
inline std::optional<Integer> exact_div(const Integer& a, const Integer& b) {
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return std::nullopt;
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Newton form -> dense coefficients.
// p(z) = sum_t c[t] prod_{s<t} (z - x[s]) + lc * prod_{s<n} (z - x[s]).
inline Polynomial from_newton(const std::vector<Integer>& x, const std::vector<Integer>& c,
                              const Integer& lc) {
  Polynomial basis{1};
  Polynomial acc;
  for (std::size_t t = 0; t < c.size(); ++t) {
    acc += basis * c[t];
    basis = basis * Polynomial{-x[t], 1};
  }
  acc += basis * lc;
  return acc;
}

class KroneckerSearch {
 public:
  KroneckerSearch(const Polynomial& h, int d, std::uint64_t& budget, std::uint64_t limit)
      : h_(h), d_(d), budget_(budget), limit_(limit) {}

  // A factor of h of degree exactly d with positive leading coefficient.
  // h must have no integer roots.
  std::optional<Polynomial> run() {
    choose_nodes();
    for (const auto& lc : positive_divisors(h_.leading())) {
      lc_ = lc;
      table_.assign(d_, {});
      if (auto g = descend(0)) return g;
    }
    return std::nullopt;
  }

 private:
  void choose_nodes() {
    struct Cand {
      Integer x, value;
      std::size_t ndiv;
    };
    std::vector<Cand> cands;
    const int pool = 2 * d_ + 5;
    for (int k = 0; static_cast<int>(cands.size()) < pool; ++k) {
      const Integer x = (k % 2 == 0) ? Integer(k / 2) : Integer(-(k + 1) / 2);
      Integer v = evaluate(h_, x);
      if (v == 0) throw Error("Kronecker search requires a polynomial without integer roots");
      auto n = positive_divisors(v).size();
      cands.push_back({x, std::move(v), n});
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Cand& a, const Cand& b) { return a.ndiv < b.ndiv; });
    for (int i = 0; i < d_; ++i) {
      nodes_.push_back(cands[i].x);
      std::vector<Integer> signed_divs;
      for (const auto& dv : positive_divisors(cands[i].value)) {
        signed_divs.push_back(dv);
        signed_divs.push_back(-dv);
      }
      divisors_.push_back(std::move(signed_divs));
    }
    for (std::size_t i = d_; i < cands.size(); ++i) checks_.push_back({cands[i].x, cands[i].value});
  }

  std::optional<Polynomial> descend(int t) {
    if (t == d_) return accept();
    for (const auto& v : divisors_[t]) {
      if (++budget_ > limit_) throw LimitError("oracle limit: Kronecker step budget exhausted");
      // Divided differences over consecutive nodes must stay integral.
      std::vector<Integer>& row = table_[t];
      row.assign(1, v);
      bool ok = true;
      for (int s = 1; s <= t; ++s) {
        auto q = exact_div(row[s - 1] - table_[t - 1][s - 1], nodes_[t] - nodes_[t - s]);
        if (!q) {
          ok = false;
          break;
        }
        row.push_back(std::move(*q));
      }
      if (!ok) continue;
      if (auto g = descend(t + 1)) return g;
    }
    return std::nullopt;
  }

  std::optional<Polynomial> accept() {
    std::vector<Integer> newton(d_);
    for (int t = 0; t < d_; ++t) newton[t] = table_[t][t];
    Polynomial g = from_newton(nodes_, newton, lc_);
    for (const auto& [x, hv] : checks_) {
      const Integer gv = evaluate(g, x);
      if (gv == 0 || !mpz_divisible_p(hv.get_mpz_t(), gv.get_mpz_t())) return std::nullopt;
    }
    if (!divmod_exact(h_, g).exact) return std::nullopt;
    return g;
  }

  const Polynomial& h_;
  int d_;
  std::uint64_t& budget_;
  std::uint64_t limit_;
  Integer lc_;
  std::vector<Integer> nodes_;
  std::vector<std::vector<Integer>> divisors_;
  std::vector<std::pair<Integer, Integer>> checks_;
  std::vector<std::vector<Integer>> table_;
};

inline void check_limits(const Polynomial& f, const OracleLimits& lim) {
  if (f.degree() > lim.max_degree) throw LimitError("oracle limit: degree exceeds limit");
  for (const auto& c : f.coeffs()) {
    if (abs(c) > lim.max_coefficient) throw LimitError("oracle limit: coefficient exceeds limit");
  }
}

inline std::vector<Factor> collect(std::vector<Polynomial> polys) {
  std::sort(polys.begin(), polys.end(), canonical_less);
  std::vector<Factor> out;
  for (auto& p : polys) {
    if (!out.empty() && out.back().poly == p) {
      ++out.back().multiplicity;
    } else {
      out.push_back({std::move(p), 1});
    }
  }
  return out;
}

}  // namespace detail

inline FactorizationResult factor(const Polynomial& f, const OracleLimits& lim = {}) {
  if (f.is_zero()) throw Error("cannot factor the zero polynomial");
  detail::check_limits(f, lim);

  const auto norm = normalize(f);
  FactorizationResult out;
  Polynomial g = norm.primitive_part;
  out.content = norm.content;
  if (sgn(g.leading()) < 0) {
    out.content = -out.content;
    g = -g;
  }

  std::vector<Polynomial> found(norm.z_power, Polynomial{0, 1});

  for (const auto& r : rational_roots(g)) {
    const Polynomial linear{-Integer(r.get_num()), r.get_den()};
    for (auto div = divmod_exact(g, linear); div.exact; div = divmod_exact(g, linear)) {
      g = div.quotient;
      found.push_back(linear);
    }
  }

  std::uint64_t budget = 0;
  for (int d = 2; 2 * d <= g.degree();) {
    auto h = detail::KroneckerSearch(g, d, budget, lim.step_budget).run();
    if (!h) {
      ++d;
      continue;
    }
    g = divmod_exact(g, *h).quotient;
    found.push_back(std::move(*h));
  }
  if (g.degree() >= 1) found.push_back(std::move(g));

  out.factors = detail::collect(std::move(found));
  return out;
}

/// Number of irreducible nonconstant factors counted with multiplicity.
inline unsigned count_irreducible_factors(const Polynomial& f, const OracleLimits& lim = {}) {
  return factor(f, lim).count();
}

namespace detail {

// Independent exhaustive check used by verify(): searches divisors of
// degree 1..deg/2 through all value tuples at nodes 0, 1, ..., deg/2.
inline bool has_proper_divisor(const Polynomial& g) {
  const int n = g.degree();
  if (n <= 1) return false;
  const int half = n / 2;
  std::vector<Integer> xs, vals;
  for (int i = 0; i <= half; ++i) {
    Integer v = evaluate(g, Integer(i));
    if (v == 0) return true;
    xs.emplace_back(i);
    vals.push_back(std::move(v));
  }
  std::vector<std::vector<Integer>> choices;
  for (int i = 0; i <= half; ++i) {
    std::vector<Integer> c;
    for (const auto& dv : positive_divisors(vals[i])) {
      c.push_back(dv);
      if (i > 0) c.push_back(-dv);  // overall sign fixed by the first node
    }
    choices.push_back(std::move(c));
  }

  // Lagrange interpolation over Q through the chosen values.
  auto interpolate = [&](const std::vector<Integer>& ys) -> std::optional<Polynomial> {
    std::vector<Rational> acc(half + 1, Rational(0));
    for (int i = 0; i <= half; ++i) {
      std::vector<Rational> basis{Rational(1)};
      Rational denom = 1;
      for (int j = 0; j <= half; ++j) {
        if (j == i) continue;
        std::vector<Rational> next(basis.size() + 1, Rational(0));
        for (std::size_t k = 0; k < basis.size(); ++k) {
          next[k + 1] += basis[k];
          next[k] -= basis[k] * xs[j];
        }
        basis = std::move(next);
        denom *= Rational(xs[i] - xs[j]);
      }
      for (std::size_t k = 0; k < basis.size(); ++k) acc[k] += basis[k] * ys[i] / denom;
    }
    std::vector<Integer> coeffs;
    for (auto& c : acc) {
      c.canonicalize();
      if (c.get_den() != 1) return std::nullopt;
      coeffs.push_back(c.get_num());
    }
    return Polynomial(std::move(coeffs));
  };

  std::vector<Integer> pick(half + 1);
  // rows[i][s] = divided difference over nodes i-s..i; integral for any
  // integer polynomial.
  std::vector<std::vector<Integer>> rows(half + 1);
  bool found = false;
  auto rec = [&](auto&& self, int i) -> void {
    if (i > half) {
      auto cand = interpolate(pick);
      if (!cand || cand->degree() < 1 || cand->degree() > half) return;
      if (divmod_exact(g, *cand).exact) found = true;
      return;
    }
    for (const auto& v : choices[i]) {
      pick[i] = v;
      rows[i].assign(1, v);
      bool integral = true;
      for (int s = 1; s <= i && integral; ++s) {
        Integer diff = rows[i][s - 1] - rows[i - 1][s - 1];
        if (!mpz_divisible_ui_p(diff.get_mpz_t(), static_cast<unsigned long>(s))) {
          integral = false;
        } else {
          mpz_divexact_ui(diff.get_mpz_t(), diff.get_mpz_t(), static_cast<unsigned long>(s));
          rows[i].push_back(std::move(diff));
        }
      }
      if (!integral) continue;
      self(self, i + 1);
      if (found) return;
    }
  };
  rec(rec, 0);
  return found;
}

}  // namespace detail

/// Recomposes the factorization exactly and re-checks every factor with a
/// fresh divisor search.
inline bool verify(const FactorizationResult& result, const Polynomial& f) {
  if (result.content == 0) return false;
  Polynomial prod{result.content};
  for (std::size_t i = 0; i < result.factors.size(); ++i) {
    const auto& [g, mult] = result.factors[i];
    if (mult == 0 || g.degree() < 1) return false;
    if (sgn(g.leading()) <= 0 || !is_primitive(g)) return false;
    if (i > 0 && !canonical_less(result.factors[i - 1].poly, g)) return false;
    for (unsigned k = 0; k < mult; ++k) prod = prod * g;
  }
  if (!(prod == f)) return false;
  for (const auto& [g, mult] : result.factors) {
    if (detail::has_proper_divisor(g)) return false;
  }
  return true;
}

}  // namespace irreducia
