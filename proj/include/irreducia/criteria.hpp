#pragma once

// Irreducibility and factor-count criteria for primitive integer polynomials
// with a0 * am != 0. Each criterion searches for its parameter witnesses and
// reports the strongest conclusion it can justify.
//
// Search orders: primes ascending; for the dichotomy criteria the index j is
// forced by the divisibility pattern, for the min{k, j} criteria the
// smallest admissible j is taken, for the dominant-coefficient family the
// largest j wins since the bound is m - j.

#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "irreducia/error.hpp"
#include "irreducia/numutil.hpp"
#include "irreducia/polynomial.hpp"
#include "irreducia/rootloc.hpp"

namespace irreducia {

// Declared in name order; reports list outcomes in this order and break
// ties between equally strong conclusions by it.
enum class Criterion {
  ConstantTerm,
  Cor2,
  DominantCoefficient,
  EisensteinGeneralized,
  LeadingCoeff,
  PerronNonmonic,
  Weintraub,
};

inline constexpr std::array kAllCriteria = {
    Criterion::ConstantTerm,          Criterion::Cor2,         Criterion::DominantCoefficient,
    Criterion::EisensteinGeneralized, Criterion::LeadingCoeff, Criterion::PerronNonmonic,
    Criterion::Weintraub,
};

constexpr std::string_view criterion_name(Criterion c) {
  switch (c) {
    case Criterion::ConstantTerm: return "constant_term_criterion";
    case Criterion::Cor2: return "cor2_check";
    case Criterion::DominantCoefficient: return "dominant_coefficient";
    case Criterion::EisensteinGeneralized: return "eisenstein_generalized";
    case Criterion::LeadingCoeff: return "leading_coeff_criterion";
    case Criterion::PerronNonmonic: return "perron_nonmonic";
    case Criterion::Weintraub: return "weintraub_check";
  }
  return "unknown";
}

inline std::optional<Criterion> criterion_from_name(std::string_view name) {
  for (auto c : kAllCriteria) {
    if (criterion_name(c) == name) return c;
  }
  return std::nullopt;
}

enum class ConclusionKind { Irreducible, AtMostFactors, FactorDegreeBound, NoConclusion };

constexpr std::string_view kind_name(ConclusionKind k) {
  switch (k) {
    case ConclusionKind::Irreducible: return "Irreducible";
    case ConclusionKind::AtMostFactors: return "AtMostFactors";
    case ConclusionKind::FactorDegreeBound: return "FactorDegreeBound";
    case ConclusionKind::NoConclusion: return "NoConclusion";
  }
  return "NoConclusion";
}

struct Conclusion {
  ConclusionKind kind = ConclusionKind::NoConclusion;
  // Factor-count bound (Irreducible = 1, AtMostFactors) or the degree k0
  // some factor must not exceed (FactorDegreeBound); unused otherwise.
  int bound = 0;

  static Conclusion none() { return {}; }
  static Conclusion irreducible() { return {ConclusionKind::Irreducible, 1}; }
  static Conclusion at_most(int n) {
    return n == 1 ? irreducible() : Conclusion{ConclusionKind::AtMostFactors, n};
  }
  static Conclusion degree_bound(int k0) { return {ConclusionKind::FactorDegreeBound, k0}; }

  bool decisive() const { return kind != ConclusionKind::NoConclusion; }

  // Irreducible < AtMostFactors(2) < ... < FactorDegreeBound(k) < NoConclusion.
  std::tuple<int, int> strength_key() const {
    switch (kind) {
      case ConclusionKind::Irreducible:
      case ConclusionKind::AtMostFactors: return {0, bound};
      case ConclusionKind::FactorDegreeBound: return {1, bound};
      case ConclusionKind::NoConclusion: break;
    }
    return {2, 0};
  }
  friend bool stronger(const Conclusion& a, const Conclusion& b) {
    return a.strength_key() < b.strength_key();
  }
  friend bool operator==(const Conclusion&, const Conclusion&) = default;
};

enum class CertificateMode { Exact, NumericConditional };

constexpr std::string_view mode_name(CertificateMode m) {
  return m == CertificateMode::Exact ? "exact" : "numeric-conditional";
}

struct CriterionOutcome {
  Criterion criterion = Criterion::ConstantTerm;
  bool applicable = false;  // structural preconditions hold, witnesses searched
  std::map<std::string, Rational> witnesses;
  Conclusion conclusion;
  CertificateMode mode = CertificateMode::Exact;
};

struct CriteriaConfig {
  RootMode root_mode = RootMode::SymbolicSufficient;
  NumericOptions numeric;
  FactorizationLimits limits;
};

namespace detail {

inline void require_normalized(const Polynomial& f) {
  if (f.is_zero()) throw Error("zero polynomial");
  if (!is_primitive(f)) throw Error("normalize first: polynomial is not primitive");
  if (f.constant() == 0) throw Error("normalize first: constant term is zero");
}

inline CriterionOutcome start(Criterion c) {
  CriterionOutcome out;
  out.criterion = c;
  return out;
}

// Keeps the stronger of two candidate outcomes; exact beats numeric on ties.
inline void keep_best(CriterionOutcome& best, CriterionOutcome cand) {
  if (stronger(cand.conclusion, best.conclusion) ||
      (cand.conclusion == best.conclusion && best.mode == CertificateMode::NumericConditional &&
       cand.mode == CertificateMode::Exact)) {
    best = std::move(cand);
  }
}

// Root location outside |z| <= d. Numeric mode falls back to the heuristic
// only when the exact sufficient test fails.
inline std::optional<CertificateMode> locate_outside(const Polynomial& f, const Integer& d,
                                                     const CriteriaConfig& cfg) {
  if (certify_outside_disk(f, Rational(d), RootMode::SymbolicSufficient).certified) {
    return CertificateMode::Exact;
  }
  if (cfg.root_mode == RootMode::NumericHeuristic) {
    try {
      if (certify_outside_disk(f, Rational(d), RootMode::NumericHeuristic, cfg.numeric).certified) {
        return CertificateMode::NumericConditional;
      }
    } catch (const ConvergenceError&) {
    }
  }
  return std::nullopt;
}

inline Integer abs_pow(const Integer& x, unsigned long e) { return ipow(abs(x), e); }

}  // namespace detail

/// Generalized Eisenstein after Weintraub: p | a_i for i < m, p does not
/// divide a_m, and k0 is the first index with p^2 not dividing a_k. Every
/// factorization then has a factor of degree <= k0.
inline CriterionOutcome weintraub_check(const Polynomial& f, const CriteriaConfig& cfg = {}) {
  detail::require_normalized(f);
  auto best = detail::start(Criterion::Weintraub);
  const int m = f.degree();
  if (m < 1) return best;
  best.applicable = true;

  for (const auto& p : prime_divisors(f.constant(), cfg.limits)) {
    if (mpz_divisible_p(f.leading().get_mpz_t(), p.get_mpz_t())) continue;
    bool all_divisible = true;
    for (int i = 0; i < m && all_divisible; ++i) {
      all_divisible = mpz_divisible_p(f[i].get_mpz_t(), p.get_mpz_t());
    }
    if (!all_divisible) continue;
    const Integer p2 = p * p;
    int k0 = -1;
    for (int i = 0; i < m; ++i) {
      if (!mpz_divisible_p(f[i].get_mpz_t(), p2.get_mpz_t())) {
        k0 = i;
        break;
      }
    }
    if (k0 < 0) continue;

    auto cand = detail::start(Criterion::Weintraub);
    cand.applicable = true;
    cand.witnesses = {{"p", Rational(p)}, {"k0", Rational(k0)}};
    if (k0 == 0 || (k0 == 1 && rational_roots(f).empty())) {
      cand.conclusion = Conclusion::irreducible();
    } else {
      cand.conclusion = Conclusion::degree_bound(k0);
    }
    detail::keep_best(best, std::move(cand));
  }
  return best;
}

/// Prime p with p^k || a0, p^k | a_i for i < j, p not dividing a_j and
/// gcd(k, j) = 1. Any factorization has a factor of degree 0 or <= m - j;
/// j = m gives irreducibility, j = m - 1 does too without rational roots.
inline CriterionOutcome eisenstein_generalized(const Polynomial& f, const CriteriaConfig& cfg = {}) {
  detail::require_normalized(f);
  auto best = detail::start(Criterion::EisensteinGeneralized);
  const int m = f.degree();
  if (m < 1) return best;
  best.applicable = true;

  std::optional<bool> has_rational_root;
  for (const auto& p : prime_divisors(f.constant(), cfg.limits)) {
    const unsigned k = valuation(p, f.constant());
    const Integer pk = ipow(p, k);
    // p divides a0, so the first coefficient p does not divide has index >= 1;
    // it is the only candidate j because p^k | a_j is needed past it.
    int j = 1;
    while (j <= m && mpz_divisible_p(f[j].get_mpz_t(), p.get_mpz_t())) ++j;
    if (j > m) continue;
    bool powers_ok = true;
    for (int i = 1; i < j && powers_ok; ++i) {
      powers_ok = mpz_divisible_p(f[i].get_mpz_t(), pk.get_mpz_t());
    }
    if (!powers_ok || std::gcd(static_cast<int>(k), j) != 1) continue;

    auto cand = detail::start(Criterion::EisensteinGeneralized);
    cand.applicable = true;
    cand.witnesses = {{"p", Rational(p)}, {"k", Rational(k)}, {"j", Rational(j)}};
    if (j == m) {
      cand.conclusion = Conclusion::irreducible();
    } else if (j == m - 1) {
      if (!has_rational_root) has_rational_root = !rational_roots(f).empty();
      cand.conclusion = *has_rational_root ? Conclusion::degree_bound(1) : Conclusion::irreducible();
    } else {
      cand.conclusion = Conclusion::degree_bound(m - j);
    }
    detail::keep_best(best, std::move(cand));
  }
  return best;
}

/// a0 = +-p^k d with p not dividing d and all zeros outside |z| <= d; with
/// j the first index >= 1 where p does not divide a_j, f has at most
/// min{k, j} irreducible factors.
inline CriterionOutcome constant_term_criterion(const Polynomial& f, const CriteriaConfig& cfg = {}) {
  detail::require_normalized(f);
  auto best = detail::start(Criterion::ConstantTerm);
  const int m = f.degree();
  if (m < 1 || abs(f.constant()) < 2) return best;
  best.applicable = true;

  const Integer a0 = abs(f.constant());
  for (const auto& p : prime_divisors(a0, cfg.limits)) {
    const unsigned k = valuation(p, a0);
    const Integer d = a0 / ipow(p, k);
    const auto mode = detail::locate_outside(f, d, cfg);
    if (!mode) continue;
    int j = 1;
    while (j <= m && mpz_divisible_p(f[j].get_mpz_t(), p.get_mpz_t())) ++j;
    if (j > m) continue;  // unreachable for primitive f

    auto cand = detail::start(Criterion::ConstantTerm);
    cand.applicable = true;
    cand.mode = *mode;
    cand.witnesses = {{"p", Rational(p)}, {"k", Rational(k)}, {"d", Rational(d)}, {"j", Rational(j)}};
    cand.conclusion = Conclusion::at_most(std::min(static_cast<int>(k), j));
    detail::keep_best(best, std::move(cand));
  }
  return best;
}

/// a_m = +-p^k d with p not dividing d, zeros outside |z| <= d, and
/// |a0 / q| <= |a_m| for q the smallest prime divisor of a0. With j the
/// first index >= 1 where p does not divide a_{m-j}, f has at most min{k, j}
/// irreducible factors.
inline CriterionOutcome leading_coeff_criterion(const Polynomial& f, const CriteriaConfig& cfg = {}) {
  detail::require_normalized(f);
  auto best = detail::start(Criterion::LeadingCoeff);
  const int m = f.degree();
  const Integer am = abs(f.leading());
  const Integer a0 = abs(f.constant());
  if (m < 1 || am < 2 || a0 < 2) return best;
  best.applicable = true;

  const Integer q = smallest_prime_divisor(a0, cfg.limits);
  if (a0 > q * am) return best;

  for (const auto& p : prime_divisors(am, cfg.limits)) {
    const unsigned k = valuation(p, am);
    const Integer d = am / ipow(p, k);
    const auto mode = detail::locate_outside(f, d, cfg);
    if (!mode) continue;
    int j = 1;
    while (j <= m && mpz_divisible_p(f[m - j].get_mpz_t(), p.get_mpz_t())) ++j;
    if (j > m) continue;

    auto cand = detail::start(Criterion::LeadingCoeff);
    cand.applicable = true;
    cand.mode = *mode;
    cand.witnesses = {{"p", Rational(p)}, {"k", Rational(k)}, {"d", Rational(d)},
                      {"j", Rational(j)}, {"q", Rational(q)}};
    cand.conclusion = Conclusion::at_most(std::min(static_cast<int>(k), j));
    detail::keep_best(best, std::move(cand));
  }
  return best;
}

/// Exact test of the dominant-coefficient inequality
///   |a_j| > sum_{i<j} |a_i||a_m|^(j-i) + sum_{i>j} |a_i| delta^(i-j)
/// at delta = 1/b, scaled by b^(m-j) to stay in Z. The right side grows
/// with delta, so delta = 1/b is the only value worth testing.
inline bool dominant_inequality_holds(const Polynomial& f, int j, const Integer& b) {
  const int m = f.degree();
  const Integer am = abs(f.leading());
  const Integer scale = ipow(b, m - j);
  Integer lower = 0;
  for (int i = 0; i < j; ++i) lower += abs(f[i]) * ipow(am, j - i);
  Integer upper = 0;
  for (int i = j + 1; i <= m; ++i) upper += abs(f[i]) * ipow(b, m - i);
  return abs(f[j]) * scale > lower * scale + upper;
}

/// For b | a_m and some j in [0, m-1] satisfying the dominant inequality,
/// f has at most m - j irreducible factors.
inline CriterionOutcome dominant_coefficient(const Polynomial& f, const CriteriaConfig& cfg = {}) {
  detail::require_normalized(f);
  auto out = detail::start(Criterion::DominantCoefficient);
  const int m = f.degree();
  if (m < 2) return out;
  out.applicable = true;

  const auto divisors = positive_divisors(f.leading(), cfg.limits);
  for (int j = m - 1; j >= 0; --j) {
    if (f[j] == 0) continue;
    for (const auto& b : divisors) {
      if (!dominant_inequality_holds(f, j, b)) continue;
      out.witnesses = {{"j", Rational(j)}, {"b", Rational(b)}, {"delta", Rational(1, b)}};
      out.witnesses["delta"].canonicalize();
      out.conclusion = Conclusion::at_most(m - j);
      return out;
    }
  }
  return out;
}

/// Non-monic Perron: |a_{m-1}| > 1 + sum_{i<=m-2} |a_i||a_m|^(m-1-i) forces
/// irreducibility.
inline CriterionOutcome perron_nonmonic(const Polynomial& f, const CriteriaConfig& = {}) {
  detail::require_normalized(f);
  auto out = detail::start(Criterion::PerronNonmonic);
  const int m = f.degree();
  if (m < 2) return out;
  out.applicable = true;

  const Integer am = abs(f.leading());
  Integer rhs = 1;
  for (int i = 0; i <= m - 2; ++i) rhs += abs(f[i]) * ipow(am, m - 1 - i);
  if (abs(f[m - 1]) > rhs) {
    out.witnesses = {{"j", Rational(m - 1)}};
    out.conclusion = Conclusion::irreducible();
  }
  return out;
}

/// Large prime power in a middle coefficient: with a_j = p^N a'_j and
/// a_{j-1} = p^s a'_{j-1} (p dividing neither cofactor, N >= 1),
///   p^N|a'_j| > |a_m a'_{j-1}| p^(2s) + sum_{i=2..j} |a_m^i a_{j-i}| p^(is)
///               + sum_{i=j+1..m} |a_i| / |a_m|^(i-j)
/// bounds the factor count by m - j.
inline CriterionOutcome cor2_check(const Polynomial& f, const CriteriaConfig& cfg = {}) {
  detail::require_normalized(f);
  auto out = detail::start(Criterion::Cor2);
  const int m = f.degree();
  if (m < 2) return out;
  out.applicable = true;

  const Integer am = abs(f.leading());
  for (int j = m - 1; j >= 1; --j) {
    if (f[j] == 0 || f[j - 1] == 0) continue;
    for (const auto& p : prime_divisors(f[j], cfg.limits)) {
      const unsigned N = valuation(p, f[j]);
      const unsigned s = valuation(p, f[j - 1]);
      const Integer prev = abs(f[j - 1]) / ipow(p, s);
      // Multiply through by |a_m|^(m-j) to clear the tail denominators.
      const Integer scale = ipow(am, m - j);
      Integer head = am * prev * ipow(p, 2 * s);
      for (int i = 2; i <= j; ++i) head += ipow(am, i) * abs(f[j - i]) * ipow(p, i * s);
      Integer tail = 0;
      for (int i = j + 1; i <= m; ++i) tail += abs(f[i]) * ipow(am, m - i);
      if (abs(f[j]) * scale > head * scale + tail) {
        out.witnesses = {{"p", Rational(p)}, {"N", Rational(N)}, {"s", Rational(s)}, {"j", Rational(j)}};
        out.conclusion = Conclusion::at_most(m - j);
        return out;
      }
    }
  }
  return out;
}

inline CriterionOutcome run_criterion(Criterion c, const Polynomial& f, const CriteriaConfig& cfg = {}) {
  switch (c) {
    case Criterion::ConstantTerm: return constant_term_criterion(f, cfg);
    case Criterion::Cor2: return cor2_check(f, cfg);
    case Criterion::DominantCoefficient: return dominant_coefficient(f, cfg);
    case Criterion::EisensteinGeneralized: return eisenstein_generalized(f, cfg);
    case Criterion::LeadingCoeff: return leading_coeff_criterion(f, cfg);
    case Criterion::PerronNonmonic: return perron_nonmonic(f, cfg);
    case Criterion::Weintraub: return weintraub_check(f, cfg);
  }
  throw Error("unknown criterion");
}

}  // namespace irreducia
