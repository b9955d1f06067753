#pragma once

// Test-only restatements of the criteria hypotheses, written directly in
// rational arithmetic so they can re-check what the library reports.

#include <numeric>

#include "irreducia/criteria.hpp"

namespace testpred {

using namespace irreducia;

inline Rational Q(const Integer& x) { return Rational(x); }

/// |a_j| > |a_{j+1}/a_m| + sum_{i<j} |a_i||a_m|^(j-i) + sum_{j+1<i<=m} |a_i||a_m|^-(i-j)
inline bool leading_divisor_case_holds(const Polynomial& f, int j) {
  const int m = f.degree();
  const Rational am = Q(abs(f.leading()));
  Rational rhs = Q(abs(f[j + 1])) / am;
  for (int i = 0; i < j; ++i) {
    Rational t = Q(abs(f[i]));
    for (int e = 0; e < j - i; ++e) t *= am;
    rhs += t;
  }
  for (int i = j + 2; i <= m; ++i) {
    Rational t = Q(abs(f[i]));
    for (int e = 0; e < i - j; ++e) t /= am;
    rhs += t;
  }
  return Q(abs(f[j])) > rhs;
}

inline bool divides(const Integer& p, const Integer& n) { return n % p == 0; }

inline bool is_prime(const Integer& p) { return mpz_probab_prime_p(p.get_mpz_t(), 30) > 0; }

inline int as_int(const Rational& r) { return static_cast<int>(r.get_num().get_si()); }

inline bool outside_disk_symbolic(const Polynomial& f, const Integer& d) {
  Rational rhs = 0;
  for (int i = 1; i <= f.degree(); ++i) rhs += Q(abs(f[i])) * Q(ipow(d, i));
  return Q(abs(f.constant())) > rhs;
}

/// Re-derives a reported conclusion from its witnesses alone.
inline bool witnesses_valid(const CriterionOutcome& o, const Polynomial& f) {
  const int m = f.degree();
  auto w = [&](const char* n) { return o.witnesses.at(n); };
  const bool exact = o.mode == CertificateMode::Exact;
  switch (o.criterion) {
    case Criterion::Weintraub: {
      const Integer p = w("p").get_num();
      const int k0 = as_int(w("k0"));
      if (!is_prime(p) || divides(p, f.leading())) return false;
      for (int i = 0; i < m; ++i) {
        if (!divides(p, f[i])) return false;
      }
      for (int i = 0; i < k0; ++i) {
        if (!divides(p * p, f[i])) return false;
      }
      return !divides(p * p, f[k0]) &&
             (o.conclusion.kind == ConclusionKind::Irreducible || o.conclusion.bound == k0);
    }
    case Criterion::EisensteinGeneralized: {
      const Integer p = w("p").get_num();
      const int k = as_int(w("k")), j = as_int(w("j"));
      const Integer pk = ipow(p, k);
      if (!is_prime(p) || !divides(pk, f[0]) || divides(pk * p, f[0])) return false;
      for (int i = 0; i < j; ++i) {
        if (!divides(pk, f[i])) return false;
      }
      if (divides(p, f[j]) || std::gcd(k, j) != 1) return false;
      if (o.conclusion.kind == ConclusionKind::Irreducible) return j == m || j == m - 1;
      return o.conclusion.bound == m - j;
    }
    case Criterion::ConstantTerm:
    case Criterion::LeadingCoeff: {
      const bool lead = o.criterion == Criterion::LeadingCoeff;
      const Integer p = w("p").get_num(), d = w("d").get_num();
      const int k = as_int(w("k")), j = as_int(w("j"));
      const Integer target = abs(lead ? f.leading() : f.constant());
      if (!is_prime(p) || divides(p, d) || target != ipow(p, k) * d) return false;
      if (exact && !outside_disk_symbolic(f, d)) return false;
      for (int i = 1; i < j; ++i) {
        if (!divides(p, f[lead ? m - i : i])) return false;
      }
      if (divides(p, f[lead ? m - j : j])) return false;
      if (lead) {
        const Integer q = w("q").get_num();
        const Integer a0 = abs(f.constant());
        if (!is_prime(q) || !divides(q, a0)) return false;
        for (Integer r = 2; r < q; ++r) {
          if (divides(r, a0)) return false;
        }
        if (Q(a0) / Q(q) > Q(abs(f.leading()))) return false;
      }
      return o.conclusion.bound == std::min(k, j);
    }
    case Criterion::DominantCoefficient: {
      const int j = as_int(w("j"));
      const Integer b = w("b").get_num();
      const Rational delta = w("delta");
      if (!divides(b, f.leading()) || delta != Rational(1) / Q(b)) return false;
      const Rational am = Q(abs(f.leading()));
      Rational rhs = 0;
      for (int i = 0; i < j; ++i) {
        Rational t = Q(abs(f[i]));
        for (int e = 0; e < j - i; ++e) t *= am;
        rhs += t;
      }
      Rational dp = 1;
      for (int i = j + 1; i <= m; ++i) {
        dp *= delta;
        rhs += Q(abs(f[i])) * dp;
      }
      return Q(abs(f[j])) > rhs && o.conclusion.bound == m - j;
    }
    case Criterion::PerronNonmonic: {
      const Rational am = Q(abs(f.leading()));
      Rational rhs = 1;
      for (int i = 0; i <= m - 2; ++i) {
        Rational t = Q(abs(f[i]));
        for (int e = 0; e < m - 1 - i; ++e) t *= am;
        rhs += t;
      }
      return Q(abs(f[m - 1])) > rhs;
    }
    case Criterion::Cor2: {
      const Integer p = w("p").get_num();
      const int N = as_int(w("N")), s = as_int(w("s")), j = as_int(w("j"));
      const Integer pN = ipow(p, N), ps = ipow(p, s);
      if (N < 1 || !divides(pN, f[j]) || divides(pN * p, f[j])) return false;
      if (!divides(ps, f[j - 1]) || divides(ps * p, f[j - 1])) return false;
      const Rational am = Q(abs(f.leading()));
      const Rational aj = Q(abs(f[j])) / Q(pN), ajm1 = Q(abs(f[j - 1])) / Q(ps);
      Rational rhs = am * ajm1 * Q(ps) * Q(ps);
      for (int i = 2; i <= j; ++i) {
        Rational t = Q(abs(f[j - i])) * Q(ipow(ps, i));
        for (int e = 0; e < i; ++e) t *= am;
        rhs += t;
      }
      for (int i = j + 1; i <= m; ++i) {
        Rational t = Q(abs(f[i]));
        for (int e = 0; e < i - j; ++e) t /= am;
        rhs += t;
      }
      return Q(pN) * aj > rhs && o.conclusion.bound == m - j;
    }
  }
  return false;
}

}  // namespace testpred
