#pragma once

// Soundness audit: every criterion against the oracle over a corpus, plus
// the worked example families checked against their stated conclusions.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "irreducia/analysis.hpp"
#include "irreducia/corpus.hpp"
#include "irreducia/criteria.hpp"
#include "irreducia/io.hpp"
#include "irreducia/oracle.hpp"

namespace irreducia {

struct CriterionTally {
  std::uint64_t fired = 0;  // any conclusion other than NoConclusion
  std::uint64_t sound = 0;  // fired and consistent with the oracle
  std::uint64_t no_conclusion = 0;

  CriterionTally& operator+=(const CriterionTally& o) {
    fired += o.fired;
    sound += o.sound;
    no_conclusion += o.no_conclusion;
    return *this;
  }
};

struct AuditSummary {
  std::uint64_t items = 0;
  std::uint64_t skipped = 0;  // oracle or factorization limits
  std::map<Criterion, CriterionTally> tally;
  std::vector<std::pair<std::uint64_t, std::string>> violations;  // (corpus index, message)

  void merge(const AuditSummary& o) {
    items += o.items;
    skipped += o.skipped;
    for (const auto& [c, t] : o.tally) tally[c] += t;
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
  }
  bool clean() const { return violations.empty(); }
};

struct AuditOptions {
  CriteriaConfig criteria;
  OracleLimits oracle;
  unsigned jobs = 1;
};

using CorpusSource = std::function<std::optional<Polynomial>(std::uint64_t)>;

namespace detail {

inline void audit_one(std::uint64_t index, const Polynomial& f, const AuditOptions& opt,
                      AuditSummary& acc) {
  FactorizationResult truth;
  try {
    truth = factor(f, opt.oracle);
  } catch (const LimitError&) {
    ++acc.skipped;
    return;
  }
  ++acc.items;
  for (auto c : kAllCriteria) {
    CriterionOutcome o;
    try {
      o = run_criterion(c, f, opt.criteria);
    } catch (const LimitError&) {
      continue;
    }
    auto& t = acc.tally[c];
    if (!o.conclusion.decisive()) {
      ++t.no_conclusion;
      continue;
    }
    ++t.fired;
    if (auto v = soundness_violation(o, truth)) {
      acc.violations.emplace_back(index, render(f) + ": " + *v);
    } else {
      ++t.sound;
    }
  }
}

}  // namespace detail

/// Audits items 0..count-1 of `source` (nullopt items are filtered out by
/// the source). Work is split into index chunks across `jobs` threads; the
/// merged summary is independent of scheduling.
inline AuditSummary audit_corpus(const CorpusSource& source, std::uint64_t count,
                                 const AuditOptions& opt = {}) {
  const unsigned jobs = std::max(1u, opt.jobs);
  constexpr std::uint64_t kChunk = 4096;
  std::atomic<std::uint64_t> next{0};
  std::vector<AuditSummary> partial(jobs);
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&](unsigned w) {
    try {
      for (;;) {
        const std::uint64_t begin = next.fetch_add(kChunk);
        if (begin >= count) break;
        const std::uint64_t end = std::min(count, begin + kChunk);
        for (std::uint64_t i = begin; i < end; ++i) {
          if (auto f = source(i)) detail::audit_one(i, *f, opt, partial[w]);
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
  }
  if (error) std::rethrow_exception(error);

  AuditSummary out;
  for (const auto& p : partial) out.merge(p);
  std::sort(out.violations.begin(), out.violations.end());
  return out;
}

inline AuditSummary audit_polynomials(const std::vector<Polynomial>& polys, const AuditOptions& opt = {}) {
  return audit_corpus([&](std::uint64_t i) { return std::optional<Polynomial>(polys[i]); }, polys.size(),
                      opt);
}

inline AuditSummary audit_exhaustive(int max_degree, int coeff_bound, const AuditOptions& opt = {}) {
  const ExhaustiveCorpus corpus(max_degree, coeff_bound);
  return audit_corpus([&](std::uint64_t i) { return corpus.at(i); }, corpus.slots(), opt);
}

// ---------------------------------------------------------------------------
// Named families

/// One generated family member with the conclusion it must reach.
struct FamilyInstance {
  std::string family;
  FamilySpec spec;
  Polynomial poly;
  Criterion criterion;
  Conclusion expected;
  std::map<std::string, Rational> expected_witnesses;  // subset that must match
};

struct FamilyCheck {
  FamilyInstance instance;
  CriterionOutcome outcome;
  std::optional<unsigned> oracle_count;
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

namespace detail {

inline std::vector<FamilyInstance> p1_instances() {
  std::vector<FamilyInstance> out;
  for (int p : {2, 3, 5}) {
    for (int m = 2; m <= 6; ++m) {
      for (int n = 2; n <= m; ++n) {
        for (int sign : {1, -1}) {
          P1Params s{p, m, n, sign};
          out.push_back({"P1", s, gen_family(s), Criterion::EisensteinGeneralized,
                         Conclusion::irreducible(),
                         {{"p", Rational(p)}, {"k", Rational(m - 1)}, {"j", Rational(m)}}});
        }
      }
    }
  }
  return out;
}

// Coefficient patterns for a_1..a_m built from {-1, 0, 1}; a_m = +-1.
inline std::vector<std::vector<Integer>> small_tails(int m) {
  std::vector<std::vector<Integer>> out;
  std::vector<Integer> ones(m, 1), alt(m), sparse(m, 0);
  for (int i = 0; i < m; ++i) alt[i] = (i % 2 == 0) ? 1 : -1;
  sparse[0] = 1;
  sparse[m - 1] = 1;
  out.push_back(ones);
  out.push_back(alt);
  out.push_back(sparse);
  return out;
}

inline bool p2_feasible(const P2Params& s) {
  try {
    gen_family(s);
    return true;
  } catch (const Error&) {
    return false;
  }
}

inline std::vector<FamilyInstance> p2_instances() {
  std::vector<FamilyInstance> out;
  for (int p : {3, 5, 7}) {
    for (int d : {1, 2}) {
      for (int m = 2; m <= 4; ++m) {
        for (int sign : {1, -1}) {
          // k = 1: irreducible.
          for (const auto& tail : small_tails(m)) {
            P2Params s{p, 1, d, sign, tail};
            if (!p2_feasible(s)) continue;
            out.push_back({"P2", s, gen_family(s), Criterion::ConstantTerm, Conclusion::irreducible(),
                           {{"p", Rational(p)}, {"k", Rational(1)}, {"d", Rational(d)}}});
          }
          // k = 2, p | a_1, p not dividing a_j for some j >= 2: at most 2 factors.
          for (int a1 : {0, p}) {
            for (const auto& base : small_tails(m)) {
              auto tail = base;
              tail[0] = a1;
              if (m >= 2 && tail[1] == 0) tail[1] = 1;
              P2Params s{p, 2, d, sign, tail};
              if (!p2_feasible(s)) continue;
              out.push_back({"P2", s, gen_family(s), Criterion::ConstantTerm, Conclusion::at_most(2),
                             {{"p", Rational(p)}, {"k", Rational(2)}, {"d", Rational(d)}}});
            }
          }
        }
      }
    }
  }
  return out;
}

inline std::vector<FamilyInstance> p3_instances() {
  std::vector<FamilyInstance> out;
  for (int p : {2, 3, 5}) {
    for (int d : {1, 2, 3}) {
      if (d % p == 0) continue;
      for (int m = 2; m <= 4; ++m) {
        const Integer lead = Integer(p) * d;
        Integer mx = Integer(p) * ipow(Integer(d), m + 1);
        for (int i = 1; i < m; ++i) mx = std::max<Integer>(mx, ipow(Integer(d), i));
        // Smallest prime above m * max: then q = |a0| and |a0/q| = 1.
        Integer a0;
        Integer start = m * mx + 1;
        mpz_nextprime(a0.get_mpz_t(), Integer(start - 1).get_mpz_t());
        std::vector<Integer> lower(m, 1);
        lower[0] = a0;
        P3Params s{p, 1, d, 1, lower};
        out.push_back({"P3", s, gen_family(s), Criterion::LeadingCoeff, Conclusion::irreducible(),
                       {{"p", Rational(p)}, {"k", Rational(1)}, {"d", Rational(d)}}});
      }
    }
  }
  return out;
}

inline std::vector<FamilyInstance> p4_instances() {
  std::vector<FamilyInstance> out;
  for (int a : {3, 4, 5}) {
    for (int b : std::set<int>{1, a - 2}) {
      if (!(b < a - b)) continue;
      for (int m = 3; m <= 5; ++m) {
        for (int j = 1; j <= m - 1; ++j) {
          std::vector<int> plus(j + 1, 1), alt(j + 1);
          for (int i = 0; i <= j; ++i) alt[i] = (i % 2 == 0) ? -1 : 1;
          for (const auto& signs : {plus, alt}) {
            P4Params s{a, b, m, j, signs};
            out.push_back({"P4", s, gen_family(s), Criterion::DominantCoefficient,
                           Conclusion::at_most(m - j), {{"j", Rational(j)}}});
          }
        }
      }
    }
  }
  return out;
}

}  // namespace detail

inline std::vector<FamilyInstance> family_instances(std::string_view family) {
  if (family == "P1") return detail::p1_instances();
  if (family == "P2") return detail::p2_instances();
  if (family == "P3") return detail::p3_instances();
  if (family == "P4") return detail::p4_instances();
  throw Error("unknown family '" + std::string(family) + "'");
}

inline FamilyCheck check_family_instance(const FamilyInstance& inst, const OracleLimits& lim = {}) {
  FamilyCheck chk{inst, run_criterion(inst.criterion, inst.poly), std::nullopt, {}};
  const auto& got = chk.outcome;
  const std::string where = inst.family + " " + render(inst.poly) + ": ";
  if (!(got.conclusion == inst.expected)) {
    chk.problems.push_back(where + "expected " + std::string(kind_name(inst.expected.kind)) + "(" +
                           std::to_string(inst.expected.bound) + "), got " +
                           std::string(kind_name(got.conclusion.kind)) + "(" +
                           std::to_string(got.conclusion.bound) + ")");
  }
  if (got.mode != CertificateMode::Exact) chk.problems.push_back(where + "certificate not exact");
  for (const auto& [name, value] : inst.expected_witnesses) {
    auto it = got.witnesses.find(name);
    if (it == got.witnesses.end() || it->second != value) {
      chk.problems.push_back(where + "witness " + name + " != " + value.get_str());
    }
  }
  if (const auto* p4 = std::get_if<P4Params>(&inst.spec); p4 && !p4_inequality(*p4).closed_form_holds()) {
    chk.problems.push_back(where + "closed-form dominance inequality fails");
  }
  if (inst.poly.degree() <= lim.max_degree) {
    const auto truth = factor(inst.poly, lim);
    chk.oracle_count = truth.count();
    if (auto v = soundness_violation(got, truth)) chk.problems.push_back(where + *v);
  }
  return chk;
}

}  // namespace irreducia
