#pragma once

// Runs every enabled criterion on the primitive part of an input, picks the
// strongest conclusion and optionally cross-checks against the oracle.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "irreducia/criteria.hpp"
#include "irreducia/oracle.hpp"

namespace irreducia {

enum class OracleMode { Off, On, Auto };

struct AnalysisConfig {
  std::vector<Criterion> criteria{kAllCriteria.begin(), kAllCriteria.end()};
  CriteriaConfig criteria_config;
  OracleMode oracle = OracleMode::Auto;
  OracleLimits oracle_limits;  // max_degree doubles as --max-oracle-degree
};

struct StrongestConclusion {
  std::string source;  // criterion name, "degree_one", or empty
  Conclusion conclusion;
  std::map<std::string, Rational> witnesses;
  CertificateMode mode = CertificateMode::Exact;
  // Bound for the original input: primitive-part bound plus z^t factors.
  std::optional<int> original_bound;
};

struct AnalysisReport {
  static constexpr std::string_view kSchema = "irreducia/1";

  std::string input_text;
  Polynomial input;
  Integer content;
  unsigned z_power = 0;
  std::vector<CriterionOutcome> outcomes;
  StrongestConclusion strongest;
  std::optional<FactorizationResult> oracle;
  std::vector<std::string> warnings;
  bool oracle_consistent = true;
};

/// Empty when the outcome agrees with the factorization of the polynomial
/// it was computed on; otherwise a description of the violation.
inline std::optional<std::string> soundness_violation(const CriterionOutcome& outcome,
                                                      const FactorizationResult& truth) {
  const auto& c = outcome.conclusion;
  const unsigned r = truth.count();
  std::ostringstream why;
  why << criterion_name(outcome.criterion) << ": ";
  switch (c.kind) {
    case ConclusionKind::Irreducible:
      if (r != 1) {
        why << "claimed irreducible, oracle finds " << r << " factors";
        return why.str();
      }
      break;
    case ConclusionKind::AtMostFactors:
      if (r > static_cast<unsigned>(c.bound)) {
        why << "claimed at most " << c.bound << " factors, oracle finds " << r;
        return why.str();
      }
      break;
    case ConclusionKind::FactorDegreeBound:
      if (r > 1 && truth.min_factor_degree() > c.bound) {
        why << "claimed a factor of degree <= " << c.bound << ", smallest oracle factor has degree "
            << truth.min_factor_degree();
        return why.str();
      }
      break;
    case ConclusionKind::NoConclusion: break;
  }
  return std::nullopt;
}

inline AnalysisReport analyze(const Polynomial& f, const AnalysisConfig& cfg = {},
                              std::string input_text = {}) {
  if (f.is_zero()) throw Error("zero polynomial");
  AnalysisReport rep;
  rep.input_text = std::move(input_text);
  rep.input = f;
  const auto norm = normalize(f);
  rep.content = norm.content;
  rep.z_power = norm.z_power;
  const Polynomial& g = norm.primitive_part;

  std::vector<Criterion> enabled = cfg.criteria;
  std::sort(enabled.begin(), enabled.end());
  enabled.erase(std::unique(enabled.begin(), enabled.end()), enabled.end());

  if (g.degree() >= 1) {
    for (auto c : enabled) {
      try {
        rep.outcomes.push_back(run_criterion(c, g, cfg.criteria_config));
      } catch (const LimitError& e) {
        auto skipped = detail::start(c);
        rep.outcomes.push_back(skipped);
        rep.warnings.push_back(std::string(criterion_name(c)) + " skipped: " + e.what());
      }
    }
  } else {
    rep.warnings.emplace_back("primitive part is constant; criteria not applicable");
  }

  auto& best = rep.strongest;
  for (const auto& o : rep.outcomes) {
    if (stronger(o.conclusion, best.conclusion)) {
      best = {std::string(criterion_name(o.criterion)), o.conclusion, o.witnesses, o.mode, {}};
    }
  }
  if (g.degree() == 1 && !best.conclusion.decisive()) {
    best.source = "degree_one";
    best.conclusion = Conclusion::irreducible();
  }
  if (best.conclusion.kind == ConclusionKind::Irreducible ||
      best.conclusion.kind == ConclusionKind::AtMostFactors) {
    best.original_bound = best.conclusion.bound + static_cast<int>(rep.z_power);
  } else if (g.degree() == 0) {
    best.original_bound = static_cast<int>(rep.z_power);
  }
  if (best.mode == CertificateMode::NumericConditional) {
    rep.warnings.push_back(best.conclusion.kind == ConclusionKind::Irreducible
                               ? "conditionally irreducible (numeric root location)"
                               : "conclusion conditional on numeric root location");
  }

  const bool want_oracle =
      cfg.oracle == OracleMode::On ||
      (cfg.oracle == OracleMode::Auto && g.degree() <= cfg.oracle_limits.max_degree);
  if (want_oracle) {
    try {
      rep.oracle = factor(f, cfg.oracle_limits);
    } catch (const LimitError& e) {
      rep.warnings.push_back(std::string("oracle skipped: ") + e.what());
    }
  }
  if (rep.oracle && g.degree() >= 1) {
    // Criteria speak about the primitive part; drop the z and content pieces.
    FactorizationResult part = *rep.oracle;
    std::erase_if(part.factors, [](const Factor& fa) { return fa.poly == Polynomial{0, 1}; });
    for (const auto& o : rep.outcomes) {
      if (auto v = soundness_violation(o, part)) {
        if (o.mode == CertificateMode::Exact) {
          rep.oracle_consistent = false;
          rep.warnings.push_back("SOUNDNESS VIOLATION " + *v);
        } else {
          rep.warnings.push_back("numeric root location misled " + *v);
        }
      }
    }
  }
  return rep;
}

}  // namespace irreducia
