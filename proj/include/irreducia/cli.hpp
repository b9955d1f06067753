#pragma once

// Command-line front end. Exit codes: 0 a conclusion was reached (or the
// command succeeded), 1 input error, 2 soundness violation, 3 NoConclusion.

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "irreducia/analysis.hpp"
#include "irreducia/audit.hpp"
#include "irreducia/corpus.hpp"
#include "irreducia/io.hpp"
#include "irreducia/oracle.hpp"
#include "irreducia/report.hpp"

namespace irreducia {

enum ExitCode : int { kExitOk = 0, kExitInput = 1, kExitUnsound = 2, kExitNoConclusion = 3 };

namespace detail {

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }),
              tok.end());
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

inline std::vector<Criterion> parse_criteria(const std::string& s) {
  if (s == "all") return {kAllCriteria.begin(), kAllCriteria.end()};
  std::vector<Criterion> out;
  for (const auto& name : split_list(s)) {
    auto c = criterion_from_name(name);
    if (!c) throw Error("unknown criterion '" + name + "'");
    out.push_back(*c);
  }
  if (out.empty()) throw Error("no criteria selected");
  return out;
}

inline int parse_sign(const std::string& s) {
  if (s == "+" || s == "1" || s == "+1") return 1;
  if (s == "-" || s == "-1") return -1;
  throw Error("sign must be + or -");
}

inline Integer parse_big(const std::string& s, const char* flag) {
  Integer v;
  if (s.empty() || v.set_str(s, 10) != 0) throw Error(std::string("--") + flag + ": not an integer");
  return v;
}

inline std::vector<Integer> parse_coeff_list(const std::string& s) {
  std::vector<Integer> out;
  for (const auto& t : split_list(s)) out.push_back(parse_big(t, "coeffs"));
  return out;
}

inline std::string witness_text(const std::map<std::string, Rational>& w) {
  std::string out;
  for (const auto& [k, v] : w) {
    if (!out.empty()) out += ", ";
    out += k + "=" + v.get_str();
  }
  return out;
}

inline std::string conclusion_text(const Conclusion& c) {
  std::string s(kind_name(c.kind));
  if (c.kind == ConclusionKind::AtMostFactors || c.kind == ConclusionKind::FactorDegreeBound) {
    s += "(" + std::to_string(c.bound) + ")";
  }
  return s;
}

inline void print_text_report(const AnalysisReport& r, std::ostream& out) {
  out << "input: " << render(r.input) << "\n";
  out << "content: " << r.content.get_str() << "  zPower: " << r.z_power << "\n";
  for (const auto& o : r.outcomes) {
    out << "  " << criterion_name(o.criterion) << ": " << conclusion_text(o.conclusion);
    if (!o.witnesses.empty()) out << " [" << witness_text(o.witnesses) << "]";
    if (o.mode == CertificateMode::NumericConditional) out << " (numeric)";
    if (!o.applicable) out << " (not applicable)";
    out << "\n";
  }
  const auto& s = r.strongest;
  out << "strongest: " << conclusion_text(s.conclusion);
  if (!s.source.empty()) out << " via " << s.source;
  if (!s.witnesses.empty()) out << " [" << witness_text(s.witnesses) << "]";
  out << "\n";
  if (r.oracle) out << "oracle: " << render_factorization(*r.oracle) << " (count " << r.oracle->count() << ")\n";
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
}

struct AnalyzeArgs {
  std::string poly;
  std::string format = "json";
  std::string criteria = "all";
  std::string root_mode = "symbolic";
  std::string oracle = "auto";
  int max_oracle_degree = OracleLimits{}.max_degree;
};

inline int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  const Polynomial f = parse_poly(a.poly);
  if (f.is_zero()) throw ParseError("zero polynomial");
  AnalysisConfig cfg;
  cfg.criteria = parse_criteria(a.criteria);
  cfg.criteria_config.root_mode =
      a.root_mode == "numeric" ? RootMode::NumericHeuristic : RootMode::SymbolicSufficient;
  cfg.oracle = a.oracle == "on" ? OracleMode::On : a.oracle == "off" ? OracleMode::Off : OracleMode::Auto;
  cfg.oracle_limits.max_degree = a.max_oracle_degree;
  const auto rep = analyze(f, cfg, a.poly);
  if (a.format == "json") {
    out << to_json(rep).dump(2) << "\n";
  } else {
    print_text_report(rep, out);
  }
  if (!rep.oracle_consistent) return kExitUnsound;
  return rep.strongest.conclusion.decisive() ? kExitOk : kExitNoConclusion;
}

inline int cmd_factor(const std::string& text, const std::string& format, std::ostream& out) {
  const Polynomial f = parse_poly(text);
  if (f.is_zero()) throw ParseError("zero polynomial");
  OracleLimits lim;
  lim.max_degree = std::max(lim.max_degree, f.degree());
  const auto r = factor(f, lim);
  if (format == "json") {
    out << to_json(r).dump(2) << "\n";
  } else {
    out << render_factorization(r) << "\n";
  }
  return kExitOk;
}

struct GenArgs {
  std::string family;
  std::string p, m, n, k, d, a, b, j;
  std::string sign = "+";
  std::string signs, coeffs;
  bool exhaustive = false;
  std::optional<std::size_t> random;
  std::uint64_t seed = 1;
  int max_degree = 3;
  int coeff_bound = 2;
};

inline int cmd_gen(const GenArgs& g, std::ostream& out) {
  auto num = [](const std::string& s, const char* flag) {
    if (s.empty()) throw Error(std::string("--") + flag + " is required");
    return parse_big(s, flag);
  };
  auto small = [&](const std::string& s, const char* flag) {
    const Integer v = num(s, flag);
    if (!v.fits_sint_p()) throw Error(std::string("--") + flag + " out of range");
    return static_cast<int>(v.get_si());
  };

  if (g.exhaustive) {
    ExhaustiveCorpus(g.max_degree, g.coeff_bound).for_each([&](const Polynomial& f) {
      out << render_list(f) << "\n";
    });
    return kExitOk;
  }
  if (g.random) {
    for (const auto& f : gen_random(*g.random, g.max_degree, g.coeff_bound, g.seed)) out << render_list(f) << "\n";
    return kExitOk;
  }
  FamilySpec spec;
  const int sign = parse_sign(g.sign);
  if (g.family == "P1") {
    spec = P1Params{num(g.p, "p"), small(g.m, "m"), small(g.n, "n"), sign};
  } else if (g.family == "P2") {
    spec = P2Params{num(g.p, "p"), static_cast<unsigned>(small(g.k, "k")), num(g.d, "d"), sign,
                    parse_coeff_list(g.coeffs)};
  } else if (g.family == "P3") {
    spec = P3Params{num(g.p, "p"), static_cast<unsigned>(small(g.k, "k")), num(g.d, "d"), sign,
                    parse_coeff_list(g.coeffs)};
  } else if (g.family == "P4") {
    std::vector<int> signs;
    for (const auto& s : split_list(g.signs)) signs.push_back(parse_sign(s));
    spec = P4Params{num(g.a, "a"), num(g.b, "b"), small(g.m, "m"), small(g.j, "j"), signs};
  } else if (g.family.empty()) {
    throw Error("one of --family, --exhaustive, --random is required");
  } else {
    throw Error("unknown family '" + g.family + "'");
  }
  out << render_list(gen_family(spec)) << "\n";
  return kExitOk;
}

struct AuditArgs {
  std::optional<int> max_degree;
  int coeff_bound = 3;
  std::string families;
  std::optional<std::size_t> random;
  std::uint64_t seed = 1;
  unsigned jobs = 0;
  std::string root_mode = "symbolic";
};

inline void print_summary(const AuditSummary& s, std::ostream& out) {
  out << "items: " << s.items << "  skipped: " << s.skipped << "\n";
  for (auto c : kAllCriteria) {
    const auto it = s.tally.find(c);
    const CriterionTally t = it == s.tally.end() ? CriterionTally{} : it->second;
    out << "  " << criterion_name(c) << ": fired=" << t.fired << " sound=" << t.sound
        << " no_conclusion=" << t.no_conclusion << "\n";
  }
  out << "violations: " << s.violations.size() << "\n";
  for (const auto& [idx, msg] : s.violations) out << "  #" << idx << " " << msg << "\n";
}

inline int cmd_audit(const AuditArgs& a, std::ostream& out) {
  if (!a.max_degree && !a.random && a.families.empty()) {
    throw Error("nothing to audit: give --max-degree, --random or --families");
  }
  AuditOptions opt;
  opt.jobs = a.jobs ? a.jobs : std::max(1u, std::thread::hardware_concurrency());
  opt.criteria.root_mode = a.root_mode == "numeric" ? RootMode::NumericHeuristic : RootMode::SymbolicSufficient;
  bool clean = true;

  if (a.max_degree || a.random) {
    const int deg = a.max_degree.value_or(6);
    AuditSummary s;
    if (a.random) {
      s = audit_polynomials(gen_random(*a.random, deg, a.coeff_bound, a.seed), opt);
      out << "random corpus: " << *a.random << " polynomials, degree <= " << deg << ", |a_i| <= "
          << a.coeff_bound << ", seed " << a.seed << "\n";
    } else {
      const ExhaustiveCorpus corpus(deg, a.coeff_bound);  // validates bounds before any work
      s = audit_exhaustive(deg, a.coeff_bound, opt);
      out << "exhaustive corpus: degree <= " << deg << ", |a_i| <= " << a.coeff_bound << "\n";
    }
    print_summary(s, out);
    clean = clean && s.clean();
  }

  for (const auto& fam : split_list(a.families)) {
    const auto instances = family_instances(fam);
    std::size_t ok = 0;
    std::vector<std::string> problems;
    for (const auto& inst : instances) {
      const auto chk = check_family_instance(inst);
      if (chk.ok()) ++ok;
      problems.insert(problems.end(), chk.problems.begin(), chk.problems.end());
    }
    out << fam << ": " << ok << "/" << instances.size() << " instances conclude as stated\n";
    for (const auto& p : problems) out << "  " << p << "\n";
    clean = clean && problems.empty();
  }
  return clean ? kExitOk : kExitUnsound;
}

}  // namespace detail

/// Entry point shared by the executable and the tests.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Irreducibility criteria and factor-count bounds for integer polynomials", "irreducia"};
  app.require_subcommand(1);

  detail::AnalyzeArgs an;
  auto* analyze_cmd = app.add_subcommand("analyze", "Run the criteria on one polynomial");
  analyze_cmd->add_option("--poly", an.poly, "Polynomial: \"4,4,0,1\" or \"z^3+4z+4\"")->required();
  analyze_cmd->add_option("--format", an.format)->check(CLI::IsMember({"json", "text"}));
  analyze_cmd->add_option("--criteria", an.criteria, "Comma list of criterion names, or all");
  analyze_cmd->add_option("--root-mode", an.root_mode)->check(CLI::IsMember({"symbolic", "numeric"}));
  analyze_cmd->add_option("--oracle", an.oracle)->check(CLI::IsMember({"on", "off", "auto"}));
  analyze_cmd->add_option("--max-oracle-degree", an.max_oracle_degree)->check(CLI::Range(1, 64));

  std::string factor_poly, factor_format = "text";
  auto* factor_cmd = app.add_subcommand("factor", "Exact factorization over Z");
  factor_cmd->add_option("--poly", factor_poly)->required();
  factor_cmd->add_option("--format", factor_format)->check(CLI::IsMember({"json", "text"}));

  detail::GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Print family members or corpus polynomials, one list per line");
  gen_cmd->add_option("--family", gen.family)->check(CLI::IsMember({"P1", "P2", "P3", "P4"}));
  for (auto [flag, dst] : {std::pair{"--p", &gen.p}, {"--m", &gen.m}, {"--n", &gen.n}, {"--k", &gen.k},
                           {"--d", &gen.d}, {"--a", &gen.a}, {"--b", &gen.b}, {"--j", &gen.j}}) {
    gen_cmd->add_option(flag, *dst);
  }
  gen_cmd->add_option("--sign", gen.sign, "+ or -");
  gen_cmd->add_option("--signs", gen.signs, "P4 signs for z^1..z^j and z^m, e.g. +,-,+");
  gen_cmd->add_option("--coeffs", gen.coeffs, "P2: a_1..a_m; P3: a_0..a_{m-1}");
  gen_cmd->add_flag("--exhaustive", gen.exhaustive);
  gen_cmd->add_option("--random", gen.random);
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--max-degree", gen.max_degree);
  gen_cmd->add_option("--coeff-bound", gen.coeff_bound);

  detail::AuditArgs au;
  auto* audit_cmd = app.add_subcommand("audit", "Check every criterion against the oracle");
  audit_cmd->add_option("--max-degree", au.max_degree);
  audit_cmd->add_option("--coeff-bound", au.coeff_bound);
  audit_cmd->add_option("--families", au.families, "Comma list from P1,P2,P3,P4");
  audit_cmd->add_option("--random", au.random, "Audit N seeded random polynomials instead");
  audit_cmd->add_option("--seed", au.seed);
  audit_cmd->add_option("--jobs", au.jobs);
  audit_cmd->add_option("--root-mode", au.root_mode)->check(CLI::IsMember({"symbolic", "numeric"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*analyze_cmd) return detail::cmd_analyze(an, out);
    if (*factor_cmd) return detail::cmd_factor(factor_poly, factor_format, out);
    if (*gen_cmd) return detail::cmd_gen(gen, out);
    if (*audit_cmd) return detail::cmd_audit(au, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace irreducia
