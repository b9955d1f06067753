#pragma once

// JSON form of analysis reports (schema "irreducia/1"). Big integers and
// rational witnesses are written as decimal strings.

#include <json.hpp>

#include <string>

#include "irreducia/analysis.hpp"
#include "irreducia/error.hpp"

namespace irreducia {

using json = nlohmann::ordered_json;

namespace detail {

inline json coeffs_json(const Polynomial& f) {
  json arr = json::array();
  for (const auto& c : f.coeffs()) arr.push_back(c.get_str());
  return arr;
}

inline Polynomial coeffs_from_json(const json& arr) {
  std::vector<Integer> c;
  for (const auto& s : arr) c.emplace_back(s.get<std::string>());
  return Polynomial(std::move(c));
}

inline json conclusion_json(const Conclusion& c) {
  json j = {{"kind", std::string(kind_name(c.kind))}};
  if (c.kind != ConclusionKind::NoConclusion) j["bound"] = c.bound;
  return j;
}

inline Conclusion conclusion_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  for (auto k : {ConclusionKind::Irreducible, ConclusionKind::AtMostFactors,
                 ConclusionKind::FactorDegreeBound, ConclusionKind::NoConclusion}) {
    if (kind_name(k) == kind) return {k, j.value("bound", 0)};
  }
  throw Error("unknown conclusion kind '" + kind + "'");
}

inline json witnesses_json(const std::map<std::string, Rational>& w) {
  json j = json::object();
  for (const auto& [k, v] : w) j[k] = v.get_str();
  return j;
}

inline std::map<std::string, Rational> witnesses_from_json(const json& j) {
  std::map<std::string, Rational> w;
  for (const auto& [k, v] : j.items()) {
    Rational r(v.get<std::string>());
    r.canonicalize();
    w.emplace(k, r);
  }
  return w;
}

inline CertificateMode mode_from_json(const json& j) {
  return j.get<std::string>() == mode_name(CertificateMode::Exact) ? CertificateMode::Exact
                                                                   : CertificateMode::NumericConditional;
}

}  // namespace detail

inline json to_json(const FactorizationResult& r) {
  json factors = json::array();
  for (const auto& [g, mult] : r.factors) {
    factors.push_back({{"coeffs", detail::coeffs_json(g)}, {"multiplicity", mult}});
  }
  return {{"content", r.content.get_str()}, {"factors", factors}};
}

inline FactorizationResult factorization_from_json(const json& j) {
  FactorizationResult r;
  r.content = Integer(j.at("content").get<std::string>());
  for (const auto& fj : j.at("factors")) {
    r.factors.push_back({detail::coeffs_from_json(fj.at("coeffs")), fj.at("multiplicity").get<unsigned>()});
  }
  return r;
}

inline json to_json(const CriterionOutcome& o) {
  return {{"criterion", std::string(criterion_name(o.criterion))},
          {"applicable", o.applicable},
          {"witnesses", detail::witnesses_json(o.witnesses)},
          {"conclusion", detail::conclusion_json(o.conclusion)},
          {"certificateMode", std::string(mode_name(o.mode))}};
}

inline json to_json(const AnalysisReport& r) {
  json outcomes = json::array();
  for (const auto& o : r.outcomes) outcomes.push_back(to_json(o));

  json strongest = {{"criterion", r.strongest.source},
                    {"conclusion", detail::conclusion_json(r.strongest.conclusion)},
                    {"witnesses", detail::witnesses_json(r.strongest.witnesses)},
                    {"certificateMode", std::string(mode_name(r.strongest.mode))}};
  if (r.strongest.original_bound) strongest["originalBound"] = *r.strongest.original_bound;

  json j = {{"schema", std::string(AnalysisReport::kSchema)},
            {"input", {{"text", r.input_text}, {"coeffs", detail::coeffs_json(r.input)}}},
            {"normalization", {{"content", r.content.get_str()}, {"zPower", r.z_power}}},
            {"outcomes", outcomes},
            {"strongest", strongest},
            {"warnings", r.warnings}};
  if (r.oracle) j["oracle"] = to_json(*r.oracle);
  return j;
}

inline AnalysisReport report_from_json(const json& j) {
  if (j.at("schema").get<std::string>() != AnalysisReport::kSchema) throw Error("unsupported report schema");
  AnalysisReport r;
  r.input_text = j.at("input").at("text").get<std::string>();
  r.input = detail::coeffs_from_json(j.at("input").at("coeffs"));
  r.content = Integer(j.at("normalization").at("content").get<std::string>());
  r.z_power = j.at("normalization").at("zPower").get<unsigned>();
  for (const auto& oj : j.at("outcomes")) {
    CriterionOutcome o;
    const auto name = oj.at("criterion").get<std::string>();
    const auto c = criterion_from_name(name);
    if (!c) throw Error("unknown criterion '" + name + "'");
    o.criterion = *c;
    o.applicable = oj.at("applicable").get<bool>();
    o.witnesses = detail::witnesses_from_json(oj.at("witnesses"));
    o.conclusion = detail::conclusion_from_json(oj.at("conclusion"));
    o.mode = detail::mode_from_json(oj.at("certificateMode"));
    r.outcomes.push_back(std::move(o));
  }
  const auto& sj = j.at("strongest");
  r.strongest.source = sj.at("criterion").get<std::string>();
  r.strongest.conclusion = detail::conclusion_from_json(sj.at("conclusion"));
  r.strongest.witnesses = detail::witnesses_from_json(sj.at("witnesses"));
  r.strongest.mode = detail::mode_from_json(sj.at("certificateMode"));
  if (sj.contains("originalBound")) r.strongest.original_bound = sj.at("originalBound").get<int>();
  if (j.contains("oracle")) r.oracle = factorization_from_json(j.at("oracle"));
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  for (const auto& w : r.warnings) {
    if (w.starts_with("SOUNDNESS VIOLATION")) r.oracle_consistent = false;
  }
  return r;
}

}  // namespace irreducia
