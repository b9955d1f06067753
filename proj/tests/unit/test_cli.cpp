#include <gtest/gtest.h>

#include <sstream>

#include "irreducia/cli.hpp"

using namespace irreducia;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "irreducia");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Polynomial P(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(std::move(v));
}

}  // namespace

TEST(ParsePoly, KnownValues) {
  EXPECT_EQ(parse_poly("4,4,0,1"), P({4, 4, 0, 1}));
  EXPECT_EQ(parse_poly("z^3+4z+4"), P({4, 4, 0, 1}));
  EXPECT_EQ(parse_poly("2z^2 - z^2"), P({0, 0, 1}));
  EXPECT_EQ(parse_poly(" - z ^ 2 + 3 * x - 7 "), P({-7, 3, -1}));
  EXPECT_EQ(parse_poly("-5"), P({-5}));
  EXPECT_EQ(parse_poly("z"), P({0, 1}));
  EXPECT_EQ(parse_poly("123456789012345678901234567890z"),
            Polynomial({Integer(0), Integer("123456789012345678901234567890")}));
}

TEST(ParsePoly, Errors) {
  for (const char* bad : {"", "   ", "z^", "3**z", "4,,1", "z+", "2y", "1,z", "++z"}) {
    EXPECT_THROW(parse_poly(bad), ParseError) << bad;
  }
}

TEST(Render, CanonicalForms) {
  EXPECT_EQ(render(P({1, 5, 6})), "6z^2 + 5z + 1");
  EXPECT_EQ(render(P({1, 5, 6}), true), "6z^2+5z+1");
  EXPECT_EQ(render(P({-1, 0, 0, -1})), "-z^3 - 1");
  EXPECT_EQ(render(Polynomial()), "0");
  EXPECT_EQ(render_list(P({4, 4, 0, 1})), "4,4,0,1");
}

TEST(Render, ParseRoundTripOverCorpus) {
  ExhaustiveCorpus(4, 3).for_each([](const Polynomial& f) {
    ASSERT_EQ(parse_poly(render(f)), f);
    ASSERT_EQ(parse_poly(render(f, true)), f);
    ASSERT_EQ(parse_poly(render_list(f)), f);
    ASSERT_EQ(parse_poly(render(-f)), -f);
  });
}

TEST(Report, JsonRoundTripIsByteIdentical) {
  AnalysisConfig numeric;
  numeric.criteria_config.root_mode = RootMode::NumericHeuristic;
  for (const auto& f : gen_random(150, 6, 9, 5)) {
    for (const auto* cfg : {&numeric}) {
      const auto rep = analyze(f, *cfg, render(f));
      const std::string a = to_json(rep).dump(2);
      const auto back = report_from_json(json::parse(a));
      ASSERT_EQ(to_json(back).dump(2), a);
    }
  }
  const auto rep = analyze(P({0, 8, 4}), {}, "4z^2+8z");
  const std::string a = to_json(rep).dump();
  EXPECT_EQ(to_json(report_from_json(json::parse(a))).dump(), a);
}

TEST(Report, SchemaKeys) {
  const auto j = to_json(analyze(P({4, 4, 0, 1}), {}, "z^3+4z+4"));
  EXPECT_EQ(j.at("schema"), "irreducia/1");
  EXPECT_EQ(j.at("input").at("coeffs"), json::array({"4", "4", "0", "1"}));
  EXPECT_EQ(j.at("normalization").at("content"), "1");
  EXPECT_EQ(j.at("normalization").at("zPower"), 0);
  EXPECT_EQ(j.at("outcomes").size(), kAllCriteria.size());
  EXPECT_EQ(j.at("strongest").at("criterion"), "eisenstein_generalized");
  EXPECT_EQ(j.at("strongest").at("conclusion").at("kind"), "Irreducible");
  EXPECT_EQ(j.at("strongest").at("witnesses").at("p"), "2");
  EXPECT_EQ(j.at("strongest").at("witnesses").at("k"), "2");
  EXPECT_EQ(j.at("strongest").at("witnesses").at("j"), "3");
  EXPECT_EQ(j.at("oracle").at("factors").size(), 1u);
  EXPECT_TRUE(j.at("warnings").is_array());
}

TEST(Cli, AnalyzeGolden) {
  auto r = run({"analyze", "--poly", "z^3+4z+4", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j.at("strongest").at("criterion"), "eisenstein_generalized");
  EXPECT_EQ(j.at("strongest").at("conclusion").at("kind"), "Irreducible");

  r = run({"analyze", "--poly", "z^4-1"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(json::parse(r.out).at("oracle").at("factors").size(), 3u);

  r = run({"analyze", "--poly", ""});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());

  r = run({"analyze", "--poly", "z^^2"});
  EXPECT_EQ(r.code, 1);
  r = run({"analyze", "--poly", "0"});
  EXPECT_EQ(r.code, 1);
  r = run({"analyze", "--poly", "z+1", "--criteria", "bogus"});
  EXPECT_EQ(r.code, 1);
  r = run({"analyze", "--poly", "z+1", "--format", "yaml"});
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, AnalyzeTextAndOptions) {
  auto r = run({"analyze", "--poly", "5,-5,1", "--format", "text", "--root-mode", "numeric", "--criteria",
                "constant_term_criterion", "--oracle", "off"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("constant_term_criterion: Irreducible"), std::string::npos);
  EXPECT_NE(r.out.find("conditionally irreducible (numeric root location)"), std::string::npos);
  EXPECT_EQ(r.out.find("oracle:"), std::string::npos);

  r = run({"analyze", "--poly", "5,-5,1", "--criteria", "constant_term_criterion"});
  EXPECT_EQ(r.code, 3);

  r = run({"analyze", "--poly", "1,0,0,0,0,0,0,0,0,0,1", "--max-oracle-degree", "8"});
  EXPECT_EQ(json::parse(r.out).count("oracle"), 0u);
}

TEST(Cli, FactorGolden) {
  auto r = run({"factor", "--poly", "6z^2+5z+1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(2z+1)(3z+1)\n");

  r = run({"factor", "--poly", "z", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j.at("content"), "1");
  ASSERT_EQ(j.at("factors").size(), 1u);
  EXPECT_EQ(j.at("factors")[0].at("coeffs"), json::array({"0", "1"}));

  r = run({"factor", "--poly", "-12z^3+12z"});
  EXPECT_EQ(r.out, "-12(z-1)(z)(z+1)\n");
  EXPECT_EQ(run({"factor", "--poly", "x?"}).code, 1);
}

TEST(Cli, GenGolden) {
  auto r = run({"gen", "--family", "P1", "--p", "2", "--m", "3", "--n", "2", "--sign", "+"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "4,4,0,1\n");

  r = run({"gen", "--family", "P4", "--a", "3", "--b", "1", "--m", "3", "--j", "2"});
  EXPECT_EQ(r.out, "1,3,9,1\n");
  r = run({"gen", "--family", "P2", "--p", "5", "--k", "1", "--d", "1", "--coeffs", "1,1"});
  EXPECT_EQ(r.out, "5,1,1\n");
  r = run({"gen", "--family", "P3", "--p", "5", "--k", "1", "--d", "1", "--coeffs", "11,1"});
  EXPECT_EQ(r.out, "11,1,5\n");

  r = run({"gen", "--family", "P1", "--p", "4", "--m", "3", "--n", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("side condition"), std::string::npos);

  r = run({"gen", "--exhaustive", "--max-degree", "1", "--coeff-bound", "1"});
  EXPECT_EQ(r.out, "-1,1\n1,1\n");
  r = run({"gen", "--random", "3", "--seed", "9"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
  EXPECT_EQ(r.out, run({"gen", "--random", "3", "--seed", "9"}).out);
}

TEST(Cli, AuditGolden) {
  auto r = run({"audit", "--max-degree", "3", "--coeff-bound", "2", "--jobs", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("violations: 0"), std::string::npos);
  EXPECT_NE(r.out.find("eisenstein_generalized: fired="), std::string::npos);

  r = run({"audit", "--families", "P1,P4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("P1: 90/90"), std::string::npos);

  r = run({"audit", "--max-degree", "0"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(run({"audit"}).code, 1);
  EXPECT_EQ(run({"audit", "--families", "P7"}).code, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}
