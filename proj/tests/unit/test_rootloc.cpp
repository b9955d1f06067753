#include <gtest/gtest.h>

#include <cmath>

#include "irreducia/corpus.hpp"
#include "irreducia/rootloc.hpp"

using namespace irreducia;

namespace {

Polynomial P(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(std::move(v));
}

std::vector<double> sorted_moduli(const Polynomial& f) {
  std::vector<double> m;
  for (const auto& r : numeric_roots(f)) m.push_back(std::abs(r));
  std::sort(m.begin(), m.end());
  return m;
}

}  // namespace

TEST(CertifyOutsideDisk, SymbolicKnownValues) {
  auto c = certify_outside_disk(P({5, 1, 1}), Rational(1), RootMode::SymbolicSufficient);
  EXPECT_TRUE(c.certified);
  EXPECT_EQ(c.mode, RootMode::SymbolicSufficient);
  c = certify_outside_disk(P({-4, 0, 1}), Rational(2), RootMode::SymbolicSufficient);
  EXPECT_FALSE(c.certified);
  c = certify_outside_disk(P({-4, 0, 1}), Rational(1, 1000000), RootMode::SymbolicSufficient);
  EXPECT_TRUE(c.certified);
}

TEST(CertifyOutsideDisk, Errors) {
  try {
    certify_outside_disk(P({0, 1, 1}), Rational(1), RootMode::SymbolicSufficient);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "root at origin inside every disk");
  }
  EXPECT_THROW(certify_outside_disk(P({3, 1}), Rational(0), RootMode::SymbolicSufficient), Error);
  EXPECT_THROW(certify_outside_disk(P({3, 1}), Rational(-1), RootMode::NumericHeuristic), Error);
}

TEST(CertifyOutsideDisk, NumericKnownValues) {
  // Roots +-2 sit on the circle: numeric mode must not certify d = 2.
  auto c = certify_outside_disk(P({-4, 0, 1}), Rational(2), RootMode::NumericHeuristic);
  EXPECT_FALSE(c.certified);
  EXPECT_EQ(c.moduli.size(), 2u);
  c = certify_outside_disk(P({-4, 0, 1}), Rational(19, 10), RootMode::NumericHeuristic);
  EXPECT_TRUE(c.certified);
  // Symbolic fails here (6 > 5 + 1 is false) but the roots are 2 and 3.
  const auto f = P({6, -5, 1});
  EXPECT_FALSE(certify_outside_disk(f, Rational(1), RootMode::SymbolicSufficient).certified);
  EXPECT_TRUE(certify_outside_disk(f, Rational(1), RootMode::NumericHeuristic).certified);
}

TEST(NumericRoots, KnownValues) {
  auto m = sorted_moduli(P({-1, 0, 1}));
  ASSERT_EQ(m.size(), 2u);
  EXPECT_NEAR(m[0], 1.0, 1e-9);
  EXPECT_NEAR(m[1], 1.0, 1e-9);
  auto roots = numeric_roots(P({-1, 0, 1}));
  std::sort(roots.begin(), roots.end(), [](auto a, auto b) { return a.real() < b.real(); });
  EXPECT_NEAR(roots[0].real(), -1.0, 1e-9);
  EXPECT_NEAR(roots[1].real(), 1.0, 1e-9);

  m = sorted_moduli(P({-4, 0, 1}));
  EXPECT_NEAR(m[0], 2.0, 1e-9);
  EXPECT_NEAR(m[1], 2.0, 1e-9);

  m = sorted_moduli(P({1, 5, 1}));
  EXPECT_LT(m[0], 1.0);
  EXPECT_GT(m[1], 1.0);
}

TEST(NumericRoots, RejectsConstants) { EXPECT_THROW(numeric_roots(P({3})), Error); }

TEST(NumericRoots, ZeroRootsAreSplitOff) {
  const auto m = sorted_moduli(P({0, 0, -1, 0, 1}));
  ASSERT_EQ(m.size(), 4u);
  EXPECT_EQ(m[0], 0.0);
  EXPECT_EQ(m[1], 0.0);
  EXPECT_NEAR(m[2], 1.0, 1e-9);
}

TEST(NumericRoots, RootProductLaw) {
  for (const auto& f : gen_random(300, 6, 9, 41)) {
    if (f.degree() < 2) continue;
    double prod = 1;
    for (const auto& r : numeric_roots(f)) prod *= std::abs(r);
    const double expect = std::abs(f.constant().get_d() / f.leading().get_d());
    EXPECT_NEAR(prod / expect, 1.0, 1e-6) << f.degree();
  }
}

TEST(NumericRoots, RepeatedRootsConverge) {
  // (z - 1)^4 (z + 2): clustered roots stress the iteration.
  const auto g = P({1, -4, 6, -4, 1}) * P({2, 1});
  EXPECT_NO_THROW(numeric_roots(g));
}

TEST(CertifyOutsideDisk, SymbolicImpliesNumericOverCorpus) {
  const ExhaustiveCorpus corpus(4, 3);
  int fired = 0;
  corpus.for_each([&](const Polynomial& f) {
    for (long d : {1, 2, 3}) {
      if (!certify_outside_disk(f, Rational(d), RootMode::SymbolicSufficient).certified) continue;
      ++fired;
      for (const auto& r : numeric_roots(f)) EXPECT_GT(std::abs(r), d * (1 + 1e-6));
    }
  });
  EXPECT_GT(fired, 20);
}

TEST(Lemma2Bound, KnownValues) {
  EXPECT_EQ(lemma2_bound({2, 1, 3}), 1);
  EXPECT_EQ(lemma2_bound({0, 5, 5}), 5);
  EXPECT_EQ(lemma2_bound({4, 1, 5}), 1);
}

TEST(Lemma2Bound, IncompleteRejected) {
  EXPECT_THROW(lemma2_bound({1, 1, 3}), Error);
  EXPECT_THROW(lemma2_bound({3, 0, 3}), Error);
  EXPECT_THROW(lemma2_bound({-1, 4, 3}), Error);
}

TEST(Lemma2Bound, EqualsOuterAndNeverExceedsDegree) {
  for (int m = 1; m <= 8; ++m) {
    for (int inner = 0; inner < m; ++inner) {
      const int b = lemma2_bound({inner, m - inner, m});
      EXPECT_EQ(b, m - inner);
      EXPECT_LE(b, m);
    }
  }
}
