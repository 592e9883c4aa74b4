#include "atomembed/classify.hpp"
#include "atomembed/family.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace atomembed;

namespace {

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

std::vector<Rational> exact_weights(const Measure& m) {
  const auto& e = std::get<ExactMeasure>(m);
  return {e.weights().begin(), e.weights().end()};
}

}  // namespace

TEST(Realize, Uniform) {
  const auto m = realize(UniformFamily{4});
  EXPECT_EQ(exact_weights(m), (std::vector<Rational>(4, q(1, 4))));
  EXPECT_THROW(realize(UniformFamily{1}), FamilyError);
}

TEST(Realize, BinomialFiveHalf) {
  const auto w = exact_weights(realize(BinomialFamily{5, q(1, 2)}));
  EXPECT_EQ(w, (std::vector<Rational>{q(1, 32), q(5, 32), q(10, 32), q(10, 32), q(5, 32), q(1, 32)}));
}

TEST(Realize, BinomialMatchesEnumeration) {
  for (unsigned n = 1; n <= 12; ++n) {
    for (const Rational& p : {q(1, 2), q(1, 3), q(7, 10), q(1, 17)}) {
      const auto w = exact_weights(realize(BinomialFamily{n, p}));
      EXPECT_EQ(w, oracle::enumerate_binomial(n, p));
      Rational total = 0;
      for (const auto& v : w) total += v;
      EXPECT_EQ(total, 1);
      EXPECT_TRUE(std::get<ExactMeasure>(realize(BinomialFamily{n, p})).normalized());
    }
  }
}

TEST(Realize, BinomialFloatProbability) {
  const auto m = realize(BinomialFamily{6, 0.3});
  ASSERT_TRUE(std::holds_alternative<FloatMeasure>(m));
  const auto ref = oracle::enumerate_binomial(6, q(3, 10));
  const auto w = weights_as_double(m);
  for (std::size_t i = 0; i < w.size(); ++i) EXPECT_NEAR(w[i], ref[i].get_d(), 1e-15);
}

TEST(Realize, BinomialSymmetry) {
  for (unsigned n = 2; n <= 9; ++n) {
    for (long num = 1; num < 10; ++num) {
      const Rational p = q(num, 10);
      auto a = exact_weights(realize(BinomialFamily{n, p}));
      const auto b = exact_weights(realize(BinomialFamily{n, 1 - p}));
      std::reverse(a.begin(), a.end());
      EXPECT_EQ(a, b);
      EXPECT_EQ(classify(realize(BinomialFamily{n, p})).verdict, classify(realize(BinomialFamily{n, 1 - p})).verdict);
    }
  }
}

TEST(Realize, BinomialRangeChecks) {
  EXPECT_THROW(realize(BinomialFamily{5, q(0)}), FamilyError);
  EXPECT_THROW(realize(BinomialFamily{5, q(1)}), FamilyError);
  EXPECT_THROW(realize(BinomialFamily{5, 1.5}), FamilyError);
  EXPECT_THROW(realize(BinomialFamily{0, q(1, 2)}), FamilyError);
  EXPECT_THROW(realize(BinomialFamily{65, q(1, 2)}), FamilyError);
  EXPECT_THROW(binomial_coefficient(65, 3), FamilyError);
  EXPECT_EQ(binomial_coefficient(64, 32), 1832624140942590534ull);
  EXPECT_EQ(binomial_coefficient(5, 7), 0u);
  // 64 trials give 65 atoms, one more than a measure may hold.
  EXPECT_THROW(realize(BinomialFamily{64, q(1, 2)}), MeasureError);
  EXPECT_NO_THROW(realize(BinomialFamily{63, q(1, 2)}));
}

TEST(Realize, Hypergeometric) {
  const auto w = exact_weights(realize(HypergeometricFamily{6, 3, 3}));
  EXPECT_EQ(w, (std::vector<Rational>{q(1, 20), q(9, 20), q(9, 20), q(1, 20)}));
  for (unsigned big_n = 2; big_n <= 12; ++big_n)
    for (unsigned big_k = 1; big_k < big_n; ++big_k)
      for (unsigned n = 1; n <= std::min(big_k, big_n - big_k); ++n) {
        const auto got = exact_weights(realize(HypergeometricFamily{big_n, big_k, n}));
        EXPECT_EQ(got, oracle::enumerate_hypergeometric(big_n, big_k, n));
        Rational total = 0;
        for (const auto& v : got) total += v;
        EXPECT_EQ(total, 1);
      }
}

TEST(Realize, HypergeometricRejectsZeroProbabilityOutcomes) {
  try {
    realize(HypergeometricFamily{6, 2, 3});
    FAIL() << "expected FamilyError";
  } catch (const FamilyError& e) {
    EXPECT_NE(std::string(e.what()).find("zero probability"), std::string::npos);
  }
  EXPECT_THROW(realize(HypergeometricFamily{6, 0, 3}), FamilyError);
  EXPECT_THROW(realize(HypergeometricFamily{6, 6, 3}), FamilyError);
  EXPECT_THROW(realize(HypergeometricFamily{6, 3, 0}), FamilyError);
  EXPECT_THROW(realize(HypergeometricFamily{6, 3, 6}), FamilyError);
}

TEST(Realize, CustomKeepsScale) {
  const auto m = realize(CustomFamily{std::vector<Rational>{2, 4, 6}});
  EXPECT_EQ(exact_weights(m), (std::vector<Rational>{2, 4, 6}));
  EXPECT_FALSE(std::get<ExactMeasure>(m).normalized());
  EXPECT_THROW(realize(CustomFamily{std::vector<double>{1, -1}}), MeasureError);
}

TEST(FamilyGrid, BinomialProbabilityGrid) {
  const auto grid = family_grid(BinomialFamily{5, q(1, 2)}, FamilyParameter::p, q(1, 10), q(9, 10), 9);
  ASSERT_EQ(grid.size(), 9u);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_EQ(grid[i].parameter, q(static_cast<long>(i + 1), 10));
    EXPECT_EQ(exact_weights(grid[i].measure), oracle::enumerate_binomial(5, grid[i].parameter));
  }
  EXPECT_EQ(classify(grid[4].measure).verdict, Verdict::not_embeddable);
}

TEST(FamilyGrid, UniformAtomGrid) {
  const auto grid = family_grid(UniformFamily{3}, FamilyParameter::atoms, 3, 11, 9);
  ASSERT_EQ(grid.size(), 9u);
  for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_EQ(atom_count(grid[i].measure), i + 3);
}

TEST(FamilyGrid, FourTrialsEmbeddableAtHalf) {
  const auto grid = family_grid(BinomialFamily{4, q(1, 2)}, FamilyParameter::p, q(1, 4), q(3, 4), 3);
  ASSERT_EQ(grid[1].parameter, q(1, 2));
  const auto c = classify(grid[1].measure);
  EXPECT_EQ(c.verdict, Verdict::embeddable);
  EXPECT_EQ(c.dimension, 4u);
}

TEST(FamilyGrid, InvalidPointNamesValue) {
  try {
    family_grid(BinomialFamily{5, q(1, 2)}, FamilyParameter::p, 0, 1, 3);
    FAIL() << "expected FamilyError";
  } catch (const FamilyError& e) {
    EXPECT_NE(std::string(e.what()).find("grid point 0"), std::string::npos);
  }
  EXPECT_THROW(family_grid(UniformFamily{3}, FamilyParameter::p, 0, 1, 3), FamilyError);
  EXPECT_THROW(family_grid(UniformFamily{3}, FamilyParameter::atoms, q(5, 2), 3, 1), FamilyError);
  EXPECT_THROW(family_grid(UniformFamily{3}, FamilyParameter::atoms, 3, 4, 0), FamilyError);
}

TEST(FamilyParameterNames, Parse) {
  EXPECT_EQ(parse_family_parameter("p"), FamilyParameter::p);
  EXPECT_EQ(parse_family_parameter("n"), FamilyParameter::trials);
  EXPECT_EQ(parse_family_parameter("N"), FamilyParameter::population);
  EXPECT_EQ(parse_family_parameter("K"), FamilyParameter::successes);
  EXPECT_EQ(parse_family_parameter("draws"), FamilyParameter::draws);
  EXPECT_EQ(parse_family_parameter("atoms"), FamilyParameter::atoms);
  EXPECT_THROW(parse_family_parameter("q"), FamilyError);
}
