#include <gtest/gtest.h>

#include "ering/exact_numeric.hpp"
#include "ering/sampling.hpp"
#include "oracles.hpp"

using namespace ering;

namespace {

Matrix random_symmetric(Rng& rng, std::size_t n, std::int64_t bound) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Rational v(rng.between(-bound, bound), rng.between(1, 3));
      m(i, j) = v;
      m(j, i) = v;
    }
  return m;
}

Matrix random_matrix(Rng& rng, std::size_t n, std::int64_t bound) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(rng.between(-bound, bound), rng.between(1, 2));
  return m;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  const Rational r(6, -4);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(0, 7).denominator(), 1);
}

TEST(Rational, ExactArithmetic) {
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1) / Rational(3) * Rational(3), Rational(1));
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("-3/6"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("17"), Rational(17));
  EXPECT_EQ(Rational(-1, 2).to_string(), "-1/2");
  EXPECT_EQ(Rational(4).to_string(), "4");
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
}

TEST(Rational, Ceiling) {
  EXPECT_EQ(Rational(7, 2).ceil_int64(), 4);
  EXPECT_EQ(Rational(-7, 2).ceil_int64(), -3);
  EXPECT_EQ(Rational(3).ceil_int64(), 3);
}

TEST(SymMatrix, RejectsAsymmetric) {
  EXPECT_THROW(SymMatrix(Matrix{{1, 2}, {3, 4}}), std::invalid_argument);
  EXPECT_THROW(SymMatrix(Matrix(0)), std::invalid_argument);
  EXPECT_NO_THROW(SymMatrix({{1, 2}, {2, 4}}));
}

TEST(CharPoly, Examples) {
  EXPECT_EQ(char_poly_coeffs(SymMatrix({{2, 1}, {1, 1}})), (std::vector<Rational>{3, 1}));
  EXPECT_EQ(char_poly_coeffs(SymMatrix(Matrix(2))), (std::vector<Rational>{0, 0}));
  EXPECT_EQ(char_poly_coeffs(SymMatrix(Matrix::identity(3))), (std::vector<Rational>{3, 3, 1}));
}

TEST(CharPoly, AgreesWithBruteForceMinorSums) {
  Rng rng(7);
  for (std::size_t n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 60; ++trial) {
      const Matrix a = random_symmetric(rng, n, 5);
      EXPECT_EQ(char_poly_coeffs(SymMatrix(a)), oracle::minor_sums(a)) << a.to_string();
    }
}

TEST(IsPsd, Examples) {
  EXPECT_TRUE(is_psd(SymMatrix({{2, 1}, {1, 1}})));
  EXPECT_FALSE(is_psd(SymMatrix({{1, 2}, {2, 1}})));
  EXPECT_TRUE(is_psd(SymMatrix(Matrix(2))));
  EXPECT_FALSE(is_psd(SymMatrix({{0, 1}, {1, 0}})));
  EXPECT_FALSE(is_psd(SymMatrix({{0, 0}, {0, -1}})));
}

TEST(IsPsd, AgreesWithSylvesterOracle) {
  Rng rng(11);
  int positives = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 150; ++trial) {
      Matrix a = random_symmetric(rng, n, 3);
      if (trial % 3 == 0) a = a * a;  // bias toward PSD
      const bool expected = oracle::all_principal_minors_nonnegative(a);
      positives += expected;
      EXPECT_EQ(is_psd(SymMatrix(a)), expected) << a.to_string();
    }
  EXPECT_GT(positives, 100);
}

TEST(IsPsd, GramMatricesArePositive) {
  Rng rng(3);
  for (std::size_t n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 40; ++trial) {
      const Matrix b = random_matrix(rng, n, 4);
      EXPECT_TRUE(is_psd(SymMatrix(b.transpose() * b)));
    }
}

TEST(IsPsd, ConeIsPointed) {
  Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Matrix a = random_symmetric(rng, 1 + trial % 3, 2);
    if (is_psd(SymMatrix(a)) && is_psd(SymMatrix(-a))) EXPECT_TRUE(a.is_zero());
  }
  EXPECT_TRUE(is_psd(SymMatrix(Matrix(3))) && is_psd(SymMatrix(-Matrix(3))));
}

TEST(RankOne, ReconstructsPsdAndRejectsOthers) {
  Rng rng(13);
  for (std::size_t n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 100; ++trial) {
      Matrix a = random_symmetric(rng, n, 3);
      if (trial % 2 == 0) a = a * a;
      const auto terms = rank_one_decomposition(SymMatrix(a));
      ASSERT_EQ(terms.has_value(), oracle::all_principal_minors_nonnegative(a)) << a.to_string();
      if (!terms) continue;
      Matrix sum(n);
      for (const auto& t : *terms) {
        EXPECT_GT(t.weight, Rational(0));
        sum += t.weight * Matrix::outer(t.vector);
      }
      EXPECT_EQ(sum, a);
    }
}

TEST(RankOne, SemidefiniteWithZeroPivots) {
  // rank one with a zero leading entry
  const SymMatrix a({{0, 0, 0}, {0, 1, 1}, {0, 1, 1}});
  const auto terms = rank_one_decomposition(a);
  ASSERT_TRUE(terms);
  EXPECT_EQ(terms->size(), 1u);
  EXPECT_FALSE(rank_one_decomposition(SymMatrix({{0, 1}, {1, 1}})));
}
