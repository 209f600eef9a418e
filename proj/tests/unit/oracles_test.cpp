#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"

// Sanity checks on the reference implementations themselves.
namespace seqnorm::testing {
namespace {

TEST(Oracles, DayAndLorentz) {
  EXPECT_EQ(oracle_day({1.0}), 0.5);
  EXPECT_DOUBLE_EQ(oracle_day({1.0, 1.0}), std::sqrt(5.0) / 4.0);
  EXPECT_EQ(oracle_lorentz({1.0, -1.0}), 1.5);
}

TEST(Oracles, TsirelsonBruteForce) {
  EXPECT_EQ(tsirelson_bruteforce({{5, Rational(1)}}), 1);
  EXPECT_EQ(tsirelson_bruteforce({{3, Rational(1)}, {4, Rational(1)}}), 1);
  EXPECT_EQ(tsirelson_bruteforce({{3, Rational(1)}, {4, Rational(1)}, {5, Rational(1)}}), Rational(3, 2));
  // Index 2 admits two sets only: {2,3}, {4} or {2}, {3,4} give at most 1.
  EXPECT_EQ(tsirelson_bruteforce({{2, Rational(1)}, {3, Rational(1)}, {4, Rational(1)}}), 1);
}

TEST(Oracles, DavisGridClosedForm) {
  const DenseNorm sup = oracle_sup;
  const DenseNorm l1 = [](const std::vector<double>& a) { return oracle_lp(a, 1.0); };
  EXPECT_NEAR(davis_grid(sup, l1, 1.0, {1.0}), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(Oracles, HatAverages) {
  const std::vector<double> h = oracle_hat(FiniteVector::from_dense(std::vector<double>{1.0, 1.0}), 4);
  EXPECT_EQ(h, (std::vector<double>{1.0, 1.0, 2.0 / 3.0, 0.5}));
}

}  // namespace
}  // namespace seqnorm::testing
