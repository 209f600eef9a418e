#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "generators.hpp"
#include "oracles.hpp"
#include "seqnorm/vectors.hpp"

namespace seqnorm {
namespace {

FiniteVector dense(std::initializer_list<double> values) {
  const std::vector<double> v(values);
  return FiniteVector::from_dense(v);
}

TEST(FiniteVector, CanonicalFormSortsAndDropsZeros) {
  const FiniteVector v = FiniteVector::from_entries({{5, 2.0}, {1, 0.0}, {3, -1.0}});
  ASSERT_EQ(v.support_size(), 2u);
  EXPECT_EQ(v.entries()[0], (Entry{3, -1.0}));
  EXPECT_EQ(v.entries()[1], (Entry{5, 2.0}));
  EXPECT_EQ(v[4], 0.0);
  EXPECT_EQ(v.max_index(), 5u);
  EXPECT_EQ(v.min_index(), 3u);
}

TEST(FiniteVector, RejectsDuplicateAndZeroIndices) {
  EXPECT_THROW(FiniteVector::from_entries({{2, 1.0}, {2, 3.0}}), std::invalid_argument);
  EXPECT_THROW(FiniteVector::from_entries({{0, 1.0}}), std::invalid_argument);
}

TEST(FiniteVector, ArithmeticCancelsToCanonicalZero) {
  const FiniteVector v = dense({1.0, -2.0});
  EXPECT_TRUE((v - v).is_zero());
  EXPECT_EQ(v + v, 2.0 * v);
  EXPECT_EQ(-v, -1.0 * v);
  EXPECT_EQ(v.canonical_hash(), dense({1.0, -2.0}).canonical_hash());
  EXPECT_NE(v.canonical_hash(), dense({1.0, 2.0}).canonical_hash());
}

TEST(DecreasingRearrangement, SpotValues) {
  EXPECT_EQ(decreasing_rearrangement(dense({0.0, -2.0, 1.0})).values().size(), 2u);
  EXPECT_EQ(decreasing_rearrangement(dense({0.0, -2.0, 1.0})), SortedVector({2.0, 1.0}));
  EXPECT_EQ(decreasing_rearrangement(FiniteVector{}).size(), 0u);
  EXPECT_EQ(decreasing_rearrangement(dense({3.0, 1.0, 2.0})), SortedVector({3.0, 2.0, 1.0}));
}

TEST(SortedVector, RejectsUnsortedOrNegative) {
  EXPECT_THROW(SortedVector({1.0, 2.0}), std::invalid_argument);
  EXPECT_THROW(SortedVector({-1.0}), std::invalid_argument);
}

TEST(Permutation, SpotValues) {
  const FinitePermutation swap = FinitePermutation::transposition(1, 2);
  EXPECT_EQ(apply_permutation(FiniteVector::unit(1), swap), FiniteVector::unit(2));
  const FiniteVector v = dense({3.0, 5.0, 7.0});
  EXPECT_EQ(apply_permutation(v, FinitePermutation{}), v);
  EXPECT_EQ(apply_permutation(dense({3.0, 5.0}), swap), dense({5.0, 3.0}));
  EXPECT_THROW(FinitePermutation({{1, 2}, {2, 2}}), std::invalid_argument);
}

TEST(Signs, SpotValues) {
  EXPECT_EQ(apply_signs(FiniteVector::unit(1), SignPattern(std::map<Index, int>{{1, -1}})), -FiniteVector::unit(1));
  const FiniteVector v = dense({1.0, -1.0});
  EXPECT_EQ(apply_signs(v, SignPattern{}), v);
  EXPECT_EQ(apply_signs(v, SignPattern(std::map<Index, int>{{1, -1}, {2, -1}})), dense({-1.0, 1.0}));
  EXPECT_THROW(SignPattern(std::map<Index, int>{{1, 2}}), std::invalid_argument);
}

TEST(Dilate, SpotValues) {
  EXPECT_EQ(dilate(FiniteVector::unit(1), 2), dense({1.0, 1.0}));
  EXPECT_EQ(dilate(dense({2.0, 3.0}), 2), dense({2.0, 2.0, 3.0, 3.0}));
  EXPECT_EQ(dilate(dense({2.0, 3.0}), 1), dense({2.0, 3.0}));
  EXPECT_THROW(dilate(FiniteVector::unit(1), 0), std::invalid_argument);
}

TEST(Restrict, SpotValues) {
  const FiniteVector v = FiniteVector::unit(1) + FiniteVector::unit(5);
  EXPECT_EQ(restrict(v, 2), FiniteVector::unit(5));
  EXPECT_EQ(restrict(v, 1), v);
  EXPECT_EQ(restrict(v, 1, 4), FiniteVector::unit(1));
  EXPECT_THROW(restrict(v, 3, 2), std::invalid_argument);

  const TailedVector tail = restrict(hat_transform(FiniteVector::unit(1)), 3);
  EXPECT_TRUE(tail.head().empty());
  EXPECT_EQ(tail.at(2), 0.0);
  EXPECT_DOUBLE_EQ(tail.at(3), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(tail.at(10), 0.1);

  const TailedVector window = restrict(hat_transform(FiniteVector::unit(1)), 2, 4);
  EXPECT_EQ(window.tail_mass(), 0.0);
  EXPECT_DOUBLE_EQ(window.at(4), 0.25);
  EXPECT_EQ(window.at(5), 0.0);
}

TEST(HatTransform, SpotValues) {
  const TailedVector e1 = hat_transform(FiniteVector::unit(1));
  ASSERT_EQ(e1.head().size(), 1u);
  EXPECT_EQ(e1.head()[0], 1.0);
  EXPECT_EQ(e1.tail_mass(), 1.0);
  EXPECT_EQ(e1.at(7), 1.0 / 7.0);

  const TailedVector ones = hat_transform(dense({1.0, 1.0}));
  ASSERT_EQ(ones.head().size(), 2u);
  EXPECT_EQ(ones.head()[0], 1.0);
  EXPECT_EQ(ones.head()[1], 1.0);
  EXPECT_EQ(ones.tail_mass(), 2.0);
  EXPECT_EQ(ones.at(4), 0.5);

  const TailedVector zero = hat_transform(FiniteVector{});
  EXPECT_TRUE(zero.head().empty());
  EXPECT_EQ(zero.tail_mass(), 0.0);
}

TEST(HatTransform, MatchesCesaroOracle) {
  testing::Gen gen(11);
  for (int s = 0; s < 200; ++s) {
    const FiniteVector v = gen.vector(8, 16);
    const TailedVector h = hat_transform(v);
    const std::vector<double> expected = testing::oracle_hat(v, 40);
    for (std::size_t n = 1; n <= expected.size(); ++n) {
      EXPECT_NEAR(h.at(n), expected[n - 1], 1e-12 * (1.0 + expected[n - 1])) << "n=" << n;
    }
    for (std::size_t n = 2; n <= 40; ++n) EXPECT_LE(h.at(n), h.at(n - 1));
  }
}

TEST(HatPointwiseSumBound, SpotAndRandom) {
  const FiniteVector e1 = FiniteVector::unit(1), e2 = FiniteVector::unit(2);
  EXPECT_FALSE(hat_pointwise_sum_bound(e1, e2));
  EXPECT_FALSE(hat_pointwise_sum_bound(e1, e1));
  testing::Gen gen(3);
  for (int s = 0; s < 1000; ++s) {
    const FiniteVector x = gen.vector(8, 24), y = gen.vector(8, 24);
    EXPECT_FALSE(hat_pointwise_sum_bound(x, y));
  }
}

TEST(PermutationProperty, RearrangementInvariant) {
  testing::Gen gen(5);
  for (int s = 0; s < 300; ++s) {
    const FiniteVector v = gen.vector(10, 20);
    const FiniteVector moved = apply_signs(apply_permutation(v, gen.permutation(20)), gen.signs(20));
    EXPECT_EQ(decreasing_rearrangement(v), decreasing_rearrangement(moved));
  }
}

}  // namespace
}  // namespace seqnorm
