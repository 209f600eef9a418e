#pragma once

// Seeded random inputs for property tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "seqnorm/norm.hpp"
#include "seqnorm/rational.hpp"
#include "seqnorm/vectors.hpp"

namespace seqnorm::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }
  double uniform(double lo, double hi);
  std::size_t integer(std::size_t lo, std::size_t hi);
  bool coin();

  /// Support of size 1..max_support on indices 1..max_index, coefficients in
  /// [-bound, bound].
  FiniteVector vector(std::size_t max_support = 12, Index max_index = 24, double bound = 10.0);
  /// Same shape with coefficients k / 4, |k| <= 4 * bound, nonzero.
  FiniteVector dyadic_vector(std::size_t max_support, Index max_index, int bound);
  /// Random bijection of 1..max_index.
  FinitePermutation permutation(Index max_index);
  SignPattern signs(Index max_index);

  /// Random expression tree in the space grammar, depth-limited. Leaves use
  /// arbitrary doubles for p and m, so printing exercises shortest round-trip.
  NormDescriptor descriptor(int depth);

 private:
  std::mt19937_64 rng_;
};

/// Converts a vector of exactly representable values to rationals.
RationalVector to_rational(const FiniteVector& v);

}  // namespace seqnorm::testing
