#pragma once

// Renorming constructions on top of the base norms.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "seqnorm/interval.hpp"
#include "seqnorm/norm.hpp"
#include "seqnorm/vectors.hpp"

namespace seqnorm {

/// |||x||| = (||x||^2 + ||x||_Day^2)^{1/2}.
NormDescriptor day_augment(NormDescriptor base);

/// ||x|| = sup_signs |sum +-a_n e_n| + (sum 2^{-4n} a_n^2)^{1/2}. Strictly
/// convex and 1-unconditional for any base.
NormDescriptor strictly_convex_unconditional_base(NormDescriptor base);

/// ||y||_x = || ||y|| x + y || + || ||y|| x - y ||. Satisfies
/// 2||y|| <= ||y||_x <= (2 + 2||x||) ||y||.
double shifted_norm(const NormDescriptor& base, const FiniteVector& x, const FiniteVector& y);

/// Enumeration of absolute-equivalence classes of rational finitely supported
/// vectors (vectors with the same |coefficients|).
///
/// All classes are ranked in one global order: by level, then
/// lexicographically by representative, where the level of a class is the
/// largest of its support indices, numerators and denominators (in lowest
/// terms). Ranks start at 1 with the zero class. An enumeration visits the
/// prefix of that order consisting of the classes of level <= `level`,
/// stopping early once weight_decay^rank drops below `min_weight` (those
/// classes are counted in the tail bound instead).
struct EquivClassEnumeration {
  std::size_t level = 2;
  double weight_decay = 0.5;
  double min_weight = 1e-300;
};

/// Nonnegative representative of one class, its global rank and its size
/// (2^|support|).
struct EquivalenceClass {
  std::vector<std::pair<Index, double>> representative;
  std::uint64_t rank = 0;
  std::size_t size = 1;
};

/// The classes visited by an enumeration, in rank order.
std::vector<EquivalenceClass> enumerate_classes(const EquivClassEnumeration& enumeration);

/// |||x||| = sum_A p_A sum_{c in A} ||x||_c with
/// p_A = q^rank(A) / (|A| + sum_{c in A} ||c||), as an enclosure: lo sums the
/// enumerated classes, hi adds 2||x|| sum_{rank beyond} q^rank, which
/// dominates every unvisited class by the upper shifted-norm bound. The base
/// must be 1-unconditional.
IntervalValue os_unconditional_2r(const NormDescriptor& base, const EquivClassEnumeration& enumeration,
                                  const FiniteVector& v);

/// Parameters of the interpolation scale in a Y-space.
struct DavisParams {
  MRule rule = MRule::kPow2;
  /// Used by one-shot evaluations of ||.||_m.
  double single_m = 2.0;

  /// m_n, n >= 1.
  double m(std::size_t n) const;
  /// sum_{n > k} 1 / m_n.
  double reciprocal_tail(std::size_t k) const;
};

/// ||x||_Y = || sum_n ||x||_{m_n} f_n ||_X as an enclosure: lo sums n <= K,
/// hi adds ||x||_F * sup_n ||f_n||_X * sum_{n>K} 1/m_n, which dominates the
/// rest because ||x||_{m_n} <= ||x||_F / m_n.
IntervalValue y_space_norm(const NormDescriptor& e, const NormDescriptor& f, const NormDescriptor& x_norm,
                           const DavisParams& params, const FiniteVector& x, std::size_t terms,
                           const EvalOptions& options = {});

/// |||x||| = (||x-hat||^2 + ||x||_Day^2)^{1/2}, with ||x-hat|| enclosed by
/// eval_tailed at truncation M. Throws DivergentTailError when the base's
/// tail bound is infinite.
IntervalValue symmetric_2r_norm(const NormDescriptor& base, const FiniteVector& x, Index truncation,
                                const EvalOptions& options = {});

}  // namespace seqnorm
