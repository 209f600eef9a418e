#pragma once

// Fundamental functions and certified bounds for harmonic tails.
//
// A 1-symmetric norm is evaluated on a TailedVector by summing the head and
// the tail up to index M exactly, then dominating the rest: on the dyadic
// block [2^k M + 1, 2^{k+1} M] the tail S/n is at most the constant S/(2^k M),
// whose norm is (S/(2^k M)) phi(2^k M) by symmetry. Far blocks are bounded
// with a growth envelope of phi.

#include "seqnorm/interval.hpp"
#include "seqnorm/norm.hpp"
#include "seqnorm/vectors.hpp"

namespace seqnorm {

/// phi(L) = ||e_1 + ... + e_L||. Requires a 1-symmetric descriptor with an
/// exact evaluator.
double fundamental_function(const NormDescriptor& norm, Index length);

/// Certified growth bound phi(L) <= (coef + log_coef * ln L) * L^exponent for
/// every L >= 1. exponent >= 1 means the harmonic tail is not summable.
struct GrowthEnvelope {
  double coef = 1.0;
  double log_coef = 0.0;
  double exponent = 1.0;

  bool summable() const noexcept { return exponent < 1.0; }
  double at(double length) const;
};

GrowthEnvelope growth_envelope(const NormDescriptor& norm);

/// Upper bound on sup_n ||e_n||; +inf when unknown (custom norms).
double unit_vector_bound(const NormDescriptor& norm);

/// Upper bound on the norm of the sequence (S/n) restricted to n > M, i.e.
/// sum_k (S / (2^k M)) phi(2^k M). +inf when the series diverges.
double harmonic_tail_bound(const NormDescriptor& norm, double tail_mass, Index first_block);

/// Enclosure of ||w||: lo is the norm of w truncated at M, hi adds the
/// harmonic tail bound. For l_p (p > 1), sup and Day augmentations of them hi
/// is additionally capped by a power-sum completion of the truncated norm. Requires a 1-unconditional, 1-symmetric norm and
/// M >= w.head_end(). Increasing M never widens the enclosure.
IntervalValue eval_tailed(const NormDescriptor& norm, const TailedVector& w, Index truncation,
                          const EvalOptions& options = {});

}  // namespace seqnorm
